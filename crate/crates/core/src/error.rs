use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("chart point outside the admissible domain: {0}")]
    ChartDomain(String),
    #[error("root solve did not converge: {0}")]
    Convergence(String),
    #[error("morphisms are not composable: {0}")]
    NonComposable(String),
    #[error("covector mismatch at composition: residual {residual:e}")]
    CovectorMismatch { residual: f64 },
    #[error("matrix is not a (restricted) Lorentz transformation: {0}")]
    NotLorentz(String),
    #[error("morphism endpoints live on different spacetimes")]
    MetricMismatch,
    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),
    #[error("Jacobi identity fails at (i,j,k,l) = ({i},{j},{k},{l})")]
    Jacobi { i: usize, j: usize, k: usize, l: usize },
    #[error("cochain #{index} is not closed")]
    NotClosed { index: usize },
    #[error("element is not in the subgroup: {0}")]
    NotInSubgroup(String),
    #[error("helicity {0} is not an integer; it does not descend to E(2)")]
    NonIntegralHelicity(f64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("matrix is not unitary: {0}")]
    NotUnitary(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("problem too large for brute force: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ChartDomain(_) => "chart_domain",
            Error::Convergence(_) => "convergence",
            Error::NonComposable(_) => "non_composable",
            Error::CovectorMismatch { .. } => "covector_mismatch",
            Error::NotLorentz(_) => "not_lorentz",
            Error::MetricMismatch => "metric_mismatch",
            Error::InvalidAlgebra(_) => "invalid_algebra",
            Error::Jacobi { .. } => "jacobi",
            Error::NotClosed { .. } => "not_closed",
            Error::NotInSubgroup(_) => "not_in_subgroup",
            Error::NonIntegralHelicity(_) => "non_integral_helicity",
            Error::BadParams(_) => "bad_params",
            Error::NotUnitary(_) => "not_unitary",
            Error::NotAGroup(_) => "not_a_group",
            Error::TooLarge(_) => "too_large",
            Error::Parse(_) => "parse",
        }
    }
}
