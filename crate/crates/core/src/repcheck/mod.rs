//! Finite-dimensional numerical witnesses for the classified representations
//! and a finite model of groupoid induction.

mod circle;
mod finite;
mod spin;
mod svn;
mod verify;

pub use circle::CircleRep;
pub use finite::{
    character_commutant_dim, find_equivalence, groupoid_equivalence, induce_groupoid_rep, induce_with_section,
    intertwiner_space, is_irreducible, is_irreducible_group, restrict_rep, transition_probability, GroupRep,
    GroupoidRep, Irreducibility, InvariantSubbundle, MAX_FIBER_DIM, MAX_GROUP_ORDER,
};
pub use spin::{build_spin, SpinRep};
pub use svn::{build_svn, TruncatedSvN};
pub use verify::{run_suite, CheckReport, CheckStatus, Suite, SuiteConfig};

use nalgebra::{Complex, DMatrix};

pub type C64 = Complex<f64>;
pub type CMat = DMatrix<C64>;

pub(crate) fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// `‖U†U − I‖_max`.
pub fn unitarity_defect(u: &CMat) -> f64 {
    let n = u.nrows();
    if u.ncols() != n {
        return f64::INFINITY;
    }
    max_abs(&(u.adjoint() * u - CMat::identity(n, n)))
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    a * b - b * a
}

/// Orthonormal basis of the nullspace of `a`, by SVD. Rows are padded so the
/// decomposition always has a full set of right singular vectors.
pub(crate) fn nullspace(a: &CMat, rel_tol: f64) -> Vec<nalgebra::DVector<C64>> {
    let n = a.ncols();
    if n == 0 {
        return Vec::new();
    }
    let padded = if a.nrows() < n {
        let mut p = CMat::zeros(n, n);
        p.rows_mut(0, a.nrows()).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let tol = rel_tol * smax.max(1.0);
    svd.singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s <= tol)
        .map(|(i, _)| v_t.row(i).adjoint())
        .collect()
}
