use super::{c, CMat};
use crate::{Error, Result};

/// Stone–von Neumann representation of the oscillator algebra on the first
/// `N` Fock states.
///
/// `P1 = √|μ| Q`, `P2 = sgn(μ) √|μ| P`, `E = μ I`, `J = ½(Q² + P²)`.
/// The only truncation artifact is the last diagonal entry of `[a, a†]`.
#[derive(Debug, Clone)]
pub struct TruncatedSvN {
    pub n: usize,
    pub mu: f64,
    pub a: CMat,
    pub q: CMat,
    pub p: CMat,
    pub p1: CMat,
    pub p2: CMat,
    pub e: CMat,
    /// Truncated `½(Q² + P²)`: `diag(½, 3/2, …, N − 3/2, (N − 1)/2)`.
    pub j: CMat,
}

/// Lowering operator with `a[n−1, n] = √n`.
pub fn ladder(n: usize) -> CMat {
    let mut a = CMat::zeros(n, n);
    for k in 1..n {
        a[(k - 1, k)] = c((k as f64).sqrt(), 0.0);
    }
    a
}

pub fn build_svn(mu: f64, n: usize) -> Result<TruncatedSvN> {
    if n < 2 {
        return Err(Error::BadParams(format!("truncation N = {n} must be at least 2")));
    }
    if mu == 0.0 || !mu.is_finite() {
        return Err(Error::BadParams("central parameter μ must be finite and nonzero".into()));
    }
    let a = ladder(n);
    let ad = a.adjoint();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let q = (&a + &ad) * c(r, 0.0);
    let p = (&a - &ad) * c(0.0, -r);
    let root = mu.abs().sqrt();
    let p1 = &q * c(root, 0.0);
    let p2 = &p * c(mu.signum() * root, 0.0);
    let j = (&q * &q + &p * &p) * c(0.5, 0.0);
    let e = CMat::identity(n, n) * c(mu, 0.0);
    Ok(TruncatedSvN { n, mu, a, q, p, p1, p2, e, j })
}

impl TruncatedSvN {
    /// `[P1, P2]`.
    pub fn commutator(&self) -> CMat {
        super::commutator(&self.p1, &self.p2)
    }

    /// Expected `[P1, P2] = iμ (I − N e_{N−1} e_{N−1}ᵀ)`.
    pub fn expected_commutator(&self) -> CMat {
        let mut m = CMat::identity(self.n, self.n) * c(0.0, self.mu);
        m[(self.n - 1, self.n - 1)] = c(0.0, self.mu * (1.0 - self.n as f64));
        m
    }

    /// The untruncated spectrum `diag(n + ½)`.
    pub fn j_analytic(&self) -> CMat {
        CMat::from_diagonal(&nalgebra::DVector::from_fn(self.n, |k, _| c(k as f64 + 0.5, 0.0)))
    }

    /// `J_truncated − J_analytic`, which is `−(N/2)` at the corner and zero elsewhere.
    pub fn j_corner_correction(&self) -> CMat {
        &self.j - self.j_analytic()
    }

    /// Sorted eigenvalues of the truncated `J`.
    pub fn j_eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self.j.clone().symmetric_eigen().eigenvalues.iter().cloned().collect();
        ev.sort_by(|x, y| x.total_cmp(y));
        ev
    }
}
