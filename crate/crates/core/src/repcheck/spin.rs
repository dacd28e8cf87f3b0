use super::{c, commutator, max_abs, CMat};
use crate::mackey::Spin;
use crate::Result;

/// Spin-`s` representation of su(2) on the basis `m = s, s−1, …, −s`.
#[derive(Debug, Clone)]
pub struct SpinRep {
    pub s: Spin,
    pub jx: CMat,
    pub jy: CMat,
    pub jz: CMat,
}

pub fn build_spin(s: f64) -> Result<SpinRep> {
    Ok(SpinRep::new(Spin::from_f64(s)?))
}

impl SpinRep {
    pub fn new(s: Spin) -> Self {
        let d = s.multiplicity();
        let sv = s.value();
        let m = |k: usize| sv - k as f64;
        let jz = CMat::from_diagonal(&nalgebra::DVector::from_fn(d, |k, _| c(m(k), 0.0)));
        let mut jp = CMat::zeros(d, d);
        for k in 1..d {
            let mk = m(k);
            jp[(k - 1, k)] = c((sv * (sv + 1.0) - mk * (mk + 1.0)).sqrt(), 0.0);
        }
        let jm = jp.adjoint();
        let jx = (&jp + &jm) * c(0.5, 0.0);
        let jy = (&jp - &jm) * c(0.0, -0.5);
        SpinRep { s, jx, jy, jz }
    }

    pub fn dim(&self) -> usize {
        self.s.multiplicity()
    }

    /// Max residual of `[J_x, J_y] = iJ_z` and its cyclic partners.
    pub fn commutation_defect(&self) -> f64 {
        let i = c(0.0, 1.0);
        [
            commutator(&self.jx, &self.jy) - &self.jz * i,
            commutator(&self.jy, &self.jz) - &self.jx * i,
            commutator(&self.jz, &self.jx) - &self.jy * i,
        ]
        .iter()
        .map(max_abs)
        .fold(0.0, f64::max)
    }

    pub fn casimir(&self) -> CMat {
        &self.jx * &self.jx + &self.jy * &self.jy + &self.jz * &self.jz
    }

    pub fn casimir_defect(&self) -> f64 {
        let sv = self.s.value();
        let d = self.dim();
        max_abs(&(self.casimir() - CMat::identity(d, d) * c(sv * (sv + 1.0), 0.0)))
    }

    /// `exp(−iθ n̂·J)` for a unit axis.
    pub fn rotation(&self, axis: [f64; 3], angle: f64) -> CMat {
        let gen = &self.jx * c(axis[0], 0.0) + &self.jy * c(axis[1], 0.0) + &self.jz * c(axis[2], 0.0);
        (gen * c(0.0, -angle)).exp()
    }
}
