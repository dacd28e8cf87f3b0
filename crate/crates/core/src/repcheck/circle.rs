use std::f64::consts::TAU;

use super::{c, CMat};
use crate::covering::OscElement;
use crate::{Error, Result};

/// Continuous-spin representation sampled on `M` equally spaced angles.
///
/// `(T_a f)(θ) = e^{iρ a·n̂(θ)} f(θ)`, `(R_φ f)(θ) = e^{iϕ₀φ} f(θ − φ)` with
/// rotations restricted to `φ = 2πj/M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleRep {
    pub m: usize,
    pub rho: f64,
    pub phi0: f64,
}

impl CircleRep {
    pub fn new(m: usize, rho: f64, phi0: f64) -> Result<Self> {
        if m < 3 {
            return Err(Error::BadParams(format!("grid size {m} must be at least 3")));
        }
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::BadParams(format!("radius ρ = {rho} must be positive")));
        }
        Ok(CircleRep { m, rho, phi0 })
    }

    pub fn angle(&self, k: usize) -> f64 {
        TAU * (k as f64 / self.m as f64)
    }

    pub fn grid_angle(&self, j: i64) -> f64 {
        TAU * (j as f64 / self.m as f64)
    }

    pub fn translation(&self, a: [f64; 2]) -> CMat {
        CMat::from_diagonal(&nalgebra::DVector::from_fn(self.m, |k, _| {
            let (s, co) = self.angle(k).sin_cos();
            let phase = self.rho * (a[0] * co + a[1] * s);
            c(phase.cos(), phase.sin())
        }))
    }

    /// Rotation by `j` grid steps: `R[k, (k − j) mod M] = e^{iϕ₀·2πj/M}`.
    pub fn rotation(&self, j: i64) -> CMat {
        let m = self.m as i64;
        let arg = self.phi0 * self.grid_angle(j);
        let phase = c(arg.cos(), arg.sin());
        let mut r = CMat::zeros(self.m, self.m);
        for k in 0..m {
            r[(k as usize, (k - j).rem_euclid(m) as usize)] = phase;
        }
        r
    }

    /// `T_a R_j` for a covering-group element whose angle lies on the grid.
    /// The central coordinate acts trivially.
    pub fn element(&self, g: &OscElement) -> Result<CMat> {
        let steps = g.phi * self.m as f64 / TAU;
        let j = steps.round();
        if (steps - j).abs() > 1e-9 {
            return Err(Error::BadParams(format!("angle {} is not a multiple of 2π/{}", g.phi, self.m)));
        }
        Ok(self.translation(g.a) * self.rotation(j as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::rotate;
    use crate::repcheck::{max_abs, unitarity_defect};

    #[test]
    fn translation_examples() {
        let rep = CircleRep::new(12, 1.0, 0.0).unwrap();
        assert_eq!(rep.translation([0.0, 0.0]), CMat::identity(12, 12));
        let t = rep.translation([1.0, 0.0]);
        assert!((t[(0, 0)] - c(1f64.cos(), 1f64.sin())).norm() < 1e-15);
        let prod = rep.translation([0.3, -2.0]) * rep.translation([-0.3, 2.0]);
        assert!(max_abs(&(prod - CMat::identity(12, 12))) < 1e-14);
    }

    #[test]
    fn full_turn_is_stabilizer_character() {
        let rep = CircleRep::new(12, 5.0, 0.3).unwrap();
        assert_eq!(rep.rotation(0), CMat::identity(12, 12));
        let full = rep.rotation(12);
        let ph = TAU * 0.3;
        assert_eq!(full, CMat::identity(12, 12) * c(ph.cos(), ph.sin()));
        assert!(unitarity_defect(&rep.rotation(5)) < 1e-15);
    }

    #[test]
    fn covariance_on_grid() {
        let rep = CircleRep::new(12, 5.0, 0.3).unwrap();
        let a = [0.7, -1.9];
        for j in -12..=24 {
            let r = rep.rotation(j);
            let lhs = &r * rep.translation(a) * r.adjoint();
            let rhs = rep.translation(rotate(rep.grid_angle(j), a));
            assert!(max_abs(&(lhs - rhs)) < 1e-13);
        }
    }

    #[test]
    fn off_grid_rejected() {
        let rep = CircleRep::new(6, 1.0, 0.0).unwrap();
        assert!(rep.element(&OscElement::rotation(0.1)).is_err());
        assert!(CircleRep::new(2, 1.0, 0.0).is_err());
        assert!(CircleRep::new(4, 0.0, 0.0).is_err());
    }
}
