use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use super::lorentz::{Component, LorentzMatrix};
use crate::spacetime::{minkowski_eta, CotangentPoint, SpacetimePoint, TetradCovector};
use crate::{Error, Result};

/// Tolerance for matching covectors at composition and for stabilizer tests,
/// relative to `max(1, ‖p‖)`.
const COVECTOR_TOL: f64 = 1e-10;

fn covector_scale(p: &TetradCovector) -> f64 {
    p.euclidean_norm_squared().sqrt().max(1.0)
}

/// An arrow of the Poincaré groupoid: an isometry `T_{yx}: T_x M → T_y M`
/// stored by its tetrad-frame matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoincareMorphism {
    pub src: SpacetimePoint,
    pub tgt: SpacetimePoint,
    pub lambda: LorentzMatrix,
}

impl PoincareMorphism {
    pub fn new(src: SpacetimePoint, tgt: SpacetimePoint, lambda: LorentzMatrix) -> Result<Self> {
        if src.metric != tgt.metric {
            return Err(Error::MetricMismatch);
        }
        src.metric.check_point(&src.coords)?;
        tgt.metric.check_point(&tgt.coords)?;
        Ok(PoincareMorphism { src, tgt, lambda })
    }

    /// Chart-level matrix `T^μ_ν = e_y Λ e_x⁻¹`; satisfies `Tᵀ g_y T = g_x`.
    pub fn chart_matrix(&self) -> Result<Matrix4<f64>> {
        let ex = self.src.tetrad()?;
        let ey = self.tgt.tetrad()?;
        Ok(ey.0 * self.lambda.matrix() * ex.coframe())
    }
}

#[derive(Deserialize)]
struct RawWigner {
    src: SpacetimePoint,
    tgt: SpacetimePoint,
    lambda: LorentzMatrix,
    p_src: TetradCovector,
}

impl TryFrom<RawWigner> for WignerMorphism {
    type Error = Error;

    fn try_from(raw: RawWigner) -> Result<Self> {
        let base = PoincareMorphism::new(raw.src, raw.tgt, raw.lambda)?;
        WignerMorphism::new(base, raw.p_src)
    }
}

/// An arrow of the Wigner groupoid `(p_y, T_{yx}, p_x)` with `T*p_y = p_x`.
///
/// Only `p_src` is stored; the target covector is derived.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawWigner")]
pub struct WignerMorphism {
    #[serde(flatten)]
    base: PoincareMorphism,
    p_src: TetradCovector,
}

impl WignerMorphism {
    pub fn new(base: PoincareMorphism, p_src: TetradCovector) -> Result<Self> {
        if !base.lambda.is_restricted() {
            return Err(Error::NotLorentz("Wigner morphisms use the restricted group".into()));
        }
        Ok(WignerMorphism { base, p_src })
    }

    pub fn base(&self) -> &PoincareMorphism {
        &self.base
    }

    pub fn lambda(&self) -> &LorentzMatrix {
        &self.base.lambda
    }

    pub fn p_src(&self) -> TetradCovector {
        self.p_src
    }

    pub fn p_tgt(&self) -> TetradCovector {
        transport(&self.base.lambda, &self.p_src)
    }

    pub fn source(&self) -> CotangentPoint {
        CotangentPoint::new(self.base.src, self.p_src)
    }

    pub fn target(&self) -> CotangentPoint {
        CotangentPoint::new(self.base.tgt, self.p_tgt())
    }

    /// `‖Λᵀ p_tgt − p_src‖∞`.
    pub fn pullback_residual(&self) -> f64 {
        let back = self.base.lambda.matrix().transpose() * self.p_tgt().as_vector();
        (back - self.p_src.as_vector()).amax()
    }
}

fn transport(lambda: &LorentzMatrix, p: &TetradCovector) -> TetradCovector {
    // (Λᵀ)⁻¹ = η Λ η for Lorentz matrices
    let eta = minkowski_eta();
    TetradCovector::from_vector(&(eta * lambda.matrix() * eta * p.as_vector()))
}

/// Pushes a covector forward along Λ: the unique `p_tgt` with `Λᵀ p_tgt = p_src`.
pub fn transport_covector(lambda: &LorentzMatrix, p_src: &TetradCovector) -> Result<TetradCovector> {
    if !lambda.is_restricted() {
        return Err(Error::NotLorentz("transport requires a restricted Lorentz matrix".into()));
    }
    Ok(transport(lambda, p_src))
}

/// `β ∘ α` (α first).
pub fn compose(beta: &WignerMorphism, alpha: &WignerMorphism) -> Result<WignerMorphism> {
    if alpha.base.tgt != beta.base.src {
        return Err(Error::NonComposable(format!(
            "target {:?} of the first arrow differs from source {:?} of the second",
            alpha.base.tgt.coords.0, beta.base.src.coords.0
        )));
    }
    let p_mid = alpha.p_tgt();
    let residual = (p_mid.as_vector() - beta.p_src.as_vector()).amax();
    if residual > COVECTOR_TOL * covector_scale(&p_mid) {
        return Err(Error::CovectorMismatch { residual });
    }
    Ok(WignerMorphism {
        base: PoincareMorphism {
            src: alpha.base.src,
            tgt: beta.base.tgt,
            lambda: beta.base.lambda.compose(&alpha.base.lambda),
        },
        p_src: alpha.p_src,
    })
}

pub fn inverse(alpha: &WignerMorphism) -> WignerMorphism {
    WignerMorphism {
        base: PoincareMorphism {
            src: alpha.base.tgt,
            tgt: alpha.base.src,
            lambda: alpha.base.lambda.inverse(),
        },
        p_src: alpha.p_tgt(),
    }
}

pub fn unit(xi: &CotangentPoint) -> WignerMorphism {
    WignerMorphism {
        base: PoincareMorphism { src: xi.base, tgt: xi.base, lambda: LorentzMatrix::identity() },
        p_src: xi.p,
    }
}

/// Whether Λ fixes `p` (membership in the isotropy group of `p`).
pub fn stabilizer_check(lambda: &LorentzMatrix, p: &TetradCovector) -> Result<bool> {
    let moved = transport_covector(lambda, p)?;
    let residual = (moved.as_vector() - p.as_vector()).amax();
    Ok(residual <= COVECTOR_TOL * covector_scale(p))
}

/// Builds a morphism with an arbitrary (possibly improper) Lorentz matrix on
/// the Poincaré groupoid; Wigner morphisms themselves stay restricted.
pub fn poincare_full(src: SpacetimePoint, tgt: SpacetimePoint, m: Matrix4<f64>) -> Result<PoincareMorphism> {
    PoincareMorphism::new(src, tgt, LorentzMatrix::new(m, Component::Full)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacetime::{metric_at, p_squared, MetricSpec};
    use nalgebra::Vector3;
    use std::f64::consts::PI;

    fn mink(c: [f64; 4]) -> SpacetimePoint {
        SpacetimePoint::new(MetricSpec::Minkowski, c).unwrap()
    }

    fn morphism(src: SpacetimePoint, tgt: SpacetimePoint, l: LorentzMatrix, p: TetradCovector) -> WignerMorphism {
        WignerMorphism::new(PoincareMorphism::new(src, tgt, l).unwrap(), p).unwrap()
    }

    #[test]
    fn identity_transport_is_trivial() {
        let p = TetradCovector::new(2.0, 0.3, -0.1, 0.5);
        assert_eq!(transport_covector(&LorentzMatrix::identity(), &p).unwrap(), p);
    }

    #[test]
    fn rotation_by_pi_flips_null_momentum() {
        let r = LorentzMatrix::rotation(Vector3::z(), PI).unwrap();
        let q = transport_covector(&r, &TetradCovector::new(3.0, 3.0, 0.0, 0.0)).unwrap();
        let expected = [3.0, -3.0, 0.0, 0.0];
        for (a, b) in q.0.iter().zip(expected) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn transport_preserves_p_squared() {
        let l = LorentzMatrix::boost(Vector3::new(1.0, 1.0, 0.0), 1.7)
            .unwrap()
            .compose(&LorentzMatrix::rotation(Vector3::new(0.2, 0.0, 1.0), 0.3).unwrap());
        let p = TetradCovector::new(4.0, 1.0, -2.0, 0.5);
        let q = transport_covector(&l, &p).unwrap();
        assert!((p_squared(&p) - p_squared(&q)).abs() < 1e-10);
    }

    #[test]
    fn compose_is_matrix_product() {
        let x = mink([0.0; 4]);
        let boost = LorentzMatrix::boost(Vector3::x(), 0.5).unwrap();
        let rot = LorentzMatrix::rotation(Vector3::z(), 0.8).unwrap();
        let p = TetradCovector::new(1.0, 0.0, 0.0, 0.0);
        let a = morphism(x, x, boost, p);
        let b = morphism(x, x, rot, a.p_tgt());
        let c = compose(&b, &a).unwrap();
        let mut direct = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                direct[(i, j)] = (0..4).map(|k| rot.matrix()[(i, k)] * boost.matrix()[(k, j)]).sum();
            }
        }
        assert!((c.lambda().matrix() - direct).amax() < 1e-15);
        assert!(c.pullback_residual() < 1e-10);
    }

    #[test]
    fn unit_and_inverse_laws() {
        let (x, y) = (mink([0.0; 4]), mink([1.0, 2.0, 0.0, -1.0]));
        let l = LorentzMatrix::boost(Vector3::y(), -0.4).unwrap();
        let a = morphism(x, y, l, TetradCovector::new(2.0, 0.1, 0.0, 0.0));
        let left = compose(&unit(&a.target()), &a).unwrap();
        assert_eq!(left.base().src, a.base().src);
        assert!((left.lambda().matrix() - a.lambda().matrix()).amax() < 1e-15);
        let loop_ = compose(&inverse(&a), &a).unwrap();
        assert!((loop_.lambda().matrix() - Matrix4::identity()).amax() < 1e-12);
        assert_eq!(loop_.base().tgt, x);
        let twice = inverse(&inverse(&a));
        assert!((twice.lambda().matrix() - a.lambda().matrix()).amax() < 1e-12);
        assert!((twice.p_src().as_vector() - a.p_src().as_vector()).amax() < 1e-12);
        let u = unit(&CotangentPoint::new(x, TetradCovector::new(1.0, 0.0, 0.0, 0.0)));
        assert_eq!(u.lambda().matrix(), &Matrix4::identity());
    }

    #[test]
    fn composition_errors() {
        let (x, y) = (mink([0.0; 4]), mink([1.0, 0.0, 0.0, 0.0]));
        let p = TetradCovector::new(1.0, 0.0, 0.0, 0.0);
        let a = morphism(x, y, LorentzMatrix::identity(), p);
        let b = morphism(x, y, LorentzMatrix::identity(), p);
        assert!(matches!(compose(&b, &a), Err(Error::NonComposable(_))));
        let c = morphism(y, x, LorentzMatrix::identity(), TetradCovector::new(2.0, 0.0, 0.0, 0.0));
        assert!(matches!(compose(&c, &a), Err(Error::CovectorMismatch { .. })));
        let k = SpacetimePoint::new(MetricSpec::schwarzschild(1.0).unwrap(), [0.1, 0.1, 1.0, 0.0]).unwrap();
        assert!(matches!(PoincareMorphism::new(x, k, LorentzMatrix::identity()), Err(Error::MetricMismatch)));
    }

    #[test]
    fn stabilizers() {
        let rest = TetradCovector::new(1.5, 0.0, 0.0, 0.0);
        let rot = LorentzMatrix::rotation(Vector3::z(), 1.1).unwrap();
        assert!(stabilizer_check(&rot, &rest).unwrap());
        let boost = LorentzMatrix::boost(Vector3::x(), 0.6).unwrap();
        assert!(!stabilizer_check(&boost, &rest).unwrap());

        // null rotations fixing the covector (E, E, 0, 0): they fix the
        // raised vector (E, −E, 0, 0), generated by K_y + J_z and K_z − J_y.
        let zeta1 = TetradCovector::new(2.0, 2.0, 0.0, 0.0);
        let a = LorentzMatrix::boost_generator(2) + LorentzMatrix::rotation_generator(3);
        let b = LorentzMatrix::boost_generator(3) - LorentzMatrix::rotation_generator(2);
        let j = LorentzMatrix::rotation_generator(1);
        for gen in [a * 0.9, b * -1.3, j * 2.0, a * 0.4 + b * 0.7 + j * 0.3] {
            let l = LorentzMatrix::exp_generator(&gen).unwrap();
            assert!(stabilizer_check(&l, &zeta1).unwrap());
        }
        assert!(!stabilizer_check(&boost, &zeta1).unwrap());
    }

    #[test]
    fn improper_matrix_rejected_by_transport() {
        let p = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, -1.0, -1.0, -1.0));
        let l = LorentzMatrix::new(p, Component::Full).unwrap();
        assert!(transport_covector(&l, &TetradCovector::new(1.0, 0.0, 0.0, 0.0)).is_err());
        let x = mink([0.0; 4]);
        let pm = poincare_full(x, x, p).unwrap();
        assert!(WignerMorphism::new(pm, TetradCovector::new(1.0, 0.0, 0.0, 0.0)).is_err());
    }

    #[test]
    fn chart_matrix_is_an_isometry_between_tangent_spaces() {
        let spec = MetricSpec::schwarzschild(1.0).unwrap();
        let x = SpacetimePoint::new(spec, [0.3, 0.5, 1.0, 0.2]).unwrap();
        let y = SpacetimePoint::new(spec, [-1.2, 2.0, 2.0, -0.7]).unwrap();
        let l = LorentzMatrix::boost(Vector3::new(0.0, 1.0, 1.0), 0.8).unwrap();
        let t = PoincareMorphism::new(x, y, l).unwrap().chart_matrix().unwrap();
        let gx = metric_at(&spec, &x.coords).unwrap();
        let gy = metric_at(&spec, &y.coords).unwrap();
        let defect = (t.transpose() * gy * t - gx).amax();
        assert!(defect < 1e-10 * gx.amax());
    }

    #[test]
    fn json_shape() {
        let x = mink([0.0, 1.0, 0.0, 0.0]);
        let a = morphism(x, x, LorentzMatrix::identity(), TetradCovector::new(1.0, 0.0, 0.0, 0.0));
        let v = serde_json::to_value(a).unwrap();
        for key in ["src", "tgt", "lambda", "p_src"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let back: WignerMorphism = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
        let bad = r#"{"src":{"metric":{"kind":"minkowski"},"coords":[0,0,0,0]},
                      "tgt":{"metric":{"kind":"minkowski"},"coords":[0,0,0,0]},
                      "lambda":[[-1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],"p_src":[1,0,0,0]}"#;
        assert!(serde_json::from_str::<WignerMorphism>(bad).is_err());
    }
}
