use nalgebra::{Matrix3, Matrix4, Vector3};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::spacetime::minkowski_eta;
use crate::{Error, Result};

/// Which part of O(1,3) a matrix is allowed to live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    /// det Λ = +1 and Λ⁰₀ ≥ 1.
    Restricted,
    /// Any element of O(1,3).
    Full,
}

/// A Lorentz transformation in orthonormal-frame components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix {
    m: Matrix4<f64>,
}

fn isometry_defect(m: &Matrix4<f64>) -> f64 {
    let eta = minkowski_eta();
    (m.transpose() * eta * m - eta).amax()
}

impl LorentzMatrix {
    /// Validates `ΛᵀηΛ = η` (relative to the size of Λ) and the component.
    pub fn new(m: Matrix4<f64>, component: Component) -> Result<Self> {
        if m.iter().any(|x| !x.is_finite()) {
            return Err(Error::NotLorentz("non-finite entry".into()));
        }
        let scale = m.amax().max(1.0);
        let defect = isometry_defect(&m);
        if defect > 1e-9 * scale * scale {
            return Err(Error::NotLorentz(format!("ΛᵀηΛ − η has entries of size {defect:e}")));
        }
        let out = LorentzMatrix { m };
        if component == Component::Restricted && !out.is_restricted() {
            return Err(Error::NotLorentz("not in the connected component (det = +1, Λ⁰₀ ≥ 1)".into()));
        }
        Ok(out)
    }

    pub fn restricted(m: Matrix4<f64>) -> Result<Self> {
        Self::new(m, Component::Restricted)
    }

    pub fn identity() -> Self {
        LorentzMatrix { m: Matrix4::identity() }
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.m
    }

    pub fn is_restricted(&self) -> bool {
        self.m.determinant() > 0.0 && self.m[(0, 0)] >= 1.0 - 1e-12
    }

    pub fn isometry_defect(&self) -> f64 {
        isometry_defect(&self.m)
    }

    /// `Λ⁻¹ = η Λᵀ η`.
    pub fn inverse(&self) -> Self {
        let eta = minkowski_eta();
        LorentzMatrix { m: eta * self.m.transpose() * eta }
    }

    pub fn compose(&self, rhs: &LorentzMatrix) -> Self {
        LorentzMatrix { m: self.m * rhs.m }
    }

    /// Pure boost with rapidity `rapidity` along the (normalised) direction.
    pub fn boost(direction: Vector3<f64>, rapidity: f64) -> Result<Self> {
        let norm = direction.norm();
        if !(norm > 0.0) {
            return Err(Error::BadParams("boost direction must be nonzero".into()));
        }
        let n = direction / norm;
        let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
        let mut m = Matrix4::identity();
        m[(0, 0)] = ch;
        for i in 0..3 {
            m[(0, i + 1)] = n[i] * sh;
            m[(i + 1, 0)] = n[i] * sh;
            for j in 0..3 {
                m[(i + 1, j + 1)] += (ch - 1.0) * n[i] * n[j];
            }
        }
        Ok(LorentzMatrix { m })
    }

    /// Spatial rotation by `angle` about `axis` (right-hand rule).
    pub fn rotation(axis: Vector3<f64>, angle: f64) -> Result<Self> {
        let norm = axis.norm();
        if !(norm > 0.0) {
            return Err(Error::BadParams("rotation axis must be nonzero".into()));
        }
        let n = axis / norm;
        let k = n.cross_matrix();
        let r: Matrix3<f64> = Matrix3::identity() + k * angle.sin() + k * k * (1.0 - angle.cos());
        let mut m = Matrix4::identity();
        m.fixed_view_mut::<3, 3>(1, 1).copy_from(&r);
        Ok(LorentzMatrix { m })
    }

    /// `exp(K)` for `K ∈ so(1,3)`, i.e. `ηK` antisymmetric.
    pub fn exp_generator(k: &Matrix4<f64>) -> Result<Self> {
        let ek = minkowski_eta() * k;
        if (ek + ek.transpose()).amax() > 1e-12 * k.amax().max(1.0) {
            return Err(Error::NotLorentz("generator is not in so(1,3)".into()));
        }
        Self::restricted(k.exp())
    }

    /// Boost generator `K_i` (`i ∈ {1,2,3}` spatial axis).
    pub fn boost_generator(i: usize) -> Matrix4<f64> {
        assert!((1..=3).contains(&i));
        let mut k = Matrix4::zeros();
        k[(0, i)] = 1.0;
        k[(i, 0)] = 1.0;
        k
    }

    /// Rotation generator `J_i` about spatial axis `i ∈ {1,2,3}`.
    pub fn rotation_generator(i: usize) -> Matrix4<f64> {
        assert!((1..=3).contains(&i));
        let (a, b) = match i {
            1 => (2, 3),
            2 => (3, 1),
            _ => (1, 2),
        };
        let mut k = Matrix4::zeros();
        k[(b, a)] = 1.0;
        k[(a, b)] = -1.0;
        k
    }
}

impl Serialize for LorentzMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: [[f64; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| self.m[(i, j)]));
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LorentzMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[f64; 4]; 4]>::deserialize(d)?;
        let m = Matrix4::from_fn(|i, j| rows[i][j]);
        LorentzMatrix::new(m, Component::Full).map_err(serde::de::Error::custom)
    }
}
