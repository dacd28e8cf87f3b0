use std::fmt;

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::spacetime::{p_squared, TetradCovector};

/// Relative tolerance (against `‖p‖²`) deciding the null stratum `p² = 0`.
pub const EPS_ORBIT: f64 = 1e-9;

/// Orbits of the Wigner groupoid: level sets of `p²` split by time orientation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum OrbitClass {
    MassivePlus { m: f64 },
    MasslessPlus,
    Zero,
    Tachyonic { m: f64 },
    MassiveMinus { m: f64 },
    MasslessMinus,
}

impl OrbitClass {
    /// Name without parameters, e.g. `massive_plus`.
    pub fn tag(&self) -> &'static str {
        match self {
            OrbitClass::MassivePlus { .. } => "massive_plus",
            OrbitClass::MasslessPlus => "massless_plus",
            OrbitClass::Zero => "zero",
            OrbitClass::Tachyonic { .. } => "tachyonic",
            OrbitClass::MassiveMinus { .. } => "massive_minus",
            OrbitClass::MasslessMinus => "massless_minus",
        }
    }

    /// Same stratum, ignoring the numeric mass.
    pub fn same_stratum(&self, other: &OrbitClass) -> bool {
        self.tag() == other.tag()
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitClass::MassivePlus { m } | OrbitClass::MassiveMinus { m } | OrbitClass::Tachyonic { m } => {
                write!(f, "{} m={}", self.tag(), m)
            }
            _ => f.write_str(self.tag()),
        }
    }
}

/// Little groups of the orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IsotropyGroup {
    #[serde(rename = "SO(3)")]
    SO3,
    #[serde(rename = "E(2)")]
    E2,
    #[serde(rename = "SO0(1,3)")]
    RestrictedLorentz,
    /// No little group is assigned to the tachyonic orbits.
    #[serde(rename = "unsupported")]
    Unsupported,
}

impl fmt::Display for IsotropyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsotropyGroup::SO3 => "SO(3)",
            IsotropyGroup::E2 => "E(2)",
            IsotropyGroup::RestrictedLorentz => "SO0(1,3)",
            IsotropyGroup::Unsupported => "unsupported",
        })
    }
}

/// Coarse sign data of a covector: `(sign p², sign p₀)` with `p = 0` separate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stratum {
    Timelike { future: bool },
    Null { future: bool },
    Origin,
    Spacelike,
}

pub(crate) fn stratum(p: &TetradCovector) -> Stratum {
    let scale = p.euclidean_norm_squared();
    if scale == 0.0 {
        return Stratum::Origin;
    }
    let p2 = p_squared(p);
    let future = p.0[0] > 0.0;
    if p2.abs() <= EPS_ORBIT * scale {
        Stratum::Null { future }
    } else if p2 > 0.0 {
        Stratum::Timelike { future }
    } else {
        Stratum::Spacelike
    }
}

pub fn classify_orbit(p: &TetradCovector) -> OrbitClass {
    match stratum(p) {
        Stratum::Origin => OrbitClass::Zero,
        Stratum::Null { future: true } => OrbitClass::MasslessPlus,
        Stratum::Null { future: false } => OrbitClass::MasslessMinus,
        Stratum::Timelike { future } => {
            let m = p_squared(p).sqrt();
            if future {
                OrbitClass::MassivePlus { m }
            } else {
                OrbitClass::MassiveMinus { m }
            }
        }
        Stratum::Spacelike => OrbitClass::Tachyonic { m: (-p_squared(p)).sqrt() },
    }
}

/// Exact classification of a rational covector; no tolerance is involved.
/// Masses are returned as `f64` square roots of the exact `|p²|`.
pub fn classify_orbit_exact(p: &[BigRational; 4]) -> OrbitClass {
    use num::ToPrimitive;
    if p.iter().all(Zero::is_zero) {
        return OrbitClass::Zero;
    }
    let p2 = &p[0] * &p[0] - &p[1] * &p[1] - &p[2] * &p[2] - &p[3] * &p[3];
    let future = p[0].is_positive();
    let mass = |q: &BigRational| q.abs().to_f64().unwrap_or(f64::NAN).sqrt();
    if p2.is_zero() {
        if future {
            OrbitClass::MasslessPlus
        } else {
            OrbitClass::MasslessMinus
        }
    } else if p2.is_positive() {
        if future {
            OrbitClass::MassivePlus { m: mass(&p2) }
        } else {
            OrbitClass::MassiveMinus { m: mass(&p2) }
        }
    } else {
        OrbitClass::Tachyonic { m: mass(&p2) }
    }
}

/// Past orbits share the little group of their future counterparts.
pub fn isotropy_type(c: &OrbitClass) -> IsotropyGroup {
    match c {
        OrbitClass::MassivePlus { .. } | OrbitClass::MassiveMinus { .. } => IsotropyGroup::SO3,
        OrbitClass::MasslessPlus | OrbitClass::MasslessMinus => IsotropyGroup::E2,
        OrbitClass::Zero => IsotropyGroup::RestrictedLorentz,
        OrbitClass::Tachyonic { .. } => IsotropyGroup::Unsupported,
    }
}
