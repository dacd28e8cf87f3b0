//! Poincaré and Wigner groupoids in tetrad frames, their orbits, and the
//! finite gauge groupoids used as stand-ins for transitive Lie groupoids.

mod finite_group;
mod gauge;
mod lorentz;
mod orbit;
mod wigner;

pub use finite_group::FiniteGroup;
pub use gauge::{GaugeGroupoid, GaugeMorphism};
pub use lorentz::{Component, LorentzMatrix};
pub use orbit::{classify_orbit, classify_orbit_exact, isotropy_type, IsotropyGroup, OrbitClass, EPS_ORBIT};
pub use wigner::{
    compose, inverse, poincare_full, stabilizer_check, transport_covector, unit, PoincareMorphism, WignerMorphism,
};
