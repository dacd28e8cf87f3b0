//! Groupoid-based classification of elementary particles.
//!
//! The crate is organised bottom-up:
//!
//! * [`spacetime`]: Lorentzian metrics and orthonormal tetrads on built-in charts.
//! * [`groupoid`]: Poincaré and Wigner groupoid morphisms in tetrad frames, orbit
//!   classification, and finite gauge groupoids.
//! * [`cohomology`]: exact Chevalley–Eilenberg H² and central extensions.
//! * [`covering`]: the oscillator-type projective covering of E(2).
//! * [`mackey`]: orbit/stabilizer bookkeeping and representation labels.
//! * [`repcheck`]: finite-dimensional witnesses for every representation sector.

pub mod cohomology;
pub mod covering;
pub mod error;
pub mod groupoid;
pub mod mackey;
pub mod repcheck;
pub mod spacetime;

pub use error::{Error, Result};
