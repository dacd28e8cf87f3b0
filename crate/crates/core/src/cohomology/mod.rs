//! Chevalley–Eilenberg cohomology of real Lie algebras in degrees ≤ 3, with
//! exact rational arithmetic, and the central extensions it classifies.

mod algebra;
mod complex;
pub mod linalg;

pub use algebra::{check_jacobi, LieAlgebra, StructureConstantsJson, StructureEntry};
pub use complex::{central_extension, d1, d1_matrix, d2, d2_matrix, h2, h2_with_signs, CohomologyResult, Sign, ThreeCochain, TwoCochain};

/// Exact rational scalar.
pub type Q = num::BigRational;
