//! Exact arithmetic over cyclotomic fields: scalars, certified signs, matrices,
//! subspaces and polynomials.

pub mod cyclo;
pub mod interval;
pub mod matrix;
pub mod poly;
pub mod subspace;

pub use cyclo::{field, CycloField, CycloScalar};
pub use interval::{sign_of_real, Sign};
pub use matrix::{LinMap, Linearity, Matrix, Vector};
pub use poly::Poly;
pub use subspace::{Quotient, Subspace};
