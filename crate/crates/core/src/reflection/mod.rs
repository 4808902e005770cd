//! Quotient module coalgebras, reflections, expectations and free bases.

pub mod expectation;
pub mod quotient;

pub use expectation::{
    expectation, free_basis_witness, verify_expectation, Expectation, FreeBasisWitness,
};
pub use quotient::{
    check_exact_sequence, coinvariants, is_conormal, left_reflection, right_reflection,
    Conormality, QuotientModuleCoalgebra,
};
