//! Dual algebras, exact semisimplicity testing and the decomposition of a
//! cosemisimple coalgebra into simple subcoalgebras.

pub mod decomposition;
pub mod dual;

pub use decomposition::{
    block_matrix_coefficients, central_idempotents, haar_integral, left_hit, right_hit,
    simple_comodule, simple_subcoalgebras, SimpleDecomposition,
};
pub use dual::{center, dual_algebra, is_semisimple, trace_form, Semisimplicity};
