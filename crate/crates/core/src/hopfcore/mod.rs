//! The Hopf algebra data model: structure constants, axiom verification,
//! subalgebras, ideals, coideal subalgebras and comodules.

pub mod algebra;
pub mod comodule;
pub mod hopf;
pub mod subalgebra;

pub use algebra::{Coalgebra, FiniteAlgebra};
pub use comodule::{coefficient_coalgebra, Comodule};
pub use hopf::FinHopfAlgebra;
pub use subalgebra::{
    augmentation_ideal, generated_subalgebra, is_right_coideal_subalgebra, one_sided_ideal,
    CoidealSubalgebra, Side, SubalgebraKind,
};
