//! Compact quantum group checks: star structures, the relative Haar functional
//! and element, the relative Fourier transform and exact positivity.

pub mod psd;
pub mod relative;

pub use psd::{psd_certificate, s2_block_conjugator, BlockConjugator, Psd};
pub use relative::{hit_action, theta_formula, theta_in_basis, CqgContext};

use crate::cosemisimple::{dual_algebra, is_semisimple};
use crate::exactlinalg::Matrix;
use crate::hopfcore::FinHopfAlgebra;
use crate::report::{Check, Report};

/// Star axioms with Δ/ε compatibility, cosemisimplicity and S² = id.
pub fn verify_cqg_star(h: &FinHopfAlgebra) -> Report {
    let mut r = h.verify_star_axioms();
    r.push(Check::from_bool(
        "cosemisimple",
        is_semisimple(&dual_algebra(h.coalgebra())).is_semisimple(),
    ));
    let s2 = h.antipode_squared();
    let id = Matrix::identity(h.dim());
    let w = (0..h.dim())
        .find(|&j| s2.column(j) != id.column(j))
        .map(|j| vec![j]);
    r.push(Check::from_witness("antipode_squared_identity", w));
    r
}
