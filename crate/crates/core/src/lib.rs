//! Exact verification of finite-dimensional Hopf algebras and Hopf *-algebras
//! over cyclotomic fields.
//!
//! Structure constants live in `Q(ζ_N)`; every check is decided by exact
//! arithmetic and failures carry basis-index witnesses.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod cosemisimple;
pub mod cqg;
pub mod error;
pub mod exactlinalg;
pub mod hopfcore;
pub mod instances;
pub mod reflection;
pub mod report;

pub use error::{Error, Result};
