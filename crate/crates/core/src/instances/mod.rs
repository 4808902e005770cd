//! Concrete Hopf algebras: group tables, builders, the instance file format
//! and the built-in catalog.

pub mod builders;
pub mod catalog;
pub mod format;
pub mod group;

pub use catalog::{builtin, list_builtins, load_instance, load_str, resolve, Instance};
pub use group::GroupTable;
