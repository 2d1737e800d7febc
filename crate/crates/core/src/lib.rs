//! Poison modal logic: finite Kripke models with poisoning, a model checker,
//! the Poison Game solver, p-bisimulation, translations into first-order,
//! memory and hybrid logic, and generators for the standard formula families.

pub mod bisim;
pub mod checker;
mod error;
pub mod fixtures;
pub mod game;
pub mod generators;
pub mod kripke;
pub mod syntax;
pub mod translate;

pub use error::{Error, Result};
