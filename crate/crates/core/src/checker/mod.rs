//! Evaluators for PML, first-order logic, memory logic and hybrid logic, and
//! bounded validity/satisfiability search over models with empty poison bases.

mod fol;
mod hybrid;
mod memory;
mod pml;
mod search;

pub use fol::{eval_fol, VariableAssignment};
pub use hybrid::{eval_hybrid, HybridModel};
pub use memory::{eval_memory, MemoryModel};
pub use pml::{check_indices, eval_pml, eval_pml_uncached, truth_set, PmlEvaluator};
pub use search::{check_sat, check_validity, CheckReport, Verdict};
