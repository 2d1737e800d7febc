//! Formula ASTs: PML with the universal modality, the binary fragment of FOL,
//! memory logic and hybrid logic with `↓`. Only PML has a parser; the other
//! three are produced by translation and print fully parenthesised.

mod fol;
mod hybrid;
mod memory;
mod parser;
mod pml;
mod print;

pub use fol::{FolFormula, Var};
pub use hybrid::{HybridFormula, Nominal, StateVar};
pub use memory::MemoryFormula;
pub use parser::parse_pml;
pub use pml::PmlFormula;

/// Renders a PML formula in the concrete syntax accepted by [`parse_pml`].
pub fn print_pml(f: &PmlFormula) -> String {
    f.to_string()
}

/// Nesting depth of modal operators.
pub fn modal_depth(f: &PmlFormula) -> usize {
    f.modal_depth()
}

macro_rules! serialize_as_text {
    ($($t:ty),*) => {$(
        impl serde::Serialize for $t {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }
    )*};
}

serialize_as_text!(PmlFormula, FolFormula, MemoryFormula, HybridFormula);

impl<'de> serde::Deserialize<'de> for PmlFormula {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_pml(&text).map_err(serde::de::Error::custom)
    }
}
