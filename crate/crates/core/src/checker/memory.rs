use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::syntax::MemoryFormula;
use crate::{Error, Result};

/// A single-relation model with a memory set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemoryModel {
    pub base: KripkeModel,
    pub memory: StateSet,
}

impl MemoryModel {
    pub fn new(base: KripkeModel, memory: StateSet) -> Result<Self> {
        if !memory.is_subset(base.all_states()) {
            return Err(Error::InvalidState {
                state: memory.difference(base.all_states()).first().unwrap_or_default(),
                count: base.state_count(),
            });
        }
        Ok(MemoryModel { base, memory })
    }
}

/// Truth of `phi` at `w`. `(r)` adds the current state to the memory, `(k)`
/// tests membership.
pub fn eval_memory(m: &MemoryModel, w: StateId, phi: &MemoryFormula) -> Result<bool> {
    m.base.check_state(w)?;
    Ok(holds(&m.base, m.memory, w, phi))
}

fn holds(m: &KripkeModel, memory: StateSet, w: StateId, phi: &MemoryFormula) -> bool {
    use MemoryFormula as F;
    match phi {
        F::Atom(p) => m.atom(p).contains(w),
        F::True => true,
        F::False => false,
        F::Not(a) => !holds(m, memory, w, a),
        F::And(a, b) => holds(m, memory, w, a) && holds(m, memory, w, b),
        F::Or(a, b) => holds(m, memory, w, a) || holds(m, memory, w, b),
        F::Implies(a, b) => !holds(m, memory, w, a) || holds(m, memory, w, b),
        F::Iff(a, b) => holds(m, memory, w, a) == holds(m, memory, w, b),
        F::Diamond(a) => m.successors(0, w).iter().any(|v| holds(m, memory, v, a)),
        F::Box(a) => m.successors(0, w).iter().all(|v| holds(m, memory, v, a)),
        F::Remember(a) => holds(m, memory.with(w), w, a),
        F::Known => memory.contains(w),
    }
}
