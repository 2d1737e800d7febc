use std::collections::BTreeMap;

use crate::kripke::{KripkeModel, StateId};
use crate::syntax::{HybridFormula, Nominal, StateVar};
use crate::{Error, Result};

/// A Kripke model with nominals and an assignment for `↓`-variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridModel {
    pub base: KripkeModel,
    pub nominals: BTreeMap<Nominal, StateId>,
    pub assignment: BTreeMap<StateVar, StateId>,
}

impl HybridModel {
    pub fn new(base: KripkeModel) -> Self {
        HybridModel {
            base,
            nominals: BTreeMap::new(),
            assignment: BTreeMap::new(),
        }
    }

    pub fn nominal_for(&self, s: StateId) -> Option<&Nominal> {
        self.nominals.iter().find(|(_, &t)| t == s).map(|(n, _)| n)
    }
}

/// Truth of `phi` at `w`. Nominals hold exactly at their state; `↓x.φ` rebinds
/// `x` to the current state.
pub fn eval_hybrid(h: &HybridModel, w: StateId, phi: &HybridFormula) -> Result<bool> {
    h.base.check_state(w)?;
    for &s in h.nominals.values().chain(h.assignment.values()) {
        h.base.check_state(s)?;
    }
    let mut g = h.assignment.clone();
    holds(h, &mut g, w, phi)
}

fn holds(h: &HybridModel, g: &mut BTreeMap<StateVar, StateId>, w: StateId, phi: &HybridFormula) -> Result<bool> {
    use HybridFormula as F;
    let m = &h.base;
    Ok(match phi {
        F::Atom(p) => m.atom(p).contains(w),
        F::PoisonAtom(i) => {
            m.check_index(*i)?;
            m.poison_base(*i).contains(w)
        }
        F::Nominal(n) => {
            let s = h.nominals.get(n).ok_or_else(|| Error::UnboundVariable(n.to_string()))?;
            *s == w
        }
        F::Var(x) => *g.get(x).ok_or_else(|| Error::UnboundVariable(x.to_string()))? == w,
        F::True => true,
        F::False => false,
        F::Not(a) => !holds(h, g, w, a)?,
        F::And(a, b) => holds(h, g, w, a)? && holds(h, g, w, b)?,
        F::Or(a, b) => holds(h, g, w, a)? || holds(h, g, w, b)?,
        F::Implies(a, b) => !holds(h, g, w, a)? || holds(h, g, w, b)?,
        F::Iff(a, b) => holds(h, g, w, a)? == holds(h, g, w, b)?,
        F::Diamond(a) => {
            for v in m.successors(0, w) {
                if holds(h, g, v, a)? {
                    return Ok(true);
                }
            }
            false
        }
        F::Box(a) => {
            for v in m.successors(0, w) {
                if !holds(h, g, v, a)? {
                    return Ok(false);
                }
            }
            true
        }
        F::Bind(x, a) => {
            let saved = g.insert(*x, w);
            let r = holds(h, g, w, a);
            match saved {
                Some(s) => g.insert(*x, s),
                None => g.remove(x),
            };
            r?
        }
    })
}
