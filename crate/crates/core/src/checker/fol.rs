use std::collections::BTreeMap;

use crate::kripke::{KripkeModel, StateId};
use crate::syntax::{FolFormula, Var};
use crate::{Error, Result};

/// Assignment of states to first-order variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VariableAssignment(BTreeMap<Var, StateId>);

impl VariableAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, s: StateId) -> Self {
        self.0.insert(v, s);
        self
    }

    pub fn set(&mut self, v: Var, s: StateId) {
        self.0.insert(v, s);
    }

    pub fn get(&self, v: Var) -> Option<StateId> {
        self.0.get(&v).copied()
    }
}

/// Tarskian truth of `psi` in `m` under `g`. Relation symbol `R_i` is the model's
/// relation `i`, `P` is the valuation of `p` and `𝔓_i` the poison base of `i`.
pub fn eval_fol(m: &KripkeModel, g: &VariableAssignment, psi: &FolFormula) -> Result<bool> {
    let mut slots: Vec<Option<StateId>> = Vec::new();
    for (v, s) in &g.0 {
        m.check_state(*s)?;
        let k = v.0 as usize;
        if slots.len() <= k {
            slots.resize(k + 1, None);
        }
        slots[k] = Some(*s);
    }
    Eval { m, slots }.eval(psi)
}

struct Eval<'a> {
    m: &'a KripkeModel,
    slots: Vec<Option<StateId>>,
}

impl Eval<'_> {
    fn get(&self, v: Var) -> Result<StateId> {
        self.slots
            .get(v.0 as usize)
            .copied()
            .flatten()
            .ok_or_else(|| Error::UnboundVariable(v.to_string()))
    }

    fn bind<T>(&mut self, v: Var, s: StateId, f: impl FnOnce(&mut Self) -> T) -> T {
        let k = v.0 as usize;
        if self.slots.len() <= k {
            self.slots.resize(k + 1, None);
        }
        let saved = self.slots[k].replace(s);
        let out = f(self);
        self.slots[k] = saved;
        out
    }

    /// Domain of a quantifier over `v` with body `body`. When the body is the
    /// guarded form `R_i(x, v) ∧ …` (or `→` under ∀) with `x` already bound, only
    /// the `R_i`-successors of `x` can matter.
    fn guard(&self, v: Var, body: &FolFormula, universal: bool) -> Result<Option<Vec<StateId>>> {
        let rel = match (body, universal) {
            (FolFormula::And(g, _), false) | (FolFormula::Implies(g, _), true) => g,
            _ => return Ok(None),
        };
        match rel.as_ref() {
            FolFormula::Rel(i, x, y) if *y == v && *x != v => {
                self.m.check_index(*i)?;
                let from = self.get(*x)?;
                Ok(Some(self.m.successors(*i, from).to_vec()))
            }
            _ => Ok(None),
        }
    }

    fn eval(&mut self, psi: &FolFormula) -> Result<bool> {
        use FolFormula as F;
        Ok(match psi {
            F::True => true,
            F::False => false,
            F::Pred(p, v) => self.m.atom(p).contains(self.get(*v)?),
            F::Poison(i, v) => {
                self.m.check_index(*i)?;
                self.m.poison_base(*i).contains(self.get(*v)?)
            }
            F::Rel(i, a, b) => {
                self.m.check_index(*i)?;
                self.m.has_edge(*i, self.get(*a)?, self.get(*b)?)
            }
            F::Eq(a, b) => self.get(*a)? == self.get(*b)?,
            F::Not(a) => !self.eval(a)?,
            F::And(a, b) => self.eval(a)? && self.eval(b)?,
            F::Or(a, b) => self.eval(a)? || self.eval(b)?,
            F::Implies(a, b) => !self.eval(a)? || self.eval(b)?,
            F::Iff(a, b) => self.eval(a)? == self.eval(b)?,
            F::Exists(v, body) | F::Forall(v, body) => {
                let universal = matches!(psi, F::Forall(..));
                let domain = match self.guard(*v, body, universal)? {
                    Some(d) => d,
                    None => self.m.states().collect(),
                };
                for s in domain {
                    if self.bind(*v, s, |e| e.eval(body))? != universal {
                        return Ok(!universal);
                    }
                }
                universal
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn successor_exists_at_state_one() {
        let m = fixtures::attack_graph();
        let y = Var(1);
        let f = FolFormula::exists(y, FolFormula::Rel(0, Var::X, y).and(FolFormula::Eq(y, y)));
        let g = VariableAssignment::new().with(Var::X, 0);
        assert!(eval_fol(&m, &g, &f).unwrap());
        let g = VariableAssignment::new().with(Var::X, 2);
        assert!(eval_fol(&m, &g, &f).unwrap());
    }

    #[test]
    fn identity_and_empty_poison() {
        let m = fixtures::attack_graph();
        for w in m.states() {
            let g = VariableAssignment::new().with(Var::X, w);
            assert!(eval_fol(&m, &g, &FolFormula::Eq(Var::X, Var::X)).unwrap());
            assert!(!eval_fol(&m, &g, &FolFormula::Poison(0, Var::X)).unwrap());
        }
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let m = fixtures::attack_graph();
        let r = eval_fol(&m, &VariableAssignment::new(), &FolFormula::Eq(Var::X, Var(3)));
        assert_eq!(r, Err(Error::UnboundVariable("x".into())));
    }

    #[test]
    fn unguarded_quantifier_ranges_over_all_states() {
        let m = fixtures::attack_graph();
        let y = Var(1);
        // Some state has no predecessor (state 1).
        let f = FolFormula::exists(y, FolFormula::forall(Var(2), FolFormula::Rel(0, Var(2), y).not()));
        assert!(eval_fol(&m, &VariableAssignment::new(), &f).unwrap());
    }
}
