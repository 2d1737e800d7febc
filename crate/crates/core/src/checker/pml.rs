use std::collections::HashMap;

use crate::kripke::{Configuration, KripkeModel, ModalIndex, StateId, StateSet};
use crate::syntax::PmlFormula;
use crate::Result;

type Id = u32;

#[derive(Clone, Copy, Debug)]
enum Node {
    Set(StateSet),
    Poison(ModalIndex),
    Not(Id),
    And(Id, Id),
    Or(Id, Id),
    Implies(Id, Id),
    Iff(Id, Id),
    Diamond(ModalIndex, Id),
    Box(ModalIndex, Id),
    PoisonDiamond(ModalIndex, Id),
    PoisonBox(ModalIndex, Id),
    UDiamond(Id),
    UBox(Id),
}

/// Rejects formulas whose modal or poison indices exceed the model's relations.
pub fn check_indices(model: &KripkeModel, f: &PmlFormula) -> Result<()> {
    match f.max_index() {
        Some(i) => model.check_index(i),
        None => Ok(()),
    }
}

/// Set-at-a-time PML evaluator over one model.
///
/// Each subformula is evaluated to its full truth set under a given vector of
/// poison sets, and results are cached on (subformula, poison sets). Subformulas
/// that mention no poison atom are cached once, independent of the poisoning.
pub struct PmlEvaluator<'m> {
    model: &'m KripkeModel,
    nodes: Vec<Node>,
    poison_sensitive: Vec<bool>,
    memo: HashMap<(Id, Vec<StateSet>), StateSet>,
}

impl<'m> PmlEvaluator<'m> {
    pub fn new(model: &'m KripkeModel) -> Self {
        PmlEvaluator {
            model,
            nodes: Vec::new(),
            poison_sensitive: Vec::new(),
            memo: HashMap::new(),
        }
    }

    /// Truth set of `f` in the model with poison-atom truth sets `poison`.
    pub fn truth_set(&mut self, f: &PmlFormula, poison: &[StateSet]) -> Result<StateSet> {
        check_indices(self.model, f)?;
        if poison.len() != self.model.relation_count() {
            return Err(crate::Error::InvalidArgument(format!(
                "expected {} poison sets, got {}",
                self.model.relation_count(),
                poison.len()
            )));
        }
        let root = self.compile(f);
        Ok(self.eval(root, &mut poison.to_vec()))
    }

    fn push(&mut self, node: Node, sensitive: bool) -> Id {
        self.nodes.push(node);
        self.poison_sensitive.push(sensitive);
        (self.nodes.len() - 1) as Id
    }

    fn compile(&mut self, f: &PmlFormula) -> Id {
        use PmlFormula as F;
        let n = self.model.state_count();
        let unary = |this: &mut Self, make: fn(Id) -> Node, a: &PmlFormula| {
            let a = this.compile(a);
            let s = this.poison_sensitive[a as usize];
            this.push(make(a), s)
        };
        match f {
            F::Atom(p) => self.push(Node::Set(self.model.atom(p)), false),
            F::True => self.push(Node::Set(StateSet::full(n)), false),
            F::False => self.push(Node::Set(StateSet::EMPTY), false),
            F::PoisonAtom(i) => self.push(Node::Poison(*i), true),
            F::Not(a) => unary(self, Node::Not, a),
            F::UDiamond(a) => unary(self, Node::UDiamond, a),
            F::UBox(a) => unary(self, Node::UBox, a),
            F::And(a, b) | F::Or(a, b) | F::Implies(a, b) | F::Iff(a, b) => {
                let (a, b) = (self.compile(a), self.compile(b));
                let s = self.poison_sensitive[a as usize] || self.poison_sensitive[b as usize];
                let node = match f {
                    F::And(..) => Node::And(a, b),
                    F::Or(..) => Node::Or(a, b),
                    F::Implies(..) => Node::Implies(a, b),
                    _ => Node::Iff(a, b),
                };
                self.push(node, s)
            }
            F::Diamond(i, a) | F::Box(i, a) | F::PoisonDiamond(i, a) | F::PoisonBox(i, a) => {
                let a = self.compile(a);
                let s = self.poison_sensitive[a as usize];
                let node = match f {
                    F::Diamond(..) => Node::Diamond(*i, a),
                    F::Box(..) => Node::Box(*i, a),
                    F::PoisonDiamond(..) => Node::PoisonDiamond(*i, a),
                    _ => Node::PoisonBox(*i, a),
                };
                self.push(node, s)
            }
        }
    }

    fn eval(&mut self, id: Id, poison: &mut Vec<StateSet>) -> StateSet {
        let key_poison = if self.poison_sensitive[id as usize] {
            poison.clone()
        } else {
            Vec::new()
        };
        if let Some(&hit) = self.memo.get(&(id, key_poison.clone())) {
            return hit;
        }
        let m = self.model;
        let n = m.state_count();
        let result = match self.nodes[id as usize] {
            Node::Set(s) => s,
            Node::Poison(i) => poison[i],
            Node::Not(a) => self.eval(a, poison).complement(n),
            Node::And(a, b) => self.eval(a, poison).intersection(self.eval(b, poison)),
            Node::Or(a, b) => self.eval(a, poison).union(self.eval(b, poison)),
            Node::Implies(a, b) => {
                let a = self.eval(a, poison).complement(n);
                a.union(self.eval(b, poison))
            }
            Node::Iff(a, b) => {
                let (a, b) = (self.eval(a, poison), self.eval(b, poison));
                StateSet::from_bits(!(a.bits() ^ b.bits())).intersection(StateSet::full(n))
            }
            Node::Diamond(i, a) => m.pre_image(i, self.eval(a, poison)),
            Node::Box(i, a) => {
                let bad = self.eval(a, poison).complement(n);
                m.pre_image(i, bad).complement(n)
            }
            Node::PoisonDiamond(i, a) | Node::PoisonBox(i, a) => {
                let diamond = matches!(self.nodes[id as usize], Node::PoisonDiamond(..));
                // Collect the targets v whose poisoned variant satisfies (or, for
                // the box, falsifies) the body at v.
                let mut hits = StateSet::EMPTY;
                for v in 0..n {
                    if m.predecessors(i, v).is_empty() {
                        continue;
                    }
                    let saved = poison[i];
                    poison[i] = saved.with(v);
                    let holds = self.eval(a, poison).contains(v);
                    poison[i] = saved;
                    if holds == diamond {
                        hits.insert(v);
                    }
                }
                if diamond {
                    m.pre_image(i, hits)
                } else {
                    m.pre_image(i, hits).complement(n)
                }
            }
            Node::UDiamond(a) => {
                if self.eval(a, poison).is_empty() {
                    StateSet::EMPTY
                } else {
                    StateSet::full(n)
                }
            }
            Node::UBox(a) => {
                if self.eval(a, poison) == StateSet::full(n) {
                    StateSet::full(n)
                } else {
                    StateSet::EMPTY
                }
            }
        };
        self.memo.insert((id, key_poison), result);
        result
    }
}

/// Truth of `f` at the configuration `c`.
pub fn eval_pml(c: &Configuration<'_>, f: &PmlFormula) -> Result<bool> {
    let mut ev = PmlEvaluator::new(c.model());
    Ok(ev.truth_set(f, c.poison_sets())?.contains(c.current()))
}

/// Truth set of `f` over all states of `model` with the given poison sets.
pub fn truth_set(model: &KripkeModel, poison: &[StateSet], f: &PmlFormula) -> Result<StateSet> {
    PmlEvaluator::new(model).truth_set(f, poison)
}

/// Direct recursive evaluation with no caching, one state at a time. Kept as a
/// reference implementation for cross-checking [`eval_pml`].
pub fn eval_pml_uncached(c: &Configuration<'_>, f: &PmlFormula) -> Result<bool> {
    check_indices(c.model(), f)?;
    let mut poison = c.poison_sets().to_vec();
    Ok(holds(c.model(), &mut poison, c.current(), f))
}

fn holds(m: &KripkeModel, poison: &mut Vec<StateSet>, w: StateId, f: &PmlFormula) -> bool {
    use PmlFormula as F;
    match f {
        F::Atom(p) => m.atom(p).contains(w),
        F::PoisonAtom(i) => poison[*i].contains(w),
        F::True => true,
        F::False => false,
        F::Not(a) => !holds(m, poison, w, a),
        F::And(a, b) => holds(m, poison, w, a) && holds(m, poison, w, b),
        F::Or(a, b) => holds(m, poison, w, a) || holds(m, poison, w, b),
        F::Implies(a, b) => !holds(m, poison, w, a) || holds(m, poison, w, b),
        F::Iff(a, b) => holds(m, poison, w, a) == holds(m, poison, w, b),
        F::Diamond(i, a) => m.successors(*i, w).iter().any(|v| holds(m, poison, v, a)),
        F::Box(i, a) => m.successors(*i, w).iter().all(|v| holds(m, poison, v, a)),
        F::PoisonDiamond(i, a) => m.successors(*i, w).iter().any(|v| poisoned_holds(m, poison, *i, v, a)),
        F::PoisonBox(i, a) => m.successors(*i, w).iter().all(|v| poisoned_holds(m, poison, *i, v, a)),
        F::UDiamond(a) => m.states().any(|v| holds(m, poison, v, a)),
        F::UBox(a) => m.states().all(|v| holds(m, poison, v, a)),
    }
}

fn poisoned_holds(m: &KripkeModel, poison: &mut Vec<StateSet>, i: ModalIndex, v: StateId, f: &PmlFormula) -> bool {
    let saved = poison[i];
    poison[i] = saved.with(v);
    let r = holds(m, poison, v, f);
    poison[i] = saved;
    r
}
