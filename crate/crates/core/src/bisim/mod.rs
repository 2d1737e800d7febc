//! p-bisimulation over configurations and distinguishing-formula extraction.
//!
//! The carrier is the set of configuration pairs reachable from the start pair
//! by synchronised ◇-steps and poison steps. Pairs that disagree on an atom or
//! poison atom are removed first; then rounds remove every pair violating a
//! zig or zag clause with respect to the pairs still present. A pair removed in
//! round k is told apart by a formula of modal depth k, built from the
//! witnesses of the pairs that caused the removal.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::kripke::{KripkeModel, ModalIndex, StateId, StateSet};
use crate::syntax::PmlFormula;
use crate::{Error, Result};

/// A configuration without its model: poison sets (bases included) and the
/// current state.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConfigPoint {
    pub poison: Vec<StateSet>,
    pub current: StateId,
}

impl ConfigPoint {
    pub fn initial(m: &KripkeModel, current: StateId) -> Self {
        ConfigPoint {
            poison: m.poison_bases().to_vec(),
            current,
        }
    }
}

pub type ConfigPair = (ConfigPoint, ConfigPoint);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimOptions {
    /// Allow models with several relations, with one zig/zag clause pair per
    /// index. Not part of the single-modality definition.
    pub multi_index: bool,
    /// Refuse carriers larger than this many pairs.
    pub max_pairs: usize,
}

impl Default for BisimOptions {
    fn default() -> Self {
        BisimOptions {
            multi_index: false,
            max_pairs: 1 << 20,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BisimResult {
    pub bisimilar: bool,
    /// The greatest p-bisimulation on the reachable carrier, when bisimilar.
    pub relation: Vec<ConfigPair>,
    /// True at the left point and false at the right one, when not bisimilar.
    pub witness: Option<PmlFormula>,
    /// Round in which the start pair was removed (0 = atom mismatch).
    pub separated_at: Option<usize>,
    pub carrier_size: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Step {
    Plain,
    Poison,
}

/// Configurations of one side, interned, with successor lists per index.
struct Side<'m> {
    model: &'m KripkeModel,
    configs: Vec<ConfigPoint>,
    ids: HashMap<ConfigPoint, usize>,
    plain: Vec<Vec<Vec<usize>>>,
    poison: Vec<Vec<Vec<usize>>>,
}

impl<'m> Side<'m> {
    fn new(model: &'m KripkeModel) -> Self {
        Side {
            model,
            configs: Vec::new(),
            ids: HashMap::new(),
            plain: Vec::new(),
            poison: Vec::new(),
        }
    }

    fn intern(&mut self, c: ConfigPoint) -> usize {
        if let Some(&id) = self.ids.get(&c) {
            return id;
        }
        let id = self.configs.len();
        self.ids.insert(c.clone(), id);
        self.configs.push(c);
        self.plain.push(Vec::new());
        self.poison.push(Vec::new());
        id
    }

    /// Fills successor lists of `id` on first use.
    fn expand(&mut self, id: usize, indices: usize) {
        if !self.plain[id].is_empty() || indices == 0 {
            return;
        }
        let c = self.configs[id].clone();
        for i in 0..indices {
            let succ = self.model.successors(i, c.current);
            let plain = succ
                .iter()
                .map(|v| {
                    self.intern(ConfigPoint {
                        poison: c.poison.clone(),
                        current: v,
                    })
                })
                .collect();
            let poisoned = succ
                .iter()
                .map(|v| {
                    let mut poison = c.poison.clone();
                    poison[i] = poison[i].with(v);
                    self.intern(ConfigPoint { poison, current: v })
                })
                .collect();
            self.plain[id].push(plain);
            self.poison[id].push(poisoned);
        }
    }

    fn succ(&self, id: usize, step: Step, i: ModalIndex) -> &[usize] {
        match step {
            Step::Plain => &self.plain[id][i],
            Step::Poison => &self.poison[id][i],
        }
    }
}

struct Refinement<'m> {
    left: Side<'m>,
    right: Side<'m>,
    indices: usize,
    pairs: Vec<(usize, usize)>,
    ids: HashMap<(usize, usize), usize>,
    removed: Vec<Option<usize>>,
    witness: Vec<Option<PmlFormula>>,
}

fn key(f: &PmlFormula) -> (usize, usize) {
    (f.modal_depth(), f.size())
}

impl<'m> Refinement<'m> {
    fn build(m1: &'m KripkeModel, w1: StateId, m2: &'m KripkeModel, w2: StateId, opts: &BisimOptions) -> Result<Self> {
        m1.check_state(w1)?;
        m2.check_state(w2)?;
        let indices = m1.relation_count();
        if !opts.multi_index && (indices > 1 || m2.relation_count() > 1) {
            return Err(Error::Unsupported(
                "p-bisimulation on models with several relations needs the multi-index extension".into(),
            ));
        }
        if m2.relation_count() != indices {
            return Err(Error::InvalidArgument(format!(
                "relation counts differ ({indices} vs {})",
                m2.relation_count()
            )));
        }
        let mut r = Refinement {
            left: Side::new(m1),
            right: Side::new(m2),
            indices,
            pairs: Vec::new(),
            ids: HashMap::new(),
            removed: Vec::new(),
            witness: Vec::new(),
        };
        let a = r.left.intern(ConfigPoint::initial(m1, w1));
        let b = r.right.intern(ConfigPoint::initial(m2, w2));
        r.add(a, b);
        let mut next = 0;
        while next < r.pairs.len() {
            if r.pairs.len() > opts.max_pairs {
                return Err(Error::Budget {
                    what: "p-bisimulation carrier".into(),
                    estimate: r.pairs.len() as u128,
                    limit: opts.max_pairs as u128,
                });
            }
            let (a, b) = r.pairs[next];
            next += 1;
            r.left.expand(a, indices);
            r.right.expand(b, indices);
            for i in 0..indices {
                for step in [Step::Plain, Step::Poison] {
                    let la = r.left.succ(a, step, i).to_vec();
                    let rb = r.right.succ(b, step, i).to_vec();
                    for &x in &la {
                        for &y in &rb {
                            r.add(x, y);
                        }
                    }
                }
            }
        }
        Ok(r)
    }

    fn add(&mut self, a: usize, b: usize) {
        if !self.ids.contains_key(&(a, b)) {
            self.ids.insert((a, b), self.pairs.len());
            self.pairs.push((a, b));
            self.removed.push(None);
            self.witness.push(None);
        }
    }

    /// Literals true on the left and false on the right.
    fn literals(&self, a: usize, b: usize) -> Vec<PmlFormula> {
        let (ca, cb) = (&self.left.configs[a], &self.right.configs[b]);
        let (m1, m2) = (self.left.model, self.right.model);
        let atoms: BTreeSet<&str> = m1.atoms().chain(m2.atoms()).map(|(p, _)| p).collect();
        let mut out = Vec::new();
        for p in atoms {
            let (x, y) = (m1.atom(p).contains(ca.current), m2.atom(p).contains(cb.current));
            if x != y {
                let lit = PmlFormula::atom(p);
                out.push(if x { lit } else { lit.not() });
            }
        }
        for i in 0..self.indices {
            let (x, y) = (ca.poison[i].contains(ca.current), cb.poison[i].contains(cb.current));
            if x != y {
                let lit = PmlFormula::PoisonAtom(i);
                out.push(if x { lit } else { lit.not() });
            }
        }
        out
    }

    fn alive(&self, a: usize, b: usize) -> bool {
        self.removed[self.ids[&(a, b)]].is_none()
    }

    fn wit(&self, a: usize, b: usize) -> &PmlFormula {
        self.witness[self.ids[&(a, b)]]
            .as_ref()
            .expect("removed in an earlier round")
    }

    /// Candidate distinguishing formulas for every clause the pair violates.
    fn violations(&self, a: usize, b: usize) -> Vec<PmlFormula> {
        let mut out = Vec::new();
        for i in 0..self.indices {
            for step in [Step::Plain, Step::Poison] {
                let la = self.left.succ(a, step, i);
                let rb = self.right.succ(b, step, i);
                for &x in la {
                    if !rb.iter().any(|&y| self.alive(x, y)) {
                        let parts: BTreeSet<PmlFormula> = rb.iter().map(|&y| self.wit(x, y).clone()).collect();
                        let body = PmlFormula::conjunction(parts);
                        out.push(match step {
                            Step::Plain => body.diamond_i(i),
                            Step::Poison => body.poison_diamond_i(i),
                        });
                    }
                }
                for &y in rb {
                    if !la.iter().any(|&x| self.alive(x, y)) {
                        let parts: BTreeSet<PmlFormula> = la.iter().map(|&x| self.wit(x, y).clone()).collect();
                        let body = PmlFormula::disjunction(parts);
                        out.push(match step {
                            Step::Plain => body.box_i(i),
                            Step::Poison => body.poison_box_i(i),
                        });
                    }
                }
            }
        }
        out
    }

    fn run(&mut self) {
        for p in 0..self.pairs.len() {
            let (a, b) = self.pairs[p];
            let best = self.literals(a, b).into_iter().min_by_key(key);
            if best.is_some() {
                self.removed[p] = Some(0);
                self.witness[p] = best;
            }
        }
        let mut round = 0;
        loop {
            round += 1;
            let doomed: Vec<(usize, PmlFormula)> = (0..self.pairs.len())
                .filter(|&p| self.removed[p].is_none())
                .filter_map(|p| {
                    let (a, b) = self.pairs[p];
                    let best = self.violations(a, b).into_iter().min_by_key(key)?;
                    Some((p, best))
                })
                .collect();
            if doomed.is_empty() {
                return;
            }
            for (p, f) in doomed {
                self.removed[p] = Some(round);
                self.witness[p] = Some(f);
            }
        }
    }

    fn result(&self) -> BisimResult {
        let start = 0;
        let relation = if self.removed[start].is_none() {
            let mut rel: Vec<ConfigPair> = self
                .pairs
                .iter()
                .zip(&self.removed)
                .filter(|(_, r)| r.is_none())
                .map(|(&(a, b), _)| (self.left.configs[a].clone(), self.right.configs[b].clone()))
                .collect();
            rel.sort();
            rel
        } else {
            Vec::new()
        };
        BisimResult {
            bisimilar: self.removed[start].is_none(),
            relation,
            witness: self.witness[start].clone(),
            separated_at: self.removed[start],
            carrier_size: self.pairs.len(),
        }
    }
}

/// Decides whether `(m1, w1)` and `(m2, w2)` (both with their poison bases) are
/// p-bisimilar, for single-relation models.
pub fn p_bisimilar(m1: &KripkeModel, w1: StateId, m2: &KripkeModel, w2: StateId) -> Result<BisimResult> {
    p_bisimilar_with(m1, w1, m2, w2, &BisimOptions::default())
}

pub fn p_bisimilar_with(
    m1: &KripkeModel,
    w1: StateId,
    m2: &KripkeModel,
    w2: StateId,
    opts: &BisimOptions,
) -> Result<BisimResult> {
    let mut r = Refinement::build(m1, w1, m2, w2, opts)?;
    r.run();
    Ok(r.result())
}

/// True iff no formula of modal depth ≤ `d` over the models' atoms tells the
/// two points apart.
pub fn equivalent_up_to_depth(m1: &KripkeModel, w1: StateId, m2: &KripkeModel, w2: StateId, d: usize) -> Result<bool> {
    let r = p_bisimilar(m1, w1, m2, w2)?;
    Ok(r.separated_at.is_none_or(|k| k > d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::eval_pml;
    use crate::fixtures;
    use crate::kripke::Configuration;

    fn separates(m1: &KripkeModel, w1: StateId, m2: &KripkeModel, w2: StateId, f: &PmlFormula) -> bool {
        let a = eval_pml(&Configuration::initial(m1, w1).unwrap(), f).unwrap();
        let b = eval_pml(&Configuration::initial(m2, w2).unwrap(), f).unwrap();
        a && !b
    }

    #[test]
    fn diamond_pair_is_bisimilar() {
        let r = p_bisimilar(&fixtures::diamond(), 0, &fixtures::diamond_unravelled(), 0).unwrap();
        assert!(r.bisimilar);
        assert!(r.witness.is_none());
        assert!(r.relation.contains(&(
            ConfigPoint::initial(&fixtures::diamond(), 0),
            ConfigPoint::initial(&fixtures::diamond_unravelled(), 0)
        )));
    }

    #[test]
    fn lasso_pair_is_bisimilar() {
        let r = p_bisimilar(&fixtures::lasso(), 0, &fixtures::two_cycle(), 0).unwrap();
        assert!(r.bisimilar);
    }

    #[test]
    fn reflexive_point_against_two_chain() {
        let (m1, m2) = (fixtures::reflexive_point(), fixtures::two_chain());
        let r = p_bisimilar(&m1, 0, &m2, 0).unwrap();
        assert!(!r.bisimilar);
        let w = r.witness.unwrap();
        assert!(w.modal_depth() <= 2, "{w}");
        assert!(separates(&m1, 0, &m2, 0, &w), "{w}");
        assert!(!equivalent_up_to_depth(&m1, 0, &m2, 0, 2).unwrap());
        assert!(equivalent_up_to_depth(&m1, 0, &m2, 0, 0).unwrap());
    }

    #[test]
    fn atom_mismatch_gives_literal() {
        let mut m1 = fixtures::two_chain();
        m1.set_atom("p", StateSet::singleton(0)).unwrap();
        let m2 = fixtures::two_chain();
        let r = p_bisimilar(&m1, 0, &m2, 0).unwrap();
        assert_eq!(r.witness, Some(PmlFormula::atom("p")));
        let r = p_bisimilar(&m2, 0, &m1, 0).unwrap();
        assert_eq!(r.witness, Some(PmlFormula::atom("p").not()));
        assert_eq!(r.separated_at, Some(0));
    }

    #[test]
    fn self_pairs_are_equivalent() {
        let m = fixtures::attack_graph();
        for w in m.states() {
            assert!(equivalent_up_to_depth(&m, w, &m, w, 5).unwrap());
        }
    }

    #[test]
    fn several_relations_need_the_flag() {
        let m = KripkeModel::new(1, 2).unwrap();
        assert!(matches!(p_bisimilar(&m, 0, &m, 0), Err(Error::Unsupported(_))));
        let opts = BisimOptions {
            multi_index: true,
            ..Default::default()
        };
        assert!(p_bisimilar_with(&m, 0, &m, 0, &opts).unwrap().bisimilar);
    }
}
