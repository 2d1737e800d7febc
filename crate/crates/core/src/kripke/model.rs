use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::stateset::{ModalIndex, StateId, StateSet, MAX_STATES};
use crate::{Error, Result};

/// A finite Kripke model with `n ≥ 1` relations and one poison atom per relation.
///
/// States are dense integers in declaration order; external names live in a side
/// table and only matter for I/O. Successor sets are stored per state as bitsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KripkeModel {
    names: Vec<String>,
    relations: Vec<Vec<StateSet>>,
    valuation: BTreeMap<String, StateSet>,
    poison_base: Vec<StateSet>,
}

impl KripkeModel {
    /// An edgeless model with states named `1..=n`.
    pub fn new(states: usize, relation_count: usize) -> Result<Self> {
        let names = (1..=states).map(|i| i.to_string()).collect();
        Self::with_names(names, relation_count)
    }

    pub fn with_names(names: Vec<String>, relation_count: usize) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::model("states", "model must have ≥1 state"));
        }
        if names.len() > MAX_STATES {
            return Err(Error::model(
                "states",
                format!("model has {} states, at most {MAX_STATES} supported", names.len()),
            ));
        }
        if relation_count == 0 {
            return Err(Error::model("relations", "model must have ≥1 relation"));
        }
        let n = names.len();
        Ok(KripkeModel {
            names,
            relations: vec![vec![StateSet::EMPTY; n]; relation_count],
            valuation: BTreeMap::new(),
            poison_base: vec![StateSet::EMPTY; relation_count],
        })
    }

    /// Single-relation model from a 0-based edge list.
    pub fn from_edges(states: usize, edges: &[(StateId, StateId)]) -> Result<Self> {
        let mut m = Self::new(states, 1)?;
        for &(a, b) in edges {
            m.add_edge(0, a, b)?;
        }
        Ok(m)
    }

    pub fn state_count(&self) -> usize {
        self.names.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.names.len()
    }

    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.names.len())
    }

    pub fn name(&self, s: StateId) -> &str {
        &self.names[s]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_by_name(&self, name: &str) -> Option<StateId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn check_state(&self, s: StateId) -> Result<()> {
        if s < self.state_count() {
            Ok(())
        } else {
            Err(Error::InvalidState {
                state: s,
                count: self.state_count(),
            })
        }
    }

    pub fn check_index(&self, i: ModalIndex) -> Result<()> {
        if i < self.relation_count() {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index: i,
                count: self.relation_count(),
            })
        }
    }

    fn check_set(&self, set: StateSet) -> Result<()> {
        match set.difference(self.all_states()).first() {
            None => Ok(()),
            Some(s) => Err(Error::InvalidState {
                state: s,
                count: self.state_count(),
            }),
        }
    }

    pub fn add_edge(&mut self, i: ModalIndex, from: StateId, to: StateId) -> Result<()> {
        self.check_index(i)?;
        self.check_state(from)?;
        self.check_state(to)?;
        self.relations[i][from].insert(to);
        Ok(())
    }

    pub fn has_edge(&self, i: ModalIndex, from: StateId, to: StateId) -> bool {
        self.relations[i][from].contains(to)
    }

    pub fn successors(&self, i: ModalIndex, s: StateId) -> StateSet {
        self.relations[i][s]
    }

    pub fn predecessors(&self, i: ModalIndex, s: StateId) -> StateSet {
        self.states().filter(|&u| self.relations[i][u].contains(s)).collect()
    }

    /// States with at least one `i`-successor in `target`.
    pub fn pre_image(&self, i: ModalIndex, target: StateSet) -> StateSet {
        self.states()
            .filter(|&u| !self.relations[i][u].intersection(target).is_empty())
            .collect()
    }

    /// Edges of relation `i` in (source, target) order.
    pub fn edges(&self, i: ModalIndex) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.relations[i]
            .iter()
            .enumerate()
            .flat_map(|(s, succ)| succ.iter().map(move |t| (s, t)))
    }

    pub fn edge_count(&self, i: ModalIndex) -> usize {
        self.relations[i].iter().map(|s| s.len()).sum()
    }

    /// Truth set of an ordinary atom; atoms absent from the valuation are false everywhere.
    pub fn atom(&self, name: &str) -> StateSet {
        self.valuation.get(name).copied().unwrap_or_default()
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&str, StateSet)> + '_ {
        self.valuation.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn set_atom(&mut self, name: impl Into<String>, set: StateSet) -> Result<()> {
        self.check_set(set)?;
        self.valuation.insert(name.into(), set);
        Ok(())
    }

    pub fn poison_base(&self, i: ModalIndex) -> StateSet {
        self.poison_base[i]
    }

    pub fn poison_bases(&self) -> &[StateSet] {
        &self.poison_base
    }

    pub fn set_poison_base(&mut self, i: ModalIndex, set: StateSet) -> Result<()> {
        self.check_index(i)?;
        self.check_set(set)?;
        self.poison_base[i] = set;
        Ok(())
    }

    /// True iff no poison atom holds anywhere (the class 𝔐^∅).
    pub fn is_unpoisoned(&self) -> bool {
        self.poison_base.iter().all(|s| s.is_empty())
    }

    /// The model-level poisoning `M•_w`: adds `w` to the truth set of poison atom `i`.
    pub fn poisoned(&self, i: ModalIndex, w: StateId) -> Result<KripkeModel> {
        self.check_index(i)?;
        self.check_state(w)?;
        let mut m = self.clone();
        m.poison_base[i].insert(w);
        Ok(m)
    }

    /// Same states and labels with every relation reversed.
    pub fn inverse(&self) -> KripkeModel {
        let mut m = self.clone();
        for (i, rel) in m.relations.iter_mut().enumerate() {
            rel.iter_mut().for_each(|s| *s = StateSet::EMPTY);
            for (a, b) in self.edges(i) {
                rel[b].insert(a);
            }
        }
        m
    }

    /// Graphviz rendering; relation indices are distinguished by edge style.
    pub fn to_dot(&self) -> String {
        const STYLES: [&str; 4] = ["solid", "dashed", "dotted", "bold"];
        let mut out = String::from("digraph model {\n");
        for s in self.states() {
            let mut labels: Vec<&str> = self
                .valuation
                .iter()
                .filter(|(_, set)| set.contains(s))
                .map(|(k, _)| k.as_str())
                .collect();
            let poisoned: Vec<String> = (0..self.relation_count())
                .filter(|&i| self.poison_base[i].contains(s))
                .map(|i| format!("#p_{}", i + 1))
                .collect();
            labels.extend(poisoned.iter().map(String::as_str));
            let label = if labels.is_empty() {
                self.names[s].clone()
            } else {
                format!("{}\\n{}", self.names[s], labels.join(","))
            };
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"];", self.names[s], label);
        }
        for i in 0..self.relation_count() {
            for (a, b) in self.edges(i) {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [style={}, label=\"{}\"];",
                    self.names[a],
                    self.names[b],
                    STYLES[i % STYLES.len()],
                    i + 1
                );
            }
        }
        out.push_str("}\n");
        out
    }
}
