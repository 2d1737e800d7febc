use std::hash::{Hash, Hasher};

use super::model::KripkeModel;
use super::stateset::{ModalIndex, StateId, StateSet};
use crate::{Error, Result};

/// A pointed model together with the poisonings accumulated so far.
///
/// `poison[i]` is the full truth set of poison atom `i` (it always contains the
/// model's poison base), so evaluation never has to consult the base separately.
#[derive(Clone, Debug)]
pub struct Configuration<'m> {
    model: &'m KripkeModel,
    poison: Vec<StateSet>,
    current: StateId,
}

impl<'m> Configuration<'m> {
    /// The configuration at `current` with no poisoning beyond the model's base.
    pub fn initial(model: &'m KripkeModel, current: StateId) -> Result<Self> {
        model.check_state(current)?;
        Ok(Configuration {
            model,
            poison: model.poison_bases().to_vec(),
            current,
        })
    }

    /// Explicit poison sets; each is widened to include the model's base.
    pub fn new(model: &'m KripkeModel, poison: Vec<StateSet>, current: StateId) -> Result<Self> {
        model.check_state(current)?;
        if poison.len() != model.relation_count() {
            return Err(Error::InvalidArgument(format!(
                "expected {} poison sets, got {}",
                model.relation_count(),
                poison.len()
            )));
        }
        let all = model.all_states();
        let mut widened = Vec::with_capacity(poison.len());
        for (i, set) in poison.into_iter().enumerate() {
            if !set.is_subset(all) {
                return Err(Error::InvalidState {
                    state: set.difference(all).first().unwrap_or_default(),
                    count: model.state_count(),
                });
            }
            widened.push(set.union(model.poison_base(i)));
        }
        Ok(Configuration {
            model,
            poison: widened,
            current,
        })
    }

    pub fn model(&self) -> &'m KripkeModel {
        self.model
    }

    pub fn current(&self) -> StateId {
        self.current
    }

    /// Truth set of poison atom `i` in this configuration.
    pub fn poison_set(&self, i: ModalIndex) -> StateSet {
        self.poison[i]
    }

    pub fn poison_sets(&self) -> &[StateSet] {
        &self.poison
    }

    /// Moves the point without poisoning (a ◇-step).
    pub fn moved_to(&self, v: StateId) -> Result<Self> {
        self.model.check_state(v)?;
        Ok(Configuration {
            model: self.model,
            poison: self.poison.clone(),
            current: v,
        })
    }

    /// Poisons `v` under index `i` and moves there.
    pub fn poison(&self, i: ModalIndex, v: StateId) -> Result<Self> {
        self.model.check_index(i)?;
        self.model.check_state(v)?;
        let mut poison = self.poison.clone();
        poison[i].insert(v);
        Ok(Configuration {
            model: self.model,
            poison,
            current: v,
        })
    }

    /// Every configuration reachable by one poisoning `i`-step, ordered by target state.
    pub fn poison_successors(&self, i: ModalIndex) -> Result<Vec<Self>> {
        self.model.check_index(i)?;
        self.model
            .successors(i, self.current)
            .iter()
            .map(|v| self.poison(i, v))
            .collect()
    }

    /// Plain `i`-successors with unchanged poison sets.
    pub fn successors(&self, i: ModalIndex) -> Result<Vec<Self>> {
        self.model.check_index(i)?;
        self.model
            .successors(i, self.current)
            .iter()
            .map(|v| self.moved_to(v))
            .collect()
    }
}

impl PartialEq for Configuration<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.current == other.current
            && self.poison == other.poison
            && (std::ptr::eq(self.model, other.model) || self.model == other.model)
    }
}

impl Eq for Configuration<'_> {}

impl Hash for Configuration<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.current.hash(state);
        self.poison.hash(state);
    }
}
