use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::model::KripkeModel;
use super::stateset::StateSet;
use crate::{Error, Result};

/// Default cap on the number of models an exhaustive enumeration may produce.
pub const DEFAULT_MODEL_BUDGET: u128 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    Exhaustive,
    Random,
}

/// What to enumerate: model sizes, atoms, relation count and mode.
///
/// Exhaustive mode covers every size in `min_states..=max_states`; the default
/// is exactly `max_states`. Random mode draws sizes uniformly from the same range
/// and never ends; take as many models as needed.
#[derive(Clone, Debug, PartialEq)]
pub struct ModelGenSpec {
    pub max_states: usize,
    pub min_states: usize,
    pub atoms: Vec<String>,
    pub relation_count: usize,
    pub seed: u64,
    pub mode: GenMode,
    pub budget: u128,
    /// Edge probability in random mode.
    pub edge_probability: f64,
}

impl ModelGenSpec {
    pub fn exhaustive(max_states: usize) -> Self {
        ModelGenSpec {
            max_states,
            min_states: max_states,
            atoms: Vec::new(),
            relation_count: 1,
            seed: 0,
            mode: GenMode::Exhaustive,
            budget: DEFAULT_MODEL_BUDGET,
            edge_probability: 0.5,
        }
    }

    pub fn random(max_states: usize, seed: u64) -> Self {
        ModelGenSpec {
            min_states: 1,
            seed,
            mode: GenMode::Random,
            ..Self::exhaustive(max_states)
        }
    }

    /// Cover every size from 1 up to `max_states`.
    pub fn up_to(mut self) -> Self {
        self.min_states = 1;
        self
    }

    pub fn atoms<I, S>(mut self, atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.atoms = atoms.into_iter().map(Into::into).collect();
        self
    }

    pub fn relations(mut self, count: usize) -> Self {
        self.relation_count = count;
        self
    }

    pub fn budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_states == 0 || self.min_states == 0 || self.min_states > self.max_states {
            return Err(Error::InvalidArgument(format!(
                "state range {}..={} is empty",
                self.min_states, self.max_states
            )));
        }
        if self.max_states > super::MAX_STATES {
            return Err(Error::InvalidArgument(format!(
                "max_states {} exceeds {}",
                self.max_states,
                super::MAX_STATES
            )));
        }
        if self.relation_count == 0 {
            return Err(Error::InvalidArgument("relation count must be ≥1".into()));
        }
        Ok(())
    }

    /// Number of models with exactly `n` states: 2^(n²·r) · 2^(n·|atoms|).
    pub fn count_for(&self, n: usize) -> Option<u128> {
        let bits = n * n * self.relation_count + n * self.atoms.len();
        if bits >= 128 {
            None
        } else {
            Some(1u128 << bits)
        }
    }

    /// Total exhaustive count over the size range, `None` on overflow.
    pub fn exhaustive_count(&self) -> Option<u128> {
        (self.min_states..=self.max_states).try_fold(0u128, |acc, n| acc.checked_add(self.count_for(n)?))
    }
}

/// Every model of one fixed size, addressable by index.
#[derive(Clone, Debug)]
pub struct ModelSpace {
    states: usize,
    relations: usize,
    atoms: Vec<String>,
}

impl ModelSpace {
    pub fn new(states: usize, relations: usize, atoms: Vec<String>) -> Self {
        ModelSpace {
            states,
            relations,
            atoms,
        }
    }

    pub fn state_count(&self) -> usize {
        self.states
    }

    fn bits(&self) -> usize {
        self.states * self.states * self.relations + self.states * self.atoms.len()
    }

    pub fn len(&self) -> u64 {
        1u64 << self.bits()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Decodes model number `index`: the low bits are the relations (relation-major,
    /// then source, then target), the high bits the valuation (atom-major, then state).
    pub fn model_at(&self, index: u64) -> KripkeModel {
        debug_assert!(self.bits() < 64 && index < self.len());
        let n = self.states;
        let mut m = KripkeModel::new(n, self.relations).expect("validated sizes");
        let mut bit = 0;
        for i in 0..self.relations {
            for a in 0..n {
                for b in 0..n {
                    if index >> bit & 1 == 1 {
                        m.add_edge(i, a, b).expect("in range");
                    }
                    bit += 1;
                }
            }
        }
        for atom in &self.atoms {
            let mut set = StateSet::EMPTY;
            for s in 0..n {
                if index >> bit & 1 == 1 {
                    set.insert(s);
                }
                bit += 1;
            }
            m.set_atom(atom.clone(), set).expect("in range");
        }
        m
    }

    pub fn iter(&self) -> impl Iterator<Item = KripkeModel> + '_ {
        (0..self.len()).map(|k| self.model_at(k))
    }
}

/// Stream produced by [`enumerate_models`].
#[allow(clippy::large_enum_variant)]
pub enum ModelStream {
    Exhaustive {
        spaces: Vec<ModelSpace>,
        space: usize,
        next: u64,
    },
    Random {
        spec: ModelGenSpec,
        rng: ChaCha8Rng,
    },
}

impl Iterator for ModelStream {
    type Item = KripkeModel;

    fn next(&mut self) -> Option<KripkeModel> {
        match self {
            ModelStream::Exhaustive { spaces, space, next } => loop {
                let current = spaces.get(*space)?;
                if *next < current.len() {
                    let m = current.model_at(*next);
                    *next += 1;
                    return Some(m);
                }
                *space += 1;
                *next = 0;
            },
            ModelStream::Random { spec, rng } => {
                let n = rng.gen_range(spec.min_states..=spec.max_states);
                Some(random_model(
                    rng,
                    n,
                    spec.relation_count,
                    &spec.atoms,
                    spec.edge_probability,
                ))
            }
        }
    }
}

/// Per-size model spaces for an exhaustive spec, after the budget check.
pub fn model_spaces(spec: &ModelGenSpec) -> Result<Vec<ModelSpace>> {
    spec.validate()?;
    let estimate = spec.exhaustive_count().unwrap_or(u128::MAX);
    if estimate > spec.budget || spec.count_for(spec.max_states).is_none_or(|c| c > 1 << 62) {
        return Err(Error::Budget {
            what: "exhaustive model enumeration".into(),
            estimate,
            limit: spec.budget,
        });
    }
    Ok((spec.min_states..=spec.max_states)
        .map(|n| ModelSpace::new(n, spec.relation_count, spec.atoms.clone()))
        .collect())
}

/// Enumerates models per `spec`. Exhaustive mode yields each model exactly once with
/// empty poison bases; random mode is an endless stream, deterministic per seed.
pub fn enumerate_models(spec: &ModelGenSpec) -> Result<ModelStream> {
    match spec.mode {
        GenMode::Exhaustive => Ok(ModelStream::Exhaustive {
            spaces: model_spaces(spec)?,
            space: 0,
            next: 0,
        }),
        GenMode::Random => {
            spec.validate()?;
            Ok(ModelStream::Random {
                spec: spec.clone(),
                rng: ChaCha8Rng::seed_from_u64(spec.seed),
            })
        }
    }
}

/// A random model with `n` states in 𝔐^∅.
pub fn random_model<R: Rng>(
    rng: &mut R,
    n: usize,
    relations: usize,
    atoms: &[String],
    edge_probability: f64,
) -> KripkeModel {
    let mut m = KripkeModel::new(n, relations).expect("caller validated sizes");
    for i in 0..relations {
        for a in 0..n {
            for b in 0..n {
                if rng.gen_bool(edge_probability) {
                    m.add_edge(i, a, b).expect("in range");
                }
            }
        }
    }
    for atom in atoms {
        let set = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        m.set_atom(atom.clone(), set).expect("in range");
    }
    m
}
