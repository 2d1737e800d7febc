use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::pml::{check_indices, PmlEvaluator};
use crate::kripke::{model_spaces, random_model, GenMode, KripkeModel, ModelGenSpec, StateId};
use crate::syntax::PmlFormula;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    /// A pointed model in 𝔐^∅ where the formula is false.
    Countermodel { model: KripkeModel, state: StateId },
    /// A pointed model in 𝔐^∅ where the formula is true.
    Satisfiable { model: KripkeModel, state: StateId },
    /// Every model in the search space was checked and none qualified. This is
    /// a bounded claim about those models only.
    Exhausted { models: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Pointed models examined before the verdict was reached.
    pub states_explored: u64,
}

/// Searches `spec`'s models for a point where `phi` is false.
///
/// Exhaustive specs cover every model in range; random specs draw `spec.budget`
/// models. If `spec.atoms` is empty the formula's own atoms are used.
pub fn check_validity(phi: &PmlFormula, spec: &ModelGenSpec) -> Result<CheckReport> {
    search(phi, spec, false)
}

/// Searches `spec`'s models for a point where `phi` is true.
pub fn check_sat(phi: &PmlFormula, spec: &ModelGenSpec) -> Result<CheckReport> {
    search(phi, spec, true)
}

/// The first state of `m` (under empty poison) whose truth value is `want`.
fn find_point(m: &KripkeModel, phi: &PmlFormula, want: bool) -> Option<StateId> {
    let mut ev = PmlEvaluator::new(m);
    let truth = ev
        .truth_set(phi, m.poison_bases())
        .expect("indices validated before the search");
    let hits = if want { truth } else { truth.complement(m.state_count()) };
    hits.first()
}

fn search(phi: &PmlFormula, spec: &ModelGenSpec, want: bool) -> Result<CheckReport> {
    let mut spec = spec.clone();
    if spec.atoms.is_empty() {
        spec.atoms = phi.atoms().into_iter().collect();
    }
    if let Some(i) = phi.max_index() {
        if i >= spec.relation_count {
            return Err(Error::InvalidIndex {
                index: i,
                count: spec.relation_count,
            });
        }
    }
    let found = |model: KripkeModel, state| {
        if want {
            Verdict::Satisfiable { model, state }
        } else {
            Verdict::Countermodel { model, state }
        }
    };
    match spec.mode {
        GenMode::Exhaustive => {
            let mut explored = 0u64;
            let mut models = 0u64;
            for space in model_spaces(&spec)? {
                let n = space.state_count() as u64;
                let hit = (0..space.len()).into_par_iter().find_map_first(|idx| {
                    let m = space.model_at(idx);
                    find_point(&m, phi, want).map(|w| (idx, m, w))
                });
                if let Some((idx, m, w)) = hit {
                    return Ok(CheckReport {
                        verdict: found(m, w),
                        states_explored: explored + idx * n + w as u64 + 1,
                    });
                }
                explored += space.len() * n;
                models += space.len();
            }
            Ok(CheckReport {
                verdict: Verdict::Exhausted { models },
                states_explored: explored,
            })
        }
        GenMode::Random => {
            let samples = u64::try_from(spec.budget).unwrap_or(u64::MAX);
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut explored = 0u64;
            for _ in 0..samples {
                let n = rand::Rng::gen_range(&mut rng, spec.min_states..=spec.max_states);
                let m = random_model(&mut rng, n, spec.relation_count, &spec.atoms, spec.edge_probability);
                check_indices(&m, phi)?;
                if let Some(w) = find_point(&m, phi, want) {
                    return Ok(CheckReport {
                        verdict: found(m, w),
                        states_explored: explored + w as u64 + 1,
                    });
                }
                explored += n as u64;
            }
            Ok(CheckReport {
                verdict: Verdict::Exhausted { models: samples },
                states_explored: explored,
            })
        }
    }
}
