use rayon::prelude::*;
use serde::Serialize;

use super::position::Player;
use super::solve::solve;
use crate::kripke::{model_spaces, KripkeModel, ModelGenSpec, StateSet};
use crate::{Error, Result};

/// Largest graph the subset enumerations accept.
pub const DEFAULT_SUBSET_STATES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiKernelReport {
    /// Nonempty semi-kernels ordered by size, then elementwise.
    pub kernels: Vec<StateSet>,
}

fn check_subset_budget(m: &KripkeModel, what: &str) -> Result<()> {
    let n = m.state_count();
    if n > DEFAULT_SUBSET_STATES {
        return Err(Error::Budget {
            what: what.into(),
            estimate: 1u128 << n,
            limit: 1u128 << DEFAULT_SUBSET_STATES,
        });
    }
    Ok(())
}

fn canonical(mut sets: Vec<StateSet>) -> Vec<StateSet> {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
    sets
}

/// Whether `x` is a semi-kernel of relation 0: independent, and every successor
/// of a member has a successor back in `x`.
pub fn is_semi_kernel(m: &KripkeModel, x: StateSet) -> bool {
    x.iter().all(|a| {
        let succ = m.successors(0, a);
        succ.intersection(x).is_empty() && succ.iter().all(|y| !m.successors(0, y).intersection(x).is_empty())
    })
}

/// All nonempty semi-kernels, by subset enumeration.
pub fn semi_kernels(m: &KripkeModel) -> Result<SemiKernelReport> {
    check_subset_budget(m, "semi-kernel subset enumeration")?;
    let kernels = (1..1u64 << m.state_count())
        .map(StateSet::from_bits)
        .filter(|&x| is_semi_kernel(m, x))
        .collect();
    Ok(SemiKernelReport {
        kernels: canonical(kernels),
    })
}

/// Whether `x` is admissible when relation 0 is read as "attacks": no member
/// attacks another, and every attacker of a member is attacked by some member.
pub fn is_admissible(attack: &KripkeModel, x: StateSet) -> bool {
    x.iter().all(|a| {
        let attackers = attack.predecessors(0, a);
        attackers.intersection(x).is_empty()
            && attackers
                .iter()
                .all(|y| !attack.predecessors(0, y).intersection(x).is_empty())
    })
}

/// All admissible sets of an attack graph, the empty set included.
pub fn admissible_sets(attack: &KripkeModel) -> Result<Vec<StateSet>> {
    check_subset_budget(attack, "admissible subset enumeration")?;
    let sets = (0..1u64 << attack.state_count())
        .map(StateSet::from_bits)
        .filter(|&x| is_admissible(attack, x))
        .collect();
    Ok(canonical(sets))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DuchetMeynielReport {
    pub max_states: usize,
    pub graphs: u64,
    /// Graphs where some initial node is winning for Proponent.
    pub proponent_winnable: u64,
    /// Graphs with a nonempty semi-kernel.
    pub with_semi_kernel: u64,
    /// Graphs where the two disagree.
    pub violations: Vec<KripkeModel>,
}

impl DuchetMeynielReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, on every digraph with 1 to `max_states` nodes, that Proponent can
/// win from some initial node iff the graph has a nonempty semi-kernel.
pub fn verify_duchet_meyniel(max_states: usize) -> Result<DuchetMeynielReport> {
    let spec = ModelGenSpec::exhaustive(max_states).up_to();
    let mut report = DuchetMeynielReport {
        max_states,
        ..Default::default()
    };
    for space in model_spaces(&spec)? {
        let partial = (0..space.len())
            .into_par_iter()
            .map(|idx| {
                let m = space.model_at(idx);
                let winnable = solve(&m)
                    .expect("graph within solver limit")
                    .per_initial_node()
                    .values()
                    .any(|&w| w == Player::Proponent);
                let kernel = (1..1u64 << m.state_count()).any(|bits| is_semi_kernel(&m, StateSet::from_bits(bits)));
                let mut r = DuchetMeynielReport {
                    graphs: 1,
                    proponent_winnable: u64::from(winnable),
                    with_semi_kernel: u64::from(kernel),
                    ..Default::default()
                };
                if winnable != kernel {
                    r.violations.push(m);
                }
                r
            })
            .reduce(DuchetMeynielReport::default, |mut a, b| {
                a.graphs += b.graphs;
                a.proponent_winnable += b.proponent_winnable;
                a.with_semi_kernel += b.with_semi_kernel;
                a.violations.extend(b.violations);
                a
            });
        report.graphs += partial.graphs;
        report.proponent_winnable += partial.proponent_winnable;
        report.with_semi_kernel += partial.with_semi_kernel;
        report.violations.extend(partial.violations);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(states: &[usize]) -> StateSet {
        states.iter().copied().collect()
    }

    #[test]
    fn attack_graph_semi_kernels() {
        let r = semi_kernels(&fixtures::attack_graph()).unwrap();
        for x in [&[3][..], &[5], &[4, 5], &[1, 3], &[2, 5]] {
            assert!(r.kernels.contains(&set(x)), "{x:?} missing");
        }
        assert!(r.kernels.iter().all(|k| !k.contains(0)));
        assert_eq!(r.kernels[0], set(&[3]));
    }

    #[test]
    fn edgeless_pair() {
        let r = semi_kernels(&KripkeModel::new(2, 1).unwrap()).unwrap();
        assert_eq!(r.kernels, vec![set(&[0]), set(&[1]), set(&[0, 1])]);
    }

    #[test]
    fn mutual_attack_is_admissible_either_way() {
        let m = KripkeModel::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            admissible_sets(&m).unwrap(),
            vec![StateSet::EMPTY, set(&[0]), set(&[1])]
        );
    }

    #[test]
    fn three_node_graphs_satisfy_the_equivalence() {
        let r = verify_duchet_meyniel(3).unwrap();
        assert_eq!(r.graphs, 2 + 16 + 512);
        assert!(r.holds(), "{:?}", r.violations);
    }
}
