//! Small named models used throughout the tests, the CLI and the docs.

use crate::kripke::KripkeModel;

fn named(names: &[&str], edges: &[(usize, usize)]) -> KripkeModel {
    let mut m =
        KripkeModel::with_names(names.iter().map(|s| s.to_string()).collect(), 1).expect("fixture is well formed");
    for &(a, b) in edges {
        m.add_edge(0, a, b).expect("fixture is well formed");
    }
    m
}

/// Six nodes `1..6` with 1→2, 1→3, 2→5, 3→4, 5→4 and the 2-cycle 4↔6.
pub fn attack_graph() -> KripkeModel {
    named(
        &["1", "2", "3", "4", "5", "6"],
        &[(0, 1), (0, 2), (1, 4), (2, 3), (4, 3), (3, 5), (5, 3)],
    )
}

/// Diamond w1→{w2,w3}→w4 (pointed at `w1`, state 0).
pub fn diamond() -> KripkeModel {
    named(&["w1", "w2", "w3", "w4"], &[(0, 2), (0, 1), (1, 3), (2, 3)])
}

/// Tree w1'→w2'→w4', w1'→w3'→w4'' (pointed at `w1'`, state 0).
pub fn diamond_unravelled() -> KripkeModel {
    named(&["w1'", "w2'", "w3'", "w4'", "w4''"], &[(0, 1), (0, 2), (1, 3), (2, 4)])
}

/// w1→w2 with the 2-cycle w2↔w3 (pointed at `w1`, state 0).
pub fn lasso() -> KripkeModel {
    named(&["w1", "w2", "w3"], &[(0, 1), (1, 2), (2, 1)])
}

/// The 2-cycle w1'↔w2' (pointed at `w1'`, state 0).
pub fn two_cycle() -> KripkeModel {
    named(&["w1'", "w2'"], &[(0, 1), (1, 0)])
}

/// One reflexive point.
pub fn reflexive_point() -> KripkeModel {
    named(&["r"], &[(0, 0)])
}

/// The first two nodes of the unravelling of a reflexive point: `a→b`.
pub fn two_chain() -> KripkeModel {
    named(&["a", "b"], &[(0, 1)])
}
