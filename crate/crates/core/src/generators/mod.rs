//! Formula families and fixture models: circuit detection, winning positions,
//! admissibility, the tiling reduction and the infinite-model formula.

mod tiling;

pub use tiling::{tiling_formula, torus_grid_model, Tile, TileSet, TilingMode};

use serde::Serialize;

use crate::game::Player;
use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::syntax::PmlFormula;
use crate::{Error, Result};

type F = PmlFormula;

fn positive(what: &str, n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(format!("{what} must be at least 1")))
    } else {
        Ok(())
    }
}

/// δ₁ = ◇𝔭, δ_{n+1} = ◇(¬𝔭 ∧ δ_n).
pub fn delta_n(n: usize) -> Result<PmlFormula> {
    positive("n", n)?;
    let mut f = F::poison().diamond();
    for _ in 1..n {
        f = F::poison().not().and(f).diamond();
    }
    Ok(f)
}

/// Whether some closed walk of length exactly `n` leaves `v` and returns to it
/// without visiting `v` in between. Interior states may repeat.
pub fn circuit_oracle(m: &KripkeModel, v: StateId, n: usize) -> bool {
    if n == 0 || v >= m.state_count() {
        return false;
    }
    if n == 1 {
        return m.has_edge(0, v, v);
    }
    let mut layer = m.successors(0, v).without(v);
    for _ in 2..n {
        let mut next = StateSet::EMPTY;
        for u in layer.iter() {
            next = next.union(m.successors(0, u));
        }
        layer = next.without(v);
    }
    !layer.intersection(m.predecessors(0, v)).is_empty()
}

/// The first `k` terms of the infinitary winning-position formula: the
/// disjunction of (◆□)^j 𝔭 for Opponent, the conjunction of (■◇)^j ¬𝔭 for
/// Proponent, j = 1..k.
pub fn win_formula(player: Player, k: usize) -> Result<PmlFormula> {
    positive("k", k)?;
    let terms = (1..=k).map(|j| {
        let mut f = match player {
            Player::Opponent => F::poison(),
            Player::Proponent => F::poison().not(),
        };
        for _ in 0..j {
            f = match player {
                Player::Opponent => f.boxed().poison_diamond(),
                Player::Proponent => f.diamond().poison_box(),
            };
        }
        f
    });
    Ok(match player {
        Player::Opponent => F::disjunction(terms),
        Player::Proponent => F::conjunction(terms),
    })
}

/// `[U](p -> ~<>p) & [U](p -> []<>p)`: the states labelled `p` form an
/// admissible set when edges point from a node to its attackers.
pub fn admissibility_formula() -> PmlFormula {
    let p = || F::atom("p");
    p().implies(p().diamond().not())
        .u_box()
        .and(p().implies(p().diamond().boxed()).u_box())
}

/// The five conjuncts α, β, γ, δ, ε of the formula with no finite model, over
/// atom `q`.
pub fn fmp_conjuncts() -> [PmlFormula; 5] {
    let q = || F::atom("q");
    let p = F::poison;
    let alpha = F::conjunction([
        q().not(),
        F::True.diamond(),
        q().boxed(),
        F::True.diamond().and(q().not().boxed()).boxed(),
    ]);
    let beta = p().diamond().boxed().poison_box();
    let gamma = q()
        .not()
        .and(p().diamond())
        .diamond()
        .boxed()
        .poison_box()
        .and(p().diamond().poison_diamond().not().boxed().boxed());
    let delta = q().implies(p().diamond()).boxed().poison_box().boxed().boxed();
    let epsilon = q()
        .and(q().not().and(p().diamond()).diamond())
        .diamond()
        .not()
        .poison_diamond()
        .boxed();
    [alpha, beta, gamma, delta, epsilon]
}

/// α ∧ β ∧ γ ∧ δ ∧ ε.
pub fn fmp_formula() -> PmlFormula {
    F::conjunction(fmp_conjuncts())
}

/// One of the six validities about the poison modalities, instantiated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Validity {
    pub name: &'static str,
    pub formula: PmlFormula,
}

/// The six validities, with `phi` and `psi` substituted for the schematic
/// letters. The third one is only valid for an atom and always uses `p`.
pub fn poison_validities(phi: &PmlFormula, psi: &PmlFormula) -> Vec<Validity> {
    let p = F::poison;
    let v = |name, formula| Validity { name, formula };
    vec![
        v("poison-untouched", p().not().and(p().poison_box())),
        v("dead-end", F::False.boxed().implies(phi.clone().poison_box())),
        v("atomic-box", F::atom("p").poison_box().iff(F::atom("p").boxed())),
        v(
            "already-poisoned",
            p().boxed().implies(phi.clone().poison_box().iff(phi.clone().boxed())),
        ),
        v(
            "box-distributes",
            phi.clone()
                .and(psi.clone())
                .poison_box()
                .iff(phi.clone().poison_box().and(psi.clone().poison_box())),
        ),
        v(
            "box-negation",
            phi.clone()
                .not()
                .poison_box()
                .implies(F::False.boxed().or(phi.clone().poison_box().not())),
        ),
    ]
}

/// The schematic `■φ ↔ □φ`, which is not valid.
pub fn schematic_box_equivalence(phi: &PmlFormula) -> PmlFormula {
    phi.clone().poison_box().iff(phi.clone().boxed())
}
