#![allow(dead_code)]

use pml::checker::eval_pml;
use pml::kripke::{random_model, Configuration, KripkeModel, StateId, StateSet};
use pml::syntax::PmlFormula;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type F = PmlFormula;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A random single-relation formula over `p`, `q` and the poison atom with
/// modal depth at most `depth` and at most a dozen connectives.
pub fn formula(rng: &mut ChaCha8Rng, depth: usize) -> F {
    grow(rng, depth, &mut 12)
}

fn grow(rng: &mut ChaCha8Rng, depth: usize, budget: &mut u32) -> F {
    if *budget == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..5) {
            0 => F::atom("p"),
            1 => F::atom("q"),
            2 => F::poison(),
            3 => F::True,
            _ => F::False,
        };
    }
    *budget -= 1;
    let ops = if depth == 0 { 4 } else { 9 };
    match rng.gen_range(0..ops) {
        0 => grow(rng, depth, budget).not(),
        1 => grow(rng, depth, budget).and(grow(rng, depth, budget)),
        2 => grow(rng, depth, budget).or(grow(rng, depth, budget)),
        3 => grow(rng, depth, budget).implies(grow(rng, depth, budget)),
        4 => grow(rng, depth - 1, budget).diamond(),
        5 => grow(rng, depth - 1, budget).boxed(),
        6 => grow(rng, depth - 1, budget).poison_diamond(),
        7 => grow(rng, depth - 1, budget).poison_box(),
        _ => grow(rng, depth - 1, budget).iff(grow(rng, depth - 1, budget)),
    }
}

/// A random model in 𝔐^∅ with 1 to `max_states` states over `p` and `q`.
pub fn model(rng: &mut ChaCha8Rng, max_states: usize) -> KripkeModel {
    let n = rng.gen_range(1..=max_states);
    let density = rng.gen_range(0.15..0.6);
    random_model(rng, n, 1, &["p".to_string(), "q".to_string()], density)
}

pub fn random_poison(rng: &mut ChaCha8Rng, n: usize) -> StateSet {
    (0..n).filter(|_| rng.gen_bool(0.3)).collect()
}

pub fn holds(m: &KripkeModel, w: StateId, f: &F) -> bool {
    eval_pml(&Configuration::initial(m, w).unwrap(), f).unwrap()
}

pub fn holds_poisoned(m: &KripkeModel, poison: StateSet, w: StateId, f: &F) -> bool {
    eval_pml(&Configuration::new(m, vec![poison], w).unwrap(), f).unwrap()
}

/// Every single-relation graph on exactly `n` nodes, in index order.
pub fn graphs(n: usize) -> impl Iterator<Item = KripkeModel> {
    (0..1u64 << (n * n)).map(move |bits| {
        let mut m = KripkeModel::new(n, 1).unwrap();
        for a in 0..n {
            for b in 0..n {
                if bits >> (a * n + b) & 1 == 1 {
                    m.add_edge(0, a, b).unwrap();
                }
            }
        }
        m
    })
}

pub fn subsets(n: usize) -> impl Iterator<Item = StateSet> {
    (0..1u64 << n).map(StateSet::from_bits)
}
