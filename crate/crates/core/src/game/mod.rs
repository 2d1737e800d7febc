//! The Poison Game: rules, the attractor solver, an engine, and the
//! semi-kernel and admissible-set oracles.

mod kernels;
mod position;
mod solve;

pub use kernels::{
    admissible_sets, is_admissible, is_semi_kernel, semi_kernels, verify_duchet_meyniel, DuchetMeynielReport,
    SemiKernelReport, DEFAULT_SUBSET_STATES,
};
pub use position::{apply_move, legal_moves, GamePosition, IllegalMove, Player};
pub use solve::{best_move, position_count, solve, solve_with_limit, EngineMove, GameSolution, DEFAULT_GAME_STATES};
