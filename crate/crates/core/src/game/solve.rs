use std::collections::{BTreeMap, VecDeque};

use super::position::{legal_moves, GamePosition, Player};
use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::{Error, Result};

/// Largest graph [`solve`] accepts by default.
pub const DEFAULT_GAME_STATES: usize = 16;

const UNREACHED: u32 = u32::MAX;

/// Number of positions in the configuration graph of an `n`-node game.
pub fn position_count(n: usize) -> u128 {
    (1u128 << n) * n as u128 * 2
}

/// Winning regions of the Poison Game on one graph.
///
/// Opponent's winning region is the attractor of the positions where Proponent
/// is to move and stuck. `rank` is the number of plies Opponent needs to force
/// that outcome; every other position is won by Proponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameSolution {
    n: usize,
    succ: Vec<StateSet>,
    ranks: Vec<u32>,
}

impl GameSolution {
    pub fn state_count(&self) -> usize {
        self.n
    }

    fn index(&self, poisoned: StateSet, token: StateId, to_move: Player) -> usize {
        let turn = usize::from(to_move == Player::Opponent);
        ((poisoned.bits() as usize * self.n) + token) * 2 + turn
    }

    fn decode(&self, idx: usize) -> GamePosition {
        let to_move = if idx % 2 == 1 {
            Player::Opponent
        } else {
            Player::Proponent
        };
        let rest = idx / 2;
        GamePosition::new(StateSet::from_bits((rest / self.n) as u64), rest % self.n, to_move)
    }

    /// Plies Opponent needs to strand Proponent, or `None` if Proponent wins.
    pub fn rank(&self, p: &GamePosition) -> Option<u32> {
        if !p.started {
            return None;
        }
        let r = self.ranks[self.index(p.poisoned, p.token, p.to_move)];
        (r != UNREACHED).then_some(r)
    }

    /// Winner under optimal play. Before the opening move this is Proponent iff
    /// some initial node is winning for her.
    pub fn winner(&self, p: &GamePosition) -> Player {
        if !p.started {
            return if (0..self.n).any(|w| self.initial_winner(w) == Player::Proponent) {
                Player::Proponent
            } else {
                Player::Opponent
            };
        }
        match self.rank(p) {
            Some(_) => Player::Opponent,
            None => Player::Proponent,
        }
    }

    /// Winner when Proponent opens at `w`.
    pub fn initial_winner(&self, w: StateId) -> Player {
        self.winner(&GamePosition::new(StateSet::EMPTY, w, Player::Opponent))
    }

    pub fn per_initial_node(&self) -> BTreeMap<StateId, Player> {
        (0..self.n).map(|w| (w, self.initial_winner(w))).collect()
    }

    /// Every position in Opponent's winning region.
    pub fn opponent_wins(&self) -> impl Iterator<Item = GamePosition> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != UNREACHED)
            .map(|(i, _)| self.decode(i))
    }

    pub fn all_positions(&self) -> impl Iterator<Item = GamePosition> + '_ {
        (0..self.ranks.len()).map(|i| self.decode(i))
    }

    /// The strategy move at `p`, defined exactly when the player to move wins.
    /// Opponent plays a successor of least rank, Proponent the lowest-numbered
    /// unpoisoned successor outside the attractor.
    pub fn strategy_move(&self, p: &GamePosition) -> Option<StateId> {
        if !p.started {
            return (0..self.n).find(|&w| self.initial_winner(w) == Player::Proponent);
        }
        let winner = self.winner(p);
        if winner != p.to_move {
            return None;
        }
        let succ = self.succ[p.token];
        match p.to_move {
            Player::Opponent => succ
                .iter()
                .filter_map(|v| {
                    let next = GamePosition::new(p.poisoned.with(v), v, Player::Proponent);
                    self.rank(&next).map(|r| (r, v))
                })
                .min()
                .map(|(_, v)| v),
            Player::Proponent => succ
                .difference(p.poisoned)
                .iter()
                .find(|&v| self.rank(&GamePosition::new(p.poisoned, v, Player::Opponent)).is_none()),
        }
    }

    /// The strategy of `player` as an explicit map over all positions where it
    /// is defined.
    pub fn strategy(&self, player: Player) -> BTreeMap<GamePosition, StateId> {
        self.all_positions()
            .filter(|p| p.to_move == player)
            .filter_map(|p| self.strategy_move(&p).map(|v| (p, v)))
            .collect()
    }
}

/// Solves the game with the default size limit.
pub fn solve(m: &KripkeModel) -> Result<GameSolution> {
    solve_with_limit(m, DEFAULT_GAME_STATES)
}

/// Backward attractor computation over all (poisoned, token, turn) positions on
/// relation 0.
pub fn solve_with_limit(m: &KripkeModel, max_states: usize) -> Result<GameSolution> {
    let n = m.state_count();
    if n > max_states || n > 24 {
        return Err(Error::Budget {
            what: "poison game configuration graph".into(),
            estimate: position_count(n),
            limit: position_count(max_states.min(24)),
        });
    }
    let succ: Vec<StateSet> = m.states().map(|s| m.successors(0, s)).collect();
    let pred: Vec<StateSet> = m.states().map(|s| m.predecessors(0, s)).collect();
    let mut sol = GameSolution {
        n,
        succ,
        ranks: vec![UNREACHED; position_count(n) as usize],
    };
    let mut pending = vec![0u8; sol.ranks.len()];
    let mut queue = VecDeque::new();
    for bits in 0..1u64 << n {
        let poisoned = StateSet::from_bits(bits);
        for v in 0..n {
            let idx = sol.index(poisoned, v, Player::Proponent);
            let moves = sol.succ[v].difference(poisoned).len();
            pending[idx] = moves as u8;
            if moves == 0 {
                sol.ranks[idx] = 0;
                queue.push_back(idx);
            }
        }
    }
    while let Some(q) = queue.pop_front() {
        let pos = sol.decode(q);
        let r = sol.ranks[q] + 1;
        let (s, v) = (pos.poisoned, pos.token);
        match pos.to_move {
            // Reached by an Opponent move into v, which poisoned v.
            Player::Proponent => {
                if !s.contains(v) {
                    continue;
                }
                for before in [s, s.without(v)] {
                    for u in pred[v] {
                        let p = sol.index(before, u, Player::Opponent);
                        if sol.ranks[p] == UNREACHED {
                            sol.ranks[p] = r;
                            queue.push_back(p);
                        }
                    }
                }
            }
            // Reached by a Proponent move into the unpoisoned v.
            Player::Opponent => {
                if s.contains(v) {
                    continue;
                }
                for u in pred[v] {
                    let p = sol.index(s, u, Player::Proponent);
                    if sol.ranks[p] == UNREACHED {
                        pending[p] -= 1;
                        if pending[p] == 0 {
                            sol.ranks[p] = r;
                            queue.push_back(p);
                        }
                    }
                }
            }
        }
    }
    Ok(sol)
}

/// An engine reply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineMove {
    /// The winning strategy's move.
    Winning(StateId),
    /// The mover is lost; the move is a best-effort delay.
    Losing(StateId),
    /// No legal move.
    Resign,
}

impl EngineMove {
    pub fn state(self) -> Option<StateId> {
        match self {
            EngineMove::Winning(v) | EngineMove::Losing(v) => Some(v),
            EngineMove::Resign => None,
        }
    }
}

/// Engine move at `p`. A losing Proponent maximises Opponent's remaining rank;
/// a losing Opponent minimises Proponent's options after the poisoning. Ties go
/// to the lowest state.
pub fn best_move(p: &GamePosition, m: &KripkeModel, s: &GameSolution) -> EngineMove {
    let moves = legal_moves(p, m);
    if moves.is_empty() {
        return EngineMove::Resign;
    }
    if let Some(v) = s.strategy_move(p) {
        return EngineMove::Winning(v);
    }
    let heuristic = match (p.started, p.to_move) {
        (false, _) => moves.iter().max_by_key(|&w| {
            let r = s.rank(&GamePosition::new(StateSet::EMPTY, w, Player::Opponent));
            (r, std::cmp::Reverse(w))
        }),
        (true, Player::Proponent) => moves.iter().max_by_key(|&v| {
            let r = s.rank(&GamePosition::new(p.poisoned, v, Player::Opponent));
            (r, std::cmp::Reverse(v))
        }),
        (true, Player::Opponent) => moves.iter().min_by_key(|&v| {
            let options = m.successors(0, v).difference(p.poisoned.with(v)).len();
            (options, v)
        }),
    };
    EngineMove::Losing(heuristic.expect("moves is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::super::position::apply_move;
    use super::*;
    use crate::fixtures;

    #[test]
    fn attack_graph_all_initial_nodes_win_for_proponent() {
        let sol = solve(&fixtures::attack_graph()).unwrap();
        assert!(sol.per_initial_node().values().all(|&w| w == Player::Proponent));
    }

    #[test]
    fn stuck_opponent_loses() {
        let sol = solve(&KripkeModel::new(1, 1).unwrap()).unwrap();
        // Opponent has no move from the only node, so Proponent wins by the
        // stuck-Opponent convention.
        assert_eq!(sol.initial_winner(0), Player::Proponent);
        let sol = solve(&fixtures::reflexive_point()).unwrap();
        assert_eq!(sol.initial_winner(0), Player::Opponent);
    }

    #[test]
    fn engine_answers_three_with_four() {
        let m = fixtures::attack_graph();
        let sol = solve(&m).unwrap();
        let p = GamePosition::new(StateSet::singleton(2), 2, Player::Proponent);
        assert_eq!(best_move(&p, &m, &sol), EngineMove::Winning(3));
    }

    #[test]
    fn two_chain() {
        let m = fixtures::two_chain();
        let sol = solve(&m).unwrap();
        assert_eq!(sol.initial_winner(0), Player::Opponent);
        assert_eq!(sol.initial_winner(1), Player::Proponent);
        let p = GamePosition::pregame();
        assert_eq!(best_move(&p, &m, &sol), EngineMove::Winning(1));
        let p = apply_move(&p, 0, &m).unwrap();
        assert_eq!(best_move(&p, &m, &sol), EngineMove::Winning(1));
        let p = apply_move(&p, 1, &m).unwrap();
        assert_eq!(best_move(&p, &m, &sol), EngineMove::Resign);
    }

    #[test]
    fn losing_opponent_starves_proponent() {
        // From 1 both replies lose for Opponent and leave Proponent one option;
        // the tie goes to the lower state.
        let m = fixtures::attack_graph();
        let sol = solve(&m).unwrap();
        let p = GamePosition::new(StateSet::EMPTY, 0, Player::Opponent);
        assert_eq!(best_move(&p, &m, &sol), EngineMove::Losing(1));
    }

    #[test]
    fn budget_refusal_reports_estimate() {
        let m = KripkeModel::new(5, 1).unwrap();
        let err = solve_with_limit(&m, 4).unwrap_err();
        assert_eq!(
            err,
            Error::Budget {
                what: "poison game configuration graph".into(),
                estimate: 320,
                limit: 128,
            }
        );
    }
}
