use std::fmt;

use serde::{Deserialize, Serialize};

use crate::kripke::{KripkeModel, StateId, StateSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Proponent,
    Opponent,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Proponent => Player::Opponent,
            Player::Opponent => Player::Proponent,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Proponent => "proponent",
            Player::Opponent => "opponent",
        })
    }
}

/// A play state of the Poison Game on relation 0. Move history is not part of
/// the position: the winning condition depends only on these fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GamePosition {
    pub poisoned: StateSet,
    pub token: StateId,
    pub to_move: Player,
    /// False only before Proponent has picked the initial node.
    pub started: bool,
}

impl GamePosition {
    pub fn pregame() -> Self {
        GamePosition {
            poisoned: StateSet::EMPTY,
            token: 0,
            to_move: Player::Proponent,
            started: false,
        }
    }

    pub fn new(poisoned: StateSet, token: StateId, to_move: Player) -> Self {
        GamePosition {
            poisoned,
            token,
            to_move,
            started: true,
        }
    }
}

/// Why a move was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IllegalMove {
    UnknownState { state: StateId },
    NotASuccessor { from: StateId, to: StateId },
    Poisoned { state: StateId },
}

impl fmt::Display for IllegalMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IllegalMove::UnknownState { state } => write!(f, "state {state} does not exist"),
            IllegalMove::NotASuccessor { from, to } => {
                write!(f, "{to} is not a successor of {from}")
            }
            IllegalMove::Poisoned { state } => {
                write!(f, "{state} is poisoned and Proponent may not move there")
            }
        }
    }
}

/// Moves available to the player to move: any state before the game starts,
/// any successor for Opponent, unpoisoned successors for Proponent.
pub fn legal_moves(p: &GamePosition, m: &KripkeModel) -> StateSet {
    if !p.started {
        return m.all_states();
    }
    let succ = m.successors(0, p.token);
    match p.to_move {
        Player::Opponent => succ,
        Player::Proponent => succ.difference(p.poisoned),
    }
}

/// Plays `v`. Opponent's moves poison their target; the opening move only
/// places the token.
pub fn apply_move(p: &GamePosition, v: StateId, m: &KripkeModel) -> Result<GamePosition> {
    let illegal = |why| Err(Error::IllegalMove(why));
    if v >= m.state_count() {
        return illegal(IllegalMove::UnknownState { state: v });
    }
    if !p.started {
        return Ok(GamePosition::new(StateSet::EMPTY, v, Player::Opponent));
    }
    if !m.has_edge(0, p.token, v) {
        return illegal(IllegalMove::NotASuccessor { from: p.token, to: v });
    }
    match p.to_move {
        Player::Opponent => Ok(GamePosition::new(p.poisoned.with(v), v, Player::Proponent)),
        Player::Proponent if p.poisoned.contains(v) => illegal(IllegalMove::Poisoned { state: v }),
        Player::Proponent => Ok(GamePosition::new(p.poisoned, v, Player::Opponent)),
    }
}
