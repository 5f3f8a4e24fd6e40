//! Two-player, alternating-move, terminal-reward game abstraction plus the
//! toy domains the match runner plays on.

mod connect4;
mod ptree;

pub use connect4::ConnectFour;
pub use ptree::{PTree, PTreeState};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The two players. Terminal values are always expressed from
/// `Player::One`'s perspective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

/// Deterministic game interface consumed by the search engines.
///
/// Terminal states have no legal moves and report a value in
/// `{0, 0.5, 1}` from `Player::One`'s perspective; non-terminal states
/// report `None`. `legal_moves` must return a stable order: engines break
/// ties toward the lowest move index.
pub trait GameState: Clone {
    type Move: Copy + Eq + fmt::Debug;

    fn player_to_move(&self) -> Player;
    fn legal_moves(&self) -> Vec<Self::Move>;
    fn apply(&self, mv: Self::Move) -> Self;
    fn is_terminal(&self) -> bool;
    fn terminal_value(&self) -> Option<f64>;
}

/// Runtime description of a toy domain, parseable from CLI syntax:
/// `ptree:<branching>,<depth>,<win_prob>` or `connect4-5x5`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GameSpec {
    PTree {
        branching: u8,
        depth: u8,
        win_prob: f64,
    },
    ConnectFour5x5,
}

impl FromStr for GameSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "connect4-5x5" {
            return Ok(GameSpec::ConnectFour5x5);
        }
        let body = s
            .strip_prefix("ptree:")
            .ok_or_else(|| Error::InvalidGameSpec(s.to_string()))?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::InvalidGameSpec(format!(
                "ptree takes branching,depth,win_prob, got `{body}`"
            )));
        }
        let branching: u8 = parts[0]
            .parse()
            .map_err(|_| Error::InvalidGameSpec(format!("bad branching `{}`", parts[0])))?;
        let depth: u8 = parts[1]
            .parse()
            .map_err(|_| Error::InvalidGameSpec(format!("bad depth `{}`", parts[1])))?;
        let win_prob: f64 = parts[2]
            .parse()
            .map_err(|_| Error::InvalidGameSpec(format!("bad win_prob `{}`", parts[2])))?;
        PTree::validate(branching, depth, win_prob)?;
        Ok(GameSpec::PTree {
            branching,
            depth,
            win_prob,
        })
    }
}

impl fmt::Display for GameSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameSpec::PTree {
                branching,
                depth,
                win_prob,
            } => write!(f, "ptree:{branching},{depth},{win_prob}"),
            GameSpec::ConnectFour5x5 => write!(f, "connect4-5x5"),
        }
    }
}
