//! Synthetic random game trees: uniform branching, fixed depth, i.i.d.
//! Bernoulli terminal values keyed by a hash of the move path.
//!
//! A standard adversarial-search testbed: the whole tree is defined by
//! `(branching, depth, win_prob, seed)`, needs no storage, and two states
//! with the same path always see the same terminal value.

use crate::error::{Error, Result};
use crate::games::{GameState, Player};
use crate::stream::mix;

/// Immutable tree parameters shared by every state of one game.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTree {
    branching: u8,
    depth: u8,
    win_prob: f64,
    seed: u64,
}

impl PTree {
    pub fn new(branching: u8, depth: u8, win_prob: f64, seed: u64) -> Result<Self> {
        Self::validate(branching, depth, win_prob)?;
        Ok(Self {
            branching,
            depth,
            win_prob,
            seed,
        })
    }

    /// Branching in `2..=32`, depth in `1..=20`, probability in `[0, 1]`;
    /// the path key must fit a u64.
    pub(crate) fn validate(branching: u8, depth: u8, win_prob: f64) -> Result<()> {
        if !(2..=32).contains(&branching) {
            return Err(Error::InvalidGameSpec(format!(
                "branching {branching} outside 2..=32"
            )));
        }
        if !(1..=20).contains(&depth) {
            return Err(Error::InvalidGameSpec(format!(
                "depth {depth} outside 1..=20"
            )));
        }
        if !(0.0..=1.0).contains(&win_prob) {
            return Err(Error::InvalidGameSpec(format!(
                "win_prob {win_prob} outside [0, 1]"
            )));
        }
        if u64::from(branching + 1)
            .checked_pow(u32::from(depth))
            .is_none()
        {
            return Err(Error::InvalidGameSpec(format!(
                "path key overflow for branching {branching} depth {depth}"
            )));
        }
        Ok(())
    }

    pub fn root(self) -> PTreeState {
        PTreeState {
            tree: self,
            path_key: 0,
            ply: 0,
        }
    }
}

/// A node of the tree, identified by its move path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTreeState {
    tree: PTree,
    path_key: u64,
    ply: u8,
}

impl PTreeState {
    /// Terminal win/loss for the maximizing player, a pure function of the
    /// tree seed and the leaf's path.
    fn leaf_value(&self) -> f64 {
        let h = mix(&[self.tree.seed, self.path_key]);
        // Top 53 bits as a uniform variate in [0, 1).
        let u = (h >> 11) as f64 / 9_007_199_254_740_992.0;
        if u < self.tree.win_prob {
            1.0
        } else {
            0.0
        }
    }
}

impl GameState for PTreeState {
    type Move = u8;

    fn player_to_move(&self) -> Player {
        if self.ply % 2 == 0 {
            Player::One
        } else {
            Player::Two
        }
    }

    fn legal_moves(&self) -> Vec<u8> {
        if self.is_terminal() {
            Vec::new()
        } else {
            (0..self.tree.branching).collect()
        }
    }

    fn apply(&self, mv: u8) -> Self {
        debug_assert!(mv < self.tree.branching);
        PTreeState {
            tree: self.tree,
            // All leaves sit at the same depth and every digit is non-zero,
            // so distinct paths map to distinct keys.
            path_key: self.path_key * u64::from(self.tree.branching + 1) + u64::from(mv) + 1,
            ply: self.ply + 1,
        }
    }

    fn is_terminal(&self) -> bool {
        self.ply == self.tree.depth
    }

    fn terminal_value(&self) -> Option<f64> {
        self.is_terminal().then(|| self.leaf_value())
    }
}
