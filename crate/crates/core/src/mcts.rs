//! Monte-Carlo tree search: a UCT engine and a VOI-at-root variant.
//!
//! Both engines run the same rollout machinery: descend the stored tree by
//! UCB1 over child statistics, expand one leaf per rollout, play a uniform
//! random playout to a terminal state, and back the value up with the
//! perspective of the player to move at each node. They differ in exactly
//! two places:
//!
//! - at the root, the VOI engine picks the child to sample with the
//!   VOI-aware selector, treating rollout returns as stationary arm rewards
//!   and the rollouts still to run as the remaining budget;
//! - the final recommendation is the most-visited child for UCT and the
//!   highest-mean child for the VOI engine.
//!
//! Child statistics reuse [`ArmStats`], so the selectors are literally the
//! bandit policies applied to rollout values.

use rand::Rng;

use crate::bandit::{ArmStats, BudgetState};
use crate::error::{Error, Result};
use crate::games::{GameState, Player};
use crate::policy::{argmax_lowest, ucb1_select, voi_select, VoiVariant};

/// Root-level sampling rule; everything below the root is always UCB1.
#[derive(Debug, Clone, Copy, PartialEq)]
enum RootRule {
    Ucb1,
    Voi(VoiVariant),
}

/// Outcome of one search: the recommended move plus the root statistics
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport<M> {
    pub best_move: M,
    pub root_moves: Vec<M>,
    pub root_stats: ArmStats,
    pub rollouts: u64,
}

struct Node<G: GameState> {
    state: G,
    player: Player,
    moves: Vec<G::Move>,
    stats: ArmStats,
    children: Vec<Option<usize>>,
}

impl<G: GameState> Node<G> {
    fn new(state: G) -> Self {
        let player = state.player_to_move();
        let moves = state.legal_moves();
        let n = moves.len();
        Self {
            state,
            player,
            moves,
            stats: ArmStats::new(n),
            children: vec![None; n],
        }
    }
}

fn playout<G: GameState>(start: &G, rng: &mut impl Rng) -> f64 {
    let mut state = start.clone();
    loop {
        if let Some(v) = state.terminal_value() {
            return v;
        }
        let moves = state.legal_moves();
        let mv = moves[rng.random_range(0..moves.len())];
        state = state.apply(mv);
    }
}

fn run_search<G: GameState>(
    root: &G,
    budget: u64,
    exploration: f64,
    rule: RootRule,
    rng: &mut impl Rng,
) -> Result<SearchReport<G::Move>> {
    if root.is_terminal() {
        return Err(Error::TerminalRoot);
    }
    let root_moves = root.legal_moves();
    if budget < root_moves.len() as u64 {
        return Err(Error::RolloutBudgetTooSmall {
            budget,
            moves: root_moves.len(),
        });
    }

    let mut arena: Vec<Node<G>> = vec![Node::new(root.clone())];
    let mut path: Vec<(usize, usize)> = Vec::new();

    for rollout in 0..budget {
        path.clear();
        let mut idx = 0;
        let value = loop {
            if let Some(v) = arena[idx].state.terminal_value() {
                break v;
            }
            let node = &arena[idx];
            let child = if node.moves.len() == 1 {
                0
            } else if idx == 0 {
                match rule {
                    RootRule::Ucb1 => {
                        ucb1_select(&node.stats, node.stats.total_pulls(), exploration)
                    }
                    RootRule::Voi(variant) => {
                        // Remaining budget = rollouts still to run, this one
                        // included.
                        voi_select(
                            &node.stats,
                            BudgetState::with_used(budget, rollout)?,
                            variant,
                        )?
                    }
                }
            } else {
                ucb1_select(&node.stats, node.stats.total_pulls(), exploration)
            };
            path.push((idx, child));
            match arena[idx].children[child] {
                Some(next) => idx = next,
                None => {
                    let mv = arena[idx].moves[child];
                    let expanded = Node::new(arena[idx].state.apply(mv));
                    let v = playout(&expanded.state, rng);
                    let next = arena.len();
                    arena.push(expanded);
                    arena[idx].children[child] = Some(next);
                    break v;
                }
            }
        };
        for &(node_idx, child) in &path {
            let credited = match arena[node_idx].player {
                Player::One => value,
                Player::Two => 1.0 - value,
            };
            arena[node_idx].stats.record(child, credited)?;
        }
    }

    let root_stats = arena[0].stats.clone();
    let best_index = match rule {
        // Standard UCT recommendation: most rollouts.
        RootRule::Ucb1 => {
            argmax_lowest((0..root_moves.len()).map(|i| root_stats.pulls(i) as f64))
                .expect("root has moves")
        }
        // Pure-exploration recommendation: highest sample mean.
        RootRule::Voi(_) => {
            if root_moves.len() == 1 {
                0
            } else {
                root_stats.empirical_best_two()?.0
            }
        }
    };
    Ok(SearchReport {
        best_move: root_moves[best_index],
        root_moves,
        root_stats,
        rollouts: budget,
    })
}

/// Standard UCT: UCB1 descent everywhere, recommendation by visit count.
/// Runs exactly `budget` rollouts; `budget` must cover one visit per root
/// move and the root must not be terminal.
pub fn uct_search<G: GameState>(
    root: &G,
    budget: u64,
    exploration: f64,
    rng: &mut impl Rng,
) -> Result<SearchReport<G::Move>> {
    run_search(root, budget, exploration, RootRule::Ucb1, rng)
}

/// UCT below the root, VOI-aware sampling at the root, recommendation by
/// highest mean. Identical rollout machinery to [`uct_search`] otherwise.
pub fn voi_root_search<G: GameState>(
    root: &G,
    budget: u64,
    exploration: f64,
    variant: VoiVariant,
    rng: &mut impl Rng,
) -> Result<SearchReport<G::Move>> {
    run_search(root, budget, exploration, RootRule::Voi(variant), rng)
}
