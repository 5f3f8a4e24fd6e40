//! Value-of-information driven sampling for pure exploration.
//!
//! Two halves share the same statistics and policies:
//!
//! - the bandit side: Bernoulli arm models, running statistics,
//!   simple-regret accounting, VOI/UCB1/uniform sampling policies, and a
//!   Monte-Carlo experiment harness backed by an exact enumeration oracle;
//! - the search side: a two-player game abstraction with toy domains, a UCT
//!   engine, a VOI-at-root engine, and an engine-vs-engine match runner.
//!
//! All randomness flows through explicitly derived ChaCha streams, so every
//! experiment is bit-reproducible at any thread count.

pub mod bandit;
mod error;
pub mod games;
pub mod matches;
pub mod mcts;
pub mod minimax;
pub mod policy;
pub mod regret;
pub mod stream;

pub use bandit::{ArmStats, BanditInstance, BudgetState};
pub use error::{Error, Result};
pub use games::{GameSpec, GameState, Player};
pub use matches::{EngineKind, EngineSpec, MatchReport};
pub use mcts::{uct_search, voi_root_search, SearchReport};
pub use policy::{PolicyKind, VoiEstimate, VoiVariant};
pub use regret::{ExperimentConfig, ResultRow, ResultTable};
