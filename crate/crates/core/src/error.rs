use thiserror::Error;

/// Errors reported by the bandit, policy, harness, and search layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("arm index {arm} out of range for {arms} arms")]
    ArmOutOfRange { arm: usize, arms: usize },

    #[error("reward {0} outside [0, 1]")]
    RewardOutOfRange(f64),

    #[error("arm mean {0} outside [0, 1]")]
    MeanOutOfRange(f64),

    #[error("need at least two arms, got {0}")]
    TooFewArms(usize),

    #[error("arm {0} has never been pulled")]
    UnvisitedArm(usize),

    #[error("budget accounting: used {used} exceeds total {total}")]
    BudgetOverrun { used: u64, total: u64 },

    #[error("no remaining budget")]
    BudgetExhausted,

    #[error("budget {budget} smaller than arm count {arms}")]
    BudgetTooSmall { budget: u64, arms: usize },

    #[error("exact oracle limited to budgets <= {max}, got {got}")]
    OracleBudgetTooLarge { got: u64, max: u64 },

    #[error("trial count must be at least 1")]
    NoTrials,

    #[error("inconsistent arm statistics: {0}")]
    InvalidStats(String),

    #[error("search root is terminal")]
    TerminalRoot,

    #[error("rollout budget {budget} below root move count {moves}")]
    RolloutBudgetTooSmall { budget: u64, moves: usize },

    #[error("match needs at least one game")]
    NoGames,

    #[error("invalid game spec: {0}")]
    InvalidGameSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
