//! Random-instance generation, Monte-Carlo trial execution, aggregation,
//! and an exact brute-force oracle for tiny cases.
//!
//! A trial spends its whole pull budget on one freshly generated instance
//! (initialization of one pull per arm counts against the budget),
//! recommends the arm with the highest sample mean, and scores the true
//! shortfall of that recommendation. `run_experiment` averages trials per
//! `(policy, budget)` cell; every trial owns a ChaCha stream derived from
//! `(seed, policy, budget, trial)`, and aggregation folds an order-stable
//! vector, so tables are byte-identical at any parallelism level.

use rand::Rng;
use rayon::prelude::*;

use crate::bandit::{ArmStats, BanditInstance, BudgetState};
use crate::error::{Error, Result};
use crate::policy::PolicyKind;
use crate::stream::substream;

/// Full enumeration of `2^budget` reward sequences stays feasible up to
/// here; larger requests are refused rather than truncated.
pub const ORACLE_BUDGET_LIMIT: u64 = 20;

/// Declarative description of one regret experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub arms: usize,
    pub budgets: Vec<u64>,
    pub trials: u64,
    pub policies: Vec<PolicyKind>,
    pub seed: u64,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.arms < 2 {
            return Err(Error::TooFewArms(self.arms));
        }
        if self.trials == 0 {
            return Err(Error::NoTrials);
        }
        for &budget in &self.budgets {
            if budget < self.arms as u64 {
                return Err(Error::BudgetTooSmall {
                    budget,
                    arms: self.arms,
                });
            }
        }
        Ok(())
    }
}

/// One aggregated `(policy, budget)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub policy: PolicyKind,
    pub budget: u64,
    pub mean_regret: f64,
    pub stderr: f64,
    pub trials: u64,
}

/// All rows of one experiment, in `(policy, budget)` iteration order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
}

impl ResultTable {
    pub const CSV_HEADER: &'static str = "policy,budget,mean_regret,stderr,trials";

    /// CSV with `\n` line endings and full float precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.policy.label(),
                row.budget,
                fmt_float(row.mean_regret),
                fmt_float(row.stderr),
                row.trials
            ));
        }
        out
    }

    pub fn row(&self, policy: PolicyKind, budget: u64) -> Option<&ResultRow> {
        self.rows
            .iter()
            .find(|r| r.policy == policy && r.budget == budget)
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Draws `arms` i.i.d. uniform means in `[0, 1)`.
pub fn generate_instance(arms: usize, rng: &mut impl Rng) -> Result<BanditInstance> {
    if arms < 2 {
        return Err(Error::TooFewArms(arms));
    }
    BanditInstance::new((0..arms).map(|_| rng.random::<f64>()).collect())
}

/// Runs one budgeted trial and returns the final statistics plus the
/// recommended arm.
pub(crate) fn execute_trial(
    instance: &BanditInstance,
    policy: PolicyKind,
    budget: u64,
    rng: &mut impl Rng,
) -> Result<(ArmStats, usize)> {
    let arms = instance.arms();
    if budget < arms as u64 {
        return Err(Error::BudgetTooSmall { budget, arms });
    }
    let mut stats = ArmStats::new(arms);
    let mut state = BudgetState::new(budget);
    for arm in 0..arms {
        let reward = instance.sample_arm(arm, rng)?;
        stats.record(arm, reward)?;
        state.spend_one()?;
    }
    while !state.is_exhausted() {
        let arm = policy.select(&stats, state)?;
        let reward = instance.sample_arm(arm, rng)?;
        stats.record(arm, reward)?;
        state.spend_one()?;
    }
    let (alpha, _) = stats.empirical_best_two()?;
    Ok((stats, alpha))
}

/// One trial's realized simple regret.
pub fn run_trial(
    instance: &BanditInstance,
    policy: PolicyKind,
    budget: u64,
    rng: &mut impl Rng,
) -> Result<f64> {
    let (_, chosen) = execute_trial(instance, policy, budget, rng)?;
    instance.simple_regret(chosen)
}

fn trial_rng(seed: u64, policy: PolicyKind, budget: u64, trial: u64) -> impl Rng {
    let [label, params] = policy.stream_parts();
    substream(seed, &[label, params, budget, trial])
}

/// Runs the full grid of `(policy, budget)` cells, `trials` independent
/// runs each, every run on a fresh random instance.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ResultTable> {
    config.validate()?;
    let mut rows = Vec::with_capacity(config.policies.len() * config.budgets.len());
    for &policy in &config.policies {
        for &budget in &config.budgets {
            let regrets = (0..config.trials)
                .into_par_iter()
                .map(|trial| {
                    let mut rng = trial_rng(config.seed, policy, budget, trial);
                    let instance = generate_instance(config.arms, &mut rng)?;
                    run_trial(&instance, policy, budget, &mut rng)
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(aggregate(policy, budget, &regrets));
        }
    }
    Ok(ResultTable { rows })
}

fn aggregate(policy: PolicyKind, budget: u64, regrets: &[f64]) -> ResultRow {
    let n = regrets.len() as f64;
    let mean = regrets.iter().sum::<f64>() / n;
    let stderr = if regrets.len() < 2 {
        0.0
    } else {
        let var = regrets.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / (n - 1.0);
        (var / n).sqrt()
    };
    ResultRow {
        policy,
        budget,
        mean_regret: mean,
        stderr,
        trials: regrets.len() as u64,
    }
}

/// Exact expected simple regret of a policy on an instance, by enumerating
/// every Bernoulli reward sequence of length `budget` and weighting the
/// recommendation's shortfall by the sequence probability. Independent of
/// the Monte-Carlo path: no sampling, no rng.
pub fn brute_force_regret(
    instance: &BanditInstance,
    policy: PolicyKind,
    budget: u64,
) -> Result<f64> {
    if budget > ORACLE_BUDGET_LIMIT {
        return Err(Error::OracleBudgetTooLarge {
            got: budget,
            max: ORACLE_BUDGET_LIMIT,
        });
    }
    let arms = instance.arms();
    if budget < arms as u64 {
        return Err(Error::BudgetTooSmall { budget, arms });
    }
    let mut total = 0.0;
    let stats = ArmStats::new(arms);
    let state = BudgetState::new(budget);
    walk_outcomes(instance, policy, &stats, state, 1.0, &mut total)?;
    Ok(total)
}

fn walk_outcomes(
    instance: &BanditInstance,
    policy: PolicyKind,
    stats: &ArmStats,
    state: BudgetState,
    prob: f64,
    total: &mut f64,
) -> Result<()> {
    if state.is_exhausted() {
        let (alpha, _) = stats.empirical_best_two()?;
        *total += prob * instance.simple_regret(alpha)?;
        return Ok(());
    }
    // Same initialization-then-policy order as execute_trial.
    let arm = if state.used() < instance.arms() as u64 {
        state.used() as usize
    } else {
        policy.select(stats, state)?
    };
    let p_win = instance.means()[arm];
    let mut spent = state;
    spent.spend_one()?;
    if p_win > 0.0 {
        let mut branch = stats.clone();
        branch.record(arm, 1.0)?;
        walk_outcomes(instance, policy, &branch, spent, prob * p_win, total)?;
    }
    if p_win < 1.0 {
        let mut branch = stats.clone();
        branch.record(arm, 0.0)?;
        walk_outcomes(instance, policy, &branch, spent, prob * (1.0 - p_win), total)?;
    }
    Ok(())
}
