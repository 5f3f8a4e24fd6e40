//! Arm models, running statistics, and simple-regret accounting.
//!
//! `BanditInstance` holds the ground-truth Bernoulli means and is only ever
//! consulted by the evaluation side (sampling rewards, scoring the final
//! recommendation). Policies observe nothing but `ArmStats`.

use rand::Rng;

use crate::error::{Error, Result};

/// Ground-truth Bernoulli bandit: one mean per arm, all in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BanditInstance {
    means: Vec<f64>,
}

impl BanditInstance {
    /// Requires at least two arms and every mean in `[0, 1]`.
    pub fn new(means: Vec<f64>) -> Result<Self> {
        if means.len() < 2 {
            return Err(Error::TooFewArms(means.len()));
        }
        for &m in &means {
            if !(0.0..=1.0).contains(&m) {
                return Err(Error::MeanOutOfRange(m));
            }
        }
        Ok(Self { means })
    }

    pub fn arms(&self) -> usize {
        self.means.len()
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    /// Highest true mean over all arms.
    pub fn best_mean(&self) -> f64 {
        self.means.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Draws one Bernoulli reward from the given arm, consuming exactly one
    /// uniform variate from `rng`.
    pub fn sample_arm(&self, arm: usize, rng: &mut impl Rng) -> Result<f64> {
        let mean = *self.means.get(arm).ok_or(Error::ArmOutOfRange {
            arm,
            arms: self.arms(),
        })?;
        // random::<f64>() is uniform on [0, 1), so mean = 1.0 always wins
        // and mean = 0.0 never does.
        Ok(if rng.random::<f64>() < mean { 1.0 } else { 0.0 })
    }

    /// Shortfall of the chosen arm versus the truly best arm.
    pub fn simple_regret(&self, chosen: usize) -> Result<f64> {
        let mean = *self.means.get(chosen).ok_or(Error::ArmOutOfRange {
            arm: chosen,
            arms: self.arms(),
        })?;
        Ok(self.best_mean() - mean)
    }
}

/// Per-arm pull counts and reward sums; sample means are derived on demand
/// so the `mean * n == sum` identity cannot drift.
#[derive(Debug, Clone, PartialEq)]
pub struct ArmStats {
    pulls: Vec<u64>,
    sums: Vec<f64>,
}

impl ArmStats {
    pub fn new(arms: usize) -> Self {
        Self {
            pulls: vec![0; arms],
            sums: vec![0.0; arms],
        }
    }

    /// Builds statistics from raw counts and sums, validating that every
    /// implied mean lies in `[0, 1]` and unvisited arms carry a zero sum.
    pub fn from_parts(pulls: Vec<u64>, sums: Vec<f64>) -> Result<Self> {
        if pulls.len() != sums.len() {
            return Err(Error::InvalidStats(format!(
                "{} pull counts vs {} sums",
                pulls.len(),
                sums.len()
            )));
        }
        for (arm, (&n, &s)) in pulls.iter().zip(&sums).enumerate() {
            if n == 0 {
                if s != 0.0 {
                    return Err(Error::InvalidStats(format!(
                        "arm {arm} has sum {s} with zero pulls"
                    )));
                }
            } else if !(0.0..=n as f64).contains(&s) {
                return Err(Error::InvalidStats(format!(
                    "arm {arm} has sum {s} over {n} pulls"
                )));
            }
        }
        Ok(Self { pulls, sums })
    }

    pub fn arms(&self) -> usize {
        self.pulls.len()
    }

    pub fn pulls(&self, arm: usize) -> u64 {
        self.pulls[arm]
    }

    pub fn sum(&self, arm: usize) -> f64 {
        self.sums[arm]
    }

    pub fn total_pulls(&self) -> u64 {
        self.pulls.iter().sum()
    }

    /// Sample mean of an arm, or `None` while the arm is unvisited. The
    /// bound formulas divide by `n`, so callers must initialize arms before
    /// consuming means.
    pub fn mean(&self, arm: usize) -> Option<f64> {
        let n = self.pulls[arm];
        (n > 0).then(|| self.sums[arm] / n as f64)
    }

    /// Lowest-index arm with zero pulls, if any.
    pub fn first_unvisited(&self) -> Option<usize> {
        self.pulls.iter().position(|&n| n == 0)
    }

    /// Records one observed reward in `[0, 1]` for an arm.
    pub fn record(&mut self, arm: usize, reward: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&reward) {
            return Err(Error::RewardOutOfRange(reward));
        }
        let arms = self.arms();
        let n = self
            .pulls
            .get_mut(arm)
            .ok_or(Error::ArmOutOfRange { arm, arms })?;
        *n += 1;
        self.sums[arm] += reward;
        Ok(())
    }

    /// Indices of the arms with the highest and second-highest sample means,
    /// ties broken toward the lowest index. Every arm must have been pulled.
    pub fn empirical_best_two(&self) -> Result<(usize, usize)> {
        if self.arms() < 2 {
            return Err(Error::TooFewArms(self.arms()));
        }
        if let Some(arm) = self.first_unvisited() {
            return Err(Error::UnvisitedArm(arm));
        }
        let mean = |i: usize| self.sums[i] / self.pulls[i] as f64;
        let mut alpha = 0;
        for i in 1..self.arms() {
            if mean(i) > mean(alpha) {
                alpha = i;
            }
        }
        let mut beta = usize::from(alpha == 0);
        for i in 0..self.arms() {
            if i != alpha && mean(i) > mean(beta) {
                beta = i;
            }
        }
        Ok((alpha, beta))
    }
}

/// Fixed pull budget with a consumed-so-far counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetState {
    total: u64,
    used: u64,
}

impl BudgetState {
    pub fn new(total: u64) -> Self {
        Self { total, used: 0 }
    }

    pub fn with_used(total: u64, used: u64) -> Result<Self> {
        if used > total {
            return Err(Error::BudgetOverrun { used, total });
        }
        Ok(Self { total, used })
    }

    pub fn total(self) -> u64 {
        self.total
    }

    pub fn used(self) -> u64 {
        self.used
    }

    pub fn remaining(self) -> u64 {
        self.total - self.used
    }

    pub fn is_exhausted(self) -> bool {
        self.used == self.total
    }

    pub fn spend_one(&mut self) -> Result<()> {
        if self.is_exhausted() {
            return Err(Error::BudgetExhausted);
        }
        self.used += 1;
        Ok(())
    }
}
