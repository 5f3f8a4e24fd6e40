//! Sampling policies: round-robin, UCB1, and the VOI-aware policy.
//!
//! The VOI policy scores every arm with an upper bound on the value of
//! information of spending the remaining budget `N` on that arm. With
//! `alpha` the empirically best arm and `beta` the runner-up:
//!
//! ```text
//! lambda_hat(alpha) = (2 N mean(beta) / n_alpha) * exp(-phi * gap^2 * n_alpha)
//! lambda_hat(i)     = (2 N (1 - mean(alpha)) / n_i) * exp(-phi * gap^2 * n_i)
//! ```
//!
//! where `gap` is `mean(alpha) - mean(beta)` for the incumbent and
//! `mean(alpha) - mean(i)` for a challenger. The exponent factor `phi` is
//! either the constant `1.37` or the exact budget-dependent
//! `2 ((1 + n/N) / (1 + sqrt(n/N)))^2`, which is its sharp lower bound up to
//! rounding (minimum `24 - 16 sqrt(2)` at `n/N = (sqrt(2) - 1)^2`).
//!
//! The exponential tail factors come from the Hoeffding inequality, so all
//! rewards must live in `[0, 1]`. The bounds are not probabilities and may
//! exceed 1; they are compared, never clamped.

use crate::bandit::{ArmStats, BudgetState};
use crate::error::{Error, Result};
use crate::stream::label_hash;

/// Constant lower bound on `phi`; the default exponent factor.
pub const PHI_FLOOR: f64 = 1.37;

/// Exponent-factor flavor used inside the VOI bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VoiVariant {
    /// Literal `1.37` factor.
    #[default]
    Constant137,
    /// Exact `phi(n)` factor; never smaller than 1.37, so the bound it
    /// produces is never larger than the constant variant's.
    ExactPhi,
}

impl VoiVariant {
    pub fn label(self) -> &'static str {
        match self {
            VoiVariant::Constant137 => "const",
            VoiVariant::ExactPhi => "phi",
        }
    }
}

/// Budget-dependent exponent factor `2 ((1 + n/N) / (1 + sqrt(n/N)))^2`.
///
/// `remaining` must be at least 1: with no budget left there is nothing to
/// score. Exceeds 1.37 for every `n >= 0`.
pub fn phi(n: u64, remaining: u64) -> Result<f64> {
    if remaining == 0 {
        return Err(Error::BudgetExhausted);
    }
    let ratio = n as f64 / remaining as f64;
    let r = (1.0 + ratio) / (1.0 + ratio.sqrt());
    Ok(2.0 * r * r)
}

fn exponent_factor(variant: VoiVariant, n: u64, remaining: u64) -> Result<f64> {
    match variant {
        VoiVariant::Constant137 => Ok(PHI_FLOOR),
        VoiVariant::ExactPhi => phi(n, remaining),
    }
}

fn mean_of(stats: &ArmStats, arm: usize) -> Result<f64> {
    stats.mean(arm).ok_or(Error::UnvisitedArm(arm))
}

/// Upper bound on the probability that spending the rest of the budget on
/// `arm` flips the empirical ranking: for the incumbent `alpha`, that its
/// mean drops below `beta`'s; for any other arm, that its mean overtakes
/// `alpha`'s. Returned unclamped; values above 2 are impossible but values
/// above 1 are routine for small gaps.
pub fn prob_bound(
    stats: &ArmStats,
    arm: usize,
    alpha: usize,
    beta: usize,
    remaining: u64,
    variant: VoiVariant,
) -> Result<f64> {
    let n = stats.pulls(arm);
    if n == 0 {
        return Err(Error::UnvisitedArm(arm));
    }
    let mean_alpha = mean_of(stats, alpha)?;
    let gap = if arm == alpha {
        mean_alpha - mean_of(stats, beta)?
    } else {
        mean_alpha - mean_of(stats, arm)?
    };
    let factor = exponent_factor(variant, n, remaining)?;
    Ok(2.0 * (-factor * gap * gap * n as f64).exp())
}

/// Budgeted VOI upper bound `lambda_hat` for one arm (see module docs).
pub fn voi_upper_bound(
    stats: &ArmStats,
    arm: usize,
    alpha: usize,
    beta: usize,
    remaining: u64,
    variant: VoiVariant,
) -> Result<f64> {
    if remaining == 0 {
        return Err(Error::BudgetExhausted);
    }
    let n = stats.pulls(arm);
    if n == 0 {
        return Err(Error::UnvisitedArm(arm));
    }
    let value_factor = if arm == alpha {
        remaining as f64 * mean_of(stats, beta)? / n as f64
    } else {
        remaining as f64 * (1.0 - mean_of(stats, alpha)?) / n as f64
    };
    Ok(value_factor * prob_bound(stats, arm, alpha, beta, remaining, variant)?)
}

/// Tighter `N / (N + n)` variant of the value factor, exposed for
/// diagnostics only; selection composes the looser `N / n` form above.
pub fn voi_upper_bound_tight(
    stats: &ArmStats,
    arm: usize,
    alpha: usize,
    beta: usize,
    remaining: u64,
    variant: VoiVariant,
) -> Result<f64> {
    if remaining == 0 {
        return Err(Error::BudgetExhausted);
    }
    let n = stats.pulls(arm);
    if n == 0 {
        return Err(Error::UnvisitedArm(arm));
    }
    let budget = remaining as f64;
    let value_factor = if arm == alpha {
        budget * mean_of(stats, beta)? / (budget + n as f64)
    } else {
        budget * (1.0 - mean_of(stats, alpha)?) / (budget + n as f64)
    };
    Ok(value_factor * prob_bound(stats, arm, alpha, beta, remaining, variant)?)
}

/// Which side of the two-case VOI decomposition an arm falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VoiRole {
    /// The empirically best arm: its VOI comes from discovering it is worse
    /// than the runner-up.
    AlphaCase,
    /// Any other arm: its VOI comes from overtaking the incumbent.
    ChallengerCase,
}

/// `lambda_hat` for every arm at one decision point.
#[derive(Debug, Clone, PartialEq)]
pub struct VoiEstimate {
    pub alpha: usize,
    pub beta: usize,
    pub lambda_hat: Vec<f64>,
    /// Diagnostic: at least one probability bound exceeded 1 here.
    pub prob_bound_above_one: bool,
}

impl VoiEstimate {
    pub fn role(&self, arm: usize) -> VoiRole {
        if arm == self.alpha {
            VoiRole::AlphaCase
        } else {
            VoiRole::ChallengerCase
        }
    }

    /// Arm with the highest estimate, ties toward the lowest index.
    pub fn best_arm(&self) -> usize {
        argmax_lowest(self.lambda_hat.iter().copied()).expect("non-empty estimates")
    }
}

/// Computes `lambda_hat` for all arms. Requires every arm visited and a
/// non-empty remaining budget.
pub fn voi_estimates(
    stats: &ArmStats,
    budget: BudgetState,
    variant: VoiVariant,
) -> Result<VoiEstimate> {
    let remaining = budget.remaining();
    if remaining == 0 {
        return Err(Error::BudgetExhausted);
    }
    let (alpha, beta) = stats.empirical_best_two()?;
    let mut lambda_hat = Vec::with_capacity(stats.arms());
    let mut above_one = false;
    for arm in 0..stats.arms() {
        let p = prob_bound(stats, arm, alpha, beta, remaining, variant)?;
        above_one |= p > 1.0;
        lambda_hat.push(voi_upper_bound(stats, arm, alpha, beta, remaining, variant)?);
    }
    Ok(VoiEstimate {
        alpha,
        beta,
        lambda_hat,
        prob_bound_above_one: above_one,
    })
}

/// VOI-aware selection: lowest-index unvisited arm first (the bounds divide
/// by `n`), then the arm with the highest `lambda_hat`.
pub fn voi_select(
    stats: &ArmStats,
    budget: BudgetState,
    variant: VoiVariant,
) -> Result<usize> {
    if budget.remaining() == 0 {
        return Err(Error::BudgetExhausted);
    }
    if let Some(arm) = stats.first_unvisited() {
        return Ok(arm);
    }
    Ok(voi_estimates(stats, budget, variant)?.best_arm())
}

/// UCB1: any unvisited arm (lowest index first), then the arm maximizing
/// `mean + c * sqrt(2 ln t / n)` where `t` is the total pull count so far.
pub fn ucb1_select(stats: &ArmStats, total_pulls: u64, c: f64) -> usize {
    if let Some(arm) = stats.first_unvisited() {
        return arm;
    }
    let log_t = (total_pulls.max(1) as f64).ln();
    argmax_lowest((0..stats.arms()).map(|arm| {
        let n = stats.pulls(arm) as f64;
        stats.mean(arm).expect("visited") + c * (2.0 * log_t / n).sqrt()
    }))
    .expect("non-empty stats")
}

/// Round-robin baseline: arm `t mod K`.
pub fn uniform_select(stats: &ArmStats, total_pulls: u64) -> usize {
    (total_pulls % stats.arms() as u64) as usize
}

/// Highest value wins, ties toward the lowest index.
pub(crate) fn argmax_lowest(values: impl IntoIterator<Item = f64>) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, v) in values.into_iter().enumerate() {
        match best {
            Some((_, b)) if v <= b => {}
            _ => best = Some((i, v)),
        }
    }
    best.map(|(i, _)| i)
}

/// A full policy description: which selector to run and its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolicyKind {
    /// Round-robin over arms.
    Uniform,
    /// UCB1 with exploration scale `c` (classic UCB1 at `c = 1`).
    Ucb1 { c: f64 },
    /// VOI-aware pure exploration.
    Voi { variant: VoiVariant },
}

impl PolicyKind {
    pub fn ucb1() -> Self {
        PolicyKind::Ucb1 { c: 1.0 }
    }

    pub fn voi() -> Self {
        PolicyKind::Voi {
            variant: VoiVariant::default(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            PolicyKind::Uniform => "uniform",
            PolicyKind::Ucb1 { .. } => "ucb1",
            PolicyKind::Voi { .. } => "voi",
        }
    }

    /// Picks the next arm to pull. `budget.used()` doubles as the
    /// total-pulls-so-far counter for the baselines.
    pub fn select(&self, stats: &ArmStats, budget: BudgetState) -> Result<usize> {
        match *self {
            PolicyKind::Uniform => Ok(uniform_select(stats, budget.used())),
            PolicyKind::Ucb1 { c } => Ok(ucb1_select(stats, budget.used(), c)),
            PolicyKind::Voi { variant } => voi_select(stats, budget, variant),
        }
    }

    /// Stable words identifying the policy inside rng stream derivation.
    pub(crate) fn stream_parts(&self) -> [u64; 2] {
        match *self {
            PolicyKind::Uniform => [label_hash("uniform"), 0],
            PolicyKind::Ucb1 { c } => [label_hash("ucb1"), c.to_bits()],
            PolicyKind::Voi { variant } => [label_hash("voi"), variant as u64],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stats_of(pulls: &[u64], means: &[f64]) -> ArmStats {
        let sums: Vec<f64> = pulls
            .iter()
            .zip(means)
            .map(|(&n, &m)| m * n as f64)
            .collect();
        ArmStats::from_parts(pulls.to_vec(), sums).unwrap()
    }

    #[test]
    fn phi_endpoints_are_exactly_two() {
        for n in [1u64, 10, 1000, 1_000_000] {
            assert_eq!(phi(0, n).unwrap(), 2.0);
            assert_eq!(phi(n, n).unwrap(), 2.0);
        }
    }

    #[test]
    fn phi_rejects_empty_budget() {
        assert_eq!(phi(3, 0), Err(Error::BudgetExhausted));
    }

    #[test]
    fn phi_minimum_matches_calculus_oracle() {
        // Independent route: ternary-search the continuous objective
        // f(t) = 2 ((1 + t^2) / (1 + t))^2 over t in [0, 1].
        let f = |t: f64| {
            let r = (1.0 + t * t) / (1.0 + t);
            2.0 * r * r
        };
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..200 {
            let a = lo + (hi - lo) / 3.0;
            let b = hi - (hi - lo) / 3.0;
            if f(a) < f(b) {
                hi = b;
            } else {
                lo = a;
            }
        }
        let oracle_min = f(0.5 * (lo + hi));
        assert!((oracle_min - (24.0 - 16.0 * 2.0f64.sqrt())).abs() < 1e-9);

        let big = 10_000u64;
        let grid_min = (0..big)
            .map(|n| phi(n, big).unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!((grid_min - oracle_min).abs() < 1e-4);
        assert!(grid_min > PHI_FLOOR);
    }

    #[test]
    fn prob_bound_is_two_at_zero_gap() {
        let stats = stats_of(&[5, 7], &[0.4, 0.4]);
        let p = prob_bound(&stats, 0, 0, 1, 50, VoiVariant::Constant137).unwrap();
        assert_eq!(p, 2.0);
    }

    #[test]
    fn prob_bound_matches_direct_evaluation() {
        // means 0.6 / 0.5, n_alpha = 100: 2 exp(-1.37 * 0.01 * 100).
        let stats = stats_of(&[100, 50], &[0.6, 0.5]);
        let p = prob_bound(&stats, 0, 0, 1, 100, VoiVariant::Constant137).unwrap();
        assert!((p - 0.5082139191056005).abs() < 1e-12);

        // Same gap with the exact factor and n = N = 100: phi = 2.
        let stats = stats_of(&[100, 50], &[0.6, 0.5]);
        let p = prob_bound(&stats, 0, 0, 1, 100, VoiVariant::ExactPhi).unwrap();
        assert!((p - 0.2706705664732254).abs() < 1e-12);
    }

    #[test]
    fn prob_bound_requires_visited_arm() {
        let stats = ArmStats::from_parts(vec![3, 0], vec![2.0, 0.0]).unwrap();
        assert_eq!(
            prob_bound(&stats, 1, 0, 1, 10, VoiVariant::Constant137),
            Err(Error::UnvisitedArm(1))
        );
    }

    #[test]
    fn voi_bound_incumbent_example() {
        // mean(alpha) 0.6, mean(beta) 0.5, n_alpha = N = 100:
        // (2 * 100 * 0.5 / 100) exp(-1.37) = exp(-1.37).
        let stats = stats_of(&[100, 50], &[0.6, 0.5]);
        let v = voi_upper_bound(&stats, 0, 0, 1, 100, VoiVariant::Constant137).unwrap();
        assert!((v - 0.25410695955280027).abs() < 1e-12);
    }

    #[test]
    fn voi_bound_challenger_example() {
        // Challenger mean 0.4 with 50 pulls against alpha 0.6, N = 100:
        // (2 * 100 * 0.4 / 50) exp(-1.37 * 0.04 * 50) = 1.6 exp(-2.74).
        let stats = stats_of(&[100, 50], &[0.6, 0.4]);
        let v = voi_upper_bound(&stats, 1, 0, 1, 100, VoiVariant::Constant137).unwrap();
        assert!((v - 0.10331255502906955).abs() < 1e-12);
    }

    #[test]
    fn voi_bound_zero_gap_drops_exponential() {
        // Equal top means: bound reduces to 2 N mean(beta) / n.
        let stats = stats_of(&[8, 8], &[0.5, 0.5]);
        let v = voi_upper_bound(&stats, 0, 0, 1, 40, VoiVariant::Constant137).unwrap();
        assert_eq!(v, 2.0 * 40.0 * 0.5 / 8.0);
    }

    #[test]
    fn tight_bound_uses_shrunk_value_factor() {
        let stats = stats_of(&[100, 50], &[0.6, 0.5]);
        let loose =
            voi_upper_bound(&stats, 0, 0, 1, 100, VoiVariant::Constant137).unwrap();
        let tight =
            voi_upper_bound_tight(&stats, 0, 0, 1, 100, VoiVariant::Constant137)
                .unwrap();
        // N/(N+n) = 0.5 versus N/n = 1.
        assert!((tight - 0.5 * loose).abs() < 1e-15);
        assert!(tight <= loose);
    }

    #[test]
    fn voi_select_initializes_unvisited_first() {
        let stats = ArmStats::from_parts(vec![2, 1, 0], vec![1.0, 0.5, 0.0]).unwrap();
        let budget = BudgetState::with_used(10, 3).unwrap();
        assert_eq!(
            voi_select(&stats, budget, VoiVariant::Constant137).unwrap(),
            2
        );
    }

    #[test]
    fn voi_select_prefers_undersampled_challenger() {
        // Incumbent well sampled (n=100, mean 0.6); challenger n=10, mean
        // 0.5. Challenger bound 8 exp(-0.137) ~ 6.98 dwarfs exp(-1.37).
        let stats = stats_of(&[100, 10], &[0.6, 0.5]);
        let budget = BudgetState::with_used(210, 110).unwrap();
        let est = voi_estimates(&stats, budget, VoiVariant::Constant137).unwrap();
        assert!((est.lambda_hat[0] - 0.25410695955280027).abs() < 1e-12);
        assert!((est.lambda_hat[1] - 6.975761809056875).abs() < 1e-12);
        assert_eq!(est.best_arm(), 1);
        assert_eq!(est.role(0), VoiRole::AlphaCase);
        assert_eq!(est.role(1), VoiRole::ChallengerCase);
        assert!(est.prob_bound_above_one);
        assert_eq!(
            voi_select(&stats, budget, VoiVariant::Constant137).unwrap(),
            1
        );
    }

    #[test]
    fn voi_select_breaks_full_ties_low() {
        let stats = stats_of(&[5, 5, 5], &[0.5, 0.5, 0.5]);
        let budget = BudgetState::with_used(30, 15).unwrap();
        assert_eq!(
            voi_select(&stats, budget, VoiVariant::Constant137).unwrap(),
            0
        );
    }

    #[test]
    fn voi_select_needs_remaining_budget() {
        let stats = stats_of(&[1, 1], &[0.5, 0.5]);
        let budget = BudgetState::with_used(2, 2).unwrap();
        assert_eq!(
            voi_select(&stats, budget, VoiVariant::Constant137),
            Err(Error::BudgetExhausted)
        );
    }

    #[test]
    fn ucb1_forces_unvisited_arms() {
        let stats = ArmStats::from_parts(vec![3, 0], vec![3.0, 0.0]).unwrap();
        assert_eq!(ucb1_select(&stats, 3, 1.0), 1);
    }

    #[test]
    fn ucb1_equal_bonus_picks_higher_mean() {
        let stats = stats_of(&[1, 1], &[1.0, 0.0]);
        assert_eq!(ucb1_select(&stats, 2, 1.0), 0);
    }

    #[test]
    fn ucb1_bonus_overwhelms_small_mean_edge() {
        // 0.4 + sqrt(2 ln 101) ~ 3.44 beats 0.5 + sqrt(2 ln 101 / 100) ~ 0.80.
        let stats = stats_of(&[100, 1], &[0.5, 0.4]);
        assert_eq!(ucb1_select(&stats, 101, 1.0), 1);
    }

    #[test]
    fn uniform_cycles_through_arms() {
        let stats = ArmStats::new(32);
        assert_eq!(uniform_select(&stats, 0), 0);
        assert_eq!(uniform_select(&stats, 33), 1);
        assert_eq!(uniform_select(&stats, 31), 31);
    }

    #[test]
    fn selectors_are_pure() {
        let stats = stats_of(&[4, 9, 2], &[0.3, 0.6, 0.5]);
        let budget = BudgetState::with_used(40, 15).unwrap();
        let v = voi_select(&stats, budget, VoiVariant::ExactPhi).unwrap();
        let u = ucb1_select(&stats, 15, 1.0);
        for _ in 0..4 {
            assert_eq!(voi_select(&stats, budget, VoiVariant::ExactPhi).unwrap(), v);
            assert_eq!(ucb1_select(&stats, 15, 1.0), u);
        }
    }

    #[test]
    fn policy_kind_dispatch_and_labels() {
        let stats = ArmStats::new(3);
        let budget = BudgetState::new(9);
        assert_eq!(PolicyKind::Uniform.label(), "uniform");
        assert_eq!(PolicyKind::ucb1().label(), "ucb1");
        assert_eq!(PolicyKind::voi().label(), "voi");
        // All selectors start by visiting arm 0 on fresh stats.
        for policy in [PolicyKind::Uniform, PolicyKind::ucb1(), PolicyKind::voi()] {
            assert_eq!(policy.select(&stats, budget).unwrap(), 0);
        }
    }

    proptest! {
        #[test]
        fn phi_exceeds_its_floor(n in 0u64..=1_000_000, remaining in 1u64..=1_000_000) {
            prop_assert!(phi(n, remaining).unwrap() > PHI_FLOOR);
        }

        #[test]
        fn exact_phi_bound_never_exceeds_constant_bound(
            mean_alpha in 0.0f64..=1.0,
            gap_beta in 0.0f64..=1.0,
            gap_i in 0.0f64..=1.0,
            n_alpha in 1u64..=4000,
            n_i in 1u64..=4000,
            remaining in 1u64..=4000,
        ) {
            let mean_beta = mean_alpha * (1.0 - gap_beta);
            let mean_i = mean_beta * (1.0 - gap_i);
            let stats = stats_of(&[n_alpha, n_i, n_i], &[mean_alpha, mean_beta, mean_i]);
            for arm in 0..3 {
                let exact =
                    voi_upper_bound(&stats, arm, 0, 1, remaining, VoiVariant::ExactPhi).unwrap();
                let constant =
                    voi_upper_bound(&stats, arm, 0, 1, remaining, VoiVariant::Constant137)
                        .unwrap();
                prop_assert!(exact <= constant, "arm {}: {} > {}", arm, exact, constant);
            }
        }

        #[test]
        fn voi_bound_strictly_decreases_in_pull_count(
            mean_alpha in 0.02f64..=0.98,
            frac_beta in 0.0f64..=1.0,
            n in 1u64..=2000,
            extra in 1u64..=2000,
            remaining in 1u64..=4000,
        ) {
            // Keep value factors positive so the decrease is strict.
            let mean_beta = 0.01 + (mean_alpha - 0.01) * frac_beta;
            let few = stats_of(&[n, n], &[mean_alpha, mean_beta]);
            let many = stats_of(&[n + extra, n + extra], &[mean_alpha, mean_beta]);
            for arm in 0..2 {
                let hi = voi_upper_bound(&few, arm, 0, 1, remaining, VoiVariant::Constant137)
                    .unwrap();
                let lo = voi_upper_bound(&many, arm, 0, 1, remaining, VoiVariant::Constant137)
                    .unwrap();
                // Strictness only makes sense while the exponential factor
                // has not underflowed both bounds to zero.
                prop_assume!(hi >= f64::MIN_POSITIVE);
                prop_assert!(lo < hi, "arm {}: {} !< {}", arm, lo, hi);
            }
        }

        #[test]
        fn challenger_bound_shrinks_as_gap_grows(
            mean_alpha in 0.1f64..=1.0,
            frac_hi in 0.0f64..=1.0,
            shrink in 0.0f64..=1.0,
            n in 1u64..=2000,
            remaining in 1u64..=4000,
        ) {
            let mean_hi = mean_alpha * frac_hi;
            let mean_lo = mean_hi * shrink;
            let close = stats_of(&[n, n], &[mean_alpha, mean_hi]);
            let far = stats_of(&[n, n], &[mean_alpha, mean_lo]);
            let b_close =
                voi_upper_bound(&close, 1, 0, 1, remaining, VoiVariant::Constant137).unwrap();
            let b_far =
                voi_upper_bound(&far, 1, 0, 1, remaining, VoiVariant::Constant137).unwrap();
            prop_assert!(b_far <= b_close);
        }

        #[test]
        fn argmax_invariant_under_positive_scaling(
            values in proptest::collection::vec(1e-6f64..=1e6, 1..40),
            exponent in -40i32..=40,
        ) {
            // Power-of-two scaling is exact in binary floating point.
            let scale = (2.0f64).powi(exponent);
            let est = VoiEstimate {
                alpha: 0,
                beta: 1.min(values.len() - 1),
                lambda_hat: values.clone(),
                prob_bound_above_one: false,
            };
            let scaled = VoiEstimate {
                lambda_hat: values.iter().map(|v| v * scale).collect(),
                ..est.clone()
            };
            prop_assert_eq!(est.best_arm(), scaled.best_arm());
        }

        #[test]
        fn ucb1_never_skips_unvisited(
            pulls in proptest::collection::vec(0u64..5, 2..10),
            c in 0.0f64..=4.0,
        ) {
            prop_assume!(pulls.iter().any(|&n| n == 0));
            let sums: Vec<f64> = pulls.iter().map(|&n| n as f64 * 0.5).collect();
            let stats = ArmStats::from_parts(pulls.clone(), sums).unwrap();
            let total: u64 = pulls.iter().sum();
            let picked = ucb1_select(&stats, total, c);
            prop_assert_eq!(pulls[picked], 0);
            prop_assert_eq!(picked, stats.first_unvisited().unwrap());
        }
    }
}
