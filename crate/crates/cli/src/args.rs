//! Flag definitions and the small parsing grammars for budget sweeps and
//! policy lists.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use voisearch::policy::{PolicyKind, VoiVariant};
use voisearch::GameSpec;

/// Seed used when `--seed` is absent, so every run is reproducible by
/// default.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(
    name = "voisearch",
    version,
    about = "Pure-exploration bandit and search experiments with VOI-aware sampling"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Master rng seed; identical seeds reproduce outputs byte for byte.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// CSV output path; stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Also render an SVG chart of the results to this path.
    #[arg(long, global = true)]
    pub plot: Option<PathBuf>,

    /// Worker threads (0 = one per core). Outputs do not depend on this.
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simple-regret experiment on random Bernoulli bandit instances.
    Bandit(BanditArgs),
    /// Engine-vs-engine match series: VOI-at-root against plain UCT.
    Match(MatchArgs),
    /// Cross-check Monte-Carlo regret against the exact enumeration oracle.
    OracleCheck(OracleCheckArgs),
}

#[derive(Debug, Args)]
pub struct BanditArgs {
    /// Number of arms per random instance.
    #[arg(long, default_value_t = 32)]
    pub arms: usize,

    /// Pull budgets: comma list (`32,64,128`) or multiplicative sweep
    /// (`32:1024:x2`).
    #[arg(long, default_value = "32:1024:x2")]
    pub budgets: BudgetList,

    /// Trials per (policy, budget) cell.
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,

    /// Comma list drawn from uniform|ucb1|voi.
    #[arg(long, default_value = "ucb1,voi")]
    pub policies: PolicyList,

    /// Exponent factor used by the voi policy.
    #[arg(long, value_enum, default_value_t = VariantArg::Const)]
    pub voi_variant: VariantArg,

    /// UCB1 exploration scale.
    #[arg(long, default_value_t = 1.0)]
    pub ucb_c: f64,
}

impl BanditArgs {
    pub fn policy_kinds(&self) -> Vec<PolicyKind> {
        self.policies
            .0
            .iter()
            .map(|tag| match tag {
                PolicyTag::Uniform => PolicyKind::Uniform,
                PolicyTag::Ucb1 => PolicyKind::Ucb1 { c: self.ucb_c },
                PolicyTag::Voi => PolicyKind::Voi {
                    variant: self.voi_variant.into(),
                },
            })
            .collect()
    }
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    /// Toy domain: `ptree:<branching>,<depth>,<win_prob>` or
    /// `connect4-5x5`. The default is the calibrated tree where the
    /// engines' difference is well resolved at desk-scale budgets.
    #[arg(long, default_value = "ptree:2,18,0.618")]
    pub game: GameSpec,

    /// Rollouts per move for both engines: comma list or `a:b:x<f>` sweep.
    #[arg(long, default_value = "256:2048:x2")]
    pub samples_per_ply: BudgetList,

    /// Games per budget; colors alternate every game.
    #[arg(long, default_value_t = 1000)]
    pub games: u64,

    /// Shared UCT exploration scale for both engines.
    #[arg(long, default_value_t = std::f64::consts::SQRT_2)]
    pub uct_c: f64,
}

#[derive(Debug, Args)]
pub struct OracleCheckArgs {
    /// Arms of the randomly drawn instance.
    #[arg(long, default_value_t = 2)]
    pub arms: usize,

    /// Pull budget (the oracle enumerates 2^budget outcomes, max 20).
    #[arg(long, default_value_t = 8)]
    pub budget: u64,

    /// Policy to check.
    #[arg(long, value_enum, default_value_t = PolicyTag::Voi)]
    pub policy: PolicyTag,

    /// Monte-Carlo trials to average.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,

    /// Exponent factor used by the voi policy.
    #[arg(long, value_enum, default_value_t = VariantArg::Const)]
    pub voi_variant: VariantArg,

    /// UCB1 exploration scale.
    #[arg(long, default_value_t = 1.0)]
    pub ucb_c: f64,
}

impl OracleCheckArgs {
    pub fn policy_kind(&self) -> PolicyKind {
        match self.policy {
            PolicyTag::Uniform => PolicyKind::Uniform,
            PolicyTag::Ucb1 => PolicyKind::Ucb1 { c: self.ucb_c },
            PolicyTag::Voi => PolicyKind::Voi {
                variant: self.voi_variant.into(),
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// Constant 1.37 exponent factor.
    Const,
    /// Exact budget-dependent phi(n).
    Phi,
}

impl From<VariantArg> for VoiVariant {
    fn from(v: VariantArg) -> VoiVariant {
        match v {
            VariantArg::Const => VoiVariant::Constant137,
            VariantArg::Phi => VoiVariant::ExactPhi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyTag {
    Uniform,
    Ucb1,
    Voi,
}

impl PolicyTag {
    fn parse(s: &str) -> Result<Self, String> {
        match s {
            "uniform" => Ok(PolicyTag::Uniform),
            "ucb1" => Ok(PolicyTag::Ucb1),
            "voi" => Ok(PolicyTag::Voi),
            other => Err(format!("unknown policy `{other}` (uniform|ucb1|voi)")),
        }
    }
}

/// Comma list of policy tags, duplicates rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolicyList(pub Vec<PolicyTag>);

impl FromStr for PolicyList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut tags = Vec::new();
        for part in s.split(',') {
            let tag = PolicyTag::parse(part.trim())?;
            if tags.contains(&tag) {
                return Err(format!("duplicate policy `{part}`"));
            }
            tags.push(tag);
        }
        if tags.is_empty() {
            return Err("no policies given".into());
        }
        Ok(PolicyList(tags))
    }
}

/// Budget list: `8,16,32` or the sweep form `start:end:x<factor>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetList(pub Vec<u64>);

impl FromStr for BudgetList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.contains(':') {
            let parts: Vec<&str> = s.split(':').collect();
            if parts.len() != 3 {
                return Err(format!("sweep form is start:end:x<factor>, got `{s}`"));
            }
            let start: u64 = parts[0]
                .parse()
                .map_err(|_| format!("bad sweep start `{}`", parts[0]))?;
            let end: u64 = parts[1]
                .parse()
                .map_err(|_| format!("bad sweep end `{}`", parts[1]))?;
            let factor: u64 = parts[2]
                .strip_prefix('x')
                .ok_or_else(|| format!("sweep step must look like x2, got `{}`", parts[2]))?
                .parse()
                .map_err(|_| format!("bad sweep factor `{}`", parts[2]))?;
            if start == 0 || end < start || factor < 2 {
                return Err(format!("empty or non-increasing sweep `{s}`"));
            }
            let mut budgets = Vec::new();
            let mut b = start;
            while b <= end {
                budgets.push(b);
                match b.checked_mul(factor) {
                    Some(next) => b = next,
                    None => break,
                }
            }
            return Ok(BudgetList(budgets));
        }
        let budgets = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("bad budget `{part}`"))
            })
            .collect::<Result<Vec<u64>, String>>()?;
        if budgets.is_empty() || budgets.contains(&0) {
            return Err(format!("budgets must be positive, got `{s}`"));
        }
        Ok(BudgetList(budgets))
    }
}
