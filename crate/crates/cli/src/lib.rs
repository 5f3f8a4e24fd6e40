//! Experiment dispatch: resolves flags into configs, runs the harnesses,
//! and writes self-describing CSV (plus optional SVG charts).
//!
//! Every CSV starts with `#`-prefixed comment lines echoing the full
//! resolved experiment configuration, so an output file documents exactly
//! how to regenerate itself. Execution details that cannot change the
//! numbers (thread count, output paths) are deliberately left out of the
//! header: the same seed must produce byte-identical files at any
//! parallelism level.

pub mod args;
pub mod plot;

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::Context;
use args::{Cli, Command};
use voisearch::matches::{play_match_spec, EngineSpec};
use voisearch::regret::{
    brute_force_regret, fmt_float, generate_instance, run_experiment, run_trial,
    ExperimentConfig,
};
use voisearch::stream::{label_hash, substream};
use voisearch::{MatchReport, PolicyKind};

/// Failure modes with distinct exit codes: flag misuse exits 2 like a
/// parse error, everything else exits 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Runtime(e)
    }
}

impl From<voisearch::Error> for CliError {
    fn from(e: voisearch::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::Runtime(e.into()))?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Bandit(args) => run_bandit(&cli, args),
        Command::Match(args) => run_match(&cli, args),
        Command::OracleCheck(args) => run_oracle_check(&cli, args),
    }
}

fn run_bandit(cli: &Cli, args: &args::BanditArgs) -> Result<(), CliError> {
    let config = ExperimentConfig {
        arms: args.arms,
        budgets: args.budgets.0.clone(),
        trials: args.trials,
        policies: args.policy_kinds(),
        seed: cli.seed,
    };
    config.validate()?;

    let table = run_experiment(&config)?;

    let mut csv = String::new();
    let _ = writeln!(csv, "# voisearch bandit");
    let _ = writeln!(csv, "# arms = {}", args.arms);
    let _ = writeln!(csv, "# budgets = {}", join_u64(&config.budgets));
    let _ = writeln!(csv, "# trials = {}", args.trials);
    let _ = writeln!(csv, "# policies = {}", policy_labels(&config.policies));
    let _ = writeln!(csv, "# voi-variant = {}", variant_name(args.voi_variant));
    let _ = writeln!(csv, "# ucb-c = {}", args.ucb_c);
    let _ = writeln!(csv, "# seed = {}", cli.seed);
    csv.push_str(&table.to_csv());
    deliver(cli, &csv)?;

    if let Some(path) = &cli.plot {
        let svg = plot::regret_svg(&table)?;
        write_file(path, &svg)?;
    }
    Ok(())
}

fn run_match(cli: &Cli, args: &args::MatchArgs) -> Result<(), CliError> {
    let variant = voisearch::VoiVariant::default();
    let voi = EngineSpec::voi_root(args.uct_c, variant);
    let uct = EngineSpec::uct(args.uct_c);
    let reports = args
        .samples_per_ply
        .0
        .iter()
        .map(|&budget| play_match_spec(voi, uct, args.game, budget, args.games, cli.seed))
        .collect::<voisearch::Result<Vec<MatchReport>>>()?;

    let mut csv = String::new();
    let _ = writeln!(csv, "# voisearch match");
    let _ = writeln!(csv, "# game = {}", args.game);
    let _ = writeln!(csv, "# engine-a = voi-root, engine-b = uct");
    let _ = writeln!(
        csv,
        "# samples-per-ply = {}",
        join_u64(&args.samples_per_ply.0)
    );
    let _ = writeln!(csv, "# games = {}", args.games);
    let _ = writeln!(csv, "# uct-c = {}", args.uct_c);
    let _ = writeln!(csv, "# seed = {}", cli.seed);
    let _ = writeln!(csv, "{}", MatchReport::CSV_HEADER);
    for report in &reports {
        let _ = writeln!(csv, "{}", report.to_csv_row());
    }
    deliver(cli, &csv)?;

    if let Some(path) = &cli.plot {
        let svg = plot::match_svg(&reports)?;
        write_file(path, &svg)?;
    }
    Ok(())
}

fn run_oracle_check(cli: &Cli, args: &args::OracleCheckArgs) -> Result<(), CliError> {
    if cli.plot.is_some() {
        return Err(CliError::Usage(
            "--plot is not available for oracle-check".into(),
        ));
    }
    if args.trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let policy = args.policy_kind();

    let mut rng = substream(cli.seed, &[label_hash("oracle-instance")]);
    let instance = generate_instance(args.arms, &mut rng)?;

    let exact = brute_force_regret(&instance, policy, args.budget)?;
    let regrets = {
        use rayon::prelude::*;
        (0..args.trials)
            .into_par_iter()
            .map(|trial| {
                let mut rng = substream(cli.seed, &[label_hash("oracle-mc"), trial]);
                run_trial(&instance, policy, args.budget, &mut rng)
            })
            .collect::<voisearch::Result<Vec<f64>>>()?
    };
    let n = regrets.len() as f64;
    let mc_mean = regrets.iter().sum::<f64>() / n;
    let stderr = if regrets.len() < 2 {
        0.0
    } else {
        let var = regrets
            .iter()
            .map(|r| (r - mc_mean) * (r - mc_mean))
            .sum::<f64>()
            / (n - 1.0);
        (var / n).sqrt()
    };
    // Degenerate instances can be exactly deterministic; then the check is
    // plain equality.
    let pass = if stderr > 0.0 {
        (mc_mean - exact).abs() <= 3.0 * stderr
    } else {
        (mc_mean - exact).abs() < 1e-12
    };
    let verdict = if pass { "PASS" } else { "FAIL" };

    println!(
        "oracle-check: policy={} budget={} arms={} trials={} seed={}",
        policy.label(),
        args.budget,
        args.arms,
        args.trials,
        cli.seed
    );
    let means: Vec<String> = instance.means().iter().map(|m| format!("{m:.6}")).collect();
    println!("instance means: [{}]", means.join(", "));
    println!("oracle regret:  {exact:.8}");
    println!("mc regret:      {mc_mean:.8} (stderr {stderr:.8})");
    println!("verdict:        {verdict} (tolerance 3 stderr)");

    if let Some(path) = &cli.out {
        let mut csv = String::new();
        let _ = writeln!(csv, "# voisearch oracle-check");
        let _ = writeln!(csv, "# arms = {}", args.arms);
        let _ = writeln!(csv, "# budget = {}", args.budget);
        let _ = writeln!(csv, "# trials = {}", args.trials);
        let _ = writeln!(csv, "# seed = {}", cli.seed);
        let _ = writeln!(csv, "policy,budget,oracle_regret,mc_regret,mc_stderr,verdict");
        let _ = writeln!(
            csv,
            "{},{},{},{},{},{verdict}",
            policy.label(),
            args.budget,
            fmt_float(exact),
            fmt_float(mc_mean),
            fmt_float(stderr),
        );
        write_file(path, &csv)?;
    }

    if pass {
        Ok(())
    } else {
        Err(CliError::Runtime(anyhow::anyhow!(
            "Monte-Carlo regret {mc_mean} disagrees with the exact oracle {exact} \
             beyond 3 stderr ({stderr})"
        )))
    }
}

fn deliver(cli: &Cli, csv: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => write_file(path, csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content)
        .with_context(|| format!("writing {}", path.display()))
        .map_err(CliError::Runtime)
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn policy_labels(policies: &[PolicyKind]) -> String {
    policies
        .iter()
        .map(|p| p.label())
        .collect::<Vec<_>>()
        .join(",")
}

fn variant_name(v: args::VariantArg) -> &'static str {
    match v {
        args::VariantArg::Const => "const",
        args::VariantArg::Phi => "phi",
    }
}
