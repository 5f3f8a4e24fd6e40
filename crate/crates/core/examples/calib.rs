//! Scratch calibration runs (deleted before release).

use voisearch::matches::{play_match_spec, EngineSpec};
use voisearch::policy::{PolicyKind, VoiVariant};
use voisearch::regret::{run_experiment, ExperimentConfig};
use voisearch::GameSpec;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args[0].as_str() {
        "fig1" => {
            let trials: u64 = args[1].parse().unwrap();
            let config = ExperimentConfig {
                arms: 32,
                budgets: vec![32, 64, 128, 256, 512, 1024],
                trials,
                policies: vec![
                    PolicyKind::Uniform,
                    PolicyKind::Ucb1 { c: 1.0 },
                    PolicyKind::Voi {
                        variant: VoiVariant::Constant137,
                    },
                ],
                seed: 2012,
            };
            let t0 = std::time::Instant::now();
            let table = run_experiment(&config).unwrap();
            for row in &table.rows {
                println!(
                    "{:8} {:5} {:.5} +- {:.5}",
                    row.policy.label(),
                    row.budget,
                    row.mean_regret,
                    row.stderr
                );
            }
            eprintln!("elapsed {:?}", t0.elapsed());
        }
        "fig2" => {
            let spec: GameSpec = args[1].parse().unwrap();
            let games: u64 = args[2].parse().unwrap();
            let budgets: Vec<u64> = args[3].split(',').map(|b| b.parse().unwrap()).collect();
            let c: f64 = args
                .get(4)
                .map(|s| s.parse().unwrap())
                .unwrap_or(std::f64::consts::SQRT_2);
            let seed: u64 = args.get(5).map(|s| s.parse().unwrap()).unwrap_or(99);
            for budget in budgets.clone() {
                let t0 = std::time::Instant::now();
                let report = play_match_spec(
                    EngineSpec::voi_root(c, VoiVariant::Constant137),
                    EngineSpec::uct(c),
                    spec,
                    budget,
                    games,
                    seed,
                )
                .unwrap();
                println!(
                    "{} budget {:5}: voi {:.4} [{:.4},{:.4}] (w{} l{} d{}) {:?}",
                    spec,
                    budget,
                    report.winrate_a,
                    report.ci_low,
                    report.ci_high,
                    report.wins_a,
                    report.wins_b,
                    report.draws,
                    t0.elapsed()
                );
            }
        }
        "quality" => {
            // Root-decision quality: fraction of random trees where the
            // engine's move is minimax-optimal.
            use voisearch::mcts::{uct_search, voi_root_search};
            use voisearch::minimax::optimal_root_moves;
            use voisearch::stream::substream;
            use voisearch::games::PTree;
            let (b, d, p): (u8, u8, f64) = {
                let parts: Vec<&str> = args[1].split(',').collect();
                (
                    parts[0].parse().unwrap(),
                    parts[1].parse().unwrap(),
                    parts[2].parse().unwrap(),
                )
            };
            let trees: u64 = args[2].parse().unwrap();
            let budgets: Vec<u64> = args[3].split(',').map(|s| s.parse().unwrap()).collect();
            let c: f64 = args
                .get(4)
                .map(|s| s.parse().unwrap())
                .unwrap_or(std::f64::consts::SQRT_2);
            for &budget in &budgets {
                let mut uct_hits = 0u64;
                let mut voi_hits = 0u64;
                let mut undecided = 0u64;
                for seed in 0..trees {
                    let root = PTree::new(b, d, p, seed).unwrap().root();
                    let (optimal, _) = optimal_root_moves(&root);
                    if optimal.len() == b as usize {
                        undecided += 1;
                        continue;
                    }
                    let mut rng = substream(seed, &[1000, budget]);
                    let uct = uct_search(&root, budget, c, &mut rng).unwrap();
                    if optimal.contains(&(uct.best_move as usize)) {
                        uct_hits += 1;
                    }
                    let mut rng = substream(seed, &[2000, budget]);
                    let voi = voi_root_search(
                        &root,
                        budget,
                        c,
                        VoiVariant::Constant137,
                        &mut rng,
                    )
                    .unwrap();
                    if optimal.contains(&(voi.best_move as usize)) {
                        voi_hits += 1;
                    }
                }
                let n = (trees - undecided) as f64;
                println!(
                    "b{b} d{d} p{p} c{c} budget {budget:5}: uct {:.4} voi {:.4} (n={n})",
                    uct_hits as f64 / n,
                    voi_hits as f64 / n
                );
            }
        }
        "visits" => {
            // Root visit/mean profiles of both engines on one position.
            use voisearch::mcts::{uct_search, voi_root_search};
            use voisearch::stream::substream;
            use voisearch::games::ConnectFour;
            let budget: u64 = args[1].parse().unwrap();
            let c: f64 = args[2].parse().unwrap();
            let state = ConnectFour::new();
            let mut rng = substream(5, &[1]);
            let uct = uct_search(&state, budget, c, &mut rng).unwrap();
            let mut rng = substream(5, &[1]);
            let voi =
                voi_root_search(&state, budget, c, VoiVariant::Constant137, &mut rng)
                    .unwrap();
            for (name, rep) in [("uct", &uct), ("voi", &voi)] {
                let st = &rep.root_stats;
                let visits: Vec<u64> = (0..st.arms()).map(|a| st.pulls(a)).collect();
                let means: Vec<String> = (0..st.arms())
                    .map(|a| format!("{:.3}", st.mean(a).unwrap()))
                    .collect();
                println!("{name}: best={} visits={visits:?} means={means:?}", rep.best_move);
            }
        }
        other => panic!("unknown mode {other}"),
    }
}
