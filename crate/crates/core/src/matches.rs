//! Engine-vs-engine match series at a fixed rollout budget per ply.
//!
//! Games are played in mirrored pairs: both games of a pair share the same
//! board (for random trees, the same tree) and the same per-seat rng
//! streams, with the engines swapping colors. Identical engines therefore
//! split every pair exactly, and first-move advantage cancels for
//! different ones. Pairs are independent, so games parallelize freely
//! without changing any result.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::games::{ConnectFour, GameSpec, GameState, PTree, Player};
use crate::mcts::{uct_search, voi_root_search};
use crate::policy::VoiVariant;
use crate::stream::{label_hash, mix, substream, SimRng};

/// 97.5-percentile of the standard normal; two-sided 95% coverage.
pub const Z_95: f64 = 1.959963984540054;

/// Which search runs at the root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineKind {
    Uct,
    VoiRoot,
}

/// A fully parameterized engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineSpec {
    pub kind: EngineKind,
    /// UCB1 exploration scale used during descent.
    pub exploration: f64,
    /// Exponent-factor flavor for the VOI root (ignored by plain UCT).
    pub voi_variant: VoiVariant,
}

impl EngineSpec {
    pub fn uct(exploration: f64) -> Self {
        Self {
            kind: EngineKind::Uct,
            exploration,
            voi_variant: VoiVariant::default(),
        }
    }

    pub fn voi_root(exploration: f64, voi_variant: VoiVariant) -> Self {
        Self {
            kind: EngineKind::VoiRoot,
            exploration,
            voi_variant,
        }
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            EngineKind::Uct => "uct",
            EngineKind::VoiRoot => "voi",
        }
    }

    fn choose<G: GameState>(
        &self,
        state: &G,
        budget: u64,
        rng: &mut SimRng,
    ) -> Result<G::Move> {
        let report = match self.kind {
            EngineKind::Uct => uct_search(state, budget, self.exploration, rng)?,
            EngineKind::VoiRoot => {
                voi_root_search(state, budget, self.exploration, self.voi_variant, rng)?
            }
        };
        Ok(report.best_move)
    }
}

/// Tallies for one `(pairing, budget)` series. Wins are counted per seat
/// in the pairing (`wins_a` belongs to the first engine passed to
/// [`play_match`]); the win rate scores draws as half a win.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    pub budget: u64,
    pub games: u64,
    pub wins_a: u64,
    pub wins_b: u64,
    pub draws: u64,
    pub winrate_a: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl MatchReport {
    pub const CSV_HEADER: &'static str =
        "budget,games,voi_wins,uct_wins,draws,voi_winrate,ci_low,ci_high";

    /// One CSV row in the `voi-vs-uct` column layout; engine A fills the
    /// `voi` columns.
    pub fn to_csv_row(&self) -> String {
        use crate::regret::fmt_float;
        format!(
            "{},{},{},{},{},{},{},{}",
            self.budget,
            self.games,
            self.wins_a,
            self.wins_b,
            self.draws,
            fmt_float(self.winrate_a),
            fmt_float(self.ci_low),
            fmt_float(self.ci_high),
        )
    }
}

/// Wilson score interval for `successes` out of `n` at normal quantile
/// `z`. Fractional successes are accepted so draws can count as half.
pub fn wilson_interval(successes: f64, n: u64, z: f64) -> (f64, f64) {
    let n = n as f64;
    let p = successes / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

fn seat_rng(seed: u64, pair: u64, seat: u64) -> SimRng {
    substream(seed, &[label_hash("match-seat"), pair, seat])
}

/// Plays `games` full games between two engines at `samples_per_ply`
/// rollouts per move, colors alternating each game, mirrored in pairs.
/// Returns the tally with a Wilson 95% interval on engine A's win rate.
pub fn play_match<G, F>(
    engine_a: EngineSpec,
    engine_b: EngineSpec,
    board_for_pair: F,
    samples_per_ply: u64,
    games: u64,
    seed: u64,
) -> Result<MatchReport>
where
    G: GameState + Send + Sync,
    G::Move: Send,
    F: Fn(u64) -> G + Sync,
{
    if games == 0 {
        return Err(Error::NoGames);
    }
    let scores = (0..games)
        .into_par_iter()
        .map(|game| {
            let pair = game / 2;
            let a_plays_first = game % 2 == 0;
            let mut state = board_for_pair(pair);
            let mut rng_first = seat_rng(seed, pair, 0);
            let mut rng_second = seat_rng(seed, pair, 1);
            loop {
                if let Some(value) = state.terminal_value() {
                    // value is from Player::One's perspective; the first
                    // seat is Player::One.
                    return Ok(if a_plays_first { value } else { 1.0 - value });
                }
                // Streams belong to seats, not engines, so the two games of
                // a pair replay identically when the engines are identical.
                let first_seat = state.player_to_move() == Player::One;
                let engine = if first_seat == a_plays_first {
                    engine_a
                } else {
                    engine_b
                };
                let rng = if first_seat {
                    &mut rng_first
                } else {
                    &mut rng_second
                };
                let mv = engine.choose(&state, samples_per_ply, rng)?;
                state = state.apply(mv);
            }
        })
        .collect::<Result<Vec<f64>>>()?;

    let mut wins_a = 0;
    let mut wins_b = 0;
    let mut draws = 0;
    for &s in &scores {
        if s == 1.0 {
            wins_a += 1;
        } else if s == 0.0 {
            wins_b += 1;
        } else {
            draws += 1;
        }
    }
    let successes = wins_a as f64 + 0.5 * draws as f64;
    let winrate_a = successes / games as f64;
    let (ci_low, ci_high) = wilson_interval(successes, games, Z_95);
    Ok(MatchReport {
        budget: samples_per_ply,
        games,
        wins_a,
        wins_b,
        draws,
        winrate_a,
        ci_low,
        ci_high,
    })
}

/// [`play_match`] over a runtime [`GameSpec`]. Random trees are freshened
/// per mirrored pair from the match seed.
pub fn play_match_spec(
    engine_a: EngineSpec,
    engine_b: EngineSpec,
    spec: GameSpec,
    samples_per_ply: u64,
    games: u64,
    seed: u64,
) -> Result<MatchReport> {
    match spec {
        GameSpec::PTree {
            branching,
            depth,
            win_prob,
        } => play_match(
            engine_a,
            engine_b,
            |pair| {
                let tree_seed = mix(&[seed, label_hash("ptree"), pair]);
                PTree::new(branching, depth, win_prob, tree_seed)
                    .expect("validated spec")
                    .root()
            },
            samples_per_ply,
            games,
            seed,
        ),
        GameSpec::ConnectFour5x5 => play_match(
            engine_a,
            engine_b,
            |_| ConnectFour::new(),
            samples_per_ply,
            games,
            seed,
        ),
    }
}
