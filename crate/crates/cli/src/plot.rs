//! Self-contained SVG line charts: regret vs budget and win rate vs
//! budget, both on a log-2 budget axis. Pure string assembly with fixed
//! number formatting, so identical inputs render identical bytes.

use anyhow::{bail, Result};
use voisearch::{MatchReport, ResultTable};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 78.0;
const MARGIN_RIGHT: f64 = 36.0;
const MARGIN_TOP: f64 = 32.0;
const MARGIN_BOTTOM: f64 = 64.0;

const PALETTE: [&str; 5] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"];

struct Series {
    label: String,
    points: Vec<(f64, f64)>, // (budget, y)
}

/// Regret-versus-budget chart, one polyline per policy.
pub fn regret_svg(table: &ResultTable) -> Result<String> {
    if table.rows.is_empty() {
        bail!("cannot plot an empty result table");
    }
    let mut series: Vec<Series> = Vec::new();
    for row in &table.rows {
        let label = row.policy.label();
        if series.last().map(|s| s.label != label).unwrap_or(true) {
            series.push(Series {
                label: label.to_string(),
                points: Vec::new(),
            });
        }
        let current = series.last_mut().expect("just pushed");
        current.points.push((row.budget as f64, row.mean_regret));
    }
    let y_top = table
        .rows
        .iter()
        .map(|r| r.mean_regret + r.stderr)
        .fold(f64::MIN_POSITIVE, f64::max)
        * 1.08;
    Ok(render(
        &series,
        "samples",
        "mean simple regret",
        y_top,
        None,
    ))
}

/// Win-rate-versus-budget chart with a 0.5 reference line.
pub fn match_svg(reports: &[MatchReport]) -> Result<String> {
    if reports.is_empty() {
        bail!("cannot plot an empty match report");
    }
    let series = [Series {
        label: "voi vs uct".to_string(),
        points: reports
            .iter()
            .map(|r| (r.budget as f64, r.winrate_a))
            .collect(),
    }];
    Ok(render(&series, "samples per ply", "win rate", 1.0, Some(0.5)))
}

fn render(
    series: &[Series],
    x_label: &str,
    y_label: &str,
    y_top: f64,
    reference: Option<f64>,
) -> String {
    let budgets: Vec<f64> = {
        let mut all: Vec<f64> = series
            .iter()
            .flat_map(|s| s.points.iter().map(|&(b, _)| b))
            .collect();
        all.sort_by(f64::total_cmp);
        all.dedup();
        all
    };
    let (x_lo, mut x_hi) = (budgets[0].log2(), budgets[budgets.len() - 1].log2());
    if x_hi == x_lo {
        x_hi = x_lo + 1.0;
    }
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x_of = |budget: f64| MARGIN_LEFT + (budget.log2() - x_lo) / (x_hi - x_lo) * plot_w;
    let y_of = |y: f64| MARGIN_TOP + (1.0 - y / y_top) * plot_h;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"13\">\n"
    ));
    svg.push_str(&format!(
        "  <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    // Axes.
    let x0 = MARGIN_LEFT;
    let y0 = MARGIN_TOP + plot_h;
    svg.push_str(&format!(
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{:.2}\" y2=\"{y0:.2}\" stroke=\"black\"/>\n",
        MARGIN_LEFT + plot_w
    ));
    svg.push_str(&format!(
        "  <line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{MARGIN_TOP:.2}\" stroke=\"black\"/>\n"
    ));

    // X ticks at every budget (log-2 spacing).
    for &b in &budgets {
        let x = x_of(b);
        svg.push_str(&format!(
            "  <line x1=\"{x:.2}\" y1=\"{y0:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
            y0 + 20.0,
            b as u64
        ));
    }
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{x_label} (log scale)</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        y0 + 44.0
    ));

    // Y ticks: five even divisions.
    for i in 0..=5 {
        let value = y_top * f64::from(i) / 5.0;
        let y = y_of(value);
        svg.push_str(&format!(
            "  <line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0:.2}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{value:.3}</text>\n",
            x0 - 9.0,
            y + 4.0
        ));
    }
    svg.push_str(&format!(
        "  <text x=\"16\" y=\"{:.2}\" transform=\"rotate(-90 16 {:.2})\" \
         text-anchor=\"middle\">{y_label}</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    ));

    if let Some(r) = reference {
        let y = y_of(r);
        svg.push_str(&format!(
            "  <line x1=\"{x0:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n",
            MARGIN_LEFT + plot_w
        ));
    }

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let coords: Vec<String> = s
            .points
            .iter()
            .map(|&(b, y)| format!("{:.2},{:.2}", x_of(b), y_of(y)))
            .collect();
        svg.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            coords.join(" ")
        ));
        for &(b, y) in &s.points {
            svg.push_str(&format!(
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>\n",
                x_of(b),
                y_of(y)
            ));
        }
        // Legend entry.
        let ly = MARGIN_TOP + 16.0 + 18.0 * i as f64;
        let lx = MARGIN_LEFT + plot_w - 130.0;
        svg.push_str(&format!(
            "  <line x1=\"{lx:.2}\" y1=\"{ly:.2}\" x2=\"{:.2}\" y2=\"{ly:.2}\" \
             stroke=\"{color}\" stroke-width=\"2\"/>\n",
            lx + 24.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\">{}</text>\n",
            lx + 30.0,
            ly + 4.0,
            s.label
        ));
    }

    svg.push_str("</svg>\n");
    svg
}
