//! Feature-profile plots: per-feature mean within-dialog and across-dialog
//! deviations for one (dialog act, feature set, measure) cell, rendered as
//! a self-contained SVG.

use std::fmt::Write as _;

use crate::entrain::{EntrainmentRecord, Measure};
use crate::error::{Error, Result};
use crate::features::FeatureSet;

const WIDTH: f64 = 640.0;
const MARGIN_LEFT: f64 = 150.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 36.0;
const MARGIN_BOTTOM: f64 = 28.0;
const ROW_HEIGHT: f64 = 24.0;

struct FeatureRow {
    name: &'static str,
    mean_d_s: f64,
    mean_d_d: f64,
}

/// Render the profile of per-feature mean deviations for one dialog act
/// label, feature set, and measure, pooling every resample's records.
///
/// The plot draws one row per feature in canonical set order: a solid
/// jagged line through the within-dialog means, a dashed one through the
/// across-dialog means, and two vertical rules at the overall means
/// (solid for within, dashed for across).
pub fn plot_profiles(
    records: &[EntrainmentRecord],
    da_label: &str,
    set: FeatureSet,
    measure: Measure,
) -> Result<String> {
    let mut rows = Vec::new();
    for name in set.feature_names() {
        let mut sum_s = 0.0;
        let mut sum_d = 0.0;
        let mut n = 0usize;
        for rec in records {
            if rec.da_label == da_label
                && rec.feature_set == set
                && rec.measure == measure
                && rec.feature == *name
            {
                sum_s += rec.d_s;
                sum_d += rec.d_d;
                n += 1;
            }
        }
        if n > 0 {
            rows.push(FeatureRow {
                name,
                mean_d_s: sum_s / n as f64,
                mean_d_d: sum_d / n as f64,
            });
        }
    }
    if rows.is_empty() {
        return Err(Error::Config(format!(
            "no data for label {da_label}, set {set}, measure {measure}"
        )));
    }

    let overall_s = rows.iter().map(|r| r.mean_d_s).sum::<f64>() / rows.len() as f64;
    let overall_d = rows.iter().map(|r| r.mean_d_d).sum::<f64>() / rows.len() as f64;

    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for r in &rows {
        lo = lo.min(r.mean_d_s).min(r.mean_d_d);
        hi = hi.max(r.mean_d_s).max(r.mean_d_d);
    }
    lo = lo.min(overall_s).min(overall_d);
    hi = hi.max(overall_s).max(overall_d);
    if !(hi - lo).is_finite() || hi - lo < 1e-9 {
        lo -= 1.0;
        hi += 1.0;
    }
    let pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = rows.len() as f64 * ROW_HEIGHT;
    let height = MARGIN_TOP + plot_h + MARGIN_BOTTOM;
    let x = |v: f64| MARGIN_LEFT + (v - lo) / (hi - lo) * plot_w;
    let y = |i: usize| MARGIN_TOP + (i as f64 + 0.5) * ROW_HEIGHT;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{height:.0}\" viewBox=\"0 0 {WIDTH} {height:.0}\">"
    );
    let _ = writeln!(
        svg,
        "  <rect width=\"{WIDTH}\" height=\"{height:.0}\" fill=\"white\"/>"
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{MARGIN_LEFT}\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\" fill=\"black\">{da_label} / {set} / {measure}: mean within (solid) vs across (dashed)</text>"
    );

    // feature labels and guide rows
    for (i, r) in rows.iter().enumerate() {
        let yy = y(i);
        let _ = writeln!(
            svg,
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"black\" text-anchor=\"end\" dominant-baseline=\"middle\">{}</text>",
            MARGIN_LEFT - 8.0,
            yy,
            r.name
        );
        let _ = writeln!(
            svg,
            "  <line x1=\"{MARGIN_LEFT:.1}\" y1=\"{yy:.1}\" x2=\"{:.1}\" y2=\"{yy:.1}\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>",
            MARGIN_LEFT + plot_w
        );
    }

    // the two overall-mean rules: solid within, dashed across
    let _ = writeln!(
        svg,
        "  <line class=\"mean-rule\" x1=\"{:.4}\" y1=\"{MARGIN_TOP:.1}\" x2=\"{:.4}\" y2=\"{:.1}\" stroke=\"#1f6fb2\" stroke-width=\"1.5\"/>",
        x(overall_s),
        x(overall_s),
        MARGIN_TOP + plot_h
    );
    let _ = writeln!(
        svg,
        "  <line class=\"mean-rule\" x1=\"{:.4}\" y1=\"{MARGIN_TOP:.1}\" x2=\"{:.4}\" y2=\"{:.1}\" stroke=\"#b23a1f\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>",
        x(overall_d),
        x(overall_d),
        MARGIN_TOP + plot_h
    );

    // jagged per-feature profiles
    let points = |pick: fn(&FeatureRow) -> f64| {
        rows.iter()
            .enumerate()
            .map(|(i, r)| format!("{:.4},{:.4}", x(pick(r)), y(i)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(
        svg,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\"/>",
        points(|r| r.mean_d_s)
    );
    let _ = writeln!(
        svg,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#b23a1f\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>",
        points(|r| r.mean_d_d)
    );

    // x axis with end labels
    let axis_y = MARGIN_TOP + plot_h + 4.0;
    let _ = writeln!(
        svg,
        "  <line x1=\"{MARGIN_LEFT:.1}\" y1=\"{axis_y:.1}\" x2=\"{:.1}\" y2=\"{axis_y:.1}\" stroke=\"black\" stroke-width=\"1\"/>",
        MARGIN_LEFT + plot_w
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{MARGIN_LEFT:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"10\" fill=\"black\">{lo:.3}</text>",
        axis_y + 14.0
    );
    let _ = writeln!(
        svg,
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-family=\"sans-serif\" font-size=\"10\" fill=\"black\" text-anchor=\"end\">{hi:.3}</text>",
        MARGIN_LEFT + plot_w,
        axis_y + 14.0
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}
