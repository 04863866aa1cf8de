//! Significance testing and aggregation: Welch t-tests over pooled
//! within/across distances, per-cell sign grids, grouping-dimension
//! proportion tables, and a speaker-stratified permutation test for
//! group contrasts.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::dialacts::{Condition, Level, Support};
use crate::entrain::{EntrainmentRecord, Measure};
use crate::error::{Error, Result};
use crate::features::FeatureSet;

/// Welch's unequal-variance t-test, two-sided.
///
/// Returns `(t, df, p)`. Identical-variance-free degenerate input (both
/// samples constant) yields `(0, n1+n2-2, 1)` when the means agree and an
/// error otherwise.
pub fn welch_ttest(sample1: &[f64], sample2: &[f64]) -> Result<(f64, f64, f64)> {
    let (n1, n2) = (sample1.len(), sample2.len());
    if n1 < 2 || n2 < 2 {
        return Err(Error::DegenerateSamples);
    }
    let mean = |s: &[f64]| s.iter().sum::<f64>() / s.len() as f64;
    let var =
        |s: &[f64], m: f64| s.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (s.len() - 1) as f64;
    let (m1, m2) = (mean(sample1), mean(sample2));
    let (v1, v2) = (var(sample1, m1), var(sample2, m2));
    let se2 = v1 / n1 as f64 + v2 / n2 as f64;
    if se2 <= 0.0 {
        if m1 == m2 {
            return Ok((0.0, (n1 + n2 - 2) as f64, 1.0));
        }
        return Err(Error::DegenerateSamples);
    }
    let t = (m1 - m2) / se2.sqrt();
    let df = se2 * se2
        / ((v1 / n1 as f64).powi(2) / (n1 as f64 - 1.0)
            + (v2 / n2 as f64).powi(2) / (n2 as f64 - 1.0));
    let dist = StudentsT::new(0.0, 1.0, df).map_err(|_| Error::DegenerateSamples)?;
    let p = (2.0 * dist.cdf(-t.abs())).clamp(1e-300, 1.0);
    Ok((t, df, p))
}

/// Significance/direction verdict of one (condition, label, set, measure)
/// cell: pooled within-distances tested against pooled across-distances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignCell {
    pub condition: Condition,
    pub da_label: String,
    pub feature_set: FeatureSet,
    /// "all" for set-pooled cells, the feature name in per-feature mode.
    pub feature: String,
    pub measure: Measure,
    /// '+' entrainment, '-' disentrainment, '0' not significant.
    pub sign: char,
    pub p_value: Option<f64>,
    pub mean_d_s: f64,
    pub mean_d_d: f64,
    pub n_within: usize,
    pub n_across: usize,
    /// "n/a" when the cell had too little data to test, else empty.
    pub note: String,
}

fn decide_sign(p: f64, alpha: f64, mean_ds: f64, mean_dd: f64) -> char {
    if p < alpha && mean_ds < mean_dd {
        '+'
    } else if p < alpha && mean_ds > mean_dd {
        '-'
    } else {
        '0'
    }
}

fn make_cell(
    key: (Condition, String, FeatureSet, String, Measure),
    ds: &[f64],
    dd: &[f64],
    alpha: f64,
) -> SignCell {
    let (condition, da_label, feature_set, feature, measure) = key;
    let mean = |s: &[f64]| {
        if s.is_empty() {
            0.0
        } else {
            s.iter().sum::<f64>() / s.len() as f64
        }
    };
    let (mean_d_s, mean_d_d) = (mean(ds), mean(dd));
    let mut cell = SignCell {
        condition,
        da_label,
        feature_set,
        feature,
        measure,
        sign: '0',
        p_value: None,
        mean_d_s,
        mean_d_d,
        n_within: ds.len(),
        n_across: dd.len(),
        note: String::new(),
    };
    match welch_ttest(ds, dd) {
        Ok((_, _, p)) => {
            cell.p_value = Some(p);
            cell.sign = decide_sign(p, alpha, mean_d_s, mean_d_d);
        }
        Err(_) => cell.note = "n/a".to_string(),
    }
    cell
}

/// Build the sign grid from entrainment records: one cell per (condition,
/// dialog act, feature set, measure), pooling all per-feature within and
/// across distances of the set. With `per_feature` the pooling is skipped
/// and cells are additionally keyed by feature name.
pub fn sign_table(records: &[EntrainmentRecord], alpha: f64, per_feature: bool) -> Vec<SignCell> {
    type Key = (Condition, String, FeatureSet, String, Measure);
    let mut cells: BTreeMap<Key, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    for r in records {
        let feature = if per_feature {
            r.feature.clone()
        } else {
            "all".to_string()
        };
        let key = (
            r.condition,
            r.da_label.clone(),
            r.feature_set,
            feature,
            r.measure,
        );
        let entry = cells.entry(key).or_default();
        entry.0.push(r.d_s);
        entry.1.push(r.d_d);
    }
    cells
        .into_iter()
        .map(|(key, (mut ds, mut dd))| {
            // sorting makes the cell independent of record order, down to
            // float summation rounding
            ds.sort_by(|a, b| a.partial_cmp(b).unwrap());
            dd.sort_by(|a, b| a.partial_cmp(b).unwrap());
            make_cell(key, &ds, &dd, alpha)
        })
        .collect()
}

/// The four grouping dimensions of the proportion tables.
pub const DIMENSIONS: [&str; 4] = ["authority", "support", "frequency", "predictability"];

/// Label-level grouping values used to aggregate sign cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabelGrouping {
    pub authority: Level,
    pub support: Support,
    pub frequency: Level,
    pub predictability: Level,
}

impl LabelGrouping {
    fn level_str(&self, dimension: &str) -> &'static str {
        match dimension {
            "authority" => self.authority.as_str(),
            "support" => self.support.as_str(),
            "frequency" => self.frequency.as_str(),
            "predictability" => self.predictability.as_str(),
            other => panic!("unknown grouping dimension {other}"),
        }
    }
}

fn dimension_levels(dimension: &str) -> [&'static str; 2] {
    match dimension {
        "support" => ["yes", "no"],
        _ => ["high", "low"],
    }
}

/// Share of a grouping level's cells showing entrainment / disentrainment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProportionRow {
    pub dimension: String,
    pub level: String,
    pub condition: Condition,
    pub p_plus: f64,
    pub p_minus: f64,
    pub n_cells: usize,
}

/// Aggregate sign cells over each grouping dimension and level: the
/// proportion of a level's (da, set, measure) cells signed '+' and '-'.
/// Cells whose label has no grouping entry are skipped.
pub fn proportion_table(
    cells: &[SignCell],
    label_groupings: &BTreeMap<String, LabelGrouping>,
) -> Vec<ProportionRow> {
    let mut conditions: Vec<Condition> = cells.iter().map(|c| c.condition).collect();
    conditions.sort();
    conditions.dedup();
    let mut rows = Vec::new();
    for dimension in DIMENSIONS {
        for level in dimension_levels(dimension) {
            for &condition in &conditions {
                let selected: Vec<&SignCell> = cells
                    .iter()
                    .filter(|c| {
                        c.condition == condition
                            && label_groupings
                                .get(&c.da_label)
                                .is_some_and(|g| g.level_str(dimension) == level)
                    })
                    .collect();
                let n = selected.len();
                let count = |sign: char| selected.iter().filter(|c| c.sign == sign).count();
                let (p_plus, p_minus) = if n == 0 {
                    (0.0, 0.0)
                } else {
                    (count('+') as f64 / n as f64, count('-') as f64 / n as f64)
                };
                rows.push(ProportionRow {
                    dimension: dimension.to_string(),
                    level: level.to_string(),
                    condition,
                    p_plus,
                    p_minus,
                    n_cells: n,
                });
            }
        }
    }
    rows
}

/// Result of a stratified permutation contrast between two grouping levels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupTestResult {
    pub mean_a: f64,
    pub mean_b: f64,
    pub observed_diff: f64,
    pub p: f64,
    pub n_a: usize,
    pub n_b: usize,
    /// Observations dropped because their speaker stratum carried one level.
    pub n_excluded: usize,
}

/// Permutation test for a difference in mean `deltas` between two levels,
/// permuting level labels within speaker strata. Strata containing a single
/// level are excluded. p = (1 + #{|perm diff| ≥ |observed diff|}) / (n_perm + 1).
pub fn permutation_group_test(
    deltas: &[f64],
    in_level_a: &[bool],
    strata: &[String],
    n_perm: usize,
    seed: u64,
) -> Result<GroupTestResult> {
    if n_perm == 0 {
        return Err(Error::NoPermutations);
    }
    if deltas.len() != in_level_a.len() || deltas.len() != strata.len() {
        return Err(Error::DegenerateSamples);
    }
    let mut by_stratum: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, s) in strata.iter().enumerate() {
        by_stratum.entry(s.as_str()).or_default().push(i);
    }
    let mut kept: Vec<Vec<usize>> = Vec::new();
    let mut n_excluded = 0;
    for (_, idx) in by_stratum {
        let has_a = idx.iter().any(|&i| in_level_a[i]);
        let has_b = idx.iter().any(|&i| !in_level_a[i]);
        if has_a && has_b {
            kept.push(idx);
        } else {
            n_excluded += idx.len();
        }
    }
    let flat: Vec<usize> = kept.iter().flatten().copied().collect();
    let n_a = flat.iter().filter(|&&i| in_level_a[i]).count();
    let n_b = flat.len() - n_a;
    if n_a < 2 || n_b < 2 {
        return Err(Error::DegenerateSamples);
    }

    let diff_of = |labels: &dyn Fn(usize) -> bool| -> (f64, f64, f64) {
        let (mut sum_a, mut sum_b, mut cnt_a, mut cnt_b) = (0.0, 0.0, 0usize, 0usize);
        for &i in &flat {
            if labels(i) {
                sum_a += deltas[i];
                cnt_a += 1;
            } else {
                sum_b += deltas[i];
                cnt_b += 1;
            }
        }
        let ma = sum_a / cnt_a.max(1) as f64;
        let mb = sum_b / cnt_b.max(1) as f64;
        (ma, mb, ma - mb)
    };
    let (mean_a, mean_b, observed_diff) = diff_of(&|i| in_level_a[i]);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut permuted: Vec<bool> = in_level_a.to_vec();
    let mut at_least = 0usize;
    for _ in 0..n_perm {
        for idx in &kept {
            // Shuffle this stratum's labels among its own positions.
            let mut labels: Vec<bool> = idx.iter().map(|&i| permuted[i]).collect();
            labels.shuffle(&mut rng);
            for (&i, &l) in idx.iter().zip(&labels) {
                permuted[i] = l;
            }
        }
        let (_, _, diff) = diff_of(&|i| permuted[i]);
        if diff.abs() >= observed_diff.abs() - 1e-12 {
            at_least += 1;
        }
    }
    Ok(GroupTestResult {
        mean_a,
        mean_b,
        observed_diff,
        p: (1 + at_least) as f64 / (n_perm + 1) as f64,
        n_a,
        n_b,
        n_excluded,
    })
}
