//! Entrainment measurement: within-dialog vs across-dialog pairing of
//! same-label dialog acts and the convergence/synchrony distance deltas.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::dialacts::{Condition, DialogActSegment};
use crate::features::FeatureSet;

/// The two entrainment measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Convergence,
    Synchrony,
}

impl Measure {
    pub const ALL: [Measure; 2] = [Measure::Convergence, Measure::Synchrony];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Convergence => "convergence",
            Measure::Synchrony => "synchrony",
        }
    }

    pub fn parse(s: &str) -> Option<Measure> {
        match s {
            "convergence" => Some(Measure::Convergence),
            "synchrony" => Some(Measure::Synchrony),
            _ => None,
        }
    }
}

impl std::fmt::Display for Measure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One dialog act segment together with its feature values, keyed by
/// set-qualified feature name ("GEN.max"). Missing features are absent.
#[derive(Debug, Clone)]
pub struct SegmentFeatures {
    pub segment: DialogActSegment,
    pub values: BTreeMap<String, f64>,
}

/// One distance-delta observation: a target segment paired within and
/// across dialogs on one feature under one measure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntrainmentRecord {
    pub resample: usize,
    pub dialog_id: String,
    pub segment_index: usize,
    pub speaker: String,
    pub da_label: String,
    pub condition: Condition,
    pub feature_set: FeatureSet,
    pub feature: String,
    pub measure: Measure,
    pub d_s: f64,
    pub d_d: f64,
    pub d: f64,
}

/// Pairing bookkeeping for one resample.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub n_targets: usize,
    pub n_within_pairs: usize,
    pub n_across_pairs: usize,
    pub n_complete_pairs: usize,
    pub skipped_no_within: usize,
    pub skipped_no_across: usize,
}

/// Sampled partners for one target segment (indices into the feature table).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentPair {
    pub target: usize,
    pub within: Option<usize>,
    pub across: Option<usize>,
}

/// Convergence-related distance: absolute difference of the paired values.
pub fn convergence_distance(x_a: f64, x_b: f64) -> f64 {
    (x_a - x_b).abs()
}

/// Synchrony-related distance: absolute difference after subtracting each
/// speaker's own mean.
pub fn synchrony_distance(x_a: f64, x_b: f64, mean_a: f64, mean_b: f64) -> f64 {
    ((x_a - mean_a) - (x_b - mean_b)).abs()
}

/// Per-(dialog, speaker, feature) mean and segment count.
pub fn speaker_means(
    features: &[SegmentFeatures],
) -> BTreeMap<(String, String, String), (f64, usize)> {
    let mut acc: BTreeMap<(String, String, String), (f64, usize)> = BTreeMap::new();
    for sf in features {
        for (name, value) in &sf.values {
            let key = (
                sf.segment.dialog_id.clone(),
                sf.segment.speaker.clone(),
                name.clone(),
            );
            let entry = acc.entry(key).or_insert((0.0, 0));
            entry.0 += value;
            entry.1 += 1;
        }
    }
    for (_, entry) in acc.iter_mut() {
        entry.0 /= entry.1 as f64;
    }
    acc
}

/// Dialogs each speaker participates in, derived from the segment table.
fn speaker_dialogs(features: &[SegmentFeatures]) -> BTreeMap<String, BTreeSet<String>> {
    let mut map: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for sf in features {
        map.entry(sf.segment.speaker.clone())
            .or_default()
            .insert(sf.segment.dialog_id.clone());
    }
    map
}

/// Draw, for every target segment, up to one within-dialog partner (an
/// earlier same-label segment by the other speaker in the same dialog) and
/// up to one across-dialog partner (a same-label segment by a speaker who
/// shares no dialog with the target speaker anywhere in the corpus,
/// optionally restricted to the target's condition). One uniform draw is
/// consumed per non-empty candidate set, so the random stream does not
/// depend on the other set's availability.
pub fn sample_pairs(
    features: &[SegmentFeatures],
    condition_matched_across: bool,
    rng: &mut impl Rng,
) -> (Vec<SegmentPair>, PairReport) {
    let dialogs_of = speaker_dialogs(features);
    let unrelated = |a: &str, c: &str| -> bool {
        if a == c {
            return false;
        }
        match (dialogs_of.get(a), dialogs_of.get(c)) {
            (Some(da), Some(dc)) => da.is_disjoint(dc),
            _ => true,
        }
    };

    let mut pairs = Vec::with_capacity(features.len());
    let mut report = PairReport {
        n_targets: features.len(),
        ..Default::default()
    };
    for (ti, target) in features.iter().enumerate() {
        let t = &target.segment;
        let within: Vec<usize> = features
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                let s = &c.segment;
                s.dialog_id == t.dialog_id
                    && s.label == t.label
                    && s.speaker != t.speaker
                    && s.index_in_dialog < t.index_in_dialog
            })
            .map(|(i, _)| i)
            .collect();
        let across: Vec<usize> = features
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                let s = &c.segment;
                s.dialog_id != t.dialog_id
                    && s.label == t.label
                    && unrelated(&t.speaker, &s.speaker)
                    && (!condition_matched_across || s.condition == t.condition)
            })
            .map(|(i, _)| i)
            .collect();

        let within_pick = if within.is_empty() {
            report.skipped_no_within += 1;
            None
        } else {
            report.n_within_pairs += 1;
            Some(within[rng.random_range(0..within.len())])
        };
        let across_pick = if across.is_empty() {
            report.skipped_no_across += 1;
            None
        } else {
            report.n_across_pairs += 1;
            Some(across[rng.random_range(0..across.len())])
        };
        if within_pick.is_some() && across_pick.is_some() {
            report.n_complete_pairs += 1;
        }
        pairs.push(SegmentPair {
            target: ti,
            within: within_pick,
            across: across_pick,
        });
    }
    (pairs, report)
}

/// Compute all entrainment records for one resample. `features` must be
/// sorted by (dialog_id, index_in_dialog) for deterministic sampling.
///
/// A record is emitted per (target, feature, measure) when the feature is
/// present on the target and both partners; synchrony additionally requires
/// each involved speaker to have at least two segments carrying the feature
/// in the respective dialog (otherwise the speaker mean is degenerate).
pub fn compute_entrainment(
    features: &[SegmentFeatures],
    condition_matched_across: bool,
    resample: usize,
    rng: &mut impl Rng,
) -> (Vec<EntrainmentRecord>, PairReport) {
    let (pairs, report) = sample_pairs(features, condition_matched_across, rng);
    let means = speaker_means(features);
    let mean_of = |sf: &SegmentFeatures, name: &str| -> Option<(f64, usize)> {
        means
            .get(&(
                sf.segment.dialog_id.clone(),
                sf.segment.speaker.clone(),
                name.to_string(),
            ))
            .copied()
    };

    let mut records = Vec::new();
    for pair in &pairs {
        let (Some(wi), Some(ai)) = (pair.within, pair.across) else {
            continue;
        };
        let target = &features[pair.target];
        let within = &features[wi];
        let across = &features[ai];
        let t = &target.segment;
        for (name, &x_t) in &target.values {
            let (Some(&x_w), Some(&x_a)) = (within.values.get(name), across.values.get(name))
            else {
                continue;
            };
            let (set_name, feat_name) = name.split_once('.').unwrap_or(("", name.as_str()));
            let Some(set) = FeatureSet::parse(set_name) else {
                continue;
            };
            let base = EntrainmentRecord {
                resample,
                dialog_id: t.dialog_id.clone(),
                segment_index: t.index_in_dialog,
                speaker: t.speaker.clone(),
                da_label: t.label.clone(),
                condition: t.condition,
                feature_set: set,
                feature: feat_name.to_string(),
                measure: Measure::Convergence,
                d_s: convergence_distance(x_t, x_w),
                d_d: convergence_distance(x_t, x_a),
                d: 0.0,
            };
            let mut conv = base.clone();
            conv.d = conv.d_s - conv.d_d;
            records.push(conv);

            let (Some(m_t), Some(m_w), Some(m_a)) = (
                mean_of(target, name),
                mean_of(within, name),
                mean_of(across, name),
            ) else {
                continue;
            };
            if m_t.1 < 2 || m_w.1 < 2 || m_a.1 < 2 {
                continue;
            }
            let d_s = synchrony_distance(x_t, x_w, m_t.0, m_w.0);
            let d_d = synchrony_distance(x_t, x_a, m_t.0, m_a.0);
            let mut sync = base;
            sync.measure = Measure::Synchrony;
            sync.d_s = d_s;
            sync.d_d = d_d;
            sync.d = d_s - d_d;
            records.push(sync);
        }
    }
    (records, report)
}
