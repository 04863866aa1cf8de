//! Dialog-act inventory, fixed grouping dimensions (authority, support),
//! and corpus-derived grouping dimensions (frequency, predictability) via
//! unigram/bigram probability median splits.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The 12-tag dialog-act inventory, in canonical order.
pub const LABELS: [&str; 12] = [
    "AC", "AL", "CH", "CL", "EX", "IN", "QW", "QY", "RE", "RN", "RW", "RY",
];

/// Two-level grouping value used for authority, frequency, predictability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    High,
    Low,
}

impl Level {
    pub fn as_str(self) -> &'static str {
        match self {
            Level::High => "high",
            Level::Low => "low",
        }
    }
}

/// Whether a dialog act supports the interlocutor's communicative goals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Support {
    Yes,
    No,
}

impl Support {
    pub fn as_str(self) -> &'static str {
        match self {
            Support::Yes => "yes",
            Support::No => "no",
        }
    }
}

/// Game condition of a dialog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    Cooperative,
    Competitive,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Cooperative => "cooperative",
            Condition::Competitive => "competitive",
        }
    }

    pub fn parse(s: &str) -> Option<Condition> {
        match s {
            "cooperative" | "coop" => Some(Condition::Cooperative),
            "competitive" | "comp" => Some(Condition::Competitive),
            _ => None,
        }
    }
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One annotated dialog act segment.
#[derive(Debug, Clone, PartialEq)]
pub struct DialogActSegment {
    pub dialog_id: String,
    pub speaker: String,
    pub label: String,
    pub start: f64,
    pub end: f64,
    pub condition: Condition,
    /// Ordinal of this segment within its dialog (time order).
    pub index_in_dialog: usize,
}

/// Epistemic/executive authority of a dialog act (fixed per label).
pub fn authority(label: &str) -> Result<Level> {
    match label {
        "CL" | "EX" | "IN" | "RN" | "RW" | "RY" => Ok(Level::High),
        "AC" | "AL" | "CH" | "QW" | "QY" | "RE" => Ok(Level::Low),
        other => Err(Error::LabelOutsideInventory(other.to_string())),
    }
}

/// Whether a dialog act supports the interlocutor (fixed per label).
pub fn support(label: &str) -> Result<Support> {
    match label {
        "AC" | "AL" | "CL" | "EX" | "RN" | "RW" | "RY" => Ok(Support::Yes),
        "CH" | "IN" | "QW" | "QY" | "RE" => Ok(Support::No),
        other => Err(Error::LabelOutsideInventory(other.to_string())),
    }
}

/// The reference frequency grouping (used with frozen groupings for
/// cross-corpus comparability instead of the corpus-at-hand median split).
pub fn reference_frequency(label: &str) -> Result<Level> {
    match label {
        "AC" | "CH" | "EX" | "QY" | "RE" | "RY" => Ok(Level::High),
        "AL" | "CL" | "IN" | "QW" | "RN" | "RW" => Ok(Level::Low),
        other => Err(Error::LabelOutsideInventory(other.to_string())),
    }
}

/// Unigram and bigram maximum-likelihood probabilities of an annotated
/// corpus. Bigram context is the immediately preceding segment in the same
/// dialog, regardless of speaker; dialog-initial segments have no bigram.
#[derive(Debug, Clone, Default)]
pub struct DaProbs {
    pub unigram: BTreeMap<String, f64>,
    pub bigram: BTreeMap<(String, String), f64>,
}

pub fn compute_da_probs(segments: &[DialogActSegment]) -> DaProbs {
    let mut uni: BTreeMap<String, usize> = BTreeMap::new();
    let mut ctx: BTreeMap<String, usize> = BTreeMap::new();
    let mut big: BTreeMap<(String, String), usize> = BTreeMap::new();
    for (i, seg) in segments.iter().enumerate() {
        *uni.entry(seg.label.clone()).or_default() += 1;
        if let Some(prev) = preceding(segments, i) {
            *ctx.entry(prev.label.clone()).or_default() += 1;
            *big.entry((prev.label.clone(), seg.label.clone()))
                .or_default() += 1;
        }
    }
    let total = segments.len() as f64;
    DaProbs {
        unigram: uni
            .into_iter()
            .map(|(l, c)| (l, c as f64 / total))
            .collect(),
        bigram: big
            .into_iter()
            .map(|((p, l), c)| {
                let denom = ctx[&p] as f64;
                ((p, l), c as f64 / denom)
            })
            .collect(),
    }
}

/// The segment immediately preceding `segments[i]` in the same dialog, if
/// any. Relies on per-dialog `index_in_dialog` ordinals.
fn preceding<'a>(segments: &'a [DialogActSegment], i: usize) -> Option<&'a DialogActSegment> {
    let seg = &segments[i];
    if seg.index_in_dialog == 0 {
        return None;
    }
    let want = seg.index_in_dialog - 1;
    // Annotation files keep dialogs contiguous, so the predecessor is
    // usually adjacent; fall back to a scan if not.
    if i > 0
        && segments[i - 1].dialog_id == seg.dialog_id
        && segments[i - 1].index_in_dialog == want
    {
        return Some(&segments[i - 1]);
    }
    segments
        .iter()
        .find(|s| s.dialog_id == seg.dialog_id && s.index_in_dialog == want)
}

/// One segment's grouping values on all four dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DaGrouping {
    pub authority: Level,
    pub support: Support,
    pub frequency: Level,
    pub predictability: Level,
}

/// Median of `values` (mean of the middle pair when even).
fn split_median(values: &[f64]) -> f64 {
    crate::signal::median(values)
}

/// Per-occurrence grouping assignment.
///
/// Authority and support come from the fixed per-label map. Frequency is
/// a median split over the 12 label unigram probabilities (absent labels
/// count as 0): a label is high iff its probability exceeds the median;
/// ties go low. Predictability is a median split over all occurrence-level
/// bigram probabilities; dialog-initial occurrences carry no bigram and are
/// assigned low. With `frozen` set, frequency instead comes from the fixed
/// reference grouping.
pub fn assign_groupings(
    segments: &[DialogActSegment],
    probs: &DaProbs,
    frozen: bool,
) -> Result<Vec<DaGrouping>> {
    let label_probs: Vec<f64> = LABELS
        .iter()
        .map(|l| probs.unigram.get(*l).copied().unwrap_or(0.0))
        .collect();
    let freq_median = split_median(&label_probs);
    let mut freq_by_label: BTreeMap<&str, Level> = BTreeMap::new();
    for (label, p) in LABELS.iter().zip(&label_probs) {
        let level = if frozen {
            reference_frequency(label)?
        } else if *p > freq_median {
            Level::High
        } else {
            Level::Low
        };
        freq_by_label.insert(label, level);
    }

    let occ_bigrams: Vec<Option<f64>> = (0..segments.len())
        .map(|i| {
            preceding(segments, i)
                .and_then(|prev| {
                    probs
                        .bigram
                        .get(&(prev.label.clone(), segments[i].label.clone()))
                })
                .copied()
        })
        .collect();
    let known: Vec<f64> = occ_bigrams.iter().flatten().copied().collect();
    let pred_median = if known.is_empty() {
        f64::INFINITY
    } else {
        split_median(&known)
    };

    segments
        .iter()
        .zip(&occ_bigrams)
        .map(|(seg, bigram)| {
            let frequency = *freq_by_label
                .get(seg.label.as_str())
                .ok_or_else(|| Error::LabelOutsideInventory(seg.label.clone()))?;
            let predictability = match bigram {
                Some(p) if *p > pred_median => Level::High,
                _ => Level::Low,
            };
            Ok(DaGrouping {
                authority: authority(&seg.label)?,
                support: support(&seg.label)?,
                frequency,
                predictability,
            })
        })
        .collect()
}

/// Label-level predictability: the majority vote over that label's
/// occurrences (ties go low). Used when aggregating sign cells, which are
/// keyed by label, over the occurrence-level predictability dimension.
pub fn label_predictability(
    segments: &[DialogActSegment],
    groupings: &[DaGrouping],
) -> BTreeMap<String, Level> {
    let mut counts: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for (seg, g) in segments.iter().zip(groupings) {
        let entry = counts.entry(seg.label.clone()).or_default();
        match g.predictability {
            Level::High => entry.0 += 1,
            Level::Low => entry.1 += 1,
        }
    }
    counts
        .into_iter()
        .map(|(label, (high, low))| {
            let level = if high > low { Level::High } else { Level::Low };
            (label, level)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(labels: &[&str]) -> Vec<DialogActSegment> {
        labels
            .iter()
            .enumerate()
            .map(|(i, l)| DialogActSegment {
                dialog_id: "d0".into(),
                speaker: if i % 2 == 0 { "A".into() } else { "B".into() },
                label: l.to_string(),
                start: i as f64,
                end: i as f64 + 0.9,
                condition: Condition::Cooperative,
                index_in_dialog: i,
            })
            .collect()
    }

    #[test]
    fn inventory_grouping_rows() {
        let expect: [(&str, Level, Support); 12] = [
            ("AC", Level::Low, Support::Yes),
            ("AL", Level::Low, Support::Yes),
            ("CH", Level::Low, Support::No),
            ("CL", Level::High, Support::Yes),
            ("EX", Level::High, Support::Yes),
            ("IN", Level::High, Support::No),
            ("QW", Level::Low, Support::No),
            ("QY", Level::Low, Support::No),
            ("RE", Level::Low, Support::No),
            ("RN", Level::High, Support::Yes),
            ("RW", Level::High, Support::Yes),
            ("RY", Level::High, Support::Yes),
        ];
        for (label, auth, sup) in expect {
            assert_eq!(authority(label).unwrap(), auth, "{label}");
            assert_eq!(support(label).unwrap(), sup, "{label}");
        }
    }

    #[test]
    fn unknown_label_is_rejected() {
        assert!(matches!(
            authority("XX"),
            Err(Error::LabelOutsideInventory(_))
        ));
        let mut segs = seq(&["EX"]);
        segs[0].label = "ZZ".into();
        let probs = compute_da_probs(&segs);
        assert!(assign_groupings(&segs, &probs, false).is_err());
    }

    #[test]
    fn unigram_and_bigram_counting() {
        let segs = seq(&["EX", "AC", "EX", "QY"]);
        let probs = compute_da_probs(&segs);
        assert_eq!(probs.unigram["EX"], 0.5);
        assert_eq!(probs.unigram["AC"], 0.25);
        assert_eq!(probs.unigram["QY"], 0.25);
        assert_eq!(probs.bigram[&("EX".into(), "AC".into())], 0.5);
        assert_eq!(probs.bigram[&("EX".into(), "QY".into())], 0.5);
        assert_eq!(probs.bigram[&("AC".into(), "EX".into())], 1.0);
    }

    #[test]
    fn single_segment_probs() {
        let segs = seq(&["EX"]);
        let probs = compute_da_probs(&segs);
        assert_eq!(probs.unigram["EX"], 1.0);
        assert!(probs.bigram.is_empty());
    }

    #[test]
    fn probabilities_normalize() {
        let segs = seq(&["EX", "AC", "EX", "QY", "IN", "RY", "EX", "AC"]);
        let probs = compute_da_probs(&segs);
        let total: f64 = probs.unigram.values().sum();
        assert!((total - 1.0).abs() < 1e-12);
        // Each bigram context row sums to 1.
        let mut rows: BTreeMap<&str, f64> = BTreeMap::new();
        for ((prev, _), p) in &probs.bigram {
            *rows.entry(prev.as_str()).or_default() += p;
        }
        for (_, sum) in rows {
            assert!((sum - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn frequency_median_split_hand_oracle() {
        // Engineered label probabilities .30 .20 .10 .10 .10 .05 .05 .04
        // .02 .02 .01 .01 over 100 segments: median = .05, so exactly the
        // five labels above it are high.
        let counts: [(&str, usize); 12] = [
            ("AC", 30),
            ("AL", 20),
            ("CH", 10),
            ("CL", 10),
            ("EX", 10),
            ("IN", 5),
            ("QW", 5),
            ("QY", 4),
            ("RE", 2),
            ("RN", 2),
            ("RW", 1),
            ("RY", 1),
        ];
        let mut labels = Vec::new();
        for (l, c) in counts {
            labels.extend(std::iter::repeat(l).take(c));
        }
        let segs = seq(&labels);
        let probs = compute_da_probs(&segs);
        let groupings = assign_groupings(&segs, &probs, false).unwrap();
        let mut high: Vec<&str> = Vec::new();
        for (seg, g) in segs.iter().zip(&groupings) {
            if g.frequency == Level::High && !high.contains(&seg.label.as_str()) {
                high.push(seg.label.as_str());
            }
        }
        high.sort_unstable();
        assert_eq!(high, ["AC", "AL", "CH", "CL", "EX"]);
    }

    #[test]
    fn dialog_initial_predictability_is_low() {
        // Occurrence bigram probabilities: AC always follows EX (p = 1),
        // QY's followers each occur once (p = 1/3). Occurrence values are
        // [1, 1/2, 1, 1/2, 1/3, 1, 1/3, 1, 1/3, 1]; their median is 3/4.
        let segs = seq(&[
            "EX", "AC", "EX", "AC", "QY", "RE", "QY", "CH", "QY", "RW", "QY",
        ]);
        let probs = compute_da_probs(&segs);
        let groupings = assign_groupings(&segs, &probs, false).unwrap();
        assert_eq!(groupings[0].predictability, Level::Low);
        // P(AC|EX) = 1 > 3/4
        assert_eq!(groupings[1].predictability, Level::High);
        // P(RE|QY) = 1/3 ≤ 3/4
        assert_eq!(groupings[5].predictability, Level::Low);
    }

    #[test]
    fn frozen_groupings_use_reference_frequency() {
        let segs = seq(&["IN", "IN", "IN", "EX"]);
        let probs = compute_da_probs(&segs);
        let groupings = assign_groupings(&segs, &probs, true).unwrap();
        // IN dominates this corpus but is low-frequency in the reference map.
        assert_eq!(groupings[0].frequency, Level::Low);
        assert_eq!(groupings[3].frequency, Level::High);
    }

    #[test]
    fn label_predictability_majority_vote() {
        let segs = seq(&[
            "EX", "AC", "EX", "AC", "QY", "RE", "QY", "CH", "QY", "RW", "QY",
        ]);
        let probs = compute_da_probs(&segs);
        let groupings = assign_groupings(&segs, &probs, false).unwrap();
        let by_label = label_predictability(&segs, &groupings);
        // both AC occurrences are high
        assert_eq!(by_label["AC"], Level::High);
        // QY: three of four occurrences are high
        assert_eq!(by_label["QY"], Level::High);
        // EX: dialog-initial low plus one low occurrence
        assert_eq!(by_label["EX"], Level::Low);
        assert_eq!(by_label["RE"], Level::Low);
    }
}
