//! Per-dialog-act prosodic feature sets: general energy (GEN) and f0 (GF0)
//! statistics, phrase-register features (IP), pitch-accent features (ACC),
//! and rhythm features (RHY).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::signal::{median, SampledTrack};
use crate::stylize::{AccentShape, RegisterStylization};

/// The five feature sets, in canonical table order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FeatureSet {
    #[serde(rename = "GEN")]
    Gen,
    #[serde(rename = "GF0")]
    Gf0,
    #[serde(rename = "IP")]
    Ip,
    #[serde(rename = "ACC")]
    Acc,
    #[serde(rename = "RHY")]
    Rhy,
}

pub const GEN_NAMES: [&str; 3] = ["max", "med", "sd"];
pub const GF0_NAMES: [&str; 3] = ["max", "med", "sd"];
pub const IP_NAMES: [&str; 8] = [
    "rng.c0.F", "rng.c0.L", "rng.c1.F", "rng.c1.L", "lev.c0.F", "lev.c0.L", "lev.c1.F", "lev.c1.L",
];
pub const ACC_NAMES: [&str; 20] = [
    "c0.F",
    "c0.L",
    "c1.F",
    "c1.L",
    "c2.F",
    "c2.L",
    "c3.F",
    "c3.L",
    "rng.c0.F",
    "rng.c0.L",
    "rng.c1.F",
    "rng.c1.L",
    "lev.c0.F",
    "lev.c0.L",
    "lev.c1.F",
    "lev.c1.L",
    "gst.lev.F",
    "gst.lev.L",
    "gst.rng.F",
    "gst.rng.L",
];
pub const RHY_NAMES: [&str; 3] = ["syl.rate", "syl.prop.en", "syl.prop.f0"];

impl FeatureSet {
    pub const ALL: [FeatureSet; 5] = [
        FeatureSet::Gen,
        FeatureSet::Gf0,
        FeatureSet::Ip,
        FeatureSet::Acc,
        FeatureSet::Rhy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FeatureSet::Gen => "GEN",
            FeatureSet::Gf0 => "GF0",
            FeatureSet::Ip => "IP",
            FeatureSet::Acc => "ACC",
            FeatureSet::Rhy => "RHY",
        }
    }

    pub fn parse(s: &str) -> Option<FeatureSet> {
        match s {
            "GEN" => Some(FeatureSet::Gen),
            "GF0" => Some(FeatureSet::Gf0),
            "IP" => Some(FeatureSet::Ip),
            "ACC" => Some(FeatureSet::Acc),
            "RHY" => Some(FeatureSet::Rhy),
            _ => None,
        }
    }

    /// Canonical feature names of this set, in table order.
    pub fn feature_names(self) -> &'static [&'static str] {
        match self {
            FeatureSet::Gen => &GEN_NAMES,
            FeatureSet::Gf0 => &GF0_NAMES,
            FeatureSet::Ip => &IP_NAMES,
            FeatureSet::Acc => &ACC_NAMES,
            FeatureSet::Rhy => &RHY_NAMES,
        }
    }
}

impl std::fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// All set-qualified feature column names ("GEN.max" .. "RHY.syl.prop.f0"),
/// in canonical order.
pub fn qualified_feature_names() -> Vec<String> {
    let mut names = Vec::new();
    for set in FeatureSet::ALL {
        for f in set.feature_names() {
            names.push(format!("{}.{}", set.as_str(), f));
        }
    }
    names
}

/// One feature set's values for one segment. Missing features are simply
/// absent from the map; no entry is ever NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub set: FeatureSet,
    pub entries: BTreeMap<String, f64>,
}

impl FeatureVector {
    pub fn new(set: FeatureSet) -> Self {
        FeatureVector {
            set,
            entries: BTreeMap::new(),
        }
    }

    fn insert(&mut self, name: &str, value: f64) {
        if value.is_finite() {
            self.entries.insert(name.to_string(), value);
        }
    }
}

/// Everything feature assembly needs to know about one dialog act segment:
/// the first/last overlapping phrase registers, the first/last pitch accents
/// inside it, and its syllable nuclei.
#[derive(Debug, Clone, Default)]
pub struct DialogActContext {
    pub first_phrase: Option<RegisterStylization>,
    pub last_phrase: Option<RegisterStylization>,
    pub first_accent: Option<AccentShape>,
    pub last_accent: Option<AccentShape>,
    pub nuclei_in_segment: Vec<f64>,
}

/// Maximum, median, and population standard deviation of the track samples
/// inside `[start, end)`.
pub fn track_stats(track: &SampledTrack, start: f64, end: f64) -> Result<(f64, f64, f64)> {
    let range = track.index_range(start, end);
    let vals = &track.values[range];
    if vals.is_empty() {
        return Err(Error::EmptySegment);
    }
    let max = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let med = median(vals);
    let n = vals.len() as f64;
    let mean = vals.iter().sum::<f64>() / n;
    let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    Ok((max, med, var.sqrt()))
}

fn stats_vector(
    set: FeatureSet,
    track: &SampledTrack,
    start: f64,
    end: f64,
) -> Result<FeatureVector> {
    let (max, med, sd) = track_stats(track, start, end)?;
    let mut v = FeatureVector::new(set);
    v.insert("max", max);
    v.insert("med", med);
    v.insert("sd", sd);
    Ok(v)
}

/// GEN: energy maximum / median / standard deviation over the segment.
pub fn gen_features(energy: &SampledTrack, start: f64, end: f64) -> Result<FeatureVector> {
    stats_vector(FeatureSet::Gen, energy, start, end)
}

/// GF0: f0 maximum / median / standard deviation over the segment.
pub fn gf0_features(f0: &SampledTrack, start: f64, end: f64) -> Result<FeatureVector> {
    stats_vector(FeatureSet::Gf0, f0, start, end)
}

/// IP: range and level line coefficients of the first (.F) and last (.L)
/// phrase overlapping the segment. With no overlapping phrase the vector is
/// empty (features missing).
pub fn ip_features(ctx: &DialogActContext) -> FeatureVector {
    let mut v = FeatureVector::new(FeatureSet::Ip);
    for (reg, suffix) in [(&ctx.first_phrase, "F"), (&ctx.last_phrase, "L")] {
        if let Some(reg) = reg {
            v.insert(&format!("rng.c0.{suffix}"), reg.rng_intercept);
            v.insert(&format!("rng.c1.{suffix}"), reg.rng_slope);
            v.insert(&format!("lev.c0.{suffix}"), reg.mid_intercept);
            v.insert(&format!("lev.c1.{suffix}"), reg.mid_slope);
        }
    }
    v
}

/// ACC: polynomial coefficients, local register lines, and Gestalt
/// deviations of the first (.F) and last (.L) pitch accent in the segment.
pub fn acc_features(ctx: &DialogActContext) -> FeatureVector {
    let mut v = FeatureVector::new(FeatureSet::Acc);
    for (acc, suffix) in [(&ctx.first_accent, "F"), (&ctx.last_accent, "L")] {
        if let Some(acc) = acc {
            for (i, c) in acc.poly.iter().enumerate() {
                v.insert(&format!("c{i}.{suffix}"), *c);
            }
            v.insert(
                &format!("rng.c0.{suffix}"),
                acc.local_register.rng_intercept,
            );
            v.insert(&format!("rng.c1.{suffix}"), acc.local_register.rng_slope);
            v.insert(
                &format!("lev.c0.{suffix}"),
                acc.local_register.mid_intercept,
            );
            v.insert(&format!("lev.c1.{suffix}"), acc.local_register.mid_slope);
            v.insert(&format!("gst.lev.{suffix}"), acc.gestalt_lev_rmsd);
            v.insert(&format!("gst.rng.{suffix}"), acc.gestalt_rng_rmsd);
        }
    }
    v
}

/// Proportion of sub-10 Hz cosine-transform amplitude within ±1 Hz of
/// `rate`. The contour is transformed with an orthonormal type-II DCT;
/// coefficient k maps to frequency k / (2·N·Δt) Hz. The k = 0 coefficient
/// (the mean) is excluded from numerator and denominator; a flat contour
/// (zero denominator) yields 0.
pub fn dct_weight(contour: &SampledTrack, rate: f64) -> f64 {
    dct_weight_with(contour, rate, 1.0, 10.0, false)
}

/// `dct_weight` with configurable band half-width, cutoff, and DC handling.
pub fn dct_weight_with(
    contour: &SampledTrack,
    rate: f64,
    band_hz: f64,
    cutoff_hz: f64,
    include_dc: bool,
) -> f64 {
    let n = contour.values.len();
    if n < 2 {
        return 0.0;
    }
    let nf = n as f64;
    // Excluding DC, the k ≥ 1 coefficients are unchanged by centering, but
    // computing them on the centered signal keeps a flat contour's
    // analytically-zero coefficients from surviving as rounding residue
    // and turning the ratio into noise.
    let mean = contour.values.iter().sum::<f64>() / nf;
    let x: Vec<f64> = if include_dc {
        contour.values.clone()
    } else {
        let spread = contour
            .values
            .iter()
            .map(|v| (v - mean).abs())
            .fold(0.0, f64::max);
        if spread <= 1e-9 * mean.abs().max(1.0) {
            return 0.0;
        }
        contour.values.iter().map(|v| v - mean).collect()
    };
    let dt = 1.0 / contour.sample_rate;
    let (lo, hi) = ((rate - band_hz).max(0.0), rate + band_hz);
    let mut num = 0.0;
    let mut den = 0.0;
    let k_start = if include_dc { 0 } else { 1 };
    for k in k_start..n {
        let freq = k as f64 / (2.0 * nf * dt);
        if freq > cutoff_hz {
            break;
        }
        let kf = k as f64;
        let mut c = 0.0;
        for (i, &v) in x.iter().enumerate() {
            c += v * (std::f64::consts::PI * kf * (i as f64 + 0.5) / nf).cos();
        }
        let alpha = if k == 0 {
            (1.0 / nf).sqrt()
        } else {
            (2.0 / nf).sqrt()
        };
        let amp = (alpha * c).abs();
        den += amp;
        if freq >= lo && freq <= hi {
            num += amp;
        }
    }
    if den <= 0.0 {
        0.0
    } else {
        num / den
    }
}

/// RHY: syllable rate plus the syllable-rate band weights of the energy and
/// f0 contours over the segment.
pub fn rhy_features(
    f0: &SampledTrack,
    energy: &SampledTrack,
    nuclei: &[f64],
    start: f64,
    end: f64,
) -> FeatureVector {
    let mut v = FeatureVector::new(FeatureSet::Rhy);
    let duration = end - start;
    if duration <= 0.0 {
        return v;
    }
    let n_nuclei = nuclei.iter().filter(|&&t| t >= start && t < end).count();
    let rate = n_nuclei as f64 / duration;
    v.insert("syl.rate", rate);
    let en_seg = energy.slice(start, end);
    let f0_seg = f0.slice(start, end);
    v.insert("syl.prop.en", dct_weight(&en_seg, rate));
    v.insert("syl.prop.f0", dct_weight(&f0_seg, rate));
    v
}
