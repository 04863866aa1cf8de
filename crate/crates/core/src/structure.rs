//! Prosodic structure detection: syllable nuclei from band-passed energy,
//! and bootstrapped nearest-centroid classification of phrase boundaries
//! (at right-edge word boundaries) and pitch accents (at stressed-syllable
//! nuclei).

use crate::error::{Error, Result};
use crate::signal::{AudioBuffer, SampledTrack};
use crate::stylize::{fit_accent_poly, fit_register, range_normalize, RegisterParams};

/// One aligned word on a speaker channel.
#[derive(Debug, Clone, PartialEq)]
pub struct WordSegment {
    pub start: f64,
    pub end: f64,
    pub word: String,
    /// Hand-annotated stressed-syllable nucleus time, if the alignment has one.
    pub stress_nucleus: Option<f64>,
}

/// Full detected structure of one speaker channel.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ProsodicStructure {
    pub nuclei: Vec<f64>,
    pub phrase_boundaries: Vec<f64>,
    pub accents: Vec<f64>,
}

/// Syllable nucleus detection parameters.
#[derive(Debug, Clone, Copy)]
pub struct NucleiConfig {
    pub band_low_hz: f64,
    pub band_high_hz: f64,
    /// Analysis window w_a.
    pub analysis_window_s: f64,
    /// Co-centered reference window w_r.
    pub reference_window_s: f64,
    pub step_s: f64,
    /// Required analysis/reference energy ratio.
    pub energy_factor: f64,
    /// Required fraction of the recording's maximum analysis energy.
    pub max_fraction: f64,
    /// Minimum distance between emitted nuclei.
    pub min_gap_s: f64,
}

impl Default for NucleiConfig {
    fn default() -> Self {
        NucleiConfig {
            band_low_hz: 200.0,
            band_high_hz: 3000.0,
            analysis_window_s: 0.05,
            reference_window_s: 0.2,
            step_s: 0.05,
            energy_factor: 1.1,
            max_fraction: 0.05,
            min_gap_s: 0.1,
        }
    }
}

/// Second-order section with normalized coefficients.
struct Biquad {
    b0: f64,
    b1: f64,
    b2: f64,
    a1: f64,
    a2: f64,
}

impl Biquad {
    fn highpass(freq: f64, fs: f64) -> Biquad {
        let w = 2.0 * std::f64::consts::PI * freq / fs;
        let q = std::f64::consts::FRAC_1_SQRT_2;
        let alpha = w.sin() / (2.0 * q);
        let c = w.cos();
        let a0 = 1.0 + alpha;
        Biquad {
            b0: (1.0 + c) / 2.0 / a0,
            b1: -(1.0 + c) / a0,
            b2: (1.0 + c) / 2.0 / a0,
            a1: -2.0 * c / a0,
            a2: (1.0 - alpha) / a0,
        }
    }

    fn lowpass(freq: f64, fs: f64) -> Biquad {
        let w = 2.0 * std::f64::consts::PI * freq / fs;
        let q = std::f64::consts::FRAC_1_SQRT_2;
        let alpha = w.sin() / (2.0 * q);
        let c = w.cos();
        let a0 = 1.0 + alpha;
        Biquad {
            b0: (1.0 - c) / 2.0 / a0,
            b1: (1.0 - c) / a0,
            b2: (1.0 - c) / 2.0 / a0,
            a1: -2.0 * c / a0,
            a2: (1.0 - alpha) / a0,
        }
    }

    fn run(&self, x: &[f64]) -> Vec<f64> {
        let mut y = Vec::with_capacity(x.len());
        let (mut x1, mut x2, mut y1, mut y2) = (0.0, 0.0, 0.0, 0.0);
        for &xi in x {
            let yi = self.b0 * xi + self.b1 * x1 + self.b2 * x2 - self.a1 * y1 - self.a2 * y2;
            x2 = x1;
            x1 = xi;
            y2 = y1;
            y1 = yi;
            y.push(yi);
        }
        y
    }
}

/// Band-pass the signal with cascaded second-order high- and low-pass
/// Butterworth sections.
pub fn band_pass(audio: &AudioBuffer, low_hz: f64, high_hz: f64) -> AudioBuffer {
    let fs = audio.sample_rate as f64;
    let hp = Biquad::highpass(low_hz, fs);
    let lp = Biquad::lowpass(high_hz.min(fs * 0.45), fs);
    AudioBuffer {
        samples: lp.run(&hp.run(&audio.samples)),
        sample_rate: audio.sample_rate,
    }
}

/// RMS over a window of `win_s` seconds centered at `center`, zero-padded
/// beyond the signal edges.
fn windowed_rms(samples: &[f64], fs: f64, center: f64, win_s: f64) -> f64 {
    let half = win_s / 2.0;
    let i0 = ((center - half) * fs).round() as i64;
    let i1 = ((center + half) * fs).round() as i64;
    let n = (i1 - i0).max(1) as f64;
    let mut acc = 0.0;
    for i in i0.max(0)..i1.min(samples.len() as i64) {
        let v = samples[i as usize];
        acc += v * v;
    }
    (acc / n).sqrt()
}

/// Detect syllable nuclei: local maxima of short-window band-passed energy
/// that dominate a longer co-centered reference window by `energy_factor`
/// and exceed `max_fraction` of the recording's maximum, thinned to a
/// minimum gap (loudest first) with parabolic time refinement.
pub fn detect_syllable_nuclei(audio: &AudioBuffer, cfg: &NucleiConfig) -> Vec<f64> {
    if audio.samples.is_empty() {
        return Vec::new();
    }
    let filtered = band_pass(audio, cfg.band_low_hz, cfg.band_high_hz);
    let fs = filtered.sample_rate as f64;
    let duration = filtered.duration();
    let n_steps = (duration / cfg.step_s).floor() as usize + 1;
    let centers: Vec<f64> = (0..n_steps).map(|k| k as f64 * cfg.step_s).collect();
    let analysis: Vec<f64> = centers
        .iter()
        .map(|&t| windowed_rms(&filtered.samples, fs, t, cfg.analysis_window_s))
        .collect();
    let reference: Vec<f64> = centers
        .iter()
        .map(|&t| windowed_rms(&filtered.samples, fs, t, cfg.reference_window_s))
        .collect();
    let global_max = analysis.iter().cloned().fold(0.0, f64::max);
    if global_max <= 0.0 {
        return Vec::new();
    }

    let mut candidates: Vec<(f64, f64)> = Vec::new(); // (energy, time)
    for k in 1..analysis.len().saturating_sub(1) {
        let e = analysis[k];
        if e <= analysis[k - 1] || e <= analysis[k + 1] {
            continue;
        }
        if e < cfg.energy_factor * reference[k] || e < cfg.max_fraction * global_max {
            continue;
        }
        // Parabolic refinement of the peak time.
        let denom = analysis[k - 1] - 2.0 * e + analysis[k + 1];
        let delta = if denom.abs() < 1e-12 {
            0.0
        } else {
            (0.5 * (analysis[k - 1] - analysis[k + 1]) / denom).clamp(-0.5, 0.5)
        };
        candidates.push((e, centers[k] + delta * cfg.step_s));
    }
    // Loudest-first thinning to the minimum gap.
    candidates.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap()
            .then(a.1.partial_cmp(&b.1).unwrap())
    });
    let mut accepted: Vec<f64> = Vec::new();
    for (_, t) in candidates {
        if accepted.iter().all(|&a| (a - t).abs() >= cfg.min_gap_s) {
            accepted.push(t);
        }
    }
    accepted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    accepted
}

/// Bootstrapped nearest-centroid classifier: class centroids plus
/// feature weights derived from the initialization sets' separation.
#[derive(Debug, Clone, PartialEq)]
pub struct CentroidModel {
    pub centroid_pos: Vec<f64>,
    pub centroid_neg: Vec<f64>,
    /// Non-negative, sums to 1.
    pub weights: Vec<f64>,
    pub feature_names: Vec<String>,
}

impl CentroidModel {
    /// Fit centroids and weights from labeled initialization vectors.
    /// Weight per feature = |mean_pos − mean_neg| / pooled sd, normalized
    /// to sum 1 (uniform if all separations vanish).
    fn bootstrap(
        pos: &[Vec<f64>],
        neg: &[Vec<f64>],
        feature_names: &[&str],
    ) -> Result<CentroidModel> {
        if pos.is_empty() || neg.is_empty() {
            return Err(Error::CannotBootstrap);
        }
        let dim = feature_names.len();
        let mean_of = |rows: &[Vec<f64>], j: usize| -> f64 {
            rows.iter().map(|r| r[j]).sum::<f64>() / rows.len() as f64
        };
        let var_of = |rows: &[Vec<f64>], j: usize, m: f64| -> f64 {
            if rows.len() < 2 {
                0.0
            } else {
                rows.iter().map(|r| (r[j] - m) * (r[j] - m)).sum::<f64>() / (rows.len() - 1) as f64
            }
        };
        let mut centroid_pos = Vec::with_capacity(dim);
        let mut centroid_neg = Vec::with_capacity(dim);
        let mut weights = Vec::with_capacity(dim);
        for j in 0..dim {
            let mp = mean_of(pos, j);
            let mn = mean_of(neg, j);
            let vp = var_of(pos, j, mp);
            let vn = var_of(neg, j, mn);
            let df = (pos.len() + neg.len()).saturating_sub(2).max(1) as f64;
            let pooled = (((pos.len() - 1) as f64 * vp + (neg.len() - 1) as f64 * vn) / df).sqrt();
            centroid_pos.push(mp);
            centroid_neg.push(mn);
            weights.push(if pooled > 0.0 {
                (mp - mn).abs() / pooled
            } else {
                0.0
            });
        }
        let total: f64 = weights.iter().sum();
        if total > 0.0 {
            for w in &mut weights {
                *w /= total;
            }
        } else {
            weights = vec![1.0 / dim as f64; dim];
        }
        Ok(CentroidModel {
            centroid_pos,
            centroid_neg,
            weights,
            feature_names: feature_names.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn weighted_dist(&self, x: &[f64], centroid: &[f64]) -> f64 {
        x.iter()
            .zip(centroid)
            .zip(&self.weights)
            .map(|((xi, ci), wi)| wi * (xi - ci) * (xi - ci))
            .sum::<f64>()
            .sqrt()
    }

    /// Positive-class membership plus a score in [0, 1]: the relative
    /// distance to the positive centroid (0 = right on it).
    pub fn classify(&self, x: &[f64]) -> (bool, f64) {
        let dp = self.weighted_dist(x, &self.centroid_pos);
        let dn = self.weighted_dist(x, &self.centroid_neg);
        let score = if dp + dn > 0.0 { dp / (dp + dn) } else { 0.5 };
        (dp < dn, score)
    }
}

/// Boundary/accent detection parameters.
#[derive(Debug, Clone, Copy)]
pub struct StructureConfig {
    /// Inter-word gap that counts as a pause.
    pub pause_gap_s: f64,
    /// Register-fit window on each side of a candidate boundary.
    pub boundary_context_s: f64,
    /// Negative-boundary initialization vicinity around pauses.
    pub pause_vicinity_s: f64,
    /// Minimum phrase length.
    pub min_phrase_s: f64,
    /// Word duration above which its accent candidate initializes positive.
    pub t_accent_s: f64,
    /// Word duration below which its accent candidate initializes negative.
    pub t_no_accent_s: f64,
    /// Pitch-accent stylization window.
    pub accent_window_s: f64,
    pub register: RegisterParams,
}

impl Default for StructureConfig {
    fn default() -> Self {
        StructureConfig {
            pause_gap_s: 0.2,
            boundary_context_s: 0.5,
            pause_vicinity_s: 1.0,
            min_phrase_s: 1.0,
            t_accent_s: 0.5,
            t_no_accent_s: 0.1,
            accent_window_s: 0.3,
            register: RegisterParams::default(),
        }
    }
}

/// Pause intervals (start, end) between consecutive words of a channel.
pub fn pauses(words: &[WordSegment], gap_s: f64) -> Vec<(f64, f64)> {
    words
        .windows(2)
        .filter(|w| w[1].start - w[0].end > gap_s)
        .map(|w| (w[0].end, w[1].start))
        .collect()
}

const BOUNDARY_FEATURES: [&str; 3] = ["midline_rmsd", "midline_reset", "pre_gap_z"];

/// Midline discontinuity features around time `b`: the RMSD between the
/// pre- and post-context midlines over the union window, and the jump from
/// the pre-midline's end to the post-midline's start.
fn boundary_register_features(f0: &SampledTrack, b: f64, cfg: &StructureConfig) -> (f64, f64) {
    let t_start = f0.t0;
    let t_end = f0.t0 + f0.duration();
    let pre_w = ((b - cfg.boundary_context_s).max(t_start), b);
    let post_w = (b, (b + cfg.boundary_context_s).min(t_end));
    let pre = fit_register(f0, pre_w, cfg.register);
    let post = fit_register(f0, post_w, cfg.register);
    let n = 101;
    let (lo, hi) = (pre_w.0, post_w.1);
    let mut acc = 0.0;
    for j in 0..n {
        let t = lo + (hi - lo) * j as f64 / (n - 1) as f64;
        let d = pre.mid_at(t) - post.mid_at(t);
        acc += d * d;
    }
    let rmsd = (acc / n as f64).sqrt();
    let reset = (post.mid_at(post_w.0) - pre.mid_at(pre_w.1)).abs();
    (rmsd, reset)
}

/// z-scores with mean/sd over the defined entries; undefined entries → 0.
fn z_scores(values: &[Option<f64>]) -> Vec<f64> {
    let defined: Vec<f64> = values.iter().flatten().copied().collect();
    if defined.is_empty() {
        return vec![0.0; values.len()];
    }
    let mean = defined.iter().sum::<f64>() / defined.len() as f64;
    let var = defined.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / defined.len() as f64;
    let sd = var.sqrt();
    values
        .iter()
        .map(|v| match v {
            Some(v) if sd > 0.0 => (v - mean) / sd,
            _ => 0.0,
        })
        .collect()
}

/// Detect phrase boundaries on one speaker channel.
///
/// Candidates are the right edges of all words. Positives are initialized
/// from pause-preceding and channel-final edges, negatives from edges in
/// the vicinity of pauses but not adjacent to one; the rest are classified
/// by a weighted nearest-centroid model over register-discontinuity and
/// pre-boundary nucleus-gap features. The minimum phrase length is enforced
/// by keeping, among conflicting boundaries, those with the best (lowest)
/// positive-class score; initialization positives score 0.
pub fn detect_phrase_boundaries(
    words: &[WordSegment],
    f0: &SampledTrack,
    nuclei: &[f64],
    cfg: &StructureConfig,
) -> Result<(Vec<f64>, CentroidModel)> {
    if words.len() < 2 {
        return Err(Error::CannotBootstrap);
    }
    let pause_list = pauses(words, cfg.pause_gap_s);
    if pause_list.is_empty() {
        return Err(Error::CannotBootstrap);
    }
    let candidates: Vec<f64> = words.iter().map(|w| w.end).collect();

    // Pre-boundary nucleus gap: the distance between the last two nuclei at
    // or before the candidate (a final-lengthening cue).
    let raw_gaps: Vec<Option<f64>> = candidates
        .iter()
        .map(|&b| {
            let before: Vec<f64> = nuclei.iter().copied().filter(|&t| t <= b + 1e-9).collect();
            if before.len() >= 2 {
                Some(before[before.len() - 1] - before[before.len() - 2])
            } else {
                None
            }
        })
        .collect();
    let gap_z = z_scores(&raw_gaps);
    let vectors: Vec<Vec<f64>> = candidates
        .iter()
        .zip(&gap_z)
        .map(|(&b, &z)| {
            let (rmsd, reset) = boundary_register_features(f0, b, cfg);
            vec![rmsd, reset, z]
        })
        .collect();

    let is_pause_adjacent: Vec<bool> = candidates
        .iter()
        .map(|&b| pause_list.iter().any(|&(s, _)| (b - s).abs() < 1e-9))
        .collect();
    let near_pause = |b: f64| {
        pause_list.iter().any(|&(s, e)| {
            let d = if b < s {
                s - b
            } else if b > e {
                b - e
            } else {
                0.0
            };
            d <= cfg.pause_vicinity_s
        })
    };
    let n = candidates.len();
    let mut pos_init = vec![false; n];
    let mut neg_init = vec![false; n];
    for i in 0..n {
        if is_pause_adjacent[i] || i == n - 1 {
            pos_init[i] = true;
        } else if near_pause(candidates[i]) {
            neg_init[i] = true;
        }
    }
    let pos_vecs: Vec<Vec<f64>> = (0..n)
        .filter(|&i| pos_init[i])
        .map(|i| vectors[i].clone())
        .collect();
    let neg_vecs: Vec<Vec<f64>> = (0..n)
        .filter(|&i| neg_init[i])
        .map(|i| vectors[i].clone())
        .collect();
    let model = CentroidModel::bootstrap(&pos_vecs, &neg_vecs, &BOUNDARY_FEATURES)?;

    // Score every boundary candidate: initialization positives are kept at
    // score 0, negatives are dropped, the rest classified.
    let mut scored: Vec<(f64, f64)> = Vec::new(); // (score, time)
    for i in 0..n {
        if pos_init[i] {
            scored.push((0.0, candidates[i]));
        } else if !neg_init[i] {
            let (is_pos, score) = model.classify(&vectors[i]);
            if is_pos {
                scored.push((score, candidates[i]));
            }
        }
    }
    // Enforce the minimum phrase length, best scores first.
    scored.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap()
            .then(a.1.partial_cmp(&b.1).unwrap())
    });
    let mut accepted: Vec<f64> = Vec::new();
    for (_, t) in scored {
        if accepted.iter().all(|&a| (a - t).abs() >= cfg.min_phrase_s) {
            accepted.push(t);
        }
    }
    accepted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok((accepted, model))
}

const ACCENT_FEATURES: [&str; 5] = ["s0", "s1", "s2", "s3", "en_peak"];

/// One word's accent candidate: the detected nucleus nearest the word's
/// stress mark, or its loudest nucleus without one.
fn accent_candidate(word: &WordSegment, nuclei: &[f64], energy: &SampledTrack) -> Option<f64> {
    let inside: Vec<f64> = nuclei
        .iter()
        .copied()
        .filter(|&t| t >= word.start && t <= word.end)
        .collect();
    if inside.is_empty() {
        return None;
    }
    match word.stress_nucleus {
        Some(mark) => inside
            .iter()
            .copied()
            .min_by(|a, b| (a - mark).abs().partial_cmp(&(b - mark).abs()).unwrap()),
        None => inside.iter().copied().max_by(|&a, &b| {
            let ea = energy_at(energy, a);
            let eb = energy_at(energy, b);
            ea.partial_cmp(&eb).unwrap()
        }),
    }
}

fn energy_at(energy: &SampledTrack, t: f64) -> f64 {
    if energy.is_empty() {
        return 0.0;
    }
    let i = ((t - energy.t0) * energy.sample_rate).round() as i64;
    let i = i.clamp(0, energy.len() as i64 - 1) as usize;
    energy.values[i]
}

/// Local pitch-shape and energy features around one nucleus: the cubic
/// coefficients of the locally range-normalized f0 and the energy peak,
/// all over the accent window clipped to the channel extent.
fn accent_feature_vector(
    f0: &SampledTrack,
    energy: &SampledTrack,
    nucleus: f64,
    cfg: &StructureConfig,
) -> Option<Vec<f64>> {
    let t_start = f0.t0;
    let t_end = f0.t0 + f0.duration();
    let half = cfg.accent_window_s / 2.0;
    let win = ((nucleus - half).max(t_start), (nucleus + half).min(t_end));
    let local = fit_register(f0, win, cfg.register);
    let norm = range_normalize(&f0.slice(win.0, win.1), &local);
    let poly = fit_accent_poly(&norm, nucleus, cfg.accent_window_s, win).ok()?;
    let en = energy.index_range(win.0, win.1);
    let en_peak = energy.values[en]
        .iter()
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    if !en_peak.is_finite() {
        return None;
    }
    Some(vec![poly[0], poly[1], poly[2], poly[3], en_peak])
}

/// Detect pitch-accented syllables on one speaker channel.
///
/// Per word the stressed-syllable nucleus (or loudest detected nucleus)
/// becomes a candidate. Candidates from words longer than `t_accent_s`
/// initialize positive, those from words shorter than `t_no_accent_s`
/// negative; the rest are classified by a weighted nearest-centroid model
/// over local pitch-shape and energy features.
pub fn detect_pitch_accents(
    words: &[WordSegment],
    f0: &SampledTrack,
    energy: &SampledTrack,
    nuclei: &[f64],
    cfg: &StructureConfig,
) -> Result<(Vec<f64>, CentroidModel)> {
    struct Candidate {
        nucleus: f64,
        vector: Vec<f64>,
        init: Option<bool>,
    }
    let mut candidates: Vec<Candidate> = Vec::new();
    for word in words {
        let Some(nucleus) = accent_candidate(word, nuclei, energy) else {
            continue;
        };
        let Some(vector) = accent_feature_vector(f0, energy, nucleus, cfg) else {
            continue;
        };
        let duration = word.end - word.start;
        let init = if duration > cfg.t_accent_s {
            Some(true)
        } else if duration < cfg.t_no_accent_s {
            Some(false)
        } else {
            None
        };
        candidates.push(Candidate {
            nucleus,
            vector,
            init,
        });
    }
    let pos: Vec<Vec<f64>> = candidates
        .iter()
        .filter(|c| c.init == Some(true))
        .map(|c| c.vector.clone())
        .collect();
    let neg: Vec<Vec<f64>> = candidates
        .iter()
        .filter(|c| c.init == Some(false))
        .map(|c| c.vector.clone())
        .collect();
    let model = CentroidModel::bootstrap(&pos, &neg, &ACCENT_FEATURES)?;
    let mut accents: Vec<f64> = candidates
        .iter()
        .filter(|c| match c.init {
            Some(is_pos) => is_pos,
            None => model.classify(&c.vector).0,
        })
        .map(|c| c.nucleus)
        .collect();
    accents.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok((accents, model))
}
