//! Synthetic corpus generation with planted prosodic structure and
//! controlled entrainment, so the measurement pipeline can be verified
//! against known ground truth.
//!
//! Two modes: feature mode emits per-segment feature vectors directly from
//! speaker-specific Gaussians with a planted coupling, isolating the
//! entrainment statistics from detector noise; contour mode synthesizes
//! f0 tracks and audio from register lines, accent shapes, and
//! syllable-rate modulation so the full detection + stylization chain runs
//! end to end.

use std::collections::BTreeMap;
use std::path::Path;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::corpus::{self, ChannelKey};
use crate::dialacts::{Condition, DialogActSegment, LABELS};
use crate::entrain::SegmentFeatures;
use crate::error::{Error, Result};
use crate::features::qualified_feature_names;
use crate::signal::{AudioBuffer, SampledTrack, TRACK_RATE};
use crate::structure::WordSegment;

/// Audio sample rate for synthesized channels.
pub const AUDIO_RATE: u32 = 16_000;

const TURN_GAP_S: f64 = 0.6;
const LEAD_IN_S: f64 = 0.5;
const PHRASE_GAP_S: f64 = 0.12;
const TINY_WORD_S: f64 = 0.09;
const FINAL_LENGTHEN: f64 = 1.35;
const ACCENT_JOIN_LEVEL: f64 = 0.3;
const ACCENT_CROSSFADE_S: f64 = 0.03;
const TWO_SYL_ACCENT_P: f64 = 0.35;
const MIN_RANGE_ST: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SynthMode {
    #[default]
    Feature,
    Contour,
}

/// Per-dialog condition assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ConditionPlan {
    #[default]
    Cooperative,
    Competitive,
    /// Even dialogs cooperative, odd dialogs competitive.
    Alternate,
}

impl ConditionPlan {
    fn condition_for(self, dialog: usize) -> Condition {
        match self {
            ConditionPlan::Cooperative => Condition::Cooperative,
            ConditionPlan::Competitive => Condition::Competitive,
            ConditionPlan::Alternate => {
                if dialog % 2 == 0 {
                    Condition::Cooperative
                } else {
                    Condition::Competitive
                }
            }
        }
    }
}

/// A synthesis plan: corpus shape, dialog-act mix, and per-label coupling
/// strength ρ ∈ [−1, 1]. ρ > 0 plants entrainment (a speaker reuses the
/// partner's most recent same-label realization plus small noise with
/// probability ρ); ρ < 0 plants disentrainment (the realization is pushed
/// away from the partner's); ρ = 0 leaves segments independent.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SynthScenario {
    pub mode: SynthMode,
    pub n_dialogs: usize,
    pub n_segments_per_dialog: usize,
    /// Label → weight; normalized internally, must be over the inventory.
    pub da_distribution: BTreeMap<String, f64>,
    /// Label → ρ.
    pub coupling: BTreeMap<String, f64>,
    pub noise_sd: f64,
    pub speaker_sd: f64,
    pub copy_sd: f64,
    pub disent_gap: f64,
    pub condition: ConditionPlan,
    pub seed: u64,
}

impl Default for SynthScenario {
    fn default() -> Self {
        SynthScenario {
            mode: SynthMode::Feature,
            n_dialogs: 4,
            n_segments_per_dialog: 40,
            da_distribution: uniform_distribution(),
            coupling: BTreeMap::new(),
            noise_sd: 1.0,
            speaker_sd: 0.5,
            copy_sd: 0.2,
            disent_gap: 2.0,
            condition: ConditionPlan::Cooperative,
            seed: 1,
        }
    }
}

/// Uniform weights over the full dialog-act inventory.
pub fn uniform_distribution() -> BTreeMap<String, f64> {
    LABELS
        .iter()
        .map(|l| (l.to_string(), 1.0 / LABELS.len() as f64))
        .collect()
}

impl SynthScenario {
    pub fn validate(&self) -> Result<()> {
        if self.n_dialogs == 0 || self.n_segments_per_dialog == 0 {
            return Err(Error::Config(
                "scenario needs at least one dialog and one segment".to_string(),
            ));
        }
        if self.da_distribution.is_empty() {
            return Err(Error::InvalidDistribution);
        }
        let mut total = 0.0;
        for (label, &w) in &self.da_distribution {
            if !LABELS.contains(&label.as_str()) || !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidDistribution);
            }
            total += w;
        }
        if total <= 0.0 {
            return Err(Error::InvalidDistribution);
        }
        for (label, &rho) in &self.coupling {
            if !LABELS.contains(&label.as_str()) || !rho.is_finite() || !(-1.0..=1.0).contains(&rho)
            {
                return Err(Error::InvalidDistribution);
            }
        }
        Ok(())
    }

    fn normalized_distribution(&self) -> Vec<(String, f64)> {
        let total: f64 = self.da_distribution.values().sum();
        self.da_distribution
            .iter()
            .map(|(l, w)| (l.clone(), w / total))
            .collect()
    }
}

/// Stable per-dialog / per-resample seed derivation (SplitMix64 step).
pub fn mix_seed(seed: u64, k: u64) -> u64 {
    let mut z = seed.wrapping_add(k.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn pick_label(dist: &[(String, f64)], u: f64) -> &str {
    let mut acc = 0.0;
    for (label, w) in dist {
        acc += w;
        if u < acc {
            return label;
        }
    }
    &dist[dist.len() - 1].0
}

/// Ground truth emitted alongside a synthesized corpus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusTruth {
    pub mode: SynthMode,
    pub seed: u64,
    pub coupling: BTreeMap<String, f64>,
    /// Keyed by "{dialog_id}_{speaker}"; empty in feature mode.
    #[serde(default)]
    pub channels: BTreeMap<String, ChannelTruth>,
}

/// Planted structure of one speaker channel, in absolute time.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ChannelTruth {
    /// Phrase-final word end times.
    pub boundaries: Vec<f64>,
    /// Stress-nucleus times of pitch-accented words.
    pub accents: Vec<f64>,
    /// All syllable centers.
    pub nuclei: Vec<f64>,
}

// ---------------------------------------------------------------------------
// Feature mode
// ---------------------------------------------------------------------------

/// Generate per-segment feature vectors with the planted coupling.
pub fn generate_feature_corpus(
    scenario: &SynthScenario,
) -> Result<(Vec<SegmentFeatures>, CorpusTruth)> {
    scenario.validate()?;
    let dist = scenario.normalized_distribution();
    let names = qualified_feature_names();
    let mut rows = Vec::new();
    for d in 0..scenario.n_dialogs {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(scenario.seed, d as u64));
        let dialog_id = format!("d{d:03}");
        let speakers = [format!("{dialog_id}_A"), format!("{dialog_id}_B")];
        let condition = scenario.condition.condition_for(d);
        let spk_noise = Normal::new(0.0, scenario.speaker_sd.max(f64::MIN_POSITIVE)).unwrap();
        let seg_noise = Normal::new(0.0, scenario.noise_sd.max(f64::MIN_POSITIVE)).unwrap();
        let copy_noise = Normal::new(0.0, scenario.copy_sd.max(f64::MIN_POSITIVE)).unwrap();
        let spk_mean: [Vec<f64>; 2] = [
            (0..names.len())
                .map(|_| spk_noise.sample(&mut rng))
                .collect(),
            (0..names.len())
                .map(|_| spk_noise.sample(&mut rng))
                .collect(),
        ];
        let mut last: BTreeMap<(String, usize), Vec<f64>> = BTreeMap::new();
        for i in 0..scenario.n_segments_per_dialog {
            let spk = i % 2;
            let u = rng.random::<f64>();
            let label = pick_label(&dist, u).to_string();
            let mut x: Vec<f64> = (0..names.len())
                .map(|f| spk_mean[spk][f] + seg_noise.sample(&mut rng))
                .collect();
            let rho = scenario.coupling.get(&label).copied().unwrap_or(0.0);
            if let Some(prev) = last.get(&(label.clone(), 1 - spk)) {
                if rho != 0.0 {
                    let uc = rng.random::<f64>();
                    if rho > 0.0 && uc < rho {
                        x = prev
                            .iter()
                            .map(|&p| p + copy_noise.sample(&mut rng))
                            .collect();
                    } else if rho < 0.0 && uc < -rho {
                        x = x
                            .iter()
                            .zip(prev)
                            .map(|(&cand, &p)| {
                                let delta = cand - p;
                                let sign = if delta >= 0.0 { 1.0 } else { -1.0 };
                                p + sign * (delta.abs() + scenario.disent_gap)
                            })
                            .collect();
                    }
                }
            }
            last.insert((label.clone(), spk), x.clone());
            let start = i as f64 * 2.0;
            let segment = DialogActSegment {
                dialog_id: dialog_id.clone(),
                speaker: speakers[spk].clone(),
                label,
                start,
                end: start + 1.5,
                condition,
                index_in_dialog: i,
            };
            let values: BTreeMap<String, f64> =
                names.iter().cloned().zip(x.iter().copied()).collect();
            rows.push(SegmentFeatures { segment, values });
        }
    }
    let truth = CorpusTruth {
        mode: SynthMode::Feature,
        seed: scenario.seed,
        coupling: scenario.coupling.clone(),
        channels: BTreeMap::new(),
    };
    Ok((rows, truth))
}

// ---------------------------------------------------------------------------
// Contour mode
// ---------------------------------------------------------------------------

/// Per-segment contour parameters. Coupling operates on this vector, so an
/// entrained reply reuses the partner's register, accent shape, and
/// syllable rate.
#[derive(Debug, Clone, Copy)]
struct Theta {
    /// [mid intercept st, mid slope st/s, range intercept st,
    ///  range slope st/s, phrase reset st, accent peak, accent tilt,
    ///  amplitude, syllable rate 1/s]
    params: [f64; 9],
    two_phrases: bool,
}

const THETA_RANGES: [(f64, f64); 9] = [
    (8.0, 14.0),
    (-4.0, -1.0),
    (3.0, 6.0),
    (-0.5, 0.5),
    (4.0, 8.0),
    (1.1, 1.5),
    (-0.25, 0.25),
    (0.4, 0.9),
    (4.2, 5.4),
];

impl Theta {
    fn draw(rng: &mut ChaCha8Rng) -> Theta {
        let mut params = [0.0; 9];
        for (i, &(lo, hi)) in THETA_RANGES.iter().enumerate() {
            params[i] = lo + rng.random::<f64>() * (hi - lo);
        }
        let two_phrases = rng.random::<f64>() < 0.3;
        Theta {
            params,
            two_phrases,
        }
    }

    /// Reuse `prev` with small per-parameter noise (entrainment).
    fn copied(prev: &Theta, rng: &mut ChaCha8Rng) -> Theta {
        let mut params = [0.0; 9];
        for (i, &(lo, hi)) in THETA_RANGES.iter().enumerate() {
            let noise = Normal::new(0.0, 0.05 * (hi - lo)).unwrap();
            params[i] = (prev.params[i] + noise.sample(rng)).clamp(lo, hi);
        }
        Theta {
            params,
            two_phrases: prev.two_phrases,
        }
    }

    /// Push every parameter to the range endpoint farthest from `prev`
    /// (disentrainment), with small jitter.
    fn opposed(prev: &Theta, fresh: &Theta, rng: &mut ChaCha8Rng) -> Theta {
        let mut params = [0.0; 9];
        for (i, &(lo, hi)) in THETA_RANGES.iter().enumerate() {
            let far = if prev.params[i] - lo > hi - prev.params[i] {
                lo
            } else {
                hi
            };
            let noise = Normal::new(0.0, 0.05 * (hi - lo)).unwrap();
            params[i] = (far + noise.sample(rng)).clamp(lo, hi);
        }
        Theta {
            params,
            two_phrases: fresh.two_phrases,
        }
    }
}

#[derive(Debug, Clone)]
struct SylPlan {
    start: f64,
    dur: f64,
    accented: bool,
}

#[derive(Debug, Clone)]
struct WordPlan {
    start: f64,
    end: f64,
    word: String,
    /// Index into the word's syllables; None for tiny filler words.
    stressed: Option<usize>,
    accented: bool,
    syllables: Vec<SylPlan>,
}

#[derive(Debug, Clone)]
struct PhrasePlan {
    start: f64,
    end: f64,
    mid0: f64,
    mid_slope: f64,
    rng0: f64,
    rng_slope: f64,
    words: Vec<WordPlan>,
}

#[derive(Debug, Clone)]
struct SegmentPlan {
    start: f64,
    end: f64,
    theta: Theta,
    phrases: Vec<PhrasePlan>,
}

/// Build one word's syllable layout starting at `start`.
fn make_word(
    start: f64,
    n_syl: usize,
    period: f64,
    stressed: Option<usize>,
    accented: bool,
    lengthen_last: bool,
) -> WordPlan {
    let mut syllables = Vec::with_capacity(n_syl);
    let mut t = start;
    for k in 0..n_syl {
        let dur = if lengthen_last && k == n_syl - 1 {
            period * FINAL_LENGTHEN
        } else {
            period
        };
        syllables.push(SylPlan {
            start: t,
            dur,
            accented: accented && stressed == Some(k),
        });
        t += dur;
    }
    WordPlan {
        start,
        end: t,
        word: vec!["da"; n_syl].join("-"),
        stressed,
        accented,
        syllables,
    }
}

fn make_tiny_word(start: f64) -> WordPlan {
    WordPlan {
        start,
        end: start + TINY_WORD_S,
        word: "uh".to_string(),
        stressed: None,
        accented: false,
        syllables: vec![SylPlan {
            start,
            dur: TINY_WORD_S,
            accented: false,
        }],
    }
}

/// Lay out one phrase's words starting at `start`. The phrase always ends
/// in an accented three-syllable word whose last syllable is lengthened.
fn make_phrase(start: f64, mid0: f64, theta: &Theta, rng: &mut ChaCha8Rng) -> PhrasePlan {
    let rate = theta.params[8];
    let period = 1.0 / rate;
    let final_dur = period * (2.0 + FINAL_LENGTHEN);
    let target = 1.05 + rng.random::<f64>() * 0.55;
    let mut words = Vec::new();
    let mut t = start;
    while t - start < target - final_dur {
        let u = rng.random::<f64>();
        let word = if u < 0.60 {
            let accented = rng.random::<f64>() < TWO_SYL_ACCENT_P;
            make_word(t, 2, period, Some(0), accented, false)
        } else if u < 0.85 {
            make_word(t, 3, period, Some(1), true, false)
        } else {
            make_tiny_word(t)
        };
        t = word.end;
        words.push(word);
    }
    let final_word = make_word(t, 3, period, Some(1), true, true);
    t = final_word.end;
    words.push(final_word);
    PhrasePlan {
        start,
        end: t,
        mid0,
        mid_slope: theta.params[1],
        rng0: theta.params[2],
        rng_slope: theta.params[3],
        words,
    }
}

fn make_segment(start: f64, theta: Theta, rng: &mut ChaCha8Rng) -> SegmentPlan {
    let first = make_phrase(start, theta.params[0], &theta, rng);
    let mut phrases = vec![first];
    if theta.two_phrases {
        let prev = &phrases[0];
        let mid_end = prev.mid0 + prev.mid_slope * (prev.end - prev.start);
        // keep the upward reset from overshooting the speaker's register
        let reset = theta.params[4].min(prev.mid0 - mid_end + 2.0);
        let second = make_phrase(prev.end + PHRASE_GAP_S, mid_end + reset, &theta, rng);
        phrases.push(second);
    }
    let end = phrases.last().unwrap().end;
    SegmentPlan {
        start,
        end,
        theta,
        phrases,
    }
}

/// Carrier value in [0, 1]: syllable-rate modulation between the base and
/// top lines, replaced by the planted accent shape over accented syllables
/// (blended in over short crossfades at the syllable edges).
fn modulation(syl: &SylPlan, t: f64, peak: f64, tilt: f64) -> f64 {
    let phase = ((t - syl.start) / syl.dur).clamp(0.0, 1.0);
    let carrier = 0.5 - 0.5 * (2.0 * std::f64::consts::PI * phase).cos();
    if !syl.accented {
        return carrier;
    }
    let u = 2.0 * phase - 1.0;
    let accent = peak + tilt * u - (peak - ACCENT_JOIN_LEVEL) * u * u - tilt * u * u * u;
    let edge = (t - syl.start).min(syl.start + syl.dur - t);
    let w = (edge / ACCENT_CROSSFADE_S).clamp(0.0, 1.0);
    (1.0 - w) * carrier + w * accent
}

/// Semitone value at `t`, or None when `t` falls outside every phrase.
fn st_at(seg: &SegmentPlan, t: f64) -> Option<f64> {
    for phrase in &seg.phrases {
        if t < phrase.start || t >= phrase.end {
            continue;
        }
        let u = t - phrase.start;
        let mid = phrase.mid0 + phrase.mid_slope * u;
        let range = (phrase.rng0 + phrase.rng_slope * u).max(MIN_RANGE_ST);
        let syl = phrase
            .words
            .iter()
            .flat_map(|w| &w.syllables)
            .find(|s| t >= s.start && t < s.start + s.dur)?;
        let g = modulation(syl, t, seg.theta.params[5], seg.theta.params[6]);
        return Some(mid - range / 2.0 + g * range);
    }
    None
}

/// One speaker channel being assembled.
struct ChannelBuild {
    base_hz: f64,
    segments: Vec<SegmentPlan>,
    words: Vec<WordSegment>,
    truth: ChannelTruth,
}

/// An in-memory contour-mode corpus.
pub struct ContourCorpus {
    pub segments: Vec<DialogActSegment>,
    pub words: BTreeMap<ChannelKey, Vec<WordSegment>>,
    pub tracks: BTreeMap<ChannelKey, SampledTrack>,
    pub audio: BTreeMap<ChannelKey, AudioBuffer>,
    pub truth: CorpusTruth,
}

/// Synthesize a contour-mode corpus: per-channel f0 tracks (Hz, unvoiced
/// outside phrases), word tiers with stress nuclei, audio with one
/// harmonic burst per syllable, and the planted-structure ground truth.
pub fn generate_contour_corpus(scenario: &SynthScenario) -> Result<ContourCorpus> {
    scenario.validate()?;
    let dist = scenario.normalized_distribution();
    let mut segments = Vec::new();
    let mut words = BTreeMap::new();
    let mut tracks = BTreeMap::new();
    let mut audio = BTreeMap::new();
    let mut channels_truth = BTreeMap::new();

    for d in 0..scenario.n_dialogs {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(scenario.seed, d as u64));
        let dialog_id = format!("d{d:03}");
        let condition = scenario.condition.condition_for(d);
        let mut builds = [
            ChannelBuild {
                base_hz: 95.0 + rng.random::<f64>() * 30.0,
                segments: Vec::new(),
                words: Vec::new(),
                truth: ChannelTruth::default(),
            },
            ChannelBuild {
                base_hz: 95.0 + rng.random::<f64>() * 30.0,
                segments: Vec::new(),
                words: Vec::new(),
                truth: ChannelTruth::default(),
            },
        ];
        let speaker_names = [format!("{dialog_id}_A"), format!("{dialog_id}_B")];
        let mut last: BTreeMap<(String, usize), Theta> = BTreeMap::new();
        let mut cursor = LEAD_IN_S;
        for i in 0..scenario.n_segments_per_dialog {
            let spk = i % 2;
            let u = rng.random::<f64>();
            let label = pick_label(&dist, u).to_string();
            let fresh = Theta::draw(&mut rng);
            let rho = scenario.coupling.get(&label).copied().unwrap_or(0.0);
            let theta = match last.get(&(label.clone(), 1 - spk)) {
                Some(prev) if rho != 0.0 => {
                    let uc = rng.random::<f64>();
                    if rho > 0.0 && uc < rho {
                        Theta::copied(prev, &mut rng)
                    } else if rho < 0.0 && uc < -rho {
                        Theta::opposed(prev, &fresh, &mut rng)
                    } else {
                        fresh
                    }
                }
                _ => fresh,
            };
            last.insert((label.clone(), spk), theta);
            let plan = make_segment(cursor, theta, &mut rng);
            cursor = plan.end + TURN_GAP_S;
            segments.push(DialogActSegment {
                dialog_id: dialog_id.clone(),
                speaker: speaker_names[spk].clone(),
                label,
                start: plan.start,
                end: plan.end,
                condition,
                index_in_dialog: i,
            });
            let build = &mut builds[spk];
            for phrase in &plan.phrases {
                let last_word = phrase.words.last().unwrap();
                build.truth.boundaries.push(last_word.end);
                for word in &phrase.words {
                    let stress_nucleus = word.stressed.map(|k| {
                        let s = &word.syllables[k];
                        s.start + s.dur / 2.0
                    });
                    if word.accented {
                        build.truth.accents.push(stress_nucleus.unwrap());
                    }
                    for syl in &word.syllables {
                        build.truth.nuclei.push(syl.start + syl.dur / 2.0);
                    }
                    build.words.push(WordSegment {
                        start: word.start,
                        end: word.end,
                        word: word.word.clone(),
                        stress_nucleus,
                    });
                }
            }
            build.segments.push(plan);
        }
        let dialog_end = cursor - TURN_GAP_S + LEAD_IN_S;
        for (spk, build) in builds.into_iter().enumerate() {
            let key: ChannelKey = (dialog_id.clone(), speaker_names[spk].clone());
            let stem = format!("{}_{}", key.0, key.1);
            tracks.insert(key.clone(), render_track(&build, dialog_end));
            audio.insert(key.clone(), render_audio(&build, dialog_end));
            words.insert(key, build.words);
            channels_truth.insert(stem, build.truth);
        }
    }
    Ok(ContourCorpus {
        segments,
        words,
        tracks,
        audio,
        truth: CorpusTruth {
            mode: SynthMode::Contour,
            seed: scenario.seed,
            coupling: scenario.coupling.clone(),
            channels: channels_truth,
        },
    })
}

fn render_track(build: &ChannelBuild, dialog_end: f64) -> SampledTrack {
    let n = (dialog_end * TRACK_RATE).ceil() as usize;
    let mut values = vec![0.0; n];
    let mut valid = vec![false; n];
    for seg in &build.segments {
        let lo = (seg.start * TRACK_RATE).ceil() as usize;
        let hi = ((seg.end * TRACK_RATE).floor() as usize).min(n.saturating_sub(1));
        for k in lo..=hi.min(n - 1) {
            let t = k as f64 / TRACK_RATE;
            if let Some(st) = st_at(seg, t) {
                values[k] = build.base_hz * (st / 12.0).exp2();
                valid[k] = true;
            }
        }
    }
    let mut track = SampledTrack::new(values, TRACK_RATE, 0.0);
    track.valid = valid;
    track
}

fn render_audio(build: &ChannelBuild, dialog_end: f64) -> AudioBuffer {
    let fs = AUDIO_RATE as f64;
    let n = (dialog_end * fs).ceil() as usize;
    let mut samples = vec![0.0; n];
    for seg in &build.segments {
        let amp = seg.theta.params[7];
        for phrase in &seg.phrases {
            for word in &phrase.words {
                for syl in &word.syllables {
                    render_syllable(seg, phrase, syl, build.base_hz, amp, &mut samples);
                }
            }
        }
    }
    AudioBuffer {
        samples,
        sample_rate: AUDIO_RATE,
    }
}

/// Add one Hann-enveloped harmonic burst, phase-continuous across the
/// syllable, f0 following the planted contour.
fn render_syllable(
    seg: &SegmentPlan,
    phrase: &PhrasePlan,
    syl: &SylPlan,
    base_hz: f64,
    amp: f64,
    samples: &mut [f64],
) {
    let fs = AUDIO_RATE as f64;
    let lo = (syl.start * fs).ceil() as usize;
    let hi = (((syl.start + syl.dur) * fs).floor() as usize).min(samples.len() - 1);
    if lo > hi {
        return;
    }
    let mid_t = syl.start + syl.dur / 2.0;
    let f0_mid = {
        let u = mid_t - phrase.start;
        let mid = phrase.mid0 + phrase.mid_slope * u;
        let range = (phrase.rng0 + phrase.rng_slope * u).max(MIN_RANGE_ST);
        let g = modulation(syl, mid_t, seg.theta.params[5], seg.theta.params[6]);
        base_hz * ((mid - range / 2.0 + g * range) / 12.0).exp2()
    };
    let n_harm = ((3200.0 / f0_mid).floor() as usize).clamp(1, 6);
    let harm_norm: f64 = (1..=n_harm).map(|h| 1.0 / h as f64).sum();
    let boost = if syl.accented { 1.25 } else { 1.0 };
    let scale = 0.7 * amp * boost / harm_norm;
    let mut phase = 0.0f64;
    for k in lo..=hi {
        let t = k as f64 / fs;
        let u = t - phrase.start;
        let mid = phrase.mid0 + phrase.mid_slope * u;
        let range = (phrase.rng0 + phrase.rng_slope * u).max(MIN_RANGE_ST);
        let g = modulation(syl, t, seg.theta.params[5], seg.theta.params[6]);
        let f0 = base_hz * ((mid - range / 2.0 + g * range) / 12.0).exp2();
        phase += 2.0 * std::f64::consts::PI * f0 / fs;
        let env = 0.5 - 0.5 * (2.0 * std::f64::consts::PI * (t - syl.start) / syl.dur).cos();
        let mut v = 0.0;
        for h in 1..=n_harm {
            v += (phase * h as f64).sin() / h as f64;
        }
        samples[k] += scale * env * v;
    }
}

// ---------------------------------------------------------------------------
// Writing
// ---------------------------------------------------------------------------

/// Generate the scenario's corpus and write it as a corpus directory,
/// including the `truth.json` ground-truth sidecar.
pub fn write_corpus(dir: &Path, scenario: &SynthScenario) -> Result<()> {
    scenario.validate()?;
    std::fs::create_dir_all(dir)?;
    match scenario.mode {
        SynthMode::Feature => {
            let (rows, truth) = generate_feature_corpus(scenario)?;
            let segments: Vec<DialogActSegment> = rows.iter().map(|r| r.segment.clone()).collect();
            corpus::write_da_tier(&dir.join(corpus::DA_TIER_FILE), &segments)?;
            corpus::write_features_tsv(&dir.join(corpus::FEATURES_FILE), &rows)?;
            write_truth(dir, &truth)
        }
        SynthMode::Contour => {
            let c = generate_contour_corpus(scenario)?;
            corpus::write_da_tier(&dir.join(corpus::DA_TIER_FILE), &c.segments)?;
            corpus::write_word_tier(&dir.join(corpus::WORD_TIER_FILE), &c.words)?;
            std::fs::create_dir_all(dir.join(corpus::TRACKS_DIR))?;
            std::fs::create_dir_all(dir.join(corpus::AUDIO_DIR))?;
            for (key, track) in &c.tracks {
                let stem = format!("{}_{}", key.0, key.1);
                corpus::write_f0_track(
                    &dir.join(corpus::TRACKS_DIR).join(format!("{stem}.f0")),
                    track,
                )?;
            }
            for (key, buf) in &c.audio {
                let stem = format!("{}_{}", key.0, key.1);
                corpus::write_wav(
                    &dir.join(corpus::AUDIO_DIR).join(format!("{stem}.wav")),
                    buf,
                )?;
            }
            write_truth(dir, &c.truth)
        }
    }
}

fn write_truth(dir: &Path, truth: &CorpusTruth) -> Result<()> {
    let mut body = serde_json::to_string_pretty(truth)
        .map_err(|e| Error::Config(format!("truth serialization: {e}")))?;
    body.push('\n');
    std::fs::write(dir.join("truth.json"), body)?;
    Ok(())
}

/// Read a corpus's ground-truth sidecar.
pub fn read_truth(dir: &Path) -> Result<CorpusTruth> {
    let path = dir.join("truth.json");
    if !path.is_file() {
        return Err(Error::MissingInput(path.display().to_string()));
    }
    serde_json::from_str(&std::fs::read_to_string(&path)?)
        .map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}
