//! f0 and energy track extraction plus the preprocessing chain: pitch
//! tracking by autocorrelation, outlier marking, gap interpolation,
//! Savitzky-Golay smoothing, semitone transform, and windowed RMS energy.
//!
//! All tracks are uniformly sampled at 100 Hz by default; unvoiced, missing,
//! or outlier samples are carried in a validity mask until interpolation
//! bridges them.

use crate::error::{Error, Result};

/// Default track sample rate in Hz.
pub const TRACK_RATE: f64 = 100.0;

/// Uniformly sampled scalar contour (f0 in Hz or semitones, or RMS energy).
#[derive(Debug, Clone, PartialEq)]
pub struct SampledTrack {
    /// Sample values; unit depends on the processing stage.
    pub values: Vec<f64>,
    /// Samples per second.
    pub sample_rate: f64,
    /// Time of the first sample, in seconds.
    pub t0: f64,
    /// `false` marks unvoiced/outlier/missing samples.
    pub valid: Vec<bool>,
}

impl SampledTrack {
    /// New fully-valid track.
    pub fn new(values: Vec<f64>, sample_rate: f64, t0: f64) -> Self {
        let n = values.len();
        SampledTrack {
            values,
            sample_rate,
            t0,
            valid: vec![true; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Time of sample `i` in seconds.
    pub fn time_at(&self, i: usize) -> f64 {
        self.t0 + i as f64 / self.sample_rate
    }

    /// Total covered time span in seconds.
    pub fn duration(&self) -> f64 {
        self.values.len() as f64 / self.sample_rate
    }

    /// Index range of the samples whose time lies in `[start, end)`.
    pub fn index_range(&self, start: f64, end: f64) -> std::ops::Range<usize> {
        let n = self.len();
        if n == 0 || end <= start {
            return 0..0;
        }
        let lo = (start - self.t0) * self.sample_rate;
        let hi = (end - self.t0) * self.sample_rate;
        // First index with time >= start; first index with time >= end.
        let i0 = (lo - 1e-9).ceil().max(0.0) as usize;
        let i1 = (hi - 1e-9).ceil().max(0.0) as usize;
        i0.min(n)..i1.min(n)
    }

    /// Copy of the samples whose time lies in `[start, end)`, as a track.
    pub fn slice(&self, start: f64, end: f64) -> SampledTrack {
        let r = self.index_range(start, end);
        SampledTrack {
            values: self.values[r.clone()].to_vec(),
            sample_rate: self.sample_rate,
            t0: self.time_at(r.start),
            valid: self.valid[r].to_vec(),
        }
    }
}

/// Mono linear-PCM audio normalized to [-1, 1].
#[derive(Debug, Clone)]
pub struct AudioBuffer {
    pub samples: Vec<f64>,
    pub sample_rate: u32,
}

impl AudioBuffer {
    pub fn duration(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }
}

/// Reference value for the semitone transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemitoneBase {
    pub base_hz: f64,
}

/// Percentile by linear interpolation between order statistics
/// (`sorted` ascending, `p` in [0, 100]).
pub fn percentile(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    if sorted.len() == 1 {
        return sorted[0];
    }
    let pos = p / 100.0 * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        let frac = pos - lo as f64;
        sorted[lo] + frac * (sorted[hi] - sorted[lo])
    }
}

/// Median of an unsorted slice (mean of the two middle values when even).
pub fn median(values: &[f64]) -> f64 {
    debug_assert!(!values.is_empty());
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Pitch-tracking parameters for [`extract_f0_autocorr`].
#[derive(Debug, Clone, Copy)]
pub struct F0Params {
    /// Analysis frame length in seconds.
    pub frame_len: f64,
    /// Minimum normalized autocorrelation peak for a frame to count as voiced.
    pub voicing_threshold: f64,
}

impl Default for F0Params {
    fn default() -> Self {
        F0Params {
            frame_len: 0.040,
            voicing_threshold: 0.45,
        }
    }
}

/// Extract f0 by short-time autocorrelation.
///
/// Frames of `params.frame_len` (40 ms default) advance in 10 ms steps, so
/// the output track runs at 100 Hz. Per frame the mean is removed, the
/// autocorrelation is normalized by lag zero and corrected for the
/// rectangular-window taper (division by `1 - lag/N`), and the peak lag in
/// `[fs/f_max, fs/f_min]` is refined by parabolic interpolation. Frames whose
/// corrected peak falls below the voicing threshold, or whose refined
/// frequency leaves `[f_min, f_max]`, are marked invalid. A small octave cost
/// (1% per octave below `f_max`) breaks the near-ties between a period and
/// its multiples that perfectly periodic signals produce.
pub fn extract_f0_autocorr(
    audio: &AudioBuffer,
    f_min: f64,
    f_max: f64,
    params: F0Params,
) -> Result<SampledTrack> {
    if audio.samples.is_empty() {
        return Err(Error::EmptyInput);
    }
    if !(f_min > 0.0) || f_min >= f_max {
        return Err(Error::BadRange);
    }
    let fs = audio.sample_rate as f64;
    let frame_len = (params.frame_len * fs).round() as usize;
    if audio.samples.len() < frame_len || frame_len < 4 {
        return Err(Error::EmptyInput);
    }
    let hop = fs / TRACK_RATE;
    let lag_min = (fs / f_max).ceil() as usize;
    let lag_max = ((fs / f_min).floor() as usize).min(frame_len - 2);
    if lag_min >= lag_max {
        return Err(Error::BadRange);
    }

    let n_frames = (audio.samples.len() - frame_len) as f64 / hop;
    let n_frames = n_frames.floor() as usize + 1;
    let mut values = Vec::with_capacity(n_frames);
    let mut valid = Vec::with_capacity(n_frames);
    let nf = frame_len as f64;

    for k in 0..n_frames {
        let start = (k as f64 * hop).round() as usize;
        let frame = &audio.samples[start..start + frame_len];
        let mean = frame.iter().sum::<f64>() / nf;
        let x: Vec<f64> = frame.iter().map(|v| v - mean).collect();
        let r0: f64 = x.iter().map(|v| v * v).sum();
        if r0 <= f64::MIN_POSITIVE {
            values.push(0.0);
            valid.push(false);
            continue;
        }
        // Taper-corrected normalized autocorrelation over the lag range.
        let mut rho = vec![0.0; lag_max + 2];
        for lag in lag_min..=lag_max.min(frame_len - 1) {
            let mut r = 0.0;
            for i in 0..frame_len - lag {
                r += x[i] * x[i + lag];
            }
            rho[lag] = r / r0 * nf / (nf - lag as f64);
        }
        // Best lag under a mild octave cost that prefers shorter periods
        // among near-equal peaks.
        let mut best_lag = lag_min;
        let mut best_score = f64::NEG_INFINITY;
        for lag in lag_min..=lag_max {
            let score = rho[lag] - 0.01 * (lag as f64 / lag_min as f64).log2();
            if score > best_score {
                best_score = score;
                best_lag = lag;
            }
        }
        if rho[best_lag] < params.voicing_threshold {
            values.push(0.0);
            valid.push(false);
            continue;
        }
        // Parabolic refinement of the peak position.
        let mut lag = best_lag as f64;
        if best_lag > lag_min && best_lag < lag_max {
            let (a, b, c) = (rho[best_lag - 1], rho[best_lag], rho[best_lag + 1]);
            let denom = a - 2.0 * b + c;
            if denom.abs() > f64::MIN_POSITIVE {
                let delta = 0.5 * (a - c) / denom;
                lag += delta.clamp(-0.5, 0.5);
            }
        }
        let f0 = fs / lag;
        if f0 >= f_min && f0 <= f_max {
            values.push(f0);
            valid.push(true);
        } else {
            values.push(0.0);
            valid.push(false);
        }
    }

    Ok(SampledTrack {
        values,
        sample_rate: TRACK_RATE,
        t0: frame_len as f64 / fs / 2.0,
        valid,
    })
}

/// Bridge invalid samples by linear interpolation between the nearest valid
/// neighbors; leading and trailing gaps take the nearest valid value.
///
/// Valid samples are never altered, so the operation is idempotent.
pub fn interpolate_gaps(track: &SampledTrack) -> Result<SampledTrack> {
    let n = track.len();
    let valid_idx: Vec<usize> = (0..n).filter(|&i| track.valid[i]).collect();
    if valid_idx.is_empty() {
        return Err(Error::NoVoicedFrames);
    }
    let mut values = track.values.clone();
    let first = valid_idx[0];
    let last = *valid_idx.last().unwrap();
    for i in 0..first {
        values[i] = track.values[first];
    }
    for i in last + 1..n {
        values[i] = track.values[last];
    }
    for w in valid_idx.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b > a + 1 {
            let (va, vb) = (track.values[a], track.values[b]);
            for i in a + 1..b {
                let frac = (i - a) as f64 / (b - a) as f64;
                values[i] = va + frac * (vb - va);
            }
        }
    }
    Ok(SampledTrack {
        values,
        sample_rate: track.sample_rate,
        t0: track.t0,
        valid: vec![true; n],
    })
}

/// Mark valid samples outside `median ± k·IQR` as invalid.
///
/// Quartiles are taken over the currently valid samples with linear
/// interpolation; a zero IQR (constant track) marks nothing. Already-invalid
/// samples stay invalid, so the mask only grows.
pub fn mark_outliers(track: &SampledTrack, k: f64) -> SampledTrack {
    let mut vals: Vec<f64> = track
        .values
        .iter()
        .zip(&track.valid)
        .filter(|(_, &m)| m)
        .map(|(&v, _)| v)
        .collect();
    if vals.len() < 5 {
        return track.clone();
    }
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let med = percentile(&vals, 50.0);
    let iqr = percentile(&vals, 75.0) - percentile(&vals, 25.0);
    if iqr <= 0.0 {
        return track.clone();
    }
    let (lo, hi) = (med - k * iqr, med + k * iqr);
    let mut out = track.clone();
    for i in 0..out.len() {
        if out.valid[i] && (out.values[i] < lo || out.values[i] > hi) {
            out.valid[i] = false;
        }
    }
    out
}

/// Savitzky-Golay coefficients for an order-3 fit in a 5-sample window,
/// evaluated at the window center.
const SG_CENTER: [f64; 5] = [
    -3.0 / 35.0,
    12.0 / 35.0,
    17.0 / 35.0,
    12.0 / 35.0,
    -3.0 / 35.0,
];

/// Savitzky-Golay smoothing: order-3 least-squares fit in 5-sample windows.
///
/// Interior samples use the analytic center coefficients
/// `(-3, 12, 17, 12, -3)/35`. The two samples at each edge are taken from the
/// least-squares cubic fit to the nearest five samples, evaluated in place,
/// so polynomials up to order 3 pass through unchanged everywhere. The
/// operation is linear in the input.
pub fn savgol_smooth(track: &SampledTrack) -> Result<SampledTrack> {
    let n = track.len();
    if n < 5 {
        return Err(Error::TrackTooShort);
    }
    let x = &track.values;
    let mut out = vec![0.0; n];
    for i in 2..n - 2 {
        let mut acc = 0.0;
        for (j, c) in SG_CENTER.iter().enumerate() {
            acc += c * x[i + j - 2];
        }
        out[i] = acc;
    }
    // Edge handling: cubic fit to the five boundary samples, evaluated at
    // the edge positions (preserves cubics exactly, unlike mirroring).
    let head = crate::stylize::polyfit(&[0.0, 1.0, 2.0, 3.0, 4.0], &x[0..5], 3)?;
    out[0] = head[0];
    out[1] = head[0] + head[1] + head[2] + head[3];
    let tail = crate::stylize::polyfit(&[0.0, 1.0, 2.0, 3.0, 4.0], &x[n - 5..n], 3)?;
    out[n - 2] = tail[0] + 3.0 * tail[1] + 9.0 * tail[2] + 27.0 * tail[3];
    out[n - 1] = tail[0] + 4.0 * tail[1] + 16.0 * tail[2] + 64.0 * tail[3];
    Ok(SampledTrack {
        values: out,
        sample_rate: track.sample_rate,
        t0: track.t0,
        valid: track.valid.clone(),
    })
}

/// Transform an all-positive Hz track to semitones relative to a base value.
///
/// The base is the median of the values strictly below the track's 5th
/// percentile; if that set is empty (constant track), the overall median is
/// used. Output values are `12·log2(value/base)`.
pub fn semitone_transform(track: &SampledTrack) -> Result<(SampledTrack, SemitoneBase)> {
    if track.is_empty() {
        return Err(Error::EmptyInput);
    }
    if track.values.iter().any(|&v| v <= 0.0) {
        return Err(Error::InvalidHz);
    }
    let mut sorted = track.values.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let p5 = percentile(&sorted, 5.0);
    let below: Vec<f64> = sorted.iter().copied().filter(|&v| v < p5).collect();
    let base_hz = if below.is_empty() {
        percentile(&sorted, 50.0)
    } else {
        median(&below)
    };
    let values = track
        .values
        .iter()
        .map(|&v| 12.0 * (v / base_hz).log2())
        .collect();
    Ok((
        SampledTrack {
            values,
            sample_rate: track.sample_rate,
            t0: track.t0,
            valid: track.valid.clone(),
        },
        SemitoneBase { base_hz },
    ))
}

/// RMS energy track at 100 Hz from Hamming-weighted 50 ms windows centered
/// on each frame time; windows reaching past the signal are zero-padded.
pub fn rms_energy(audio: &AudioBuffer) -> Result<SampledTrack> {
    rms_energy_with(audio, 0.050)
}

/// [`rms_energy`] with an explicit window length in seconds.
pub fn rms_energy_with(audio: &AudioBuffer, window_s: f64) -> Result<SampledTrack> {
    let fs = audio.sample_rate as f64;
    let w = (window_s * fs).round() as usize;
    if audio.samples.len() < w || w < 2 {
        return Err(Error::EmptyInput);
    }
    let hamming: Vec<f64> = (0..w)
        .map(|i| 0.54 - 0.46 * (2.0 * std::f64::consts::PI * i as f64 / (w - 1) as f64).cos())
        .collect();
    let n_frames = ((audio.samples.len() - 1) as f64 / fs * TRACK_RATE).floor() as usize + 1;
    let half = w as i64 / 2;
    let n = audio.samples.len() as i64;
    let mut values = Vec::with_capacity(n_frames);
    for k in 0..n_frames {
        let center = (k as f64 / TRACK_RATE * fs).round() as i64;
        let start = center - half;
        let mut acc = 0.0;
        for (j, h) in hamming.iter().enumerate() {
            let idx = start + j as i64;
            if idx >= 0 && idx < n {
                let v = h * audio.samples[idx as usize];
                acc += v * v;
            }
        }
        values.push((acc / w as f64).sqrt());
    }
    Ok(SampledTrack::new(values, TRACK_RATE, 0.0))
}
