//! Superpositional f0 stylization: phrase-level register lines (base, mid,
//! topline and a range line), range normalization, local third-order accent
//! polynomials, and Gestalt deviations between local and phrase registers.

use crate::error::{Error, Result};
use crate::signal::{median, SampledTrack};

/// Fitted register lines over a window, with time normalized to [0, 1]
/// across the window. `rng` is the regression through the pointwise
/// topline-baseline distances.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegisterStylization {
    pub base_intercept: f64,
    pub base_slope: f64,
    pub mid_intercept: f64,
    pub mid_slope: f64,
    pub top_intercept: f64,
    pub top_slope: f64,
    pub rng_intercept: f64,
    pub rng_slope: f64,
    /// Window in seconds over which the lines were fitted.
    pub window: (f64, f64),
}

impl RegisterStylization {
    /// Normalized time of `t` seconds within this window.
    pub fn norm_time(&self, t: f64) -> f64 {
        let span = self.window.1 - self.window.0;
        if span <= 0.0 {
            0.0
        } else {
            (t - self.window.0) / span
        }
    }

    pub fn base_at(&self, t: f64) -> f64 {
        self.base_intercept + self.base_slope * self.norm_time(t)
    }

    pub fn mid_at(&self, t: f64) -> f64 {
        self.mid_intercept + self.mid_slope * self.norm_time(t)
    }

    pub fn top_at(&self, t: f64) -> f64 {
        self.top_intercept + self.top_slope * self.norm_time(t)
    }

    pub fn range_at(&self, t: f64) -> f64 {
        self.rng_intercept + self.rng_slope * self.norm_time(t)
    }
}

/// One stylized pitch accent: range-normalized polynomial, its local
/// register, and the Gestalt deviations from the surrounding phrase.
#[derive(Debug, Clone)]
pub struct AccentShape {
    /// Coefficients `(s0, s1, s2, s3)` over time normalized to [-1, 1].
    pub poly: [f64; 4],
    pub local_register: RegisterStylization,
    pub gestalt_lev_rmsd: f64,
    pub gestalt_rng_rmsd: f64,
    pub nucleus_time: f64,
}

/// Least-squares line through `(xs, ys)`: returns `(intercept, slope)`.
/// A degenerate x spread yields slope 0 and the mean as intercept.
pub fn linfit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    debug_assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    if xs.is_empty() {
        return (0.0, 0.0);
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if sxx <= f64::MIN_POSITIVE {
        return (my, 0.0);
    }
    let slope = sxy / sxx;
    (my - slope * mx, slope)
}

/// Least-squares polynomial fit of the given order via normal equations and
/// Gaussian elimination with partial pivoting. Returns coefficients in
/// ascending power order.
pub fn polyfit(xs: &[f64], ys: &[f64], order: usize) -> Result<Vec<f64>> {
    let m = order + 1;
    if xs.len() < m || xs.len() != ys.len() {
        return Err(Error::AccentWindowUnderpopulated);
    }
    // Normal equations A c = b with A[i][j] = sum x^(i+j), b[i] = sum y x^i.
    let mut pow_sums = vec![0.0; 2 * m - 1];
    let mut b = vec![0.0; m];
    for (&x, &y) in xs.iter().zip(ys) {
        let mut p = 1.0;
        for s in pow_sums.iter_mut() {
            *s += p;
            p *= x;
        }
        let mut p = 1.0;
        for bi in b.iter_mut() {
            *bi += y * p;
            p *= x;
        }
    }
    let mut a = vec![vec![0.0; m + 1]; m];
    for i in 0..m {
        for j in 0..m {
            a[i][j] = pow_sums[i + j];
        }
        a[i][m] = b[i];
    }
    // Elimination.
    for col in 0..m {
        let mut piv = col;
        for row in col + 1..m {
            if a[row][col].abs() > a[piv][col].abs() {
                piv = row;
            }
        }
        if a[piv][col].abs() <= f64::MIN_POSITIVE {
            return Err(Error::AccentWindowUnderpopulated);
        }
        a.swap(col, piv);
        for row in col + 1..m {
            let f = a[row][col] / a[col][col];
            for k in col..=m {
                a[row][k] -= f * a[col][k];
            }
        }
    }
    let mut coeffs = vec![0.0; m];
    for i in (0..m).rev() {
        let mut acc = a[i][m];
        for j in i + 1..m {
            acc -= a[i][j] * coeffs[j];
        }
        coeffs[i] = acc / a[i][i];
    }
    Ok(coeffs)
}

/// Register-fitting parameters: sub-window and step lengths in seconds.
#[derive(Debug, Clone, Copy)]
pub struct RegisterParams {
    pub window_s: f64,
    pub step_s: f64,
}

impl Default for RegisterParams {
    fn default() -> Self {
        RegisterParams {
            window_s: 0.050,
            step_s: 0.010,
        }
    }
}

/// Fit base/mid/topline and range regressions over `window` of `f0`.
///
/// A 50 ms sub-window advances in 10 ms steps. Per sub-window three points
/// are taken: the median of values below the 10th percentile (base), above
/// the 90th percentile (top), and of all values (mid); with fewer than 10
/// samples per sub-window the minimum and maximum stand in for the
/// percentile medians. Each point sequence is fitted by linear regression
/// over time normalized to [0, 1] across `window`; the range line is fitted
/// to the pointwise top-base distances. Windows shorter than one sub-window
/// collapse to a single point set with zero slopes.
pub fn fit_register(
    f0: &SampledTrack,
    window: (f64, f64),
    params: RegisterParams,
) -> RegisterStylization {
    let range = f0.index_range(window.0, window.1);
    let vals = &f0.values[range.clone()];
    let n = vals.len();
    let w = ((params.window_s * f0.sample_rate).round() as usize).max(1);
    let step = ((params.step_s * f0.sample_rate).round() as usize).max(1);
    let span = window.1 - window.0;

    let degenerate = |vals: &[f64]| {
        let (mut base, mut top, mut mid) = (0.0, 0.0, 0.0);
        if !vals.is_empty() {
            base = vals.iter().cloned().fold(f64::INFINITY, f64::min);
            top = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            mid = median(vals);
        }
        RegisterStylization {
            base_intercept: base,
            base_slope: 0.0,
            mid_intercept: mid,
            mid_slope: 0.0,
            top_intercept: top,
            top_slope: 0.0,
            rng_intercept: top - base,
            rng_slope: 0.0,
            window,
        }
    };
    if n < w || span <= 0.0 {
        return degenerate(vals);
    }

    let mut xs = Vec::new();
    let mut base_pts = Vec::new();
    let mut mid_pts = Vec::new();
    let mut top_pts = Vec::new();
    let mut i = 0;
    while i + w <= n {
        let sub = &vals[i..i + w];
        let mut sorted = sub.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let (base, top) = if w < 10 {
            (sorted[0], sorted[w - 1])
        } else {
            let p10 = crate::signal::percentile(&sorted, 10.0);
            let p90 = crate::signal::percentile(&sorted, 90.0);
            let lo: Vec<f64> = sorted.iter().copied().filter(|&v| v < p10).collect();
            let hi: Vec<f64> = sorted.iter().copied().filter(|&v| v > p90).collect();
            (
                if lo.is_empty() {
                    sorted[0]
                } else {
                    median(&lo)
                },
                if hi.is_empty() {
                    sorted[w - 1]
                } else {
                    median(&hi)
                },
            )
        };
        let center_t = f0.time_at(range.start + i) + (w - 1) as f64 / (2.0 * f0.sample_rate);
        xs.push((center_t - window.0) / span);
        base_pts.push(base);
        mid_pts.push(median(sub));
        top_pts.push(top);
        i += step;
    }
    if xs.is_empty() {
        return degenerate(vals);
    }
    let rng_pts: Vec<f64> = top_pts.iter().zip(&base_pts).map(|(t, b)| t - b).collect();
    let (base_intercept, base_slope) = linfit(&xs, &base_pts);
    let (mid_intercept, mid_slope) = linfit(&xs, &mid_pts);
    let (top_intercept, top_slope) = linfit(&xs, &top_pts);
    let (rng_intercept, rng_slope) = linfit(&xs, &rng_pts);
    RegisterStylization {
        base_intercept,
        base_slope,
        mid_intercept,
        mid_slope,
        top_intercept,
        top_slope,
        rng_intercept,
        rng_slope,
        window,
    }
}

/// Map f0 onto the register: baseline to 0, topline to 1. Where the
/// topline-baseline span falls below 0.1 st the divisor is held at 0.1 to
/// avoid blow-up on flat registers.
pub fn range_normalize(f0: &SampledTrack, reg: &RegisterStylization) -> SampledTrack {
    let values = f0
        .values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let t = f0.time_at(i);
            let span = reg.top_at(t) - reg.base_at(t);
            let denom = if span < 0.1 { 0.1 } else { span };
            (v - reg.base_at(t)) / denom
        })
        .collect();
    SampledTrack {
        values,
        sample_rate: f0.sample_rate,
        t0: f0.t0,
        valid: f0.valid.clone(),
    }
}

/// Fit the order-3 accent polynomial on `norm_f0` in a window of
/// `window_s` seconds centered on `nucleus`, clipped to `clip`; time is
/// normalized to [-1, 1] over the clipped extent.
pub fn fit_accent_poly(
    norm_f0: &SampledTrack,
    nucleus: f64,
    window_s: f64,
    clip: (f64, f64),
) -> Result<[f64; 4]> {
    let a = (nucleus - window_s / 2.0).max(clip.0);
    let b = (nucleus + window_s / 2.0).min(clip.1);
    let range = norm_f0.index_range(a, b);
    if range.len() < 4 || b <= a {
        return Err(Error::AccentWindowUnderpopulated);
    }
    let xs: Vec<f64> = range
        .clone()
        .map(|i| 2.0 * (norm_f0.time_at(i) - a) / (b - a) - 1.0)
        .collect();
    let ys = &norm_f0.values[range];
    let c = polyfit(&xs, ys, 3)?;
    Ok([c[0], c[1], c[2], c[3]])
}

/// RMSD between the local and phrase midlines, and between the local and
/// phrase range lines, both evaluated at 101 evenly spaced points over
/// `window` (each line in its own time normalization).
pub fn gestalt_deviation(
    local: &RegisterStylization,
    phrase: &RegisterStylization,
    window: (f64, f64),
) -> (f64, f64) {
    let n = 101;
    let mut lev_acc = 0.0;
    let mut rng_acc = 0.0;
    for j in 0..n {
        let t = window.0 + (window.1 - window.0) * j as f64 / (n - 1) as f64;
        let dl = local.mid_at(t) - phrase.mid_at(t);
        let dr = local.range_at(t) - phrase.range_at(t);
        lev_acc += dl * dl;
        rng_acc += dr * dr;
    }
    ((lev_acc / n as f64).sqrt(), (rng_acc / n as f64).sqrt())
}
