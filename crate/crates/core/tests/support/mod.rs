//! Shared helpers for the integration suites.
#![allow(dead_code)]

pub mod welch_oracle;

/// Asymptotic one-sample Kolmogorov–Smirnov p-value of `samples` against
/// the uniform distribution on (0, 1].
pub fn ks_uniform_p(samples: &[f64]) -> f64 {
    assert!(!samples.is_empty());
    let mut s = samples.to_vec();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = s.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in s.iter().enumerate() {
        d = d.max(x - i as f64 / n).max((i + 1) as f64 / n - x);
    }
    let lambda = (n.sqrt() + 0.12 + 0.11 / n.sqrt()) * d;
    let mut p = 0.0;
    for k in 1..=100 {
        let sign = if k % 2 == 1 { 2.0 } else { -2.0 };
        let kf = k as f64;
        p += sign * (-2.0 * kf * kf * lambda * lambda).exp();
    }
    p.clamp(0.0, 1.0)
}

/// F1 of detected event times against reference times, with greedy
/// one-to-one matching within ±`tol` seconds.
pub fn event_f1(detected: &[f64], truth: &[f64], tol: f64) -> f64 {
    if detected.is_empty() || truth.is_empty() {
        return 0.0;
    }
    let mut used = vec![false; truth.len()];
    let mut tp = 0usize;
    for &d in detected {
        let mut best: Option<(usize, f64)> = None;
        for (i, &t) in truth.iter().enumerate() {
            if used[i] {
                continue;
            }
            let dist = (d - t).abs();
            if dist <= tol && best.is_none_or(|(_, bd)| dist < bd) {
                best = Some((i, dist));
            }
        }
        if let Some((i, _)) = best {
            used[i] = true;
            tp += 1;
        }
    }
    let precision = tp as f64 / detected.len() as f64;
    let recall = tp as f64 / truth.len() as f64;
    if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ks_detects_non_uniform_and_accepts_uniform() {
        let uniform: Vec<f64> = (0..200).map(|i| (i as f64 + 0.5) / 200.0).collect();
        assert!(ks_uniform_p(&uniform) > 0.5);
        let clumped: Vec<f64> = (0..200).map(|i| 0.4 + 0.2 * (i as f64 / 200.0)).collect();
        assert!(ks_uniform_p(&clumped) < 1e-6);
    }

    #[test]
    fn f1_counts_one_to_one_matches() {
        let truth = [1.0, 2.0, 3.0];
        assert!((event_f1(&[1.01, 2.0, 2.99], &truth, 0.02) - 1.0).abs() < 1e-12);
        // two detections near one truth event: only one may match
        let f1 = event_f1(&[1.0, 1.005], &truth, 0.02);
        assert!((f1 - 2.0 * (0.5 * (1.0 / 3.0)) / (0.5 + 1.0 / 3.0)).abs() < 1e-12);
        assert_eq!(event_f1(&[], &truth, 0.02), 0.0);
    }
}
