//! Shared test helpers, most importantly the direct O(N²) DFT summation the
//! fast transforms are checked against. Kept independent of the library's
//! transform path on purpose.
#![allow(dead_code)] // each test binary uses a different subset

use brickwall::Complex;
use std::f64::consts::TAU;

/// `bins[k] = Σ_n samples[n]·exp(−2πi·k·n/N)`, evaluated term by term.
pub fn naive_dft(samples: &[f64]) -> Vec<Complex<f64>> {
    let n = samples.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex::new(0.0, 0.0);
            for (i, &x) in samples.iter().enumerate() {
                let angle = -TAU * (k as f64) * (i as f64) / n as f64;
                acc += Complex::new(x * angle.cos(), x * angle.sin());
            }
            acc
        })
        .collect()
}

/// `samples[n] = (1/N)·Σ_k bins[k]·exp(+2πi·k·n/N)`, evaluated term by term.
pub fn naive_idft(bins: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let n = bins.len();
    (0..n)
        .map(|i| {
            let mut acc = Complex::new(0.0, 0.0);
            for (k, &bin) in bins.iter().enumerate() {
                let angle = TAU * (k as f64) * (i as f64) / n as f64;
                acc += bin * Complex::new(angle.cos(), angle.sin());
            }
            acc / n as f64
        })
        .collect()
}

/// Kept-bin set `{k, N−k : lo ≤ k ≤ hi}` enumerated directly from the
/// definition.
pub fn enumerate_kept_set(n: usize, lo: usize, hi: usize) -> Vec<bool> {
    let mut kept = vec![false; n];
    for k in lo..=hi {
        kept[k] = true;
        kept[n - k] = true;
    }
    kept
}
