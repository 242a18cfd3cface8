//! Quantitative comparison of filtered signals against references: RMSE,
//! single-bin amplitude estimation, and magnitude-spectrum tables.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::filter::BandSpec;
use crate::num::{cast, cast_usize, Real};
use crate::signal::{forward_transform, Signal};

/// Root mean square error `sqrt((1/N)·Σ(a[n]−b[n])²)` between two
/// equal-length signals.
pub fn rmse<T: Real>(a: &Signal<T>, b: &Signal<T>) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::InvalidInput(format!(
            "length mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let sum_sq = a
        .samples()
        .iter()
        .zip(b.samples())
        .fold(T::zero(), |acc, (&x, &y)| {
            let d = x - y;
            acc + d * d
        });
    Ok((sum_sq / cast_usize(a.len())).sqrt())
}

/// Amplitude of the on-grid sinusoid at `freq`, estimated as `2·|bins[k]|/N`
/// from the matching bin.
///
/// Exact for a single on-grid component with `0 < freq < fs/2`; frequencies
/// that do not land on the grid (within `1e-9·fs`) are rejected rather than
/// estimated from a smeared bin.
pub fn amplitude_estimate<T: Real>(signal: &Signal<T>, freq: T) -> Result<T> {
    let spectrum = forward_transform(signal);
    let n = spectrum.len();
    let fs = spectrum.fs();
    let tol = cast::<T>(1e-9) * fs;
    let grid = spectrum.grid();
    let matched = (0..=grid.nyquist_index())
        .find(|&k| (grid.freqs()[k] - freq).abs() <= tol)
        .ok_or_else(|| {
            Error::OffGridFrequency(format!(
                "no grid frequency within {tol:?} Hz of {freq:?} Hz (resolution {:?} Hz)",
                fs / cast_usize::<T>(n)
            ))
        })?;
    Ok(cast::<T>(2.0) * spectrum.bins()[matched].norm() / cast_usize(n))
}

/// One row of the half-spectrum magnitude table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagnitudeRow<T> {
    pub bin: usize,
    pub freq: T,
    pub magnitude: T,
}

/// Per-bin magnitudes `|bins[k]|` for `k = 0..=N/2`, ready for plotting
/// cut-off sharpness.
pub fn magnitude_spectrum<T: Real>(signal: &Signal<T>) -> Vec<MagnitudeRow<T>> {
    let spectrum = forward_transform(signal);
    let grid = spectrum.grid();
    (0..=grid.nyquist_index())
        .map(|k| MagnitudeRow {
            bin: k,
            freq: grid.freqs()[k],
            magnitude: spectrum.bins()[k].norm(),
        })
        .collect()
}

/// RMSE of the spectral filter, the FIR baseline, and the unfiltered signal,
/// all against the same noise-free reference.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport<T> {
    pub band: BandSpec<T>,
    pub seed: u64,
    pub n_samples: usize,
    pub rmse_fft: T,
    pub rmse_fir: Option<T>,
    pub rmse_unfiltered: T,
}

impl<T: Real> ComparisonReport<T> {
    fn band_edges(&self) -> (f64, f64) {
        match (self.band.interval(), self.band.point_freq()) {
            (Some((lo, hi)), _) => (to_f64(lo), to_f64(hi)),
            // a point-only report degenerates to a zero-width band
            (None, Some(p)) => (to_f64(p), to_f64(p)),
            (None, None) => unreachable!("BandSpec construction guarantees a selection"),
        }
    }

    /// Key-value JSON object with stable keys:
    /// `{"band":[lo,hi],"seed":s,"n":N,"rmse":{"fft":x,"fir":y,"unfiltered":z}}`.
    pub fn to_json(&self) -> Value {
        let (lo, hi) = self.band_edges();
        json!({
            "band": [lo, hi],
            "seed": self.seed,
            "n": self.n_samples,
            "rmse": {
                "fft": to_f64(self.rmse_fft),
                "fir": self.rmse_fir.map(to_f64),
                "unfiltered": to_f64(self.rmse_unfiltered),
            },
        })
    }

    /// Single-row CSV (with header) mirroring the JSON fields; the FIR cell
    /// is empty when no FIR baseline was run.
    pub fn to_csv(&self) -> String {
        let (lo, hi) = self.band_edges();
        let fir = self
            .rmse_fir
            .map(|v| format!("{:.16e}", to_f64(v)))
            .unwrap_or_default();
        format!(
            "band_lo,band_hi,seed,n,rmse_fft,rmse_fir,rmse_unfiltered\n\
             {:.16e},{:.16e},{},{},{:.16e},{},{:.16e}\n",
            lo,
            hi,
            self.seed,
            self.n_samples,
            to_f64(self.rmse_fft),
            fir,
            to_f64(self.rmse_unfiltered),
        )
    }
}

fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().expect("scalar fits in f64")
}
