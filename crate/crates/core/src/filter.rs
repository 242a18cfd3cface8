//! Brick-wall spectral filtering by conjugate-pair-preserving bin zeroing.
//!
//! The pipeline is FFT → zero unwanted bins → IFFT. Zeroing skips bin 0 and
//! removes bin `k` together with its partner `N−k`, so the spectrum of a real
//! signal stays Hermitian and the inverse transform stays real. Kept bins are
//! untouched: passband amplitudes survive exactly, and stopband bins are
//! exactly zero rather than merely attenuated.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::num::{cast, Real};
use crate::signal::{forward_transform, inverse_transform_real, FrequencyGrid, Signal, Spectrum};

/// Frequency selection for a filtering request: an inclusive band, a single
/// on-grid frequency, or both at once.
///
/// Constructors guarantee that at least one selection is present; see
/// [`BandSpec::new`] for the fallible form used when both parts are optional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandSpec<T> {
    interval: Option<(T, T)>,
    point_freq: Option<T>,
}

impl<T: Real> BandSpec<T> {
    /// Inclusive passband `[f_lo, f_hi]` in Hz.
    pub fn band(f_lo: T, f_hi: T) -> Self {
        Self {
            interval: Some((f_lo, f_hi)),
            point_freq: None,
        }
    }

    /// Single frequency to keep, in Hz.
    pub fn point(freq: T) -> Self {
        Self {
            interval: None,
            point_freq: Some(freq),
        }
    }

    /// Both a passband and a point frequency, filtered from one shared
    /// forward transform.
    pub fn band_and_point(f_lo: T, f_hi: T, freq: T) -> Self {
        Self {
            interval: Some((f_lo, f_hi)),
            point_freq: Some(freq),
        }
    }

    /// Builds a spec from optional parts, rejecting the empty request.
    pub fn new(interval: Option<(T, T)>, point_freq: Option<T>) -> Result<Self> {
        if interval.is_none() && point_freq.is_none() {
            return Err(Error::InvalidInput(
                "At least one of interval or punctual frequencies parameters must be provided"
                    .into(),
            ));
        }
        Ok(Self {
            interval,
            point_freq,
        })
    }

    pub fn interval(&self) -> Option<(T, T)> {
        self.interval
    }

    pub fn point_freq(&self) -> Option<T> {
        self.point_freq
    }

    /// Checks the selection against a concrete sampling rate: frequencies
    /// must lie in `[0, fs/2]` and intervals must be ordered. Requests above
    /// Nyquist are rejected rather than aliased.
    pub fn validate_for(&self, fs: T) -> Result<()> {
        let nyquist = fs / cast(2.0);
        if let Some((f_lo, f_hi)) = self.interval {
            if !f_lo.is_finite() || !f_hi.is_finite() || f_lo > f_hi {
                return Err(Error::InvalidInput(format!(
                    "malformed interval ({f_lo:?}, {f_hi:?}): need finite f_lo <= f_hi"
                )));
            }
            if f_lo < T::zero() || f_hi > nyquist {
                return Err(Error::InvalidInput(format!(
                    "interval ({f_lo:?}, {f_hi:?}) outside [0, {nyquist:?}] Hz"
                )));
            }
        }
        if let Some(p) = self.point_freq {
            if !p.is_finite() || p < T::zero() || p > nyquist {
                return Err(Error::InvalidInput(format!(
                    "point frequency {p:?} outside [0, {nyquist:?}] Hz"
                )));
            }
        }
        Ok(())
    }
}

/// Knobs for spectral zeroing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterOptions<T> {
    /// Zero bin `k` together with its conjugate partner `N−k`, skipping
    /// bin 0. Disabling this reproduces the plain variant whose kept set is
    /// not conjugate-symmetric; it exists as a comparison foil.
    pub shifted_symmetry: bool,
    /// Keep bin 0 (the signal mean) instead of zeroing it with the stopband.
    pub preserve_dc: bool,
    /// Absolute tolerance in Hz for matching a requested frequency to a grid
    /// bin; `None` means `1e-9·fs`.
    pub freq_match_tol: Option<T>,
}

impl<T> Default for FilterOptions<T> {
    fn default() -> Self {
        Self {
            shifted_symmetry: true,
            preserve_dc: false,
            freq_match_tol: None,
        }
    }
}

impl<T: Real> FilterOptions<T> {
    fn matching_tol(&self, fs: T) -> Result<T> {
        match self.freq_match_tol {
            Some(tol) if tol < T::zero() || !tol.is_finite() => Err(Error::InvalidInput(format!(
                "frequency matching tolerance must be finite and >= 0, got {tol:?}"
            ))),
            Some(tol) => Ok(tol),
            None => Ok(cast::<T>(1e-9) * fs),
        }
    }
}

/// Inclusive bin-index endpoints of a band on the non-negative half of the
/// grid: `lo` is the first kept bin, `hi` the last.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandBins {
    pub lo: usize,
    pub hi: usize,
}

/// Outputs of a filtering run.
///
/// `filtered_spectrum`/`filtered_signal` hold the band-pass result; for a
/// point-only request they mirror the point output, so they always carry the
/// filtered data. `point_spectrum`/`point_signal` are present whenever a
/// point frequency was requested.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterResult<T> {
    pub filtered_spectrum: Spectrum<T>,
    pub filtered_signal: Signal<T>,
    pub point_spectrum: Option<Spectrum<T>>,
    pub point_signal: Option<Signal<T>>,
}

/// Maps an inclusive frequency interval onto grid-bin endpoints: `lo` is the
/// smallest bin with `freqs[k] ≥ f_lo`, `hi` the largest bin at or below the
/// Nyquist index with `freqs[k] ≤ f_hi`.
pub fn band_indices<T: Real>(grid: &FrequencyGrid<T>, interval: (T, T)) -> Result<BandBins> {
    let (f_lo, f_hi) = interval;
    if !f_lo.is_finite() || !f_hi.is_finite() || f_lo > f_hi {
        return Err(Error::InvalidInput(format!(
            "malformed interval ({f_lo:?}, {f_hi:?}): need finite f_lo <= f_hi"
        )));
    }
    let half = grid.nyquist_index();
    let freqs = grid.freqs();
    let lo = (0..=half).find(|&k| freqs[k] >= f_lo);
    let hi = (0..=half).rev().find(|&k| freqs[k] <= f_hi);
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo <= hi => Ok(BandBins { lo, hi }),
        _ => Err(Error::EmptyBand(format!(
            "no grid frequency inside [{f_lo:?}, {f_hi:?}] Hz (grid resolution {:?} Hz)",
            freqs.get(1).copied().unwrap_or(T::zero())
        ))),
    }
}

fn keep_only<T: Real>(spectrum: &Spectrum<T>, keep: &[bool]) -> Spectrum<T> {
    let zero = Complex::new(T::zero(), T::zero());
    let bins = spectrum
        .bins()
        .iter()
        .zip(keep)
        .map(|(&bin, &kept)| if kept { bin } else { zero })
        .collect();
    Spectrum::from_parts(bins, spectrum.fs())
}

fn zero_span(keep: &mut [bool], lo: i64, hi: i64) {
    let n = keep.len() as i64;
    for k in lo.max(0)..=hi.min(n - 1) {
        keep[k as usize] = false;
    }
}

fn check_band_bins(band: BandBins, n: usize) -> Result<()> {
    if band.lo < 1 || band.lo > band.hi || band.hi > n / 2 {
        return Err(Error::InvalidInput(format!(
            "band bins ({}, {}) out of range for spectrum length {n}: need 1 <= lo <= hi <= {}",
            band.lo,
            band.hi,
            n / 2
        )));
    }
    Ok(())
}

/// Zeroes every bin outside the requested band.
///
/// With `shifted_symmetry` the kept set is exactly
/// `{k, N−k : lo ≤ k ≤ hi}` (plus bin 0 under `preserve_dc`), so Hermitian
/// inputs stay Hermitian. Without it the zeroed spans are
/// `hi+1..=N−hi−2`, `0..=lo−1` and `N−lo..=N−1`, which shifts the mirrored
/// kept run by one bin and breaks the conjugate pairing.
pub fn apply_band_pass<T: Real>(
    spectrum: &Spectrum<T>,
    band: BandBins,
    options: &FilterOptions<T>,
) -> Result<Spectrum<T>> {
    let n = spectrum.len();
    check_band_bins(band, n)?;
    let mut keep = if options.shifted_symmetry {
        let mut keep = vec![false; n];
        for k in band.lo..=band.hi {
            keep[k] = true;
            keep[n - k] = true;
        }
        keep
    } else {
        let mut keep = vec![true; n];
        let (lo, hi, n) = (band.lo as i64, band.hi as i64, n as i64);
        zero_span(&mut keep, hi + 1, n - hi - 2);
        zero_span(&mut keep, 0, lo - 1);
        zero_span(&mut keep, n - lo, n - 1);
        keep
    };
    if options.preserve_dc {
        keep[0] = true;
    }
    Ok(keep_only(spectrum, &keep))
}

/// Zeroes every bin except the one matching `point_freq` and its conjugate
/// partner (`{k, N−k}`; just `{0}` for DC, just `{N/2}` for the Nyquist bin).
///
/// The frequency must land on the grid within the matching tolerance;
/// anything else is reported as an off-grid request rather than silently
/// filtered with leakage.
pub fn apply_point_pass<T: Real>(
    spectrum: &Spectrum<T>,
    point_freq: T,
    options: &FilterOptions<T>,
) -> Result<Spectrum<T>> {
    let n = spectrum.len();
    let fs = spectrum.fs();
    let tol = options.matching_tol(fs)?;
    let grid = spectrum.grid();
    let matched = (0..=grid.nyquist_index())
        .find(|&k| (grid.freqs()[k] - point_freq).abs() <= tol)
        .ok_or_else(|| {
            Error::OffGridFrequency(format!(
                "no grid frequency within {tol:?} Hz of {point_freq:?} Hz (resolution {:?} Hz)",
                fs / crate::num::cast_usize::<T>(n)
            ))
        })?;
    let mut keep = vec![false; n];
    keep[matched] = true;
    keep[(n - matched) % n] = true;
    if options.preserve_dc {
        keep[0] = true;
    }
    Ok(keep_only(spectrum, &keep))
}

/// Runs the full pipeline — forward transform, bin zeroing, inverse
/// transform — for a band and/or point request.
///
/// When both parts are present they are filtered from the same forward
/// transform, computed once.
pub fn filter_if<T: Real>(
    signal: &Signal<T>,
    band: &BandSpec<T>,
    options: &FilterOptions<T>,
) -> Result<FilterResult<T>> {
    band.validate_for(signal.fs())?;
    let spectrum = forward_transform(signal);
    let band_out = band
        .interval()
        .map(|interval| {
            let bins = band_indices(&spectrum.grid(), interval)?;
            let filtered = apply_band_pass(&spectrum, bins, options)?;
            let signal = inverse_transform_real(&filtered);
            Ok((filtered, signal))
        })
        .transpose()?;
    let point_out = band
        .point_freq()
        .map(|freq| {
            let filtered = apply_point_pass(&spectrum, freq, options)?;
            let signal = inverse_transform_real(&filtered);
            Ok((filtered, signal))
        })
        .transpose()?;
    let (filtered_spectrum, filtered_signal, point_spectrum, point_signal) =
        match (band_out, point_out) {
            (Some((bs, by)), Some((ps, py))) => (bs, by, Some(ps), Some(py)),
            (Some((bs, by)), None) => (bs, by, None, None),
            (None, Some((ps, py))) => (ps.clone(), py.clone(), Some(ps), Some(py)),
            (None, None) => unreachable!("BandSpec construction guarantees a selection"),
        };
    Ok(FilterResult {
        filtered_spectrum,
        filtered_signal,
        point_spectrum,
        point_signal,
    })
}

/// Keeps bins from the first nonzero frequency up to `cutoff`, always
/// preserving the mean.
pub fn low_pass<T: Real>(
    signal: &Signal<T>,
    cutoff: T,
    options: &FilterOptions<T>,
) -> Result<FilterResult<T>> {
    let first_bin_freq = signal.fs() / crate::num::cast_usize::<T>(signal.len());
    let opts = FilterOptions {
        preserve_dc: true,
        ..*options
    };
    filter_if(signal, &BandSpec::band(first_bin_freq, cutoff), &opts)
}

/// Keeps bins from `cutoff` up to the Nyquist frequency.
pub fn high_pass<T: Real>(
    signal: &Signal<T>,
    cutoff: T,
    options: &FilterOptions<T>,
) -> Result<FilterResult<T>> {
    filter_if(
        signal,
        &BandSpec::band(cutoff, signal.fs() / cast(2.0)),
        options,
    )
}

/// Zeroes the band `[f_lo, f_hi]` and keeps everything else, including the
/// mean: the kept set is the complement of the band-pass kept set plus bin 0.
pub fn band_stop<T: Real>(
    signal: &Signal<T>,
    f_lo: T,
    f_hi: T,
    options: &FilterOptions<T>,
) -> Result<FilterResult<T>> {
    let band = BandSpec::band(f_lo, f_hi);
    band.validate_for(signal.fs())?;
    let _ = options; // complement zeroing is inherently pair-preserving
    let spectrum = forward_transform(signal);
    let n = spectrum.len();
    let bins = band_indices(&spectrum.grid(), (f_lo, f_hi))?;
    check_band_bins(bins, n)?;
    let mut keep = vec![true; n];
    for k in bins.lo..=bins.hi {
        keep[k] = false;
        keep[n - k] = false;
    }
    keep[0] = true;
    let filtered_spectrum = keep_only(&spectrum, &keep);
    let filtered_signal = inverse_transform_real(&filtered_spectrum);
    Ok(FilterResult {
        filtered_spectrum,
        filtered_signal,
        point_spectrum: None,
        point_signal: None,
    })
}
