//! Time- and frequency-domain signal representations and the transforms
//! between them.
//!
//! Conventions: the forward transform is the unnormalized DFT
//! `bins[k] = Σ_n samples[n]·exp(−2πi·k·n/N)`, the inverse carries the
//! `1/N` factor, so a round trip is the identity and `bins[0]` equals `N`
//! times the signal mean. Bin `k` represents the frequency `k·fs/N` Hz.
//! Any length `N` is supported, not just powers of two.

use num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::num::{cast_usize, Real};

/// A uniformly sampled real-valued time series with its sampling rate in Hz.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal<T> {
    samples: Vec<T>,
    fs: T,
}

impl<T: Real> Signal<T> {
    /// Creates a signal, requiring at least one sample and a finite,
    /// strictly positive sampling rate.
    pub fn new(samples: Vec<T>, fs: T) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidInput(
                "signal must contain at least one sample".into(),
            ));
        }
        check_fs(fs)?;
        Ok(Self { samples, fs })
    }

    pub(crate) fn from_parts(samples: Vec<T>, fs: T) -> Self {
        debug_assert!(!samples.is_empty());
        Self { samples, fs }
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn fs(&self) -> T {
        self.fs
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn into_samples(self) -> Vec<T> {
        self.samples
    }

    /// Arithmetic mean of the samples.
    pub fn mean(&self) -> T {
        let sum = self.samples.iter().fold(T::zero(), |acc, &x| acc + x);
        sum / cast_usize(self.len())
    }
}

/// A complex frequency-domain vector paired with the sampling rate of the
/// signal it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    bins: Vec<Complex<T>>,
    fs: T,
}

impl<T: Real> Spectrum<T> {
    /// Creates a spectrum, requiring at least one bin and a finite,
    /// strictly positive sampling rate.
    pub fn new(bins: Vec<Complex<T>>, fs: T) -> Result<Self> {
        if bins.is_empty() {
            return Err(Error::InvalidInput(
                "spectrum must contain at least one bin".into(),
            ));
        }
        check_fs(fs)?;
        Ok(Self { bins, fs })
    }

    pub(crate) fn from_parts(bins: Vec<Complex<T>>, fs: T) -> Self {
        debug_assert!(!bins.is_empty());
        Self { bins, fs }
    }

    pub fn bins(&self) -> &[Complex<T>] {
        &self.bins
    }

    pub fn fs(&self) -> T {
        self.fs
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn into_bins(self) -> Vec<Complex<T>> {
        self.bins
    }

    /// Frequency grid matching this spectrum's length and sampling rate.
    pub fn grid(&self) -> FrequencyGrid<T> {
        frequency_grid(self.len(), self.fs).expect("spectrum invariants imply a valid grid")
    }
}

/// Bin-center frequencies `freqs[k] = k·fs/N` of a length-`N` spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid<T> {
    freqs: Vec<T>,
}

impl<T: Real> FrequencyGrid<T> {
    pub fn freqs(&self) -> &[T] {
        &self.freqs
    }

    pub fn len(&self) -> usize {
        self.freqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs.is_empty()
    }

    /// Index of the highest non-negative frequency bin, `floor(N/2)`.
    pub fn nyquist_index(&self) -> usize {
        self.freqs.len() / 2
    }
}

fn check_fs<T: Real>(fs: T) -> Result<()> {
    if !fs.is_finite() || fs <= T::zero() {
        return Err(Error::InvalidInput(format!(
            "sampling rate must be finite and strictly positive, got {fs:?}"
        )));
    }
    Ok(())
}

/// Unnormalized discrete Fourier transform of a real signal.
///
/// The output satisfies Hermitian symmetry up to floating-point error:
/// `bins[k] = conj(bins[N−k])`.
pub fn forward_transform<T: Real>(signal: &Signal<T>) -> Spectrum<T> {
    let mut buf: Vec<Complex<T>> = signal
        .samples()
        .iter()
        .map(|&x| Complex::new(x, T::zero()))
        .collect();
    FftPlanner::new()
        .plan_fft_forward(buf.len())
        .process(&mut buf);
    Spectrum::from_parts(buf, signal.fs())
}

/// Normalized inverse transform, keeping the complex samples.
///
/// The usual entry point is [`inverse_transform_real`]; the complex form
/// exposes the imaginary residue left behind by spectral edits that break
/// conjugate symmetry.
pub fn inverse_transform_complex<T: Real>(spectrum: &Spectrum<T>) -> Vec<Complex<T>> {
    let mut buf = spectrum.bins().to_vec();
    FftPlanner::new()
        .plan_fft_inverse(buf.len())
        .process(&mut buf);
    let scale = T::one() / cast_usize::<T>(buf.len());
    for b in &mut buf {
        *b = b.scale(scale);
    }
    buf
}

/// Real part of the normalized inverse transform,
/// `samples[n] = Re((1/N)·Σ_k bins[k]·exp(+2πi·k·n/N))`.
pub fn inverse_transform_real<T: Real>(spectrum: &Spectrum<T>) -> Signal<T> {
    let samples = inverse_transform_complex(spectrum)
        .into_iter()
        .map(|c| c.re)
        .collect();
    Signal::from_parts(samples, spectrum.fs())
}

/// Builds the frequency grid `freqs[k] = k·fs/N` for a length-`n` spectrum.
pub fn frequency_grid<T: Real>(n: usize, fs: T) -> Result<FrequencyGrid<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("grid length must be at least 1".into()));
    }
    check_fs(fs)?;
    let n_t = cast_usize::<T>(n);
    let freqs = (0..n).map(|k| cast_usize::<T>(k) * fs / n_t).collect();
    Ok(FrequencyGrid { freqs })
}

/// Index of the bin conjugate-paired with bin `k` in a length-`n` spectrum.
///
/// Bin 0 pairs with itself, as does the Nyquist bin `n/2` when `n` is even;
/// every other bin `k` pairs with `n−k`.
pub fn conjugate_partner(k: usize, n: usize) -> Result<usize> {
    if k >= n {
        return Err(Error::InvalidInput(format!(
            "bin index {k} out of range for spectrum length {n}"
        )));
    }
    Ok(if k == 0 { 0 } else { n - k })
}

/// Tests whether `spectrum` has the conjugate symmetry of a real signal's
/// transform: `|bins[k] − conj(bins[N−k])| ≤ tol` for all mirrored pairs,
/// with real DC and (for even `N`) real Nyquist bins.
pub fn check_hermitian<T: Real>(spectrum: &Spectrum<T>, tol: T) -> bool {
    let bins = spectrum.bins();
    let n = bins.len();
    if bins[0].im.abs() > tol {
        return false;
    }
    if n.is_multiple_of(2) && bins[n / 2].im.abs() > tol {
        return false;
    }
    (1..n).all(|k| (bins[k] - bins[n - k].conj()).norm() <= tol)
}
