//! Windowed-sinc FIR band-pass baseline: design, coefficient file I/O, and
//! group-delay-compensated application.
//!
//! This is the comparison filter, not the main act. It trades stopband
//! rejection against passband flatness through its finite length, which is
//! exactly the trade-off the spectral filter avoids.

use std::io::{self, BufRead, Write};

use crate::error::{Error, Result};
use crate::num::{cast, cast_usize, Real};
use crate::signal::Signal;

/// Window applied to the truncated ideal impulse response.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Window {
    Rectangular,
    #[default]
    Hamming,
    Blackman,
}

impl Window {
    fn weight<T: Real>(self, i: usize, len: usize) -> T {
        if len == 1 {
            return T::one();
        }
        let x = T::TAU() * cast_usize::<T>(i) / cast_usize::<T>(len - 1);
        match self {
            Window::Rectangular => T::one(),
            Window::Hamming => cast::<T>(0.54) - cast::<T>(0.46) * x.cos(),
            Window::Blackman => {
                cast::<T>(0.42) - cast::<T>(0.5) * x.cos() + cast::<T>(0.08) * (x + x).cos()
            }
        }
    }
}

/// A causal FIR filter: real taps plus the sampling rate the design assumed.
#[derive(Debug, Clone, PartialEq)]
pub struct FirFilter<T> {
    coefficients: Vec<T>,
    fs: T,
}

impl<T: Real> FirFilter<T> {
    pub fn new(coefficients: Vec<T>, fs: T) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidInput(
                "FIR filter must have at least one tap".into(),
            ));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput("FIR taps must be finite".into()));
        }
        if !fs.is_finite() || fs <= T::zero() {
            return Err(Error::InvalidInput(format!(
                "sampling rate must be finite and strictly positive, got {fs:?}"
            )));
        }
        Ok(Self { coefficients, fs })
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn fs(&self) -> T {
        self.fs
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Group delay of a linear-phase filter, `(L−1)/2` samples.
    pub fn group_delay_samples(&self) -> usize {
        (self.len() - 1) / 2
    }
}

/// Band edges, tap count, and window for the windowed-sinc designer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirDesignSpec<T> {
    pub f_lo: T,
    pub f_hi: T,
    /// Number of taps; must be odd so the group delay is a whole number of
    /// samples.
    pub numtaps: usize,
    pub window: Window,
}

/// Designs a linear-phase band-pass as the difference of two windowed sincs:
/// `h[i] = w[i]·(sinc_hi[i] − sinc_lo[i])` centered at `(L−1)/2`, where
/// `sinc_c[i] = 2·(f_c/fs)·sinc(2·(f_c/fs)·(i−(L−1)/2))`.
///
/// The first half is computed and mirrored, so `h[i] == h[L−1−i]` holds
/// bit-exactly.
pub fn design_windowed_sinc_bandpass<T: Real>(
    spec: &FirDesignSpec<T>,
    fs: T,
) -> Result<FirFilter<T>> {
    if !fs.is_finite() || fs <= T::zero() {
        return Err(Error::InvalidInput(format!(
            "sampling rate must be finite and strictly positive, got {fs:?}"
        )));
    }
    if spec.numtaps == 0 || spec.numtaps.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!(
            "tap count must be odd and positive, got {}",
            spec.numtaps
        )));
    }
    let nyquist = fs / cast(2.0);
    if !spec.f_lo.is_finite()
        || !spec.f_hi.is_finite()
        || spec.f_lo <= T::zero()
        || spec.f_lo >= spec.f_hi
        || spec.f_hi >= nyquist
    {
        return Err(Error::InvalidInput(format!(
            "band edges ({:?}, {:?}) must satisfy 0 < f_lo < f_hi < {nyquist:?} Hz",
            spec.f_lo, spec.f_hi
        )));
    }
    let len = spec.numtaps;
    let mid = (len - 1) / 2;
    let c_lo = (spec.f_lo + spec.f_lo) / fs;
    let c_hi = (spec.f_hi + spec.f_hi) / fs;
    let mut taps = vec![T::zero(); len];
    for i in 0..=mid {
        let offset = cast_usize::<T>(mid - i); // |i − mid|, exact in fp
        let tap = spec.window.weight::<T>(i, len)
            * (c_hi * sinc(c_hi * offset) - c_lo * sinc(c_lo * offset));
        taps[i] = tap;
        taps[len - 1 - i] = tap;
    }
    FirFilter::new(taps, fs)
}

/// `sin(πx)/(πx)` with the removable singularity filled in.
fn sinc<T: Real>(x: T) -> T {
    if x == T::zero() {
        T::one()
    } else {
        let px = T::PI() * x;
        px.sin() / px
    }
}

/// Reads taps from a coefficient file: either one real number per line, or
/// CSV whose header row names a `b` column. Blank lines are ignored.
pub fn import_coefficients<T: Real, R: BufRead>(reader: R, fs: T) -> Result<FirFilter<T>> {
    let mut taps: Vec<T> = Vec::new();
    let mut b_column: Option<usize> = None;
    let mut plain = true;
    let mut saw_header = false;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Format {
            line: line_no,
            message: format!("read failed: {e}"),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if !saw_header {
            saw_header = true;
            if trimmed.parse::<f64>().is_err() {
                // first line is not a number: treat it as a CSV header
                plain = false;
                b_column = trimmed.split(',').position(|field| field.trim() == "b");
                if b_column.is_none() {
                    return Err(Error::Format {
                        line: line_no,
                        message: format!("header has no column named 'b': {trimmed:?}"),
                    });
                }
                continue;
            }
        }
        let field = if plain {
            trimmed
        } else {
            let col = b_column.expect("CSV mode implies a located column");
            trimmed.split(',').nth(col).ok_or(Error::Format {
                line: line_no,
                message: format!("row has no field for column {col}"),
            })?
        };
        let value = field.trim().parse::<f64>().map_err(|_| Error::Format {
            line: line_no,
            message: format!("not a real number: {field:?}"),
        })?;
        taps.push(cast(value));
    }
    if taps.is_empty() {
        return Err(Error::InvalidInput("empty coefficient file".into()));
    }
    FirFilter::new(taps, fs)
}

/// Writes taps one per line with 17 significant digits, the plain format
/// [`import_coefficients`] reads back bit-faithfully.
pub fn export_coefficients<T: Real, W: Write>(
    filter: &FirFilter<T>,
    writer: &mut W,
) -> io::Result<()> {
    for tap in filter.coefficients() {
        writeln!(writer, "{:.16e}", tap.to_f64().expect("tap fits in f64"))?;
    }
    Ok(())
}

/// Applies the filter by direct-form convolution with zero-padded edges,
/// keeping the input length.
///
/// With `compensate_delay` the output is advanced by the `(L−1)/2`-sample
/// group delay, so filtered features line up in time with the input (the
/// alignment a fair error comparison against a reference needs).
pub fn apply_fir<T: Real>(
    filter: &FirFilter<T>,
    signal: &Signal<T>,
    compensate_delay: bool,
) -> Result<Signal<T>> {
    let taps = filter.coefficients();
    let len = taps.len();
    let n = signal.len();
    if len > n {
        return Err(Error::InvalidInput(format!(
            "filter length {len} exceeds signal length {n}"
        )));
    }
    let x = signal.samples();
    let shift = if compensate_delay { (len - 1) / 2 } else { 0 };
    let mut out = vec![T::zero(); n];
    for (idx, slot) in out.iter_mut().enumerate() {
        // full-convolution index after the delay advance
        let m = idx + shift;
        let i_lo = m.saturating_sub(n - 1);
        let i_hi = m.min(len - 1);
        let mut acc = T::zero();
        for i in i_lo..=i_hi {
            acc += taps[i] * x[m - i];
        }
        *slot = acc;
    }
    Ok(Signal::from_parts(out, signal.fs()))
}
