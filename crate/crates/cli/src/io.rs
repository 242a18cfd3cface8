//! CSV file formats: signal files with a `t,y` header and full-spectrum
//! files with a `k,freq_hz,re,im,mag` header.
//!
//! Numbers are written with 17 significant digits so files round-trip
//! 64-bit floats bit-faithfully. The sampling rate of a signal file is
//! inferred from its time column.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use brickwall::{Signal64, Spectrum64};

use crate::CliError;

/// Maximum relative deviation of any time step from the mean step.
const STEP_JITTER_TOL: f64 = 1e-9;

pub fn write_signal(path: &Path, signal: &Signal64) -> Result<(), CliError> {
    let mut text = String::with_capacity(signal.len() * 48 + 8);
    text.push_str("t,y\n");
    for (n, &y) in signal.samples().iter().enumerate() {
        let t = n as f64 / signal.fs();
        writeln!(text, "{t:.16e},{y:.16e}").expect("string write cannot fail");
    }
    fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

/// Reads a signal file, inferring the sampling rate from the time column.
///
/// The step must be uniform within `1e-9` relative jitter. The inferred rate
/// is rounded to 12 significant digits so that rates which were exact before
/// the 17-digit serialization (like 1770 Hz) come back exact.
pub fn read_signal(path: &Path) -> Result<Signal64, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = text.lines().enumerate();
    let header = lines
        .next()
        .ok_or_else(|| CliError::Usage(format!("{}: empty file", path.display())))?
        .1;
    if header.trim() != "t,y" {
        return Err(CliError::Usage(format!(
            "{}:1: expected header \"t,y\", got {header:?}",
            path.display()
        )));
    }
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 2 {
            return Err(CliError::Usage(format!(
                "{}:{line_no}: expected 2 fields, got {}",
                path.display(),
                fields.len()
            )));
        }
        times.push(parse_field(path, line_no, fields[0])?);
        values.push(parse_field(path, line_no, fields[1])?);
    }
    if times.len() < 2 {
        return Err(CliError::Usage(format!(
            "{}: need at least 2 data rows to infer the sampling rate",
            path.display()
        )));
    }
    let n = times.len();
    let dt = (times[n - 1] - times[0]) / (n - 1) as f64;
    if !dt.is_finite() || dt <= 0.0 {
        return Err(CliError::Usage(format!(
            "{}: time column must be strictly increasing",
            path.display()
        )));
    }
    for (i, pair) in times.windows(2).enumerate() {
        let step = pair[1] - pair[0];
        if (step - dt).abs() > STEP_JITTER_TOL * dt {
            return Err(CliError::Usage(format!(
                "{}:{}: nonuniform time step {step:e} (expected {dt:e})",
                path.display(),
                i + 3
            )));
        }
    }
    let fs = round_sig12((n - 1) as f64 / (times[n - 1] - times[0]));
    Signal64::new(values, fs).map_err(CliError::from)
}

pub fn write_spectrum(path: &Path, spectrum: &Spectrum64) -> Result<(), CliError> {
    let grid = spectrum.grid();
    let mut text = String::with_capacity(spectrum.len() * 96 + 24);
    text.push_str("k,freq_hz,re,im,mag\n");
    for (k, bin) in spectrum.bins().iter().enumerate() {
        writeln!(
            text,
            "{k},{:.16e},{:.16e},{:.16e},{:.16e}",
            grid.freqs()[k],
            bin.re,
            bin.im,
            bin.norm()
        )
        .expect("string write cannot fail");
    }
    fs::write(path, text)
        .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))
}

fn parse_field(path: &Path, line_no: usize, field: &str) -> Result<f64, CliError> {
    field.trim().parse::<f64>().map_err(|_| {
        CliError::Usage(format!(
            "{}:{line_no}: not a real number: {field:?}",
            path.display()
        ))
    })
}

/// Rounds to 12 significant digits, absorbing the quantization the
/// 17-digit time column introduces into the inferred rate.
fn round_sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted f64 reparses")
}
