//! FFT-based brick-wall filtering.
//!
//! The core operation transforms a real signal to the frequency domain,
//! zeroes the bins outside the requested passband together with their
//! conjugate partners `N−k` (skipping bin 0), and transforms back. Kept bins
//! are untouched, so passband amplitudes survive exactly and stopband bins
//! are exactly zero — there is no transition band to trade against.
//!
//! The crate also ships the supporting cast for evaluating that claim:
//! multi-sine synthesis with seeded Gaussian noise ([`synth`]), a
//! windowed-sinc FIR baseline ([`fir`]), and RMSE/amplitude metrics
//! ([`metrics`]).
//!
//! All numeric code is generic over the scalar type via [`Real`] (`f32` or
//! `f64`); the `*64`/`*32` aliases below pin the common concrete choices.
//!
//! ```
//! use brickwall::{filter_if, BandSpec64, FilterOptions64, Signal64};
//!
//! let fs = 64.0;
//! let samples: Vec<f64> = (0..64)
//!     .map(|n| {
//!         let t = n as f64 / fs;
//!         (std::f64::consts::TAU * 3.0 * t).sin()
//!             + (std::f64::consts::TAU * 10.0 * t).sin()
//!     })
//!     .collect();
//! let signal = Signal64::new(samples, fs)?;
//! let result = filter_if(
//!     &signal,
//!     &BandSpec64::band(9.0, 11.0),
//!     &FilterOptions64::default(),
//! )?;
//! // only the 10 Hz component survives, with its amplitude intact
//! assert_eq!(result.filtered_signal.len(), 64);
//! # Ok::<(), brickwall::Error>(())
//! ```

pub mod error;
pub mod filter;
pub mod fir;
pub mod metrics;
mod num;
pub mod signal;
pub mod synth;

pub use error::{Error, Result};
pub use num::Real;
pub use num_complex::Complex;

pub use filter::{
    apply_band_pass, apply_point_pass, band_indices, band_stop, filter_if, high_pass, low_pass,
    BandBins, BandSpec, FilterOptions, FilterResult,
};
pub use fir::{
    apply_fir, design_windowed_sinc_bandpass, export_coefficients, import_coefficients,
    FirDesignSpec, FirFilter, Window,
};
pub use metrics::{amplitude_estimate, magnitude_spectrum, rmse, ComparisonReport, MagnitudeRow};
pub use signal::{
    check_hermitian, conjugate_partner, forward_transform, frequency_grid,
    inverse_transform_complex, inverse_transform_real, FrequencyGrid, Signal, Spectrum,
};
pub use synth::{
    add_noise, five_sine_spec, synth_multisine, theoretical_component, MultiSineSpec, NoiseSpec,
    SineComponent,
};

// Double-precision aliases — the default width for the CLI and tests.
pub type Signal64 = Signal<f64>;
pub type Spectrum64 = Spectrum<f64>;
pub type FrequencyGrid64 = FrequencyGrid<f64>;
pub type BandSpec64 = BandSpec<f64>;
pub type FilterOptions64 = FilterOptions<f64>;
pub type FilterResult64 = FilterResult<f64>;
pub type MultiSineSpec64 = MultiSineSpec<f64>;
pub type NoiseSpec64 = NoiseSpec<f64>;
pub type FirFilter64 = FirFilter<f64>;
pub type FirDesignSpec64 = FirDesignSpec<f64>;
pub type ComparisonReport64 = ComparisonReport<f64>;

// Single-precision aliases.
pub type Signal32 = Signal<f32>;
pub type Spectrum32 = Spectrum<f32>;
pub type FrequencyGrid32 = FrequencyGrid<f32>;
pub type BandSpec32 = BandSpec<f32>;
pub type FilterOptions32 = FilterOptions<f32>;
pub type FilterResult32 = FilterResult<f32>;
pub type MultiSineSpec32 = MultiSineSpec<f32>;
pub type NoiseSpec32 = NoiseSpec<f32>;
pub type FirFilter32 = FirFilter<f32>;
pub type FirDesignSpec32 = FirDesignSpec<f32>;
pub type ComparisonReport32 = ComparisonReport<f32>;
