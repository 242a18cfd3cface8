//! Deterministic test-signal generation: sums of sinusoids plus seeded
//! white Gaussian noise, and the noise-free component references used for
//! error measurements.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::{Distribution, Normal, StandardNormal};

use crate::error::{Error, Result};
use crate::filter::BandSpec;
use crate::num::{cast, cast_usize, Real};
use crate::signal::Signal;

/// One sinusoid: `amplitude·sin(2π·freq·t + phase)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineComponent<T> {
    pub freq: T,
    pub amplitude: T,
    pub phase: T,
}

impl<T: Real> SineComponent<T> {
    /// Zero-phase sine at `freq` Hz.
    pub fn new(freq: T, amplitude: T) -> Self {
        Self {
            freq,
            amplitude,
            phase: T::zero(),
        }
    }

    pub fn with_phase(freq: T, amplitude: T, phase: T) -> Self {
        Self {
            freq,
            amplitude,
            phase,
        }
    }
}

/// Recipe for a sum-of-sines signal on a uniform sample grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiSineSpec<T> {
    components: Vec<SineComponent<T>>,
    fs: T,
    n_samples: usize,
}

impl<T: Real> MultiSineSpec<T> {
    /// Validates the recipe: every component frequency must lie strictly
    /// between 0 and the Nyquist frequency `fs/2`.
    pub fn new(components: Vec<SineComponent<T>>, fs: T, n_samples: usize) -> Result<Self> {
        if !fs.is_finite() || fs <= T::zero() {
            return Err(Error::InvalidInput(format!(
                "sampling rate must be finite and strictly positive, got {fs:?}"
            )));
        }
        if n_samples == 0 {
            return Err(Error::InvalidInput(
                "sample count must be at least 1".into(),
            ));
        }
        let nyquist = fs / cast(2.0);
        for c in &components {
            if !c.freq.is_finite() || c.freq <= T::zero() || c.freq >= nyquist {
                return Err(Error::InvalidInput(format!(
                    "component frequency {:?} Hz outside (0, {nyquist:?}) Hz",
                    c.freq
                )));
            }
            if !c.amplitude.is_finite() || !c.phase.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "component amplitude/phase must be finite, got {:?}/{:?}",
                    c.amplitude, c.phase
                )));
            }
        }
        Ok(Self {
            components,
            fs,
            n_samples,
        })
    }

    pub fn components(&self) -> &[SineComponent<T>] {
        &self.components
    }

    pub fn fs(&self) -> T {
        self.fs
    }

    pub fn n_samples(&self) -> usize {
        self.n_samples
    }
}

/// Additive white Gaussian noise parameters with a fixed seed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseSpec<T> {
    mean: T,
    sd: T,
    seed: u64,
}

impl<T: Real> NoiseSpec<T> {
    pub fn new(mean: T, sd: T, seed: u64) -> Result<Self> {
        if !mean.is_finite() || !sd.is_finite() || sd < T::zero() {
            return Err(Error::InvalidInput(format!(
                "noise mean must be finite and sd finite and >= 0, got {mean:?}/{sd:?}"
            )));
        }
        Ok(Self { mean, sd, seed })
    }

    pub fn mean(&self) -> T {
        self.mean
    }

    pub fn sd(&self) -> T {
        self.sd
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn sum_of_sines<T: Real>(components: &[SineComponent<T>], fs: T, n_samples: usize) -> Signal<T> {
    let samples = (0..n_samples)
        .map(|n| {
            let t = cast_usize::<T>(n) / fs;
            components.iter().fold(T::zero(), |acc, c| {
                acc + c.amplitude * (T::TAU() * c.freq * t + c.phase).sin()
            })
        })
        .collect();
    Signal::from_parts(samples, fs)
}

/// Evaluates the noise-free sum of sines,
/// `samples[n] = Σ_j A_j·sin(2π·f_j·n/fs + φ_j)`.
pub fn synth_multisine<T: Real>(spec: &MultiSineSpec<T>) -> Signal<T> {
    sum_of_sines(&spec.components, spec.fs, spec.n_samples)
}

/// Adds seeded white Gaussian noise.
///
/// Draws come from a ChaCha12 generator (`rand_chacha` 0.3) seeded with
/// `noise.seed` and the Ziggurat-based `rand_distr` normal sampler, so a
/// fixed seed reproduces the same samples bit for bit.
pub fn add_noise<T: Real>(signal: &Signal<T>, noise: &NoiseSpec<T>) -> Signal<T>
where
    StandardNormal: Distribution<T>,
{
    let mut rng = ChaCha12Rng::seed_from_u64(noise.seed);
    let normal = Normal::new(noise.mean, noise.sd).expect("NoiseSpec guarantees sd >= 0");
    let samples = signal
        .samples()
        .iter()
        .map(|&x| x + normal.sample(&mut rng))
        .collect();
    Signal::from_parts(samples, signal.fs())
}

/// Noise-free sum of exactly those components selected by `band`: inside the
/// inclusive interval, or equal to the point frequency. An empty selection
/// yields the zero signal.
pub fn theoretical_component<T: Real>(spec: &MultiSineSpec<T>, band: &BandSpec<T>) -> Signal<T> {
    let selected: Vec<SineComponent<T>> = spec
        .components
        .iter()
        .copied()
        .filter(|c| {
            let in_interval = band
                .interval()
                .is_some_and(|(lo, hi)| c.freq >= lo && c.freq <= hi);
            let at_point = band.point_freq().is_some_and(|p| c.freq == p);
            in_interval || at_point
        })
        .collect();
    sum_of_sines(&selected, spec.fs, spec.n_samples)
}

/// The five-sine benchmark recipe: unit-amplitude components at 3, 10, 20,
/// 40, and 80 Hz, sampled at `fs` for `n_samples` points.
pub fn five_sine_spec<T: Real>(fs: T, n_samples: usize) -> Result<MultiSineSpec<T>> {
    let components = [3.0, 10.0, 20.0, 40.0, 80.0]
        .into_iter()
        .map(|f| SineComponent::new(cast(f), T::one()))
        .collect();
    MultiSineSpec::new(components, fs, n_samples)
}
