//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).

mod common;

use std::time::Instant;

use brickwall::{
    add_noise, amplitude_estimate, apply_band_pass, apply_fir, design_windowed_sinc_bandpass,
    filter_if, five_sine_spec, forward_transform, inverse_transform_complex,
    inverse_transform_real, rmse, theoretical_component, BandBins, BandSpec, Complex,
    FilterOptions, FirDesignSpec, NoiseSpec, Signal, Spectrum, Window,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

const FS: f64 = 1770.0;
const N: usize = 1770;

fn noisy_five_sine(seed: u64) -> Signal<f64> {
    let spec = five_sine_spec::<f64>(FS, N).unwrap();
    add_noise(
        &brickwall::synth_multisine(&spec),
        &NoiseSpec::new(0.0, 1.0, seed).unwrap(),
    )
}

fn random_signal(rng: &mut ChaCha12Rng, n: usize, fs: f64) -> Signal<f64> {
    Signal::new((0..n).map(|_| rng.gen_range(-1.0..1.0)).collect(), fs).unwrap()
}

#[test]
fn criterion_1_noise_free_perfect_reconstruction() {
    let start = Instant::now();
    let spec = five_sine_spec::<f64>(FS, N).unwrap();
    let clean = brickwall::synth_multisine(&spec);
    let result = filter_if(
        &clean,
        &BandSpec::band(3.0, 80.0),
        &FilterOptions::default(),
    )
    .unwrap();
    let max_err = clean
        .samples()
        .iter()
        .zip(result.filtered_signal.samples())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    let elapsed = start.elapsed();
    assert!(max_err < 1e-6, "max abs error {max_err}");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "[acceptance] criterion 1 (noise-free band-pass returns the input, max err {max_err:.2e}, {elapsed:?}): PASS"
    );
}

#[test]
fn criterion_2_brick_wall_exactness() {
    for seed in [0u64, 1, 2, 42, 777] {
        let noisy = noisy_five_sine(seed);
        let result = filter_if(
            &noisy,
            &BandSpec::band(39.0, 41.0),
            &FilterOptions::default(),
        )
        .unwrap();
        let kept = [39usize, 40, 41, N - 41, N - 40, N - 39];
        for (k, bin) in result.filtered_spectrum.bins().iter().enumerate() {
            if kept.contains(&k) {
                assert!(bin.norm() > 0.0, "seed {seed}: kept bin {k} is empty");
            } else {
                assert_eq!(
                    (bin.re, bin.im),
                    (0.0, 0.0),
                    "seed {seed}: bin {k} not exactly zero"
                );
            }
        }
    }
    println!("[acceptance] criterion 2 (stopband bins exactly zero, bit-exact, 5 seeds): PASS");
}

#[test]
fn criterion_3_hermitian_preservation_and_breakage() {
    let mut rng = ChaCha12Rng::seed_from_u64(2024);
    let cases: [(usize, BandBins); 4] = [
        (8, BandBins { lo: 2, hi: 3 }),
        (9, BandBins { lo: 2, hi: 3 }),
        (64, BandBins { lo: 9, hi: 11 }),
        (1770, BandBins { lo: 39, hi: 41 }),
    ];
    let mut checked = 0usize;
    for &(n, band) in &cases {
        for _ in 0..25 {
            let signal = random_signal(&mut rng, n, n as f64);
            let spectrum = forward_transform(&signal);

            let shifted = apply_band_pass(&spectrum, band, &FilterOptions::default()).unwrap();
            let residue = inverse_transform_complex(&shifted)
                .iter()
                .map(|c| c.im.abs())
                .fold(0.0f64, f64::max);
            assert!(residue < 1e-9, "n={n}: shifted residue {residue}");

            // band away from the self-paired bins 0 and n/2
            assert!(band.hi < n / 2 || n % 2 == 1);
            let unshifted = apply_band_pass(
                &spectrum,
                band,
                &FilterOptions {
                    shifted_symmetry: false,
                    ..FilterOptions::default()
                },
            )
            .unwrap();
            let residue = inverse_transform_complex(&unshifted)
                .iter()
                .map(|c| c.im.abs())
                .fold(0.0f64, f64::max);
            assert!(residue > 1e-12, "n={n}: unshifted residue only {residue}");
            checked += 1;
        }
    }
    assert_eq!(checked, 100);
    println!(
        "[acceptance] criterion 3 (imaginary residue <1e-9 shifted / >1e-12 unshifted, 100 signals, N in {{8,9,64,1770}}): PASS"
    );
}

#[test]
fn criterion_4_error_ordering_against_fir_and_unfiltered() {
    let start = Instant::now();
    let spec = five_sine_spec::<f64>(FS, N).unwrap();
    let fir = design_windowed_sinc_bandpass(
        &FirDesignSpec {
            f_lo: 39.0,
            f_hi: 41.0,
            numtaps: 201,
            window: Window::Hamming,
        },
        FS,
    )
    .unwrap();
    let narrow = BandSpec::band(39.0, 41.0);
    let wide = BandSpec::band(3.0, 80.0);
    let reference_narrow = theoretical_component(&spec, &narrow);
    let reference_wide = theoretical_component(&spec, &wide);

    let (mut beats_fir, mut beats_unfiltered, mut wide_beats_unfiltered) = (0u32, 0u32, 0u32);
    for seed in 0..50u64 {
        let noisy = noisy_five_sine(seed);

        let fft_narrow = filter_if(&noisy, &narrow, &FilterOptions::default())
            .unwrap()
            .filtered_signal;
        let fir_narrow = apply_fir(&fir, &noisy, true).unwrap();
        let rmse_fft = rmse(&fft_narrow, &reference_narrow).unwrap();
        let rmse_fir = rmse(&fir_narrow, &reference_narrow).unwrap();
        let rmse_unfiltered = rmse(&noisy, &reference_narrow).unwrap();
        beats_fir += u32::from(rmse_fft < rmse_fir);
        beats_unfiltered += u32::from(rmse_fft < rmse_unfiltered);

        let fft_wide = filter_if(&noisy, &wide, &FilterOptions::default())
            .unwrap()
            .filtered_signal;
        wide_beats_unfiltered += u32::from(
            rmse(&fft_wide, &reference_wide).unwrap() < rmse(&noisy, &reference_wide).unwrap(),
        );
    }
    let elapsed = start.elapsed();
    assert!(
        beats_fir >= 48,
        "39-41 Hz: beat FIR in {beats_fir}/50 seeds"
    );
    assert!(
        beats_unfiltered >= 48,
        "39-41 Hz: beat unfiltered in {beats_unfiltered}/50 seeds"
    );
    assert_eq!(
        wide_beats_unfiltered, 50,
        "3-80 Hz: beat unfiltered in {wide_beats_unfiltered}/50 seeds"
    );
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}");
    println!(
        "[acceptance] criterion 4 (RMSE ordering: {beats_fir}/50 vs FIR, {beats_unfiltered}/50 vs unfiltered at 39-41 Hz, {wide_beats_unfiltered}/50 at 3-80 Hz, {elapsed:?}): PASS"
    );
}

#[test]
fn criterion_5_amplitude_and_dc_relations() {
    // doubling the imaginary parts of the filtered on-grid sine spectrum
    // doubles the time-domain amplitude
    let amplitude = 1.5;
    let samples: Vec<f64> = (0..N)
        .map(|i| amplitude * (std::f64::consts::TAU * 40.0 * i as f64 / FS).sin())
        .collect();
    let sine = Signal::new(samples, FS).unwrap();
    let filtered = filter_if(
        &sine,
        &BandSpec::band(39.0, 41.0),
        &FilterOptions::default(),
    )
    .unwrap()
    .filtered_spectrum;
    // kept bins of a zero-phase sine are purely imaginary
    for k in [40, N - 40] {
        let bin = filtered.bins()[k];
        assert!(bin.re.abs() < 1e-6 * bin.im.abs());
    }
    let amp_before = amplitude_estimate(&inverse_transform_real(&filtered), 40.0).unwrap();
    let doubled: Vec<Complex<f64>> = filtered
        .bins()
        .iter()
        .map(|b| Complex::new(b.re, 2.0 * b.im))
        .collect();
    let doubled = Spectrum::new(doubled, FS).unwrap();
    let amp_after = amplitude_estimate(&inverse_transform_real(&doubled), 40.0).unwrap();
    assert!(
        (amp_after - 2.0 * amp_before).abs() <= 1e-6 * 2.0 * amp_before,
        "doubling imaginary parts gave {amp_after} from {amp_before}"
    );

    // zeroing bin 0 zeroes the mean; preserving it restores the mean
    let offset_signal = Signal::new(sine.samples().iter().map(|&x| x + 0.5).collect(), FS).unwrap();
    let band = BandSpec::band(39.0, 41.0);
    let zeroed = filter_if(&offset_signal, &band, &FilterOptions::default())
        .unwrap()
        .filtered_signal;
    assert!(zeroed.mean().abs() < 1e-9, "mean {}", zeroed.mean());
    let preserved = filter_if(
        &offset_signal,
        &band,
        &FilterOptions {
            preserve_dc: true,
            ..FilterOptions::default()
        },
    )
    .unwrap()
    .filtered_signal;
    assert!(
        (preserved.mean() - offset_signal.mean()).abs() < 1e-9,
        "mean {} vs {}",
        preserved.mean(),
        offset_signal.mean()
    );
    println!("[acceptance] criterion 5 (imaginary-part doubling doubles amplitude; DC zeroed/preserved): PASS");
}

#[test]
fn criterion_6_band_and_point_agree_on_component_amplitudes() {
    let seeds = 20u64;
    for f in [3.0f64, 10.0, 20.0, 40.0, 80.0] {
        let (mut band_sum, mut point_sum) = (0.0f64, 0.0f64);
        for seed in 0..seeds {
            let noisy = noisy_five_sine(seed);
            let result = filter_if(
                &noisy,
                &BandSpec::band_and_point(f - 1.0, f + 1.0, f),
                &FilterOptions::default(),
            )
            .unwrap();
            band_sum += amplitude_estimate(&result.filtered_signal, f).unwrap();
            point_sum += amplitude_estimate(result.point_signal.as_ref().unwrap(), f).unwrap();
        }
        let band_avg = band_sum / seeds as f64;
        let point_avg = point_sum / seeds as f64;
        assert!(
            (band_avg - point_avg).abs() <= 0.10 * band_avg.max(point_avg),
            "{f} Hz: band {band_avg} vs point {point_avg}"
        );
        for (label, avg) in [("band", band_avg), ("point", point_avg)] {
            assert!(
                (avg - 1.0).abs() <= 0.15,
                "{f} Hz: {label} average amplitude {avg}"
            );
        }
    }
    println!(
        "[acceptance] criterion 6 (band vs point amplitude within 10%, both within 15% of 1.0, 20-seed average): PASS"
    );
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut rng = ChaCha12Rng::seed_from_u64(99);
    for n in 4..=16usize {
        // transforms against the direct O(N²) summation
        let signal = random_signal(&mut rng, n, n as f64);
        let fast = forward_transform(&signal);
        let direct = common::naive_dft(signal.samples());
        for (a, b) in fast.bins().iter().zip(&direct) {
            assert!((a - b).norm() < 1e-9, "n={n}: forward mismatch");
        }
        let back = inverse_transform_real(&fast);
        let direct_back = common::naive_idft(&direct);
        for (a, b) in back.samples().iter().zip(&direct_back) {
            assert!((a - b.re).abs() < 1e-9, "n={n}: inverse mismatch");
        }

        // band-pass kept set against brute-force enumeration, on random
        // Hermitian spectra
        let mut bins: Vec<Complex<f64>> = (0..n)
            .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        bins[0].im = 0.0;
        if n % 2 == 0 {
            bins[n / 2].im = 0.0;
        }
        for k in 1..n.div_ceil(2) {
            bins[n - k] = bins[k].conj();
        }
        let spectrum = Spectrum::new(bins, n as f64).unwrap();
        for lo in 1..=n / 2 {
            for hi in lo..=n / 2 {
                let filtered =
                    apply_band_pass(&spectrum, BandBins { lo, hi }, &FilterOptions::default())
                        .unwrap();
                let kept = common::enumerate_kept_set(n, lo, hi);
                for (k, (&out, &orig)) in filtered.bins().iter().zip(spectrum.bins()).enumerate() {
                    if kept[k] {
                        assert_eq!(out, orig, "n={n} band=({lo},{hi}) bin {k}");
                    } else {
                        assert_eq!(
                            out,
                            Complex::new(0.0, 0.0),
                            "n={n} band=({lo},{hi}) bin {k}"
                        );
                    }
                }
            }
        }
    }
    println!(
        "[acceptance] criterion 7 (transforms match O(N²) DFT; kept sets match brute-force enumeration, N=4..16): PASS"
    );
}
