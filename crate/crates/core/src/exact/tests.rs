use super::*;
use crate::spectral::{forward_dft_oracle, ComplexSignal, SparseSpectrum};
use crate::Complex64;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_spectrum(n: usize, k: usize, rng: &mut ChaCha8Rng) -> SparseSpectrum {
    let support = sample(rng, n, k);
    SparseSpectrum::from_pairs(
        n,
        support.into_iter().map(|s| {
            (
                s,
                Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)),
            )
        }),
    )
    .unwrap()
}

fn tones(n: usize, pairs: &[(usize, f64)]) -> (ComplexSignal, SparseSpectrum) {
    let spec = SparseSpectrum::from_pairs(n, pairs.iter().map(|&(s, v)| (s, Complex64::new(v, 0.0)))).unwrap();
    (ComplexSignal::from_spectrum(&spec).unwrap(), spec)
}

fn assert_exact(got: &SparseSpectrum, want: &SparseSpectrum) {
    let (same, err) = got.compare(want);
    assert!(
        same,
        "support mismatch: {:?} vs {:?}",
        got.indices().collect::<Vec<_>>(),
        want.indices().collect::<Vec<_>>()
    );
    assert!(err <= 1e-7, "relative error {err}");
}

#[test]
fn initial_stride() {
    assert_eq!(ExactConfig::new(8, Some(3)).initial_d().unwrap(), 1);
    assert_eq!(ExactConfig::new(1 << 14, Some(1 << 7)).initial_d().unwrap(), 32);
    assert_eq!(ExactConfig::new(1 << 14, Some(100)).initial_d().unwrap(), 32);
    assert_eq!(ExactConfig::new(8, Some(1)).with_mu(2).initial_d().unwrap(), 4);
    assert_eq!(ExactConfig::new(64, Some(0)).initial_d().unwrap(), 16);
    assert_eq!(ExactConfig::new(16, Some(1 << 20)).initial_d().unwrap(), 1);
}

#[test]
fn config_rejections() {
    let x = ComplexSignal::zeros(16).unwrap();
    assert!(ExactConfig::new(16, Some(2)).with_a_max(5).validate().is_err());
    assert!(ExactConfig::new(16, Some(2)).with_a_max(0).validate().is_err());
    assert!(ExactConfig::new(16, Some(2)).with_mu(3).validate().is_err());
    assert!(ExactConfig::new(16, Some(2)).with_d(3).validate().is_err());
    assert!(ExactConfig::new(12, Some(2)).validate().is_err());
    assert!(ExactConfig::new(16, None).initial_d().is_err());
    assert!(solve_iterative(&x, &ExactConfig::new(32, Some(2))).is_err());
}

#[test]
fn single_tone_both_solvers() {
    let (x, want) = tones(8, &[(5, 1.0)]);
    let oracle = SparseSpectrum::support_of_dense(&forward_dft_oracle(&x), 1e-9);
    assert_exact(&oracle, &want);
    let cfg = ExactConfig::new(8, Some(1)).with_mu(2);
    for sol in [
        solve_noniterative(&x, &cfg).unwrap(),
        solve_iterative(&x, &cfg).unwrap(),
    ] {
        assert!(sol.fully_solved());
        assert_exact(&sol.spectrum, &oracle);
    }
}

#[test]
fn zero_signal_attempts_nothing() {
    let x = ComplexSignal::zeros(64).unwrap();
    let cfg = ExactConfig::new(64, Some(4));
    for sol in [
        solve_noniterative(&x, &cfg).unwrap(),
        solve_iterative(&x, &cfg).unwrap(),
    ] {
        assert_eq!(sol.spectrum.nnz(), 0);
        assert!(sol.trace.iterations.iter().all(|it| it.bins_attempted == 0));
        assert!(sol.fully_solved());
    }
    let est = estimate_sparsity_and_solve(&x, &cfg).unwrap();
    assert_eq!(est.k_hat, 0);
    assert_eq!(est.d, 64);
}

#[test]
fn three_tone_aliasing_example() {
    // Tones at normalized frequencies 0, π/2 and π.
    let (x, want) = tones(8, &[(0, 1.0), (2, 1.0), (4, 1.0)]);
    let cfg = ExactConfig::new(8, Some(3)).with_d(2);
    let sol = solve_iterative(&x, &cfg).unwrap();
    let it = &sol.trace.iterations;
    assert_eq!((it[0].d, it[0].solved.clone()), (2, vec![2]));
    assert_eq!(it[0].bins_deferred, 1);
    assert_eq!((it[1].d, it[1].solved.clone()), (4, vec![0, 4]));
    assert!(sol.fully_solved());
    assert_exact(&sol.spectrum, &want);
}

#[test]
fn one_sparse_solved_in_first_pass() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = 1 << rng.random_range(3..12);
        let spec = random_spectrum(n, 1, &mut rng);
        let x = ComplexSignal::from_spectrum(&spec).unwrap();
        let mu = 1 << rng.random_range(0..3);
        let sol = solve_iterative(&x, &ExactConfig::new(n, Some(1)).with_mu(mu)).unwrap();
        assert_eq!(sol.trace.iterations[0].solved.len(), 1);
        assert!(sol.trace.iterations[1..].iter().all(|it| it.solved.is_empty()));
        assert_exact(&sol.spectrum, &spec);
    }
}

#[test]
fn random_instances_match_oracle_and_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let (n, k) = (1 << 12, 1 << 6);
    for _ in 0..40 {
        let spec = random_spectrum(n, k, &mut rng);
        let x = ComplexSignal::from_spectrum(&spec).unwrap();
        let cfg = ExactConfig::new(n, Some(k));
        let non = solve_noniterative(&x, &cfg).unwrap();
        let it = solve_iterative(&x, &cfg).unwrap();
        if non.fully_solved() {
            assert_exact(&non.spectrum, &spec);
        }
        if it.fully_solved() {
            assert_exact(&it.spectrum, &spec);
        }
        if non.fully_solved() && it.fully_solved() {
            assert_eq!(
                non.spectrum.indices().collect::<Vec<_>>(),
                it.spectrum.indices().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn iterative_trace_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (n, k) = (1 << 12, 1 << 7);
    for _ in 0..30 {
        let spec = random_spectrum(n, k, &mut rng);
        let x = ComplexSignal::from_spectrum(&spec).unwrap();
        let cfg = ExactConfig::new(n, Some(k));
        let d0 = cfg.initial_d().unwrap();
        let sol = solve_iterative(&x, &cfg).unwrap();
        let its = &sol.trace.iterations;
        for w in its.windows(2) {
            assert!(w[1].active_bins <= w[0].active_bins);
        }
        let mut all: Vec<usize> = its.iter().flat_map(|it| it.solved.iter().copied()).collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), total, "solved sets overlap");
        assert!(sol.trace.total_fft_samples <= 2 * (2 * n / d0 * cfg.a_max));
        assert_eq!(
            sol.trace.total_fft_samples,
            its.iter().map(|it| it.fft_samples).sum::<usize>()
        );
    }
}

#[test]
fn estimation_stops_early_for_single_tone() {
    let (x, want) = tones(1 << 10, &[(77, 2.5)]);
    let est = estimate_sparsity_and_solve(&x, &ExactConfig::new(1 << 10, None)).unwrap();
    assert_eq!(est.d, 1 << 10);
    assert_eq!(est.k_hat, 1);
    assert!(!est.dense_fallback);
    assert_exact(&est.spectrum, &want);
}

#[test]
fn estimation_finds_hidden_sparsity() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (n, k) = (1 << 12, 1 << 5);
    for _ in 0..10 {
        let spec = random_spectrum(n, k, &mut rng);
        let x = ComplexSignal::from_spectrum(&spec).unwrap();
        let est = estimate_sparsity_and_solve(&x, &ExactConfig::new(n, None)).unwrap();
        assert_eq!(est.k_hat, k);
        assert_exact(&est.spectrum, &spec);
        let known = solve_noniterative(&x, &ExactConfig::new(n, Some(k)).with_d(est.d)).unwrap();
        assert!(est.fft_samples <= 2 * known.trace.total_fft_samples);
    }
}

#[test]
fn estimation_survives_persistent_collisions() {
    // Two tones that share a bin at every stride down to N/(4K).
    let n = 1 << 10;
    let k = 2;
    let (x, want) = tones(n, &[(3, 1.0), (3 + n / 2, -2.0)]);
    let est = estimate_sparsity_and_solve(&x, &ExactConfig::new(n, None)).unwrap();
    assert_eq!(est.k_hat, k);
    assert_exact(&est.spectrum, &want);
    let cfg = ExactConfig::new(n, Some(k));
    assert_exact(&solve_iterative(&x, &cfg).unwrap().spectrum, &want);
}
