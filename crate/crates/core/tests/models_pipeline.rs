mod common;

use std::f64::consts::{PI, SQRT_2};

use common::{max_abs_diff, phase_distance, rng};
use krylov_core::analysis::{amplitude, angular_frequency, linspace};
use krylov_core::krylov::{default_tol, evolve_states, krylov_complexity, lanczos, spread_complexity, LeakPolicy};
use krylov_core::models::*;
use krylov_core::OrderedBasis;
use rand::Rng;

fn rel_close(x: f64, y: f64, rel: f64, scale: f64) -> bool {
    (x - y).abs() <= rel * scale
}

#[test]
fn single_qubit_closed_form_matches_pipeline() {
    let mut r = rng(31);
    for _ in 0..20 {
        let omega = r.random_range(0.1..5.0);
        let spec = SingleQubitSpec::from_bloch(omega, r.random_range(0.0..PI), r.random_range(0.0..2.0 * PI)).unwrap();
        let (h, seed) = build_single_qubit(&spec);
        let times = linspace(0.0, 2.0 * 2.0 * PI / omega, 400);
        let trace = krylov_complexity(&h, &seed, &times).unwrap();
        let closed: Vec<f64> = times.iter().map(|&t| single_qubit_complexity_closed(&spec, t)).collect();
        assert!(max_abs_diff(&trace.complexity, &closed) < 1e-8);
        let lf: Vec<f64> = times
            .iter()
            .map(|&t| single_qubit_complexity_lanczos_form(spec.a0(), -spec.a0(), spec.b1(), t))
            .collect();
        assert!(max_abs_diff(&lf, &closed) < 1e-12);
    }
}

#[test]
fn two_level_atom_matches_pipeline() {
    let mut r = rng(32);
    for _ in 0..20 {
        let spec = TwoLevelAtomSpec::new(r.random_range(0.1..3.0), r.random_range(-3.0..3.0)).unwrap();
        let h = build_two_level_atom(&spec);
        let times = linspace(0.0, 4.0 * PI / spec.rabi(), 400);
        let closed: Vec<f64> = times.iter().map(|&t| two_level_atom_complexity(&spec, t)).collect();
        for label in ATOM_LABELS {
            let trace = krylov_complexity(&h, &two_level_seed(label).unwrap(), &times).unwrap();
            assert!(max_abs_diff(&trace.complexity, &closed) < 1e-8);
        }
    }
    assert!(two_level_seed("x").is_err());
}

#[test]
fn pair_decomposition_matches_pipeline() {
    let mut r = rng(33);
    for _ in 0..20 {
        let (w1, w2) = (r.random_range(0.2..3.0), r.random_range(0.2..3.0));
        let spec = PairSpec::new(
            w1,
            w2,
            r.random_range(0.0..PI),
            r.random_range(0.0..PI),
            r.random_range(0.0..2.0 * PI),
            r.random_range(0.0..2.0 * PI),
        )
        .unwrap();
        let (h, seed) = build_pair(&spec);
        let times = linspace(0.0, 4.0 * PI / w1.min(w2), 400);
        let trace = krylov_complexity(&h, &seed, &times).unwrap();
        for (t, numeric) in times.iter().zip(&trace.complexity) {
            let pc = noninteracting_pair_complexity(&spec, *t);
            assert!((numeric - pc.total).abs() < 1e-8);
            assert!((numeric - pc.c1 - pc.c2 - pc.f).abs() < 1e-8);
            assert!(pc.f >= -1e-12);
            assert!(pc.total >= pc.c1 + pc.c2 - 1e-12);
            let q1 = SingleQubitSpec::from_bloch(w1, spec.theta1, spec.phi1).unwrap();
            assert!((pc.c1 - single_qubit_complexity_closed(&q1, *t)).abs() < 1e-12);
        }
    }
}

#[test]
fn pair_with_equal_gaps_peaks_at_one_half() {
    let spec = PairSpec::new(1.0, 1.0, PI / 4.0, 3.0 * PI / 4.0, 0.0, 0.0).unwrap();
    let times = linspace(0.0, 4.0 * PI, 2001);
    let f: Vec<f64> = times.iter().map(|&t| noninteracting_pair_complexity(&spec, t).f).collect();
    assert!((amplitude(&f) - 0.5).abs() < 0.01);
}

#[test]
fn global_drive_closed_forms_match_pipeline() {
    let mut r = rng(34);
    for _ in 0..20 {
        let (omega, delta) = (r.random_range(0.2..3.0), r.random_range(-3.0..3.0));
        let h = build_rydberg_pair(&RydbergPairSpec::global(omega, delta, 0.0).unwrap());
        let w = omega.hypot(delta);
        let times = linspace(0.0, 4.0 * PI / w, 400);
        let mut traces = Vec::new();
        for seed in [PairSeed::GG, PairSeed::GE, PairSeed::EG, PairSeed::EE, PairSeed::Plus] {
            let trace = krylov_complexity(&h, &rydberg_seed(seed), &times).unwrap();
            let closed: Vec<f64> = times
                .iter()
                .map(|&t| global_drive_pair_complexity_closed(omega, delta, seed, t).unwrap())
                .collect();
            assert!(max_abs_diff(&trace.complexity, &closed) < 1e-8, "{seed}");
            traces.push(trace.complexity);
        }
        assert!(max_abs_diff(&traces[0], &traces[3]) < 1e-10);
        assert!(max_abs_diff(&traces[1], &traces[2]) < 1e-10);
        let minus = krylov_complexity(&h, &rydberg_seed(PairSeed::Minus), &times).unwrap();
        assert!(minus.complexity.iter().all(|x| x.abs() < 1e-12));
    }
}

#[test]
fn resonant_global_drive_forms() {
    let omega = 1.3;
    for t in linspace(0.0, 10.0, 101) {
        let half = 2.0 * (omega * t / 2.0).sin().powi(2);
        for seed in [PairSeed::GG, PairSeed::GE] {
            assert!((global_drive_pair_complexity_closed(omega, 0.0, seed, t).unwrap() - half).abs() < 1e-10);
        }
        let plus = global_drive_pair_complexity_closed(omega, 0.0, PairSeed::Plus, t).unwrap();
        assert!((plus - (omega * t).sin().powi(2)).abs() < 1e-10);
    }
    assert!(global_drive_pair_complexity_closed(1.0, 0.0, PairSeed::Minus, 1.0).is_err());
}

fn check_reference(reference: &ReferenceLanczos, h: &krylov_core::HermitianOperator, seed: PairSeed, scale: f64) {
    let k = lanczos(h, &rydberg_seed(seed), default_tol(h)).unwrap();
    assert_eq!(k.len(), reference.a.len(), "{seed}");
    for (x, y) in k.a().iter().zip(&reference.a) {
        assert!(rel_close(*x, *y, 1e-9, scale), "{seed}: a {x} vs {y}");
    }
    for (x, y) in k.b().iter().zip(&reference.b) {
        assert!(rel_close(*x, *y, 1e-9, scale), "{seed}: b {x} vs {y}");
    }
    for (u, v) in k.vectors().iter().zip(&reference.vectors) {
        assert!(phase_distance(u, v) < 1e-7, "{seed}");
    }
}

#[test]
fn blockade_reference_data() {
    for v0 in [100.0, 7.0, 0.5] {
        let h = build_rydberg_pair(&RydbergPairSpec::global(1.0, 0.0, v0).unwrap());
        for seed in [PairSeed::GG, PairSeed::Plus, PairSeed::GE] {
            let reference = blockade_reference_lanczos(seed, 1.0, v0).unwrap();
            check_reference(&reference, &h, seed, v0.max(1.0));
        }
    }
    assert!(blockade_reference_lanczos(PairSeed::EE, 1.0, 100.0).is_err());
}

#[test]
fn biased_freezing_reference_data() {
    for (o1, o2, v0) in [(1.0, 25.0, 100.0), (0.3, 2.0, 9.0), (2.0, 1.0, 4.0), (1.0, 1.0, 5.0)] {
        let h = build_rydberg_pair(&RydbergPairSpec::new(o1, o2, 0.0, 0.0, v0).unwrap());
        for seed in [PairSeed::GG, PairSeed::GE] {
            let reference = biased_freezing_reference(seed, o1, o2, v0).unwrap();
            check_reference(&reference.lanczos, &h, seed, v0.max(o2));
        }
    }
}

#[test]
fn blockade_gg_rabi_oscillation() {
    let h = build_rydberg_pair(&RydbergPairSpec::global(1.0, 0.0, 100.0).unwrap());
    let times = linspace(0.0, 8.0 * PI, 4001);
    let trace = krylov_complexity(&h, &rydberg_seed(PairSeed::GG), &times).unwrap();
    assert!((amplitude(&trace.complexity) - 1.0).abs() < 0.01);
    let w = angular_frequency(&times, &trace.complexity).unwrap();
    assert!((w - SQRT_2).abs() < 0.01 * SQRT_2, "{w}");
}

#[test]
fn blockade_plus_in_fixed_ordered_basis() {
    let h = build_rydberg_pair(&RydbergPairSpec::global(1.0, 0.0, 100.0).unwrap());
    let times = linspace(0.0, 8.0 * PI, 4001);
    let seed = rydberg_seed(PairSeed::Plus);
    let trace = krylov_complexity(&h, &seed, &times).unwrap();
    assert!(amplitude(&trace.complexity) > 1.2);
    let basis = OrderedBasis::with_linear_weights(
        [PairSeed::Plus, PairSeed::GG, PairSeed::EE, PairSeed::Minus]
            .into_iter()
            .map(rydberg_seed_vector)
            .collect(),
    )
    .unwrap();
    let states = evolve_states(&h, &seed, &times).unwrap();
    let fixed = spread_complexity(&times, &states, &basis, LeakPolicy::Strict).unwrap();
    assert!((amplitude(&fixed.complexity) - 1.0).abs() < 0.05);
}

#[test]
fn biased_freezing_oscillates_at_the_strong_rabi_frequency() {
    let (o1, o2, v0) = (1.0, 25.0, 100.0);
    let h = build_rydberg_pair(&RydbergPairSpec::new(o1, o2, 0.0, 0.0, v0).unwrap());
    let times = linspace(0.0, 8.0 * PI / o2 * 4.0, 8001);
    for seed in [PairSeed::GG, PairSeed::GE] {
        let trace = krylov_complexity(&h, &rydberg_seed(seed), &times).unwrap();
        assert!((amplitude(&trace.complexity) - 1.0).abs() < 0.05, "{seed}");
        let w = angular_frequency(&times, &trace.complexity).unwrap();
        assert!((w - o2).abs() < 0.02 * o2, "{seed}: {w}");
        let reference = biased_freezing_reference(seed, o1, o2, v0).unwrap();
        let approx: Vec<f64> = times.iter().map(|&t| reference.approx_complexity(t)).collect();
        assert!(max_abs_diff(&trace.complexity, &approx) < 0.1, "{seed}");
    }
}

#[test]
fn ge_asymptotic_vectors_deep_in_regime() {
    let (o1, o2, v0) = (1e-3, 1.0, 1e3);
    let reference = biased_freezing_reference(PairSeed::GE, o1, o2, v0).unwrap();
    assert!(reference.regime);
    for (u, v) in reference.lanczos.vectors.iter().zip(reference.asymptotic_vectors.as_ref().unwrap()) {
        assert!(phase_distance(u, v) < 1e-2);
    }
}
