mod common;

use common::*;
use rand::Rng;
use sepball::families::{horodecki_3x3, horodecki_mix, isotropic, maximally_mixed, werner};
use sepball::matrix::is_psd;
use sepball::oracle::{ppt_check, separability_decide_low_dim, PPT_TOL};
use sepball::{
    certify_frobenius_ball, certify_nested_ball, certify_nested_ball_scaled, certify_spectral_ball, nested_norm,
    threshold_scan, Certifier, ComplexMatrix, DimensionProfile, QuantumState, Verdict,
};

/// `c·(I + t·H)` with `H` of unit nested norm, at identity scale.
fn random_state(r: &mut rand::rngs::StdRng, p: &DimensionProfile) -> QuantumState {
    let n = p.total_dim();
    let mut h = rand_hermitian(r, n);
    if r.random_bool(0.3) {
        // lopsided spectra favour a scale other than one
        let v = rand_unit_vector(r, n);
        h = &h + &ComplexMatrix::outer(&v).scale_real(r.random_range(1.0..4.0));
    }
    let h = h.scale_real(1.0 / nested_norm(&h, p).unwrap());
    let t = r.random_range(0.0..1.6);
    let c = r.random_range(0.2..3.0);
    let rho = (&ComplexMatrix::identity(n) + &h.scale_real(t)).scale_real(c);
    QuantumState::new(rho, p.clone(), false).unwrap()
}

/// First-party and last-party bipartitions.
fn bipartite_cuts(s: &QuantumState) -> Vec<QuantumState> {
    let dims = s.profile().dims();
    let n = s.dim();
    let (first, last) = (dims[0], dims[dims.len() - 1]);
    [(first, n / first), (n / last, last)]
        .into_iter()
        .map(|(a, b)| s.with_profile(DimensionProfile::bipartite(a, b).unwrap()).unwrap())
        .collect()
}

#[test]
fn certified_states_are_ppt() {
    let mut r = rng(31);
    let profiles = [profile(&[2, 2]), profile(&[2, 3]), profile(&[3, 2]), profile(&[3, 3]), profile(&[2, 2, 2]), profile(&[2, 2, 2, 2]), profile(&[2, 3, 2])];
    let mut certified = 0;
    let mut tries = 0;
    while certified < 200 && tries < 20_000 {
        tries += 1;
        let p = &profiles[tries % profiles.len()];
        let s = random_state(&mut r, p);
        let mut any = Vec::new();
        for c in Certifier::ALL.into_iter().filter(|c| c.applies_to(p)) {
            let rep = c.certify(&s).unwrap();
            if rep.is_certified() {
                assert!(rep.psd_ok && is_psd(s.matrix(), 1e-9).unwrap());
                any.push(rep);
            }
        }
        if any.is_empty() {
            continue;
        }
        certified += 1;
        for cut in bipartite_cuts(&s) {
            let ppt = ppt_check(&cut, PPT_TOL).unwrap();
            assert!(ppt.min_pt_eigenvalue >= -1e-9 * s.matrix().max_abs().max(1.0), "{p} {ppt:?} {any:?}");
        }
        if matches!(p.dims(), [2, 2] | [2, 3] | [3, 2]) {
            assert!(separability_decide_low_dim(&s).unwrap());
        }
    }
    assert_eq!(certified, 200, "only {certified} certified states in {tries} draws");
}

#[test]
fn dominance_between_certifiers() {
    let mut r = rng(32);
    for k in 0..300 {
        let p = if k % 2 == 0 { profile(&[2, 2]) } else { profile(&[2, 3]) };
        let s = random_state(&mut r, &p);
        let nested = certify_nested_ball(&s).unwrap().is_certified();
        if certify_frobenius_ball(&s).unwrap().is_certified() {
            assert!(nested);
        }
        if certify_spectral_ball(&s).unwrap().is_certified() {
            assert!(nested);
        }
        if nested {
            assert!(certify_nested_ball_scaled(&s).unwrap().is_certified());
        }
    }
}

#[test]
fn closed_ball_boundary_certifies() {
    // ‖ρ - I‖ = 1 exactly for ρ = I + E11 ⊗ I
    let mut rho = ComplexMatrix::identity(4);
    rho[(0, 0)].re += 1.0;
    rho[(1, 1)].re += 1.0;
    let s = QuantumState::new(rho, profile(&[2, 2]), false).unwrap();
    let rep = certify_nested_ball(&s).unwrap();
    assert_eq!(rep.norm_value, rep.radius);
    assert!(rep.is_certified());
}

#[test]
fn werner_qubits_certified_only_when_separable() {
    for k in 0..=40 {
        let b = -1.0 + 0.05 * k as f64;
        let s = werner(2, b).unwrap();
        let separable = separability_decide_low_dim(&s).unwrap();
        assert_eq!(separable, (-1e-12..=1.0).contains(&b), "b = {b}");
        for c in [Certifier::Nested, Certifier::NestedScaled, Certifier::Frobenius, Certifier::Spectral] {
            if c.certify(&s).unwrap().is_certified() {
                assert!(separable, "{c} certified b = {b}");
            }
        }
    }
}

#[test]
fn generators_are_valid_states() {
    let mut states = vec![maximally_mixed(&profile(&[2, 3, 2]))];
    for d in 2..=4 {
        for b in [-1.0, -0.3, 0.0, 0.5, 1.0] {
            states.push(werner(d, b).unwrap());
        }
        for e in [0.0, 0.4, 1.0] {
            states.push(isotropic(d, e).unwrap());
        }
    }
    for a in [0.1, 0.5, 0.9] {
        states.push(horodecki_3x3(a).unwrap());
        states.push(horodecki_mix(a, 0.3).unwrap());
    }
    for s in states {
        assert_eq!(s.matrix().hermitian_deviation(), 0.0);
        assert!(is_psd(s.matrix(), 1e-12).unwrap());
        assert!((s.matrix().trace().re - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn horodecki_state_is_never_certified() {
    for k in 1..=9 {
        let s = horodecki_3x3(k as f64 / 10.0).unwrap();
        assert!(ppt_check(&s, PPT_TOL).unwrap().is_ppt);
        for c in Certifier::ALL.into_iter().filter(|c| c.applies_to(s.profile())) {
            assert_eq!(c.certify(&s).unwrap().verdict, Verdict::Inconclusive, "{c} at a = {k}/10");
        }
    }
}

#[test]
fn isotropic_qubit_threshold_is_compared_with_ppt_edge() {
    let direct = threshold_scan(|e| isotropic(2, e), Certifier::Nested, 0.0, 1.0, 1e-10).unwrap();
    let scaled = threshold_scan(|e| isotropic(2, e), Certifier::NestedScaled, 0.0, 1.0, 1e-10).unwrap();
    let ppt = sepball::certify::bisect_boundary(
        |e| Ok(ppt_check(&isotropic(2, e)?, 1e-14)?.is_ppt),
        0.0,
        1.0,
        1e-10,
    )
    .unwrap()
    .0;
    assert!((ppt - 1.0 / 3.0).abs() < 1e-9);
    // Both reach the exact edge here; the scaled search may overshoot by its
    // feasibility slack.
    assert!(direct.boundary <= ppt + 1e-9);
    assert!((scaled.boundary - ppt).abs() <= 1e-8, "{} {}", scaled.boundary, ppt);
    assert!((direct.boundary - 1.0 / 3.0).abs() < 1e-9, "{}", direct.boundary);
}
