mod common;

use common::*;
use num_complex::Complex64;
use rand::Rng;
use sepball::families::{circulant_2x2, pseudopure, sppt_state, CirculantParams};
use sepball::oracle::{ppt_check, separability_decide_low_dim, PPT_TOL};
use sepball::structured::{
    certify_sppt_gap, certify_sppt_eigen, chunk_norms_sq, gurvits_barnum_epsilon, pseudopure_epsilon_bound,
    pseudopure_epsilon_bound_2xn, PseudopureParams, SpptTriple,
};
use sepball::{certify_nested_ball_scaled, ComplexMatrix};

#[test]
fn pseudopure_bound_states_are_certified_and_ppt() {
    let mut r = rng(41);
    for k in 0..100 {
        let (n1, n2) = [(2, 2), (2, 3), (3, 2), (3, 3)][k % 4];
        let v = rand_unit_vector(&mut r, n1 * n2);
        let eps = pseudopure_epsilon_bound(&v, n1, n2).unwrap();
        assert!(eps > 0.0 && eps <= 1.0);
        let s = pseudopure(&PseudopureParams::new(v, n1, n2, eps).unwrap()).unwrap();
        let rep = certify_nested_ball_scaled(&s).unwrap();
        assert!(rep.is_certified(), "{n1}x{n2}: {rep:?}");
        if n1 * n2 <= 6 {
            assert!(separability_decide_low_dim(&s).unwrap());
        } else {
            assert!(ppt_check(&s, PPT_TOL).unwrap().is_ppt);
        }
    }
}

/// Unit vector on C² ⊗ C^{n2} whose first chunk has squared norm `x`.
fn vector_with_chunk(r: &mut rand::rngs::StdRng, n2: usize, x: f64) -> Vec<Complex64> {
    let a = rand_unit_vector(r, n2);
    let b = rand_unit_vector(r, n2);
    a.iter()
        .map(|z| z * x.sqrt())
        .chain(b.iter().map(|z| z * (1.0 - x).sqrt()))
        .collect()
}

#[test]
fn bound_tends_to_noise_limit_and_is_monotone() {
    let mut r = rng(42);
    let n2 = 3;
    let limit = 1.0 / (2.0 * n2 as f64 + 1.0);
    let v = vector_with_chunk(&mut r, n2, 1e-12);
    assert!((pseudopure_epsilon_bound(&v, 2, n2).unwrap() - limit).abs() < 1e-10);
    let mut last = 0.0;
    for k in 0..=50 {
        let x = 0.5 * k as f64 / 50.0;
        let v = vector_with_chunk(&mut r, n2, x);
        let b = pseudopure_epsilon_bound(&v, 2, n2).unwrap();
        assert!(b >= last - 1e-15, "x = {x}");
        last = b;
    }
}

#[test]
fn two_by_n_beats_gurvits_barnum() {
    // C² ⊗ C¹ is the one exception: √3/(2 + √3) < 1/√2 there.
    assert!(pseudopure_epsilon_bound_2xn(1).unwrap() < gurvits_barnum_epsilon(2, 1).unwrap());
    for n2 in 2..=64 {
        let ours = pseudopure_epsilon_bound_2xn(n2).unwrap();
        let gb = gurvits_barnum_epsilon(2, n2).unwrap();
        assert!(ours > gb, "n2 = {n2}");
        assert!((gb - 1.0 / ((2 * n2 * (2 * n2 - 1)) as f64).sqrt()).abs() < 1e-15);
    }
}

#[test]
fn chunk_bound_beats_gurvits_barnum_under_its_condition() {
    let mut r = rng(43);
    let mut checked = 0;
    while checked < 100 {
        let (n1, n2) = [(2, 2), (2, 3), (3, 3)][checked % 3];
        let n = (n1 * n2) as f64;
        let need = (n + 1.0 - (n * (n - 1.0)).sqrt()) / n;
        let v = rand_unit_vector(&mut r, n1 * n2);
        let min_chunk = chunk_norms_sq(&v, n2).into_iter().fold(f64::INFINITY, f64::min);
        if min_chunk < need {
            continue;
        }
        checked += 1;
        assert!(pseudopure_epsilon_bound(&v, n1, n2).unwrap() >= gurvits_barnum_epsilon(n1, n2).unwrap() - 1e-15);
    }
}

#[test]
fn gap_certified_triples_are_separable() {
    let mut r = rng(44);
    let mut certified = 0;
    for _ in 0..400 {
        let x1 = rand_matrix(&mut r, 2, 2);
        let grow = r.random_range(0.8..1.6);
        let x2 = &x1.scale_real(grow) + &rand_matrix(&mut r, 2, 2).scale_real(0.2);
        let s = rand_matrix(&mut r, 2, 2).scale_real(r.random_range(0.1..1.2));
        let t = SpptTriple::new(x1, x2, s).unwrap();
        let rep = certify_sppt_gap(&t).unwrap();
        let inside = rep.norm_value <= 1.0 + 1e-9;
        assert_eq!(rep.conditions.iter().any(|c| c == "sigma-gap"), inside, "{rep:?}");
        if rep.is_certified() {
            certified += 1;
            assert!(separability_decide_low_dim(&sppt_state(&t)).unwrap());
        }
    }
    assert!(certified >= 50, "{certified}");
}

#[test]
fn eigen_certified_triples_are_separable() {
    let mut r = rng(45);
    let mut certified = [0; 3];
    for _ in 0..3000 {
        let x1 = &ComplexMatrix::identity(2) + &rand_matrix(&mut r, 2, 2).scale_real(0.4);
        let x2 = rand_matrix(&mut r, 2, 2).scale_real(r.random_range(0.2..2.0));
        let s = rand_matrix(&mut r, 2, 2).scale_real(r.random_range(0.0..0.6));
        let t = SpptTriple::new(x1, x2, s).unwrap();
        let rep = certify_sppt_eigen(&t).unwrap();
        for (k, name) in ["i", "ii", "iii"].iter().enumerate() {
            if rep.conditions.iter().any(|c| c == name) {
                certified[k] += 1;
            }
        }
        if rep.is_certified() {
            assert!(separability_decide_low_dim(&sppt_state(&t)).unwrap(), "{rep:?}");
        }
    }
    assert!(certified.iter().all(|&c| c >= 3), "{certified:?}");
}

#[test]
fn circulant_states_with_dominant_corner_meet_condition_one() {
    let mut r = rng(46);
    for _ in 0..50 {
        let a11: f64 = r.random_range(0.05..0.3);
        let b22 = a11 + r.random_range(0.0..0.2);
        let b11: f64 = r.random_range(0.05..0.3);
        let a22 = 1.0 - a11 - b22 - b11;
        if a22 <= 0.0 {
            continue;
        }
        let m = r.random_range(0.0..1.0) * (a11 * a22).min(b11 * b22).sqrt();
        let (pa, pb) = (r.random_range(0.0..6.3f64), r.random_range(0.0..6.3f64));
        let c = circulant_2x2(CirculantParams {
            a11,
            a12: Complex64::from_polar(m, pa),
            a22,
            b11,
            b12: Complex64::from_polar(m, pb),
            b22,
        })
        .unwrap();
        assert!(c.sppt);
        let t = SpptTriple::from_block_state(c.state.matrix(), 2).unwrap();
        let rep = certify_sppt_eigen(&t).unwrap();
        assert!(rep.conditions.iter().any(|c| c == "i"), "{rep:?}");
        assert!(separability_decide_low_dim(&c.state).unwrap());
    }
}
