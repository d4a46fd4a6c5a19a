mod common;

use common::*;
use proptest::prelude::*;
use sepball::matrix::{hermitian_skew_split, schatten_norm, spectral_norm};
use sepball::nested_norm;
use sepball::oracle::nested_norm_bruteforce;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sandwiched_by_spectral_norm((p, x) in bipartite_matrix()) {
        let s = spectral_norm(&x);
        let n = nested_norm(&x, &p).unwrap();
        prop_assert!(s <= n * (1.0 + 1e-12) + 1e-14);
        prop_assert!(n <= p.first() as f64 * s * (1.0 + 1e-12) + 1e-14);
    }

    #[test]
    fn below_frobenius((p, x) in bipartite_matrix()) {
        prop_assert!(nested_norm(&x, &p).unwrap() <= schatten_norm(&x, 2.0).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn dominates_hermitian_and_skew_parts((p, x) in bipartite_matrix()) {
        let (h, s) = hermitian_skew_split(&x).unwrap();
        let n = nested_norm(&x, &p).unwrap();
        prop_assert!(n >= nested_norm(&h, &p).unwrap() - 1e-12);
        prop_assert!(n >= nested_norm(&s, &p).unwrap() - 1e-12);
    }

    #[test]
    fn norm_axioms((p, x, y) in bipartite_pair(), c in complex_strategy()) {
        let nx = nested_norm(&x, &p).unwrap();
        let ny = nested_norm(&y, &p).unwrap();
        prop_assert!(nx >= 0.0);
        let ncx = nested_norm(&x.scale(c), &p).unwrap();
        prop_assert!((ncx - c.norm() * nx).abs() <= 1e-12 * (1.0 + ncx));
        prop_assert!(nested_norm(&(&x + &y), &p).unwrap() <= nx + ny + 1e-12);
    }

    #[test]
    fn submultiplicative((p, x, y) in bipartite_pair()) {
        let nxy = nested_norm(&(&x * &y), &p).unwrap();
        let bound = nested_norm(&x, &p).unwrap() * nested_norm(&y, &p).unwrap();
        prop_assert!(nxy <= bound * (1.0 + 1e-12) + 1e-14);
    }
}

#[test]
fn agrees_with_bruteforce_recursion() {
    let mut r = rng(21);
    for dims in [[2, 2].as_slice(), &[2, 3], &[3, 3], &[2, 2, 2]] {
        let p = profile(dims);
        for _ in 0..50 {
            let x = rand_matrix(&mut r, p.total_dim(), p.total_dim());
            let a = nested_norm(&x, &p).unwrap();
            let b = nested_norm_bruteforce(&x, &p).unwrap();
            assert!((a - b).abs() <= 1e-10, "{dims:?}: {a} vs {b}");
        }
    }
}

#[test]
fn hermitian_inputs_agree_with_bruteforce() {
    let mut r = rng(22);
    let p = profile(&[2, 3]);
    for _ in 0..50 {
        let h = rand_hermitian(&mut r, 6);
        let a = nested_norm(&h, &p).unwrap();
        assert!((a - nested_norm_bruteforce(&h, &p).unwrap()).abs() <= 1e-8);
    }
}
