#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sepball::{ComplexMatrix, DimensionProfile};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn rand_complex(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn rand_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| rand_complex(rng))
}

pub fn rand_hermitian(rng: &mut StdRng, n: usize) -> ComplexMatrix {
    let x = rand_matrix(rng, n, n);
    (&x + &x.dagger()).scale_real(0.5)
}

pub fn rand_unit_vector(rng: &mut StdRng, n: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..n).map(|_| rand_complex(rng)).collect();
    let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn profile(dims: &[usize]) -> DimensionProfile {
    DimensionProfile::new(dims.to_vec()).unwrap()
}

pub fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), rows * cols).prop_map(move |v| {
        ComplexMatrix::new(rows, cols, v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()).unwrap()
    })
}

pub fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

/// A bipartite profile with small factors and a random square matrix on it.
pub fn bipartite_matrix() -> impl Strategy<Value = (DimensionProfile, ComplexMatrix)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(n1, n2)| {
        matrix_strategy(n1 * n2, n1 * n2).prop_map(move |x| (profile(&[n1, n2]), x))
    })
}

pub fn bipartite_pair() -> impl Strategy<Value = (DimensionProfile, ComplexMatrix, ComplexMatrix)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(n1, n2)| {
        let n = n1 * n2;
        (matrix_strategy(n, n), matrix_strategy(n, n)).prop_map(move |(x, y)| (profile(&[n1, n2]), x, y))
    })
}
