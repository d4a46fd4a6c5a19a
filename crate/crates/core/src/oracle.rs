//! Independent checks: partial transpose, the PPT test, exact separability in
//! the smallest dimensions and a from-scratch nested norm.
//!
//! Nothing here calls into the decompositions of [`crate::matrix`]. Hermitian
//! spectra come from closed forms for sizes up to three, and from Householder
//! tridiagonalization plus Sturm-count bisection above that.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::nested::DimensionProfile;
use crate::state::QuantumState;

/// Default relative tolerance on the smallest partial-transpose eigenvalue.
pub const PPT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PptReport {
    pub min_pt_eigenvalue: f64,
    pub is_ppt: bool,
    /// Zero-based index of the transposed subsystem.
    pub subsystem_transposed: usize,
}

fn bipartite_dims(profile: &DimensionProfile) -> Result<(usize, usize)> {
    match profile.dims() {
        [a, b] => Ok((*a, *b)),
        d => Err(Error::Domain(format!(
            "partial transpose needs a bipartite profile, got {} parties",
            d.len()
        ))),
    }
}

/// Transpose of every `n2×n2` block, i.e. the transpose on the second factor.
pub fn partial_transpose_matrix(x: &ComplexMatrix, n1: usize, n2: usize) -> Result<ComplexMatrix> {
    let n = n1 * n2;
    if x.rows() != n || x.cols() != n {
        return Err(Error::Dimension(format!(
            "expected {n}x{n} matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    Ok(ComplexMatrix::from_fn(n, n, |r, c| {
        let (i, k) = (r / n2, r % n2);
        let (j, l) = (c / n2, c % n2);
        x[(i * n2 + l, j * n2 + k)]
    }))
}

pub fn partial_transpose(state: &QuantumState) -> Result<ComplexMatrix> {
    let (n1, n2) = bipartite_dims(state.profile())?;
    partial_transpose_matrix(state.matrix(), n1, n2)
}

/// PPT test with tolerance `tol·max(1, ‖ρ^Γ‖∞)`.
pub fn ppt_check(state: &QuantumState, tol: f64) -> Result<PptReport> {
    let pt = partial_transpose(state)?;
    let ev = hermitian_eigenvalues_bruteforce(&pt)?;
    let min = ev[0];
    let scale = ev.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    Ok(PptReport {
        min_pt_eigenvalue: min,
        is_ppt: min >= -tol * scale,
        subsystem_transposed: 1,
    })
}

/// Exact separability where PPT is also sufficient: 2⊗2, 2⊗3 and 3⊗2.
pub fn separability_decide_low_dim(state: &QuantumState) -> Result<bool> {
    match state.profile().dims() {
        [2, 2] | [2, 3] | [3, 2] => Ok(ppt_check(state, PPT_TOL)?.is_ppt),
        d => Err(Error::Domain(format!(
            "no exact separability decision for profile {:?}",
            d
        ))),
    }
}

fn hermitian_part(x: &ComplexMatrix) -> Result<Vec<Vec<Complex64>>> {
    if !x.is_square() {
        return Err(Error::Dimension(format!(
            "expected square matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let n = x.rows();
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| (x[(i, j)] + x[(j, i)].conj()) * 0.5)
                .collect()
        })
        .collect())
}

/// Ascending eigenvalues of the Hermitian part of `x`.
pub fn hermitian_eigenvalues_bruteforce(x: &ComplexMatrix) -> Result<Vec<f64>> {
    let a = hermitian_part(x)?;
    let mut ev = match a.len() {
        0 => Vec::new(),
        1 => vec![a[0][0].re],
        2 => eig2(&a),
        3 => eig3(&a),
        _ => {
            let (d, e2) = tridiagonalize(a);
            sturm_eigenvalues(&d, &e2)
        }
    };
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

fn eig2(a: &[Vec<Complex64>]) -> Vec<f64> {
    let (p, q) = (a[0][0].re, a[1][1].re);
    let mid = 0.5 * (p + q);
    let rad = (0.5 * (p - q)).hypot(a[0][1].norm());
    vec![mid - rad, mid + rad]
}

fn eig3(a: &[Vec<Complex64>]) -> Vec<f64> {
    let q = (a[0][0].re + a[1][1].re + a[2][2].re) / 3.0;
    let (b0, b1, b2) = (a[0][0].re - q, a[1][1].re - q, a[2][2].re - q);
    let (d, e, f) = (a[0][1], a[0][2], a[1][2]);
    let off = d.norm_sqr() + e.norm_sqr() + f.norm_sqr();
    let p = ((b0 * b0 + b1 * b1 + b2 * b2 + 2.0 * off) / 6.0).sqrt();
    if p == 0.0 {
        return vec![q; 3];
    }
    // det of the shifted matrix, divided by p³
    let det = b0 * b1 * b2 + 2.0 * (d * f * e.conj()).re
        - b0 * f.norm_sqr()
        - b1 * e.norm_sqr()
        - b2 * d.norm_sqr();
    let r = (det / (2.0 * p * p * p)).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let hi = q + 2.0 * p * phi.cos();
    let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    vec![lo, 3.0 * q - hi - lo, hi]
}

/// Householder reduction to real symmetric tridiagonal form.
/// Returns the diagonal and the squared moduli of the off-diagonal.
fn tridiagonalize(mut a: Vec<Vec<Complex64>>) -> (Vec<f64>, Vec<f64>) {
    let n = a.len();
    let mut e2 = vec![0.0; n - 1];
    for k in 0..n - 1 {
        let tail2: f64 = (k + 1..n).map(|i| a[i][k].norm_sqr()).sum();
        let norm = tail2.sqrt();
        if k + 2 == n || norm == 0.0 {
            e2[k] = tail2;
            continue;
        }
        let x0 = a[k + 1][k];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
        let alpha = -phase * norm;
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        for i in k + 1..n {
            v[i] = a[i][k];
        }
        v[k + 1] -= alpha;
        let vn = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        if vn == 0.0 {
            e2[k] = tail2;
            continue;
        }
        for vi in v.iter_mut() {
            *vi /= vn;
        }
        // A ← (I - 2vv†) A (I - 2vv†)
        let w: Vec<Complex64> = (0..n)
            .map(|i| (0..n).map(|j| a[i][j] * v[j]).sum())
            .collect();
        let kappa: Complex64 = (0..n).map(|i| v[i].conj() * w[i]).sum();
        for i in 0..n {
            for j in 0..n {
                a[i][j] += -2.0 * v[i] * w[j].conj() - 2.0 * w[i] * v[j].conj()
                    + 4.0 * kappa * v[i] * v[j].conj();
            }
        }
        e2[k] = norm * norm;
    }
    ((0..n).map(|i| a[i][i].re).collect(), e2)
}

/// Number of eigenvalues strictly below `x`.
fn sturm_count(d: &[f64], e2: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut q = d[0] - x;
    for i in 0.. {
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        if i + 1 == d.len() {
            break;
        }
        q = d[i + 1] - x - e2[i] / q;
    }
    count
}

fn sturm_eigenvalues(d: &[f64], e2: &[f64]) -> Vec<f64> {
    let n = d.len();
    let e: Vec<f64> = e2.iter().map(|v| v.sqrt()).collect();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { e[i - 1] } else { 0.0 } + if i + 1 < n { e[i] } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let scale = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let pivmin = f64::MIN_POSITIVE.max(e2.iter().fold(0.0f64, |m, v| m.max(*v)) * 1e-300);
    lo -= 2.0 * f64::EPSILON * scale;
    hi += 2.0 * f64::EPSILON * scale;
    (0..n)
        .map(|k| {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b || b - a <= 2.0 * f64::EPSILON * scale {
                    break;
                }
                if sturm_count(d, e2, mid, pivmin) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Largest singular value via the Gram matrix on the smaller side.
pub fn spectral_norm_bruteforce(x: &ComplexMatrix) -> f64 {
    let (r, c) = (x.rows(), x.cols());
    if r == 0 || c == 0 {
        return 0.0;
    }
    if r == 1 || c == 1 {
        return x.as_slice().iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    }
    let g = if r <= c {
        ComplexMatrix::from_fn(r, r, |i, j| (0..c).map(|k| x[(i, k)] * x[(j, k)].conj()).sum())
    } else {
        ComplexMatrix::from_fn(c, c, |i, j| (0..r).map(|k| x[(k, i)].conj() * x[(k, j)]).sum())
    };
    let ev = hermitian_eigenvalues_bruteforce(&g).expect("Gram matrix is square");
    ev.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Nested norm recomputed with its own block walk and eigen path.
pub fn nested_norm_bruteforce(x: &ComplexMatrix, profile: &DimensionProfile) -> Result<f64> {
    let n = profile.total_dim();
    if x.rows() != n || x.cols() != n {
        return Err(Error::Profile {
            dims: profile.dims().to_vec(),
            expected: n,
            found: x.rows().max(x.cols()),
        });
    }
    Ok(nested_rec(x, 0, 0, profile.dims()))
}

fn nested_rec(x: &ComplexMatrix, r0: usize, c0: usize, dims: &[usize]) -> f64 {
    let side: usize = dims.iter().product();
    if dims.len() == 1 {
        let block = ComplexMatrix::from_fn(side, side, |i, j| x[(r0 + i, c0 + j)]);
        return spectral_norm_bruteforce(&block);
    }
    let n1 = dims[0];
    let b = side / n1;
    let norms = ComplexMatrix::from_fn(n1, n1, |i, j| {
        Complex64::new(nested_rec(x, r0 + i * b, c0 + j * b, &dims[1..]), 0.0)
    });
    spectral_norm_bruteforce(&norms)
}
