//! Dense complex matrices and the handful of decompositions the certifiers need.
//!
//! Storage is row-major `Complex64`. Eigen and singular value routines are
//! delegated to `nalgebra`; everything else (products, Kronecker products,
//! Hermitian splitting) is done directly on the row-major buffer.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Default absolute Hermiticity tolerance, scaled by the matrix magnitude.
pub const DEFAULT_HERMITIAN_TOL: f64 = 1e-9;

#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from a row-major buffer. Rejects empty shapes,
    /// length mismatches and non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!(
                "matrix shape must be positive, got {rows}x{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Parameter("matrix entries must be finite".into()));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.concat())
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(rows > 0 && cols > 0, "matrix shape must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| ZERO)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i] } else { ZERO })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// An `n x 1` column.
    pub fn column(v: &[Complex64]) -> Self {
        Self::from_fn(v.len(), 1, |i, _| v[i])
    }

    /// The rank-one projector `v v†`.
    pub fn outer(v: &[Complex64]) -> Self {
        let n = v.len();
        Self::from_fn(n, n, |i, j| v[i] * v[j].conj())
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|z| z * c)
    }

    pub fn scale_real(&self, c: f64) -> Self {
        self.map(|z| z * c)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    /// `self - c·I`.
    pub fn shift_diagonal(&self, c: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out[(i, i)] -= c;
        }
        out
    }

    /// Entrywise Euclidean norm `sqrt(Σ|x_ij|²)`.
    pub fn entrywise_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation `|x_ij - conj(x_ji)|`; infinite for non-square input.
    pub fn hermitian_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut dev = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    /// Copies the `rows x cols` sub-matrix starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "submatrix out of bounds");
        Self::from_fn(rows, cols, |i, j| self[(r0 + i, c0 + j)])
    }

    /// Assembles a square block matrix from a row-major grid of equally sized blocks.
    pub fn from_blocks(grid: &[Vec<ComplexMatrix>]) -> Result<Self> {
        let br = grid.len();
        let bc = grid.first().map_or(0, Vec::len);
        if br == 0 || bc == 0 || grid.iter().any(|r| r.len() != bc) {
            return Err(Error::Dimension("block grid must be rectangular and non-empty".into()));
        }
        let (h, w) = (grid[0][0].rows, grid[0][0].cols);
        if grid.iter().flatten().any(|b| b.rows != h || b.cols != w) {
            return Err(Error::Dimension("blocks must share one shape".into()));
        }
        Ok(Self::from_fn(br * h, bc * w, |i, j| grid[i / h][j / w][(i % h, j % w)]))
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, b) in out_row.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} does not match {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub(crate) fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)])
    }

    pub(crate) fn from_nalgebra(m: &DMatrix<Complex64>) -> Self {
        Self::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)])
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

// Operator impls panic on shape mismatch; use the `try_*` methods for fallible paths.
impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix addition")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix subtraction")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix product")
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.map(|z| -z)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(f, "{:>10.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianCheckPolicy {
    pub tolerance: f64,
}

impl Default for HermitianCheckPolicy {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_HERMITIAN_TOL,
        }
    }
}

impl HermitianCheckPolicy {
    pub fn new(tolerance: f64) -> Result<Self> {
        if !(tolerance >= 0.0) {
            return Err(Error::Parameter(format!(
                "Hermiticity tolerance must be nonnegative, got {tolerance}"
            )));
        }
        Ok(Self { tolerance })
    }

    /// Errors unless `x` is square and Hermitian up to `tolerance·max(1, max|x_ij|)`.
    pub fn check(&self, x: &ComplexMatrix) -> Result<()> {
        if !x.is_square() {
            return Err(Error::Dimension(format!(
                "Hermitian matrix must be square, got {}x{}",
                x.rows(),
                x.cols()
            )));
        }
        let allowed = self.tolerance * x.max_abs().max(1.0);
        let deviation = x.hermitian_deviation();
        if deviation > allowed {
            return Err(Error::NotHermitian {
                deviation,
                tolerance: allowed,
            });
        }
        Ok(())
    }
}

pub fn dagger(x: &ComplexMatrix) -> ComplexMatrix {
    x.dagger()
}

/// Splits `x` into its Hermitian part `(x + x†)/2` and skew-Hermitian part `(x - x†)/2`.
pub fn hermitian_skew_split(x: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !x.is_square() {
        return Err(Error::Dimension(format!(
            "Hermitian/skew split needs a square matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let xd = x.dagger();
    let h = (x + &xd).scale_real(0.5);
    let s = (x - &xd).scale_real(0.5);
    Ok((h, s))
}

/// Singular values in descending order. Works for rectangular input.
pub fn singular_values(x: &ComplexMatrix) -> Vec<f64> {
    let mut sv: Vec<f64> = x.to_nalgebra().singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Largest singular value. For an `n x 1` column this is its Euclidean length.
pub fn spectral_norm(x: &ComplexMatrix) -> f64 {
    if x.cols() == 1 || x.rows() == 1 {
        return x.entrywise_norm();
    }
    singular_values(x).first().copied().unwrap_or(0.0)
}

/// Spectral norm of a real matrix given row-major.
pub(crate) fn real_spectral_norm(n_rows: usize, n_cols: usize, data: &[f64]) -> f64 {
    let m = DMatrix::from_row_slice(n_rows, n_cols, data);
    m.singular_values().iter().copied().fold(0.0, f64::max)
}

/// Schatten p-norm for `1 <= p <= ∞` (pass `f64::INFINITY` for the spectral norm).
pub fn schatten_norm(x: &ComplexMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::Parameter(format!("Schatten order must satisfy p >= 1, got {p}")));
    }
    if p.is_infinite() {
        return Ok(spectral_norm(x));
    }
    let sv = singular_values(x);
    let top = sv.first().copied().unwrap_or(0.0);
    if top == 0.0 {
        return Ok(0.0);
    }
    // Factor out the largest value to keep σ^p in range for large p.
    let sum: f64 = sv.iter().map(|s| (s / top).powf(p)).sum();
    Ok(top * sum.powf(1.0 / p))
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    /// Ascending eigenvalues.
    pub values: Vec<f64>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: ComplexMatrix,
}

pub fn eigh(x: &ComplexMatrix) -> Result<HermitianEigen> {
    eigh_with(x, HermitianCheckPolicy::default())
}

pub fn eigh_with(x: &ComplexMatrix, policy: HermitianCheckPolicy) -> Result<HermitianEigen> {
    policy.check(x)?;
    // Symmetrize so tolerated round-off does not leak into the solver.
    let (h, _) = hermitian_skew_split(x)?;
    let eig = nalgebra::SymmetricEigen::new(h.to_nalgebra());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vecs = ComplexMatrix::from_nalgebra(&eig.eigenvectors);
    let vectors = ComplexMatrix::from_fn(vecs.rows(), vecs.cols(), |i, j| vecs[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

pub fn eigenvalues_hermitian(x: &ComplexMatrix) -> Result<Vec<f64>> {
    eigenvalues_hermitian_with(x, HermitianCheckPolicy::default())
}

pub fn eigenvalues_hermitian_with(x: &ComplexMatrix, policy: HermitianCheckPolicy) -> Result<Vec<f64>> {
    policy.check(x)?;
    let (h, _) = hermitian_skew_split(x)?;
    let mut values: Vec<f64> = h.to_nalgebra().symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

pub fn min_eigenvalue_hermitian(x: &ComplexMatrix) -> Result<f64> {
    min_eigenvalue_hermitian_with(x, HermitianCheckPolicy::default())
}

pub fn min_eigenvalue_hermitian_with(x: &ComplexMatrix, policy: HermitianCheckPolicy) -> Result<f64> {
    Ok(eigenvalues_hermitian_with(x, policy)?[0])
}

/// Positive semidefiniteness with relative slack: `λ_min >= -tol·max(1, ‖x‖∞)`.
pub fn is_psd(x: &ComplexMatrix, tol: f64) -> Result<bool> {
    let values = eigenvalues_hermitian(x)?;
    let scale = values[0].abs().max(values[values.len() - 1].abs()).max(1.0);
    Ok(values[0] >= -tol * scale)
}

/// Inverse of a square matrix; singular input is a precondition error.
pub fn inverse(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !x.is_square() {
        return Err(Error::Dimension(format!("cannot invert a {}x{} matrix", x.rows(), x.cols())));
    }
    x.to_nalgebra()
        .try_inverse()
        .map(|m| ComplexMatrix::from_nalgebra(&m))
        .ok_or_else(|| Error::Precondition("matrix is singular".into()))
}

/// `V·diag(f(λ))·V†` for Hermitian `x = V·diag(λ)·V†`.
pub fn hermitian_function(x: &ComplexMatrix, f: impl Fn(f64) -> f64) -> Result<ComplexMatrix> {
    let HermitianEigen { values, vectors } = eigh(x)?;
    let n = values.len();
    let fv: Vec<f64> = values.into_iter().map(f).collect();
    Ok(ComplexMatrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| vectors[(i, k)] * vectors[(j, k)].conj() * fv[k]).sum()
    }))
}

/// Kronecker product; entry `(i·rows_B + k, j·cols_B + l)` is `A[i][j]·B[k][l]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(a.rows() * br, a.cols() * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn dagger_of_strictly_upper() {
        let x = ComplexMatrix::from_rows(&[vec![ZERO, c(0.0, 1.0)], vec![ZERO, ZERO]]).unwrap();
        let expected = ComplexMatrix::from_rows(&[vec![ZERO, ZERO], vec![c(0.0, -1.0), ZERO]]).unwrap();
        assert_eq!(dagger(&x), expected);
        assert_eq!(dagger(&ComplexMatrix::identity(2)), ComplexMatrix::identity(2));
    }

    #[test]
    fn split_of_hermitian_and_skew() {
        let h = ComplexMatrix::from_rows(&[vec![c(1.0, 0.0), c(2.0, 1.0)], vec![c(2.0, -1.0), c(-3.0, 0.0)]])
            .unwrap();
        let (hh, ss) = hermitian_skew_split(&h).unwrap();
        assert_eq!(hh, h);
        assert_eq!(ss.max_abs(), 0.0);

        let ii = ComplexMatrix::identity(2).scale(c(0.0, 1.0));
        let (hh, ss) = hermitian_skew_split(&ii).unwrap();
        assert_eq!(hh.max_abs(), 0.0);
        assert_eq!(ss, ii);
    }

    #[test]
    fn split_rejects_rectangular() {
        let x = ComplexMatrix::zeros(2, 3);
        assert!(matches!(hermitian_skew_split(&x), Err(Error::Dimension(_))));
    }

    #[test]
    fn spectral_norm_examples() {
        assert!((spectral_norm(&ComplexMatrix::identity(5)) - 1.0).abs() < 1e-14);
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, 0.5], vec![0.5, 0.0]]).unwrap();
        assert!((spectral_norm(&x) - 0.5).abs() < 1e-14);
        let v = ComplexMatrix::column(&[c(3.0, 0.0), c(0.0, 4.0)]);
        assert!((spectral_norm(&v) - 5.0).abs() < 1e-14);
    }

    #[test]
    fn schatten_identity() {
        let i4 = ComplexMatrix::identity(4);
        assert!((schatten_norm(&i4, 2.0).unwrap() - 2.0).abs() < 1e-14);
        assert!((schatten_norm(&i4, 1.0).unwrap() - 4.0).abs() < 1e-12);
        assert!((schatten_norm(&i4, 3.0).unwrap() - 4f64.powf(1.0 / 3.0)).abs() < 1e-12);
        assert!((schatten_norm(&i4, f64::INFINITY).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn schatten_rejects_small_order() {
        let i2 = ComplexMatrix::identity(2);
        assert!(matches!(schatten_norm(&i2, 0.5), Err(Error::Parameter(_))));
        assert!(matches!(schatten_norm(&i2, f64::NAN), Err(Error::Parameter(_))));
    }

    #[test]
    fn min_eigenvalue_examples() {
        assert!((min_eigenvalue_hermitian(&ComplexMatrix::identity(3)).unwrap() - 1.0).abs() < 1e-14);
        let d = ComplexMatrix::from_real_diagonal(&[2.0, -3.0, 0.0]);
        assert!((min_eigenvalue_hermitian(&d).unwrap() + 3.0).abs() < 1e-14);
    }

    #[test]
    fn min_eigenvalue_rejects_non_hermitian() {
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(min_eigenvalue_hermitian(&x), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn hermitian_policy_tolerates_roundoff() {
        let mut x = ComplexMatrix::identity(2);
        x[(0, 1)] = c(1e-12, 0.0);
        assert!(HermitianCheckPolicy::default().check(&x).is_ok());
        assert!(HermitianCheckPolicy::new(-1.0).is_err());
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd(&ComplexMatrix::identity(4), 1e-9).unwrap());
        assert!(!is_psd(&ComplexMatrix::from_real_diagonal(&[1.0, -1e-3]), 1e-9).unwrap());
        let v = [c(0.3, 0.1), c(-0.2, 0.7), c(0.0, -0.4)];
        assert!(is_psd(&ComplexMatrix::outer(&v), 1e-9).unwrap());
    }

    #[test]
    fn kron_examples() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2), ComplexMatrix::identity(4));

        let p0 = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let x = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let k = kron(&p0, &x);
        assert_eq!(k.submatrix(0, 0, 2, 2), x);
        assert_eq!(k.submatrix(0, 2, 2, 2).max_abs(), 0.0);
        assert_eq!(k.submatrix(2, 0, 2, 2).max_abs(), 0.0);
        assert_eq!(k.submatrix(2, 2, 2, 2).max_abs(), 0.0);
    }

    #[test]
    fn new_rejects_bad_buffers() {
        assert!(ComplexMatrix::new(2, 2, vec![ZERO; 3]).is_err());
        assert!(ComplexMatrix::new(0, 2, vec![]).is_err());
        assert!(ComplexMatrix::new(1, 1, vec![c(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn from_blocks_layout() {
        let a = ComplexMatrix::identity(2);
        let z = ComplexMatrix::zeros(2, 2);
        let m = ComplexMatrix::from_blocks(&[vec![a.clone(), z.clone()], vec![z, a]]).unwrap();
        assert_eq!(m, ComplexMatrix::identity(4));
    }
}
