//! Generators for the concrete states used throughout the toolkit.
//!
//! Basis ordering is `|ij⟩ ↦ i·n2 + j`, first factor outermost. Every
//! generator returns a trace-one state except [`sppt_state`], which is the
//! unnormalized Gram matrix `X†X`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, ONE, ZERO};
use crate::nested::DimensionProfile;
use crate::state::QuantumState;
use crate::structured::{PseudopureParams, SpptTriple};

pub fn maximally_mixed(profile: &DimensionProfile) -> QuantumState {
    let n = profile.total_dim();
    let rho = ComplexMatrix::identity(n).scale_real(1.0 / n as f64);
    QuantumState::new(rho, profile.clone(), true).expect("maximally mixed state is valid")
}

/// The flip operator `Σ |ij⟩⟨ji|` on `C^d ⊗ C^d`.
pub fn swap_operator(d: usize) -> ComplexMatrix {
    assert!(d >= 1, "swap operator needs d >= 1");
    let mut eta = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            eta[(i * d + j, j * d + i)] = ONE;
        }
    }
    eta
}

/// Werner state `((d - b)·I + (d·b - 1)·η) / (d³ - d)` for `-1 <= b <= 1`.
pub fn werner(d: usize, b: f64) -> Result<QuantumState> {
    if d < 2 {
        return Err(Error::Parameter(format!("Werner state needs d >= 2, got {d}")));
    }
    if !(-1.0..=1.0).contains(&b) {
        return Err(Error::Parameter(format!("Werner parameter b must lie in [-1, 1], got {b}")));
    }
    let df = d as f64;
    let norm = df * df * df - df;
    let eta = swap_operator(d);
    let rho = ComplexMatrix::from_fn(d * d, d * d, |i, j| {
        let diag = if i == j { df - b } else { 0.0 };
        Complex64::new((diag + (df * b - 1.0) * eta[(i, j)].re) / norm, 0.0)
    });
    QuantumState::new(rho, DimensionProfile::bipartite(d, d)?, true)
}

/// `(1/√d)·Σ|ii⟩`.
pub fn max_entangled_vector(d: usize) -> Vec<Complex64> {
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    let mut v = vec![ZERO; d * d];
    for i in 0..d {
        v[i * d + i] = amp;
    }
    v
}

/// Isotropic state `ε·|Φ+⟩⟨Φ+| + (1 - ε)·I/d²`.
pub fn isotropic(d: usize, epsilon: f64) -> Result<QuantumState> {
    if d < 2 {
        return Err(Error::Parameter(format!("isotropic state needs d >= 2, got {d}")));
    }
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::Parameter(format!("isotropic epsilon must lie in [0, 1], got {epsilon}")));
    }
    pseudopure(&PseudopureParams::new(max_entangled_vector(d), d, d, epsilon)?)
}

/// Horodecki's 3⊗3 bound entangled state, `0 < a < 1`.
pub fn horodecki_3x3(a: f64) -> Result<QuantumState> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Parameter(format!("Horodecki parameter a must lie in (0, 1), got {a}")));
    }
    let mut m = [[0.0f64; 9]; 9];
    for &i in &[0usize, 4, 8] {
        for &j in &[0usize, 4, 8] {
            m[i][j] = a;
        }
    }
    for &i in &[1usize, 2, 3, 5, 7] {
        m[i][i] = a;
    }
    let diag = (1.0 + a) / 2.0;
    let off = (1.0 - a * a).sqrt() / 2.0;
    m[6][6] = diag;
    m[8][8] = diag;
    m[6][8] = off;
    m[8][6] = off;
    let scale = 1.0 / (8.0 * a + 1.0);
    let rho = ComplexMatrix::from_fn(9, 9, |i, j| Complex64::new(m[i][j] * scale, 0.0));
    QuantumState::new(rho, DimensionProfile::bipartite(3, 3)?, true)
}

/// `p·ρ_H(a) + (1 - p)·I/9`.
pub fn horodecki_mix(a: f64, p: f64) -> Result<QuantumState> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("mixing weight p must lie in [0, 1], got {p}")));
    }
    let rho = horodecki_3x3(a)?;
    let mixed = rho
        .matrix()
        .scale_real(p)
        .shift_diagonal(-(1.0 - p) / 9.0);
    QuantumState::new(mixed, DimensionProfile::bipartite(3, 3)?, true)
}

/// `ε·π + (1 - ε)·I/(n1·n2)` with `π = v v†`.
pub fn pseudopure(params: &PseudopureParams) -> Result<QuantumState> {
    let n = params.n1() * params.n2();
    let eps = params.epsilon();
    let rho = ComplexMatrix::outer(params.vector())
        .scale_real(eps)
        .shift_diagonal(-(1.0 - eps) / n as f64);
    QuantumState::new(rho, DimensionProfile::bipartite(params.n1(), params.n2())?, true)
}

/// `X†X` with `X = [[X1, S·X1], [0, X2]]` on `C² ⊗ C^{n2}`, unnormalized.
pub fn sppt_state(triple: &SpptTriple) -> QuantumState {
    let n2 = triple.n2();
    let x = ComplexMatrix::from_blocks(&[
        vec![triple.x1().clone(), triple.s() * triple.x1()],
        vec![ComplexMatrix::zeros(n2, n2), triple.x2().clone()],
    ])
    .expect("blocks share one shape");
    let rho = &x.dagger() * &x;
    // Symmetrize away round-off so the Hermiticity check is exact.
    let rho = (&rho + &rho.dagger()).scale_real(0.5);
    QuantumState::new(rho, DimensionProfile::bipartite(2, n2).expect("n2 >= 1"), false)
        .expect("Gram matrix is Hermitian")
}

/// Free entries of the 2⊗2 circulant family; `a21`, `b21` follow by Hermiticity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirculantParams {
    pub a11: f64,
    pub a12: Complex64,
    pub a22: f64,
    pub b11: f64,
    pub b12: Complex64,
    pub b22: f64,
}

#[derive(Debug, Clone)]
pub struct CirculantState {
    pub state: QuantumState,
    /// `|a12| = |b12|`.
    pub sppt: bool,
}

const CIRCULANT_TOL: f64 = 1e-12;

pub fn circulant_2x2(p: CirculantParams) -> Result<CirculantState> {
    let psd_2x2 = |d1: f64, off: Complex64, d2: f64| {
        d1 >= -CIRCULANT_TOL && d2 >= -CIRCULANT_TOL && d1 * d2 - off.norm_sqr() >= -CIRCULANT_TOL
    };
    if !psd_2x2(p.a11, p.a12, p.a22) || !psd_2x2(p.b11, p.b12, p.b22) {
        return Err(Error::Parameter("circulant blocks must be positive semidefinite".into()));
    }
    let tr = p.a11 + p.a22 + p.b11 + p.b22;
    if (tr - 1.0).abs() > 1e-9 {
        return Err(Error::Parameter(format!("circulant state must have unit trace, got {tr}")));
    }
    let r = |x: f64| Complex64::new(x, 0.0);
    let rows = vec![
        vec![r(p.a11), ZERO, ZERO, p.a12],
        vec![ZERO, r(p.b11), p.b12, ZERO],
        vec![ZERO, p.b12.conj(), r(p.b22), ZERO],
        vec![p.a12.conj(), ZERO, ZERO, r(p.a22)],
    ];
    let state = QuantumState::new(ComplexMatrix::from_rows(&rows)?, DimensionProfile::bipartite(2, 2)?, true)?;
    let sppt = (p.a12.norm() - p.b12.norm()).abs() <= CIRCULANT_TOL;
    Ok(CirculantState { state, sppt })
}
