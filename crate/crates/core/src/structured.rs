//! Closed-form certificates for structured families: pseudopure states and
//! states of the Gram form `X†X` with `X = [[X1, S·X1], [0, X2]]`.

use num_complex::Complex64;

use crate::certify::{within_ball, CertificateReport, Verdict};
use crate::error::{Error, Result};
use crate::matrix::{
    eigenvalues_hermitian, hermitian_function, inverse, is_psd, singular_values, spectral_norm,
    ComplexMatrix,
};
use crate::nested::{nested_norm, DimensionProfile};

const UNIT_TOL: f64 = 1e-12;
const SINGULAR_CUTOFF: f64 = 1e-12;
const COND_SLACK: f64 = 1e-12;

/// A pure state `π = v v†` on `C^{n1} ⊗ C^{n2}` mixed with white noise at weight `ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct PseudopureParams {
    vector: Vec<Complex64>,
    n1: usize,
    n2: usize,
    epsilon: f64,
}

impl PseudopureParams {
    pub fn new(vector: Vec<Complex64>, n1: usize, n2: usize, epsilon: f64) -> Result<Self> {
        check_unit_vector(&vector, n1, n2)?;
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::Parameter(format!("epsilon must lie in [0, 1], got {epsilon}")));
        }
        Ok(Self {
            vector,
            n1,
            n2,
            epsilon,
        })
    }

    pub fn vector(&self) -> &[Complex64] {
        &self.vector
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

fn check_unit_vector(v: &[Complex64], n1: usize, n2: usize) -> Result<()> {
    if n1 == 0 || n2 == 0 || v.len() != n1 * n2 {
        return Err(Error::Dimension(format!(
            "vector of length {} does not fit C^{n1} ⊗ C^{n2}",
            v.len()
        )));
    }
    let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::Domain(format!("pure state vector must be unit length, got norm {norm}")));
    }
    Ok(())
}

/// Squared Euclidean norms of the `n1` consecutive length-`n2` chunks of `v`.
pub fn chunk_norms_sq(v: &[Complex64], n2: usize) -> Vec<f64> {
    v.chunks(n2)
        .map(|c| c.iter().map(Complex64::norm_sqr).sum())
        .collect()
}

/// Largest `ε` for which `ε·π + (1 - ε)·I/(n1·n2)` is certified separable by the
/// chunk-norm condition: `min_i 1/(n1·n2·(1 - ‖X_i‖²) + 1)`.
pub fn pseudopure_epsilon_bound(vector: &[Complex64], n1: usize, n2: usize) -> Result<f64> {
    check_unit_vector(vector, n1, n2)?;
    let n = (n1 * n2) as f64;
    Ok(chunk_norms_sq(vector, n2)
        .into_iter()
        .map(|x| 1.0 / (n * (1.0 - x).max(0.0) + 1.0))
        .fold(f64::INFINITY, f64::min))
}

/// `√3 / (2·n2 + √3)`, valid for every pure state on `C² ⊗ C^{n2}`.
pub fn pseudopure_epsilon_bound_2xn(n2: usize) -> Result<f64> {
    if n2 == 0 {
        return Err(Error::Parameter("n2 must be positive".into()));
    }
    let r3 = 3f64.sqrt();
    Ok(r3 / (2.0 * n2 as f64 + r3))
}

/// Comparator bound `1/√(N(N - 1))` with `N = n1·n2`.
pub fn gurvits_barnum_epsilon(n1: usize, n2: usize) -> Result<f64> {
    let n = (n1 * n2) as f64;
    if n < 2.0 {
        return Err(Error::Domain(format!("need n1·n2 >= 2, got {}", n1 * n2)));
    }
    Ok(1.0 / (n * (n - 1.0)).sqrt())
}

/// Certifies `ρ_{π,ε}` when `ε` does not exceed the best available bound.
pub fn certify_pseudopure(params: &PseudopureParams) -> Result<CertificateReport> {
    let chunk = pseudopure_epsilon_bound(params.vector(), params.n1(), params.n2())?;
    let two_by_n = if params.n1() == 2 {
        Some(pseudopure_epsilon_bound_2xn(params.n2())?)
    } else {
        None
    };
    let bound = two_by_n.map_or(chunk, |b| b.max(chunk));
    let eps = params.epsilon();
    let mut report = CertificateReport::ball("pseudopure", eps, bound, true).detail("chunk_bound", chunk);
    if let Some(b) = two_by_n {
        report = report.detail("two_by_n_bound", b);
        if within_ball(eps, b) {
            report.conditions.push("two-by-n".into());
        }
    }
    if within_ball(eps, chunk) {
        report.conditions.push("chunk-norm".into());
    }
    if let Ok(gb) = gurvits_barnum_epsilon(params.n1(), params.n2()) {
        report = report.detail("gurvits_barnum_bound", gb);
    }
    Ok(report)
}

/// The matrices `(X1, X2, S)` of the block-triangular factor `X = [[X1, S·X1], [0, X2]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpptTriple {
    x1: ComplexMatrix,
    x2: ComplexMatrix,
    s: ComplexMatrix,
}

impl SpptTriple {
    pub fn new(x1: ComplexMatrix, x2: ComplexMatrix, s: ComplexMatrix) -> Result<Self> {
        let n = x1.rows();
        for (name, m) in [("X1", &x1), ("X2", &x2), ("S", &s)] {
            if !m.is_square() || m.rows() != n {
                return Err(Error::Dimension(format!(
                    "{name} must be {n}x{n}, got {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Self { x1, x2, s })
    }

    /// Recovers a factorization of a Hermitian PSD matrix on `C² ⊗ C^{n2}`
    /// whose top-left block is nonsingular: `X1 = ρ11^{1/2}`,
    /// `S = X1^{-1}·ρ12·X1^{-1}`, `X2 = (ρ22 - ρ21·ρ11^{-1}·ρ12)^{1/2}`.
    pub fn from_block_state(rho: &ComplexMatrix, n2: usize) -> Result<Self> {
        DimensionProfile::bipartite(2, n2)?.check(rho)?;
        let r11 = rho.submatrix(0, 0, n2, n2);
        let r12 = rho.submatrix(0, n2, n2, n2);
        let r22 = rho.submatrix(n2, n2, n2, n2);
        let ev = eigenvalues_hermitian(&r11)?;
        let top = ev[n2 - 1];
        if !(top > 0.0) || ev[0] <= SINGULAR_CUTOFF * top {
            return Err(Error::Precondition(
                "top-left block must be positive definite to factor the state".into(),
            ));
        }
        let x1 = hermitian_function(&r11, f64::sqrt)?;
        let x1_inv = hermitian_function(&r11, |l| 1.0 / l.sqrt())?;
        let s = &(&x1_inv * &r12) * &x1_inv;
        let schur = &r22 - &(&(&r12.dagger() * &x1_inv) * &(&x1_inv * &r12));
        let schur = (&schur + &schur.dagger()).scale_real(0.5);
        let sev = eigenvalues_hermitian(&schur)?;
        let scale = rho.max_abs().max(1.0);
        if sev[0] < -1e-9 * scale {
            return Err(Error::Precondition("state is not positive semidefinite".into()));
        }
        let x2 = hermitian_function(&schur, |l| l.max(0.0).sqrt())?;
        Self::new(x1, x2, s)
    }

    pub fn x1(&self) -> &ComplexMatrix {
        &self.x1
    }

    pub fn x2(&self) -> &ComplexMatrix {
        &self.x2
    }

    pub fn s(&self) -> &ComplexMatrix {
        &self.s
    }

    pub fn n2(&self) -> usize {
        self.x1.rows()
    }
}

/// `X1†·S†·S·X1 = X1†·S·S†·X1` up to `tol·max(1, ‖X1‖₂²·‖S‖₂²)`.
pub fn is_sppt(triple: &SpptTriple, tol: f64) -> bool {
    let (x1, s) = (triple.x1(), triple.s());
    let x1d = x1.dagger();
    let sd = s.dagger();
    let lhs = &(&(&x1d * &sd) * s) * x1;
    let rhs = &(&(&x1d * s) * &sd) * x1;
    let scale = (spectral_norm(x1).powi(2) * spectral_norm(s).powi(2)).max(1.0);
    spectral_norm(&(&lhs - &rhs)) <= tol * scale
}

fn sigma_extremes(s: &ComplexMatrix) -> (f64, f64) {
    let sv = singular_values(s);
    (sv[sv.len() - 1], sv[0])
}

fn ge(a: f64, b: f64) -> bool {
    a >= b - COND_SLACK * a.abs().max(b.abs()).max(1.0)
}

/// `[[I, S], [S†, R]]` on `C² ⊗ C^{n2}`.
fn gram_core(s: &ComplexMatrix, r: &ComplexMatrix) -> ComplexMatrix {
    let n = s.rows();
    ComplexMatrix::from_blocks(&[vec![ComplexMatrix::identity(n), s.clone()], vec![s.dagger(), r.clone()]])
        .expect("square blocks of equal size")
}

/// Certificate from `X2†X2 - X1†X1 ⪰ 0` together with `σ_max² - σ_min² <= 1`.
///
/// The reported norm is `‖W/(1 + σ_max²) - I‖_{2,n2}` for
/// `W = [[I, S], [S†, I + S†S]]`, which is at most one exactly when the
/// singular-value gap condition holds.
pub fn certify_sppt_gap(triple: &SpptTriple) -> Result<CertificateReport> {
    let n2 = triple.n2();
    let (smin, smax) = sigma_extremes(triple.s());
    let gap = smax * smax - smin * smin;
    let diff = &(&triple.x2().dagger() * triple.x2()) - &(&triple.x1().dagger() * triple.x1());
    let diff = (&diff + &diff.dagger()).scale_real(0.5);
    let diff_min = eigenvalues_hermitian(&diff)?[0];
    let diff_psd = is_psd(&diff, crate::certify::PSD_TOL)?;

    let sds = &triple.s().dagger() * triple.s();
    let w = gram_core(triple.s(), &sds.shift_diagonal(-1.0));
    let scale = 1.0 + smax * smax;
    let norm = nested_norm(
        &w.scale_real(1.0 / scale).shift_diagonal(1.0),
        &DimensionProfile::bipartite(2, n2)?,
    )?;

    let gap_ok = gap <= 1.0 + COND_SLACK;
    let mut report = CertificateReport::ball("sppt-gap", norm, 1.0, true);
    report.verdict = if diff_psd && gap_ok {
        Verdict::CertifiedSeparable
    } else {
        Verdict::Inconclusive
    };
    report.scaling_factor = Some(scale);
    if diff_psd {
        report.conditions.push("difference-psd".into());
    }
    if gap_ok {
        report.conditions.push("sigma-gap".into());
    }
    Ok(report
        .detail("sigma_min", smin)
        .detail("sigma_max", smax)
        .detail("sigma_gap", gap)
        .detail("difference_min_eigenvalue", diff_min)
        .detail("sppt", if is_sppt(triple, 1e-9) { 1.0 } else { 0.0 }))
}

/// Which of the three eigenvalue conditions on `R = S†S + X1^{-†}X2†X2X1^{-1}` hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenConditions {
    pub eta_min: f64,
    pub eta_max: f64,
    pub sigma_max: f64,
    pub cond_i: bool,
    pub cond_ii: bool,
    pub cond_iii: bool,
}

pub fn eigen_conditions(eta_min: f64, eta_max: f64, sigma_max: f64) -> EigenConditions {
    let s2 = sigma_max * sigma_max;
    let cond_i = ge(eta_min, s2) && ge(eta_max, 1.0);
    let cond_ii = ge(1.0, eta_max) && ge(eta_min * (2.0 * eta_max - 1.0), s2);
    let cond_iii = ge(1.0, eta_min)
        && ge(eta_min, 0.25 * (1.0 + eta_max))
        && ge((2.0 * eta_min - 1.0) * (2.0 * eta_min - eta_max), s2);
    EigenConditions {
        eta_min,
        eta_max,
        sigma_max,
        cond_i,
        cond_ii,
        cond_iii,
    }
}

/// Certificate from the eigenvalues of `R`; needs `X1` nonsingular.
///
/// All satisfied conditions are listed. The reported norm is
/// `min_a ‖Y/a - I‖_{2,n2}` over `a ∈ {η_max, η_min}` with `Y = [[I, S], [S†, R]]`.
pub fn certify_sppt_eigen(triple: &SpptTriple) -> Result<CertificateReport> {
    let n2 = triple.n2();
    let sv1 = singular_values(triple.x1());
    if !(sv1[0] > 0.0) || sv1[n2 - 1] <= SINGULAR_CUTOFF * sv1[0] {
        return Err(Error::Precondition(
            "X1 is singular; use the singular-value gap certificate instead".into(),
        ));
    }
    let x1_inv = inverse(triple.x1())?;
    let x2x1 = triple.x2() * &x1_inv;
    let r = &(&triple.s().dagger() * triple.s()) + &(&x2x1.dagger() * &x2x1);
    let r = (&r + &r.dagger()).scale_real(0.5);
    let eta = eigenvalues_hermitian(&r)?;
    let (eta_min, eta_max) = (eta[0], eta[n2 - 1]);
    let (_, smax) = sigma_extremes(triple.s());
    let conds = eigen_conditions(eta_min, eta_max, smax);

    let y = gram_core(triple.s(), &r);
    let profile = DimensionProfile::bipartite(2, n2)?;
    let mut best: Option<(f64, f64)> = None;
    for a in [eta_max, eta_min] {
        if a > 0.0 {
            let v = nested_norm(&y.scale_real(1.0 / a).shift_diagonal(1.0), &profile)?;
            if best.is_none_or(|(_, b)| v < b) {
                best = Some((a, v));
            }
        }
    }
    let (a, norm) = match best {
        Some(b) => b,
        None => (1.0, nested_norm(&y.shift_diagonal(1.0), &profile)?),
    };

    let certified = conds.cond_i || conds.cond_ii || conds.cond_iii;
    let mut report = CertificateReport::ball("sppt-eigen", norm, 1.0, true);
    report.verdict = if certified {
        Verdict::CertifiedSeparable
    } else {
        Verdict::Inconclusive
    };
    report.scaling_factor = Some(a);
    for (flag, name) in [(conds.cond_i, "i"), (conds.cond_ii, "ii"), (conds.cond_iii, "iii")] {
        if flag {
            report.conditions.push(name.into());
        }
    }
    Ok(report
        .detail("eta_min", eta_min)
        .detail("eta_max", eta_max)
        .detail("sigma_max", smax)
        .detail("sppt", if is_sppt(triple, 1e-9) { 1.0 } else { 0.0 }))
}
