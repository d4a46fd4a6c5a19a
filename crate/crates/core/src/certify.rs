//! Separable-ball membership tests.
//!
//! Every ball is centred at the identity and states are compared at identity
//! scale. A state inside a ball is certified separable; outside it the result
//! is only inconclusive, since the balls are sufficient conditions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{is_psd, schatten_norm, spectral_norm, ComplexMatrix};
use crate::nested::nested_norm;
use crate::state::QuantumState;

/// Eigenvalue slack used when deciding whether the input is a valid state.
pub const PSD_TOL: f64 = 1e-9;

/// Relative slack for the closed-ball comparison `t <= r`.
pub const BOUNDARY_SLACK: f64 = 1e-12;

/// Slack on the scaled-ball feasibility test.
pub const SCALED_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CertifiedSeparable,
    Inconclusive,
    InvalidState,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::CertifiedSeparable => "CERTIFIED_SEPARABLE",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::InvalidState => "INVALID_STATE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub certifier: String,
    pub norm_value: f64,
    pub radius: f64,
    /// The scale `a` with `ρ/a` tested against the ball, when one was used.
    pub scaling_factor: Option<f64>,
    pub psd_ok: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, f64>,
}

impl CertificateReport {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::CertifiedSeparable
    }

    pub(crate) fn ball(certifier: &str, norm_value: f64, radius: f64, psd_ok: bool) -> Self {
        let verdict = if !psd_ok {
            Verdict::InvalidState
        } else if within_ball(norm_value, radius) {
            Verdict::CertifiedSeparable
        } else {
            Verdict::Inconclusive
        };
        Self {
            certifier: certifier.to_string(),
            norm_value,
            radius,
            scaling_factor: None,
            psd_ok,
            verdict,
            conditions: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub(crate) fn detail(mut self, key: &str, value: f64) -> Self {
        self.details.insert(key.to_string(), value);
        self
    }
}

/// Closed-ball membership with [`BOUNDARY_SLACK`].
pub fn within_ball(norm_value: f64, radius: f64) -> bool {
    norm_value <= radius + BOUNDARY_SLACK * radius.max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certifier {
    Nested,
    NestedScaled,
    Frobenius,
    Spectral,
    Hildebrand,
}

impl Certifier {
    pub const ALL: [Certifier; 5] = [
        Certifier::Nested,
        Certifier::NestedScaled,
        Certifier::Frobenius,
        Certifier::Spectral,
        Certifier::Hildebrand,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Certifier::Nested => "nested",
            Certifier::NestedScaled => "nested-scaled",
            Certifier::Frobenius => "frobenius",
            Certifier::Spectral => "spectral",
            Certifier::Hildebrand => "hildebrand",
        }
    }

    /// Whether the certifier is defined for states on `profile`.
    pub fn applies_to(self, profile: &crate::nested::DimensionProfile) -> bool {
        match self {
            Certifier::Nested => profile.parties() >= 2,
            Certifier::NestedScaled | Certifier::Frobenius | Certifier::Spectral => profile.is_bipartite(),
            Certifier::Hildebrand => profile.is_multiqubit() && profile.parties() >= 3,
        }
    }

    pub fn certify(self, state: &QuantumState) -> Result<CertificateReport> {
        match self {
            Certifier::Nested => certify_nested_ball(state),
            Certifier::NestedScaled => certify_nested_ball_scaled(state),
            Certifier::Frobenius => certify_frobenius_ball(state),
            Certifier::Spectral => certify_spectral_ball(state),
            Certifier::Hildebrand => certify_hildebrand_ball(state),
        }
    }
}

impl fmt::Display for Certifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Certifier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Certifier::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown certifier '{s}'")))
    }
}

/// Identity-scale matrix and whether it is positive semidefinite.
fn prepare(state: &QuantumState) -> Result<(ComplexMatrix, bool)> {
    let rho = state.identity_scaled();
    let psd_ok = is_psd(&rho, PSD_TOL)?;
    Ok((rho, psd_ok))
}

fn require_bipartite(state: &QuantumState, what: &str) -> Result<()> {
    if !state.profile().is_bipartite() {
        return Err(Error::Domain(format!(
            "{what} needs a bipartite profile, got {}",
            state.profile()
        )));
    }
    Ok(())
}

/// Radius `2^(2-m)` of the nested ball for `m >= 2` subsystems.
pub fn nested_ball_radius(parties: usize) -> Result<f64> {
    if parties < 2 {
        return Err(Error::Domain(format!("nested ball needs at least two subsystems, got {parties}")));
    }
    Ok(2f64.powi(2 - parties as i32))
}

/// `‖ρ - I‖_{n1,…,nm} <= 2^(2-m)`.
pub fn certify_nested_ball(state: &QuantumState) -> Result<CertificateReport> {
    let radius = nested_ball_radius(state.profile().parties())?;
    let (rho, psd_ok) = prepare(state)?;
    let t = nested_norm(&rho.shift_diagonal(1.0), state.profile())?;
    Ok(CertificateReport::ball(Certifier::Nested.name(), t, radius, psd_ok))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScaledOptions {
    /// Also search scales for `m > 2` against the multipartite radius.
    pub allow_multipartite: bool,
}

/// Searches a scale `a > 0` with `‖ρ/a - I‖ <= r`.
pub fn certify_nested_ball_scaled(state: &QuantumState) -> Result<CertificateReport> {
    certify_nested_ball_scaled_with(state, ScaledOptions::default())
}

pub fn certify_nested_ball_scaled_with(state: &QuantumState, opts: ScaledOptions) -> Result<CertificateReport> {
    if !opts.allow_multipartite {
        require_bipartite(state, "scaled nested ball")?;
    }
    let profile = state.profile();
    let radius = nested_ball_radius(profile.parties())?;
    let (rho, psd_ok) = prepare(state)?;

    // φ(t) = ‖tρ - I‖ is convex in t = 1/a. Beyond t = (1 + r)/‖ρ‖ the
    // spectral lower bound already exceeds r, and a is capped at 2‖ρ‖.
    // t = 1 is always included so the direct ball is never lost.
    let phi = |t: f64| nested_norm(&rho.scale_real(t).shift_diagonal(1.0), profile);
    let top = spectral_norm(&rho);
    let (t_best, phi_best) = if top == 0.0 {
        (1.0, phi(1.0)?)
    } else {
        let lo = (0.5 / top).min(1.0);
        let hi = ((1.0 + radius) / top).max(1.0);
        let found = ternary_min(phi, lo, hi)?;
        let at_one = phi(1.0)?;
        if at_one <= found.1 {
            (1.0, at_one)
        } else {
            found
        }
    };

    let a = 1.0 / t_best;
    let certified = psd_ok && phi_best <= radius + SCALED_SLACK;
    let mut report = CertificateReport::ball(Certifier::NestedScaled.name(), phi_best, radius, psd_ok);
    if psd_ok {
        report.verdict = if certified {
            Verdict::CertifiedSeparable
        } else {
            Verdict::Inconclusive
        };
    }
    report.scaling_factor = Some(a);
    // g(a) = ‖ρ - aI‖ - a·r, the feasibility margin at the chosen scale.
    Ok(report.detail("g", a * (phi_best - radius)))
}

/// Minimizes a convex function on `[lo, hi]` by ternary search.
fn ternary_min(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    let mut iterations = 0;
    while hi - lo > 1e-13 * hi.max(1.0) && iterations < 400 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1)? <= f(m2)? {
            hi = m2;
        } else {
            lo = m1;
        }
        iterations += 1;
    }
    let t = 0.5 * (lo + hi);
    Ok((t, f(t)?))
}

/// `‖ρ - I‖₂ <= 1` on a bipartite system.
pub fn certify_frobenius_ball(state: &QuantumState) -> Result<CertificateReport> {
    require_bipartite(state, "Frobenius ball")?;
    let (rho, psd_ok) = prepare(state)?;
    let t = schatten_norm(&rho.shift_diagonal(1.0), 2.0)?;
    Ok(CertificateReport::ball(Certifier::Frobenius.name(), t, 1.0, psd_ok))
}

/// `‖ρ - I‖∞ <= 1/n1` on a bipartite system.
pub fn certify_spectral_ball(state: &QuantumState) -> Result<CertificateReport> {
    require_bipartite(state, "spectral ball")?;
    let (rho, psd_ok) = prepare(state)?;
    let t = spectral_norm(&rho.shift_diagonal(1.0));
    let radius = 1.0 / state.profile().first() as f64;
    Ok(CertificateReport::ball(Certifier::Spectral.name(), t, radius, psd_ok))
}

/// Radius `√(54/17)·6^(-m/2)·2^m` of the multiqubit Frobenius ball.
///
/// Only used for `m >= 3`: at `m = 2` it exceeds the exact two-qubit radius 1
/// and would admit entangled states.
pub fn hildebrand_radius(qubits: usize) -> f64 {
    let m = qubits as f64;
    (54.0f64 / 17.0).sqrt() * 6f64.powf(-m / 2.0) * 2f64.powf(m)
}

pub fn certify_hildebrand_ball(state: &QuantumState) -> Result<CertificateReport> {
    if !Certifier::Hildebrand.applies_to(state.profile()) {
        return Err(Error::Domain(format!(
            "multiqubit ball needs at least three qubits, got {}",
            state.profile()
        )));
    }
    let (rho, psd_ok) = prepare(state)?;
    let t = schatten_norm(&rho.shift_diagonal(1.0), 2.0)?;
    let radius = hildebrand_radius(state.profile().parties());
    Ok(CertificateReport::ball(Certifier::Hildebrand.name(), t, radius, psd_ok))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanProbe {
    pub parameter: f64,
    pub certified: bool,
    /// Absent when the parameter lies outside the family's range.
    pub norm_value: Option<f64>,
    pub radius: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub boundary: f64,
    /// True when the certified side is `[lo, boundary]`.
    pub certified_below: bool,
    pub probes: Vec<ScanProbe>,
}

/// Bisection for the point where a monotone verdict flips on `[lo, hi]`.
///
/// Uses at most `ceil(log2((hi - lo)/tol)) + 2` evaluations of `probe`, and the
/// returned boundary is within `tol/2` of the flip point.
pub fn bisect_boundary(
    mut probe: impl FnMut(f64) -> Result<bool>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<(f64, bool)> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Parameter(format!("scan range must satisfy lo < hi, got [{lo}, {hi}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::Parameter(format!("scan tolerance must be positive, got {tol}")));
    }
    let at_lo = probe(lo)?;
    let at_hi = probe(hi)?;
    if at_lo == at_hi {
        return Err(Error::Scan(format!(
            "verdict is {} at both ends of [{lo}, {hi}]; no boundary to locate",
            if at_lo { "certified" } else { "not certified" }
        )));
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if probe(mid)? == at_lo {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((0.5 * (a + b), at_lo))
}

/// Locates where `certifier` stops certifying along a one-parameter family.
///
/// A family that rejects a parameter value with [`Error::Parameter`] counts as
/// not certified there, so scans may run past the edge of a family's range.
pub fn threshold_scan(
    family: impl FnMut(f64) -> Result<QuantumState>,
    certifier: Certifier,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<ScanOutcome> {
    threshold_scan_with(family, |s| certifier.certify(s), lo, hi, tol)
}

pub fn threshold_scan_with(
    mut family: impl FnMut(f64) -> Result<QuantumState>,
    mut certify: impl FnMut(&QuantumState) -> Result<CertificateReport>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<ScanOutcome> {
    let mut probes = Vec::new();
    let (boundary, certified_below) = bisect_boundary(
        |p| {
            let probe = match family(p) {
                Ok(state) => {
                    let report = certify(&state)?;
                    ScanProbe {
                        parameter: p,
                        certified: report.is_certified(),
                        norm_value: Some(report.norm_value),
                        radius: Some(report.radius),
                    }
                }
                Err(Error::Parameter(_)) => ScanProbe {
                    parameter: p,
                    certified: false,
                    norm_value: None,
                    radius: None,
                },
                Err(e) => return Err(e),
            };
            probes.push(probe);
            Ok(probe.certified)
        },
        lo,
        hi,
        tol,
    )?;
    Ok(ScanOutcome {
        boundary,
        certified_below,
        probes,
    })
}
