use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use sepball::certify::{certify_nested_ball_scaled_with, ScaledOptions};
use sepball::families::{horodecki_3x3, max_entangled_vector, pseudopure, sppt_state};
use sepball::matrix::{schatten_norm, spectral_norm};
use sepball::oracle::{ppt_check, separability_decide_low_dim, PptReport};
use sepball::{
    certify_pseudopure, certify_sppt_gap, certify_sppt_eigen, nested_norm, threshold_scan, CertificateReport,
    Certifier, ComplexMatrix, Error, PseudopureParams, QuantumState, ScanOutcome, SpptTriple, Verdict,
};

use crate::args::{CertifyArgs, Cli, FamilyArgs, GenArgs, InputArgs, ScanArgs};
use crate::error::{CliError, CliResult};
use crate::statefile::{matrix_of, StateFile};

pub const EXIT_CERTIFIED: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;

const DEFAULT_TOL: f64 = 1e-9;
const DEFAULT_SCAN_TOL: f64 = 1e-8;

fn tolerance(cli: &Cli, default: f64) -> CliResult<f64> {
    match cli.tol {
        None => Ok(default),
        Some(t) if t > 0.0 && t.is_finite() => Ok(t),
        Some(t) => Err(CliError::usage(format!("--tol must be positive, got {t}"))),
    }
}

fn load(cli: &Cli, input: &InputArgs) -> CliResult<(StateFile, QuantumState)> {
    let file = StateFile::load(&input.input)?;
    let state = file.to_state(cli.profile.as_ref().map(|d| d.0.as_slice()), tolerance(cli, DEFAULT_TOL)?)?;
    Ok((file, state))
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

pub fn gen(cli: &Cli, args: &GenArgs, out: &mut dyn Write) -> CliResult<u8> {
    let (state, meta) = args.family.build()?;
    let file = StateFile::from_state(&state, Some(meta));
    match &args.out {
        Some(path) => {
            file.save(path)?;
            if !cli.json {
                writeln!(out, "wrote {} ({}x{}, dims {:?})", path.display(), state.dim(), state.dim(), file.dims)?;
            }
        }
        None => writeln!(out, "{}", file.to_json()?)?,
    }
    Ok(EXIT_CERTIFIED)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormReport {
    pub dims: Vec<usize>,
    pub normalized: bool,
    pub nested: f64,
    pub frobenius: f64,
    pub spectral: f64,
    pub trace: [f64; 2],
}

/// Distances of the identity-scaled state from `I`.
pub fn norm_report(state: &QuantumState) -> CliResult<NormReport> {
    let delta = state.identity_scaled().shift_diagonal(1.0);
    let tr = state.matrix().trace();
    Ok(NormReport {
        dims: state.profile().dims().to_vec(),
        normalized: state.is_normalized(),
        nested: nested_norm(&delta, state.profile())?,
        frobenius: schatten_norm(&delta, 2.0)?,
        spectral: spectral_norm(&delta),
        trace: [tr.re, tr.im],
    })
}

pub fn norm(cli: &Cli, input: &InputArgs, out: &mut dyn Write) -> CliResult<u8> {
    let (_, state) = load(cli, input)?;
    let r = norm_report(&state)?;
    if cli.json {
        print_json(out, &r)?;
    } else {
        writeln!(out, "dims       {:?}", r.dims)?;
        writeln!(out, "nested     {:.12}", r.nested)?;
        writeln!(out, "frobenius  {:.12}", r.frobenius)?;
        writeln!(out, "spectral   {:.12}", r.spectral)?;
        writeln!(out, "trace      {:.12}{:+.3e}i", r.trace[0], r.trace[1])?;
    }
    Ok(EXIT_CERTIFIED)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportFile {
    pub dims: Vec<usize>,
    pub normalized: bool,
    pub reports: Vec<CertificateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ppt: Option<PptReport>,
    pub certified: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ReportFile {
    pub fn exit_code(&self) -> u8 {
        if self.reports.iter().any(|r| r.verdict == Verdict::InvalidState) {
            EXIT_ERROR
        } else if self.certified {
            EXIT_CERTIFIED
        } else {
            EXIT_INCONCLUSIVE
        }
    }
}

fn same_matrix(a: &ComplexMatrix, b: &ComplexMatrix) -> bool {
    a.rows() == b.rows() && (a - b).max_abs() <= 1e-9 * a.max_abs().max(1.0)
}

fn complex_of(v: &Value) -> Option<Complex64> {
    let [re, im]: [f64; 2] = serde_json::from_value(v.clone()).ok()?;
    Some(Complex64::new(re, im))
}

fn matrix_param(params: &serde_json::Map<String, Value>, key: &str) -> CliResult<ComplexMatrix> {
    let rows: Vec<Vec<[f64; 2]>> = params
        .get(key)
        .cloned()
        .map(serde_json::from_value)
        .transpose()?
        .ok_or_else(|| CliError::usage(format!("metadata lacks '{key}'")))?;
    matrix_of(&rows)
}

fn pseudopure_params(file: &StateFile) -> CliResult<Option<PseudopureParams>> {
    let Some(params) = file.parameters() else {
        return Ok(None);
    };
    let num = |k: &str| params.get(k).and_then(Value::as_f64);
    let params = match file.family() {
        Some("isotropic") => {
            let (Some(d), Some(e)) = (num("d"), num("epsilon")) else {
                return Ok(None);
            };
            let d = d as usize;
            PseudopureParams::new(max_entangled_vector(d), d, d, e)?
        }
        Some("pseudopure") => {
            let (Some(n1), Some(n2), Some(e)) = (num("n1"), num("n2"), num("epsilon")) else {
                return Ok(None);
            };
            let Some(v) = params
                .get("vector")
                .and_then(Value::as_array)
                .and_then(|a| a.iter().map(complex_of).collect::<Option<Vec<_>>>())
            else {
                return Ok(None);
            };
            PseudopureParams::new(v, n1 as usize, n2 as usize, e)?
        }
        _ => return Ok(None),
    };
    Ok(Some(params))
}

/// Structured certificates the file's metadata makes available.
pub fn structured_reports(file: &StateFile, state: &QuantumState) -> CliResult<(Vec<CertificateReport>, Vec<String>)> {
    let mut reports = Vec::new();
    let mut notes = Vec::new();
    let mismatch = |fam: &str| format!("{fam} metadata does not match the matrix; structured certificates skipped");
    match file.family() {
        Some("isotropic" | "pseudopure") => {
            if let Some(params) = pseudopure_params(file)? {
                if same_matrix(pseudopure(&params)?.matrix(), state.matrix()) {
                    reports.push(certify_pseudopure(&params)?);
                } else {
                    notes.push(mismatch("pseudopure"));
                }
            }
        }
        Some("sppt") => {
            let params = file.parameters().ok_or_else(|| CliError::usage("sppt metadata lacks parameters"))?;
            let t = SpptTriple::new(
                matrix_param(params, "x1")?,
                matrix_param(params, "x2")?,
                matrix_param(params, "s")?,
            )?;
            if same_matrix(sppt_state(&t).matrix(), state.matrix()) {
                sppt_reports(&t, &mut reports, &mut notes)?;
            } else {
                notes.push(mismatch("sppt"));
            }
        }
        Some("circulant") => match SpptTriple::from_block_state(state.matrix(), 2) {
            Ok(t) => sppt_reports(&t, &mut reports, &mut notes)?,
            Err(e) => notes.push(format!("circulant factorization unavailable: {e}")),
        },
        _ => {}
    }
    Ok((reports, notes))
}

fn sppt_reports(t: &SpptTriple, reports: &mut Vec<CertificateReport>, notes: &mut Vec<String>) -> CliResult<()> {
    reports.push(certify_sppt_gap(t)?);
    match certify_sppt_eigen(t) {
        Ok(r) => reports.push(r),
        Err(Error::Precondition(msg)) => notes.push(format!("sppt-eigen skipped: {msg}")),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

/// All certificates for a loaded state file.
pub fn certify_file(file: &StateFile, state: &QuantumState, scaled: bool, all: bool, ppt_tol: f64) -> CliResult<ReportFile> {
    let profile = state.profile();
    let mut reports = Vec::new();
    let mut notes = Vec::new();
    for c in [Certifier::Nested, Certifier::Frobenius, Certifier::Spectral, Certifier::Hildebrand] {
        if c.applies_to(profile) {
            reports.push(c.certify(state)?);
        }
    }
    if scaled || all {
        if profile.is_bipartite() || all {
            let opts = ScaledOptions {
                allow_multipartite: all,
            };
            reports.push(certify_nested_ball_scaled_with(state, opts)?);
        } else {
            notes.push("scaled search needs a bipartite profile (use --all to extend it)".into());
        }
    }
    let invalid = reports.iter().any(|r| r.verdict == Verdict::InvalidState);
    if !invalid {
        let (more, more_notes) = structured_reports(file, state)?;
        reports.extend(more);
        notes.extend(more_notes);
    }
    let ppt = if profile.is_bipartite() {
        Some(ppt_check(state, ppt_tol)?)
    } else {
        None
    };
    let certified = !invalid && reports.iter().any(CertificateReport::is_certified);
    Ok(ReportFile {
        dims: profile.dims().to_vec(),
        normalized: state.is_normalized(),
        reports,
        ppt,
        certified,
        notes,
    })
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.6}"))
}

pub fn certify(cli: &Cli, args: &CertifyArgs, out: &mut dyn Write) -> CliResult<u8> {
    let input = InputArgs {
        input: args.input.clone(),
    };
    let (file, state) = load(cli, &input)?;
    let report = certify_file(&file, &state, args.scaled, args.all, tolerance(cli, DEFAULT_TOL)?)?;
    if cli.json {
        print_json(out, &report)?;
    } else {
        writeln!(out, "{:<14} {:>16} {:>16} {:>10}  verdict", "certifier", "norm", "radius", "scale")?;
        for r in &report.reports {
            write!(
                out,
                "{:<14} {:>16.12} {:>16.12} {:>10}  {}",
                r.certifier,
                r.norm_value,
                r.radius,
                fmt_opt(r.scaling_factor),
                r.verdict
            )?;
            if !r.conditions.is_empty() {
                write!(out, " [{}]", r.conditions.join(", "))?;
            }
            writeln!(out)?;
        }
        if let Some(p) = &report.ppt {
            writeln!(
                out,
                "ppt: min eigenvalue of partial transpose {:.12} ({})",
                p.min_pt_eigenvalue,
                if p.is_ppt { "PPT" } else { "not PPT" }
            )?;
        }
        for n in &report.notes {
            writeln!(out, "note: {n}")?;
        }
    }
    Ok(report.exit_code())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanLog {
    pub family: String,
    pub param: String,
    pub certifier: String,
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
    #[serde(flatten)]
    pub outcome: ScanOutcome,
}

/// Boundary of `certifier` along `param` of a family.
pub fn scan_family(
    family: &FamilyArgs,
    param: &str,
    certifier: Certifier,
    lo: Option<f64>,
    hi: Option<f64>,
    tol: f64,
) -> CliResult<ScanLog> {
    family.with_param(param, 0.0)?;
    let (dlo, dhi) = family.family.default_range(param);
    let (lo, hi) = (lo.unwrap_or(dlo), hi.unwrap_or(dhi));
    let outcome = threshold_scan(
        |x| match family.with_param(param, x).and_then(|f| f.build()) {
            Ok((s, _)) => Ok(s),
            Err(CliError::Core(e)) => Err(e),
            Err(other) => Err(Error::Domain(other.to_string())),
        },
        certifier,
        lo,
        hi,
        tol,
    )?;
    Ok(ScanLog {
        family: family.family.name().into(),
        param: param.into(),
        certifier: certifier.name().into(),
        lo,
        hi,
        tol,
        outcome,
    })
}

pub fn scan(cli: &Cli, args: &ScanArgs, out: &mut dyn Write) -> CliResult<u8> {
    let certifier = Certifier::from_str(&args.certifier)?;
    let tol = tolerance(cli, DEFAULT_SCAN_TOL)?;
    let log = scan_family(&args.family, &args.param, certifier, args.lo, args.hi, tol)?;
    if cli.json {
        print_json(out, &log)?;
    } else {
        writeln!(out, "{:.6}", log.outcome.boundary)?;
    }
    Ok(EXIT_CERTIFIED)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Table1Row {
    pub a: f64,
    pub frobenius: f64,
    pub frobenius_published: f64,
    pub nested: f64,
    pub nested_published: f64,
}

const TABLE1_PUBLISHED: [(f64, f64, f64); 3] = [(0.25, 0.3233, 0.3430), (0.50, 0.3955, 0.4275), (0.75, 0.4089, 0.4635)];

/// Direct-ball thresholds `p* = 1/(9·‖ρ - I/9‖)` for `p·ρ + (1 - p)·I/9`.
pub fn table1_rows() -> CliResult<Vec<Table1Row>> {
    TABLE1_PUBLISHED
        .iter()
        .map(|&(a, frob_pub, nested_pub)| {
            let rho = horodecki_3x3(a)?;
            let delta = rho.matrix().shift_diagonal(1.0 / 9.0);
            Ok(Table1Row {
                a,
                frobenius: 1.0 / (9.0 * schatten_norm(&delta, 2.0)?),
                frobenius_published: frob_pub,
                nested: 1.0 / (9.0 * nested_norm(&delta, rho.profile())?),
                nested_published: nested_pub,
            })
        })
        .collect()
}

pub fn table1(cli: &Cli, out: &mut dyn Write) -> CliResult<u8> {
    let rows = table1_rows()?;
    if cli.json {
        print_json(out, &rows)?;
        return Ok(EXIT_CERTIFIED);
    }
    writeln!(out, "{:>5}  {:>9} {:>9} {:>9}  {:>9} {:>9} {:>9}", "a", "frobenius", "published", "dev", "nested", "published", "dev")?;
    for r in rows {
        writeln!(
            out,
            "{:>5.2}  {:>9.4} {:>9.4} {:>9.1e}  {:>9.4} {:>9.4} {:>9.1e}",
            r.a,
            r.frobenius,
            r.frobenius_published,
            (r.frobenius - r.frobenius_published).abs(),
            r.nested,
            r.nested_published,
            (r.nested - r.nested_published).abs()
        )?;
    }
    Ok(EXIT_CERTIFIED)
}

pub fn ppt(cli: &Cli, input: &InputArgs, out: &mut dyn Write) -> CliResult<u8> {
    let (_, state) = load(cli, input)?;
    let report = ppt_check(&state, tolerance(cli, DEFAULT_TOL)?)?;
    let separable = separability_decide_low_dim(&state).ok();
    if cli.json {
        print_json(out, &json!({ "ppt": report, "separable": separable }))?;
    } else {
        writeln!(out, "min eigenvalue of partial transpose {:.12}", report.min_pt_eigenvalue)?;
        writeln!(out, "{}", if report.is_ppt { "PPT" } else { "not PPT" })?;
        if let Some(s) = separable {
            writeln!(out, "{}", if s { "separable" } else { "entangled" })?;
        }
    }
    Ok(if report.is_ppt { EXIT_CERTIFIED } else { EXIT_INCONCLUSIVE })
}
