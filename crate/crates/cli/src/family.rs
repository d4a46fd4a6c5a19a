//! Turns command-line family arguments into states plus the metadata that
//! lets `certify` recover their structure later.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use sepball::families::{
    circulant_2x2, horodecki_3x3, horodecki_mix, isotropic, max_entangled_vector, maximally_mixed, pseudopure,
    sppt_state, werner, CirculantParams,
};
use sepball::{ComplexMatrix, DimensionProfile, PseudopureParams, QuantumState, SpptTriple};

use crate::args::{Family, FamilyArgs, MatrixArg};
use crate::error::{CliError, CliResult};
use crate::statefile::pairs_of;

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::usage(format!("{family} needs --{flag}")))
}

fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn matrix_arg(m: &Option<MatrixArg>, flag: &str) -> CliResult<ComplexMatrix> {
    let m = m
        .as_ref()
        .ok_or_else(|| CliError::usage(format!("sppt needs --{flag}")))?;
    Ok(ComplexMatrix::from_rows(&m.0)?)
}

fn unit(v: &[Complex64]) -> CliResult<Vec<Complex64>> {
    let norm = v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    if !(norm > 0.0) {
        return Err(CliError::usage("pseudopure vector must be nonzero"));
    }
    Ok(v.iter().map(|z| z / norm).collect())
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Werner => "werner",
            Family::Isotropic => "isotropic",
            Family::Horodecki => "horodecki",
            Family::HorodeckiMix => "horodecki-mix",
            Family::Pseudopure => "pseudopure",
            Family::Sppt => "sppt",
            Family::Circulant => "circulant",
            Family::MaximallyMixed => "maximally-mixed",
        }
    }

    /// Default scan range for `param`.
    pub fn default_range(self, param: &str) -> (f64, f64) {
        match (self, param) {
            // runs past b = 1 so the scaled ball's edge at b = 1 (d = 2) is bracketed
            (Family::Werner, "b") => (0.0, 2.0),
            _ => (0.0, 1.0),
        }
    }
}

impl FamilyArgs {
    /// Copy with the scalar parameter `name` set to `value`.
    pub fn with_param(&self, name: &str, value: f64) -> CliResult<FamilyArgs> {
        let mut out = self.clone();
        let slot = match name {
            "b" => &mut out.b,
            "a" => &mut out.a,
            "p" => &mut out.p,
            "epsilon" => &mut out.epsilon,
            "a11" => &mut out.a11,
            "a22" => &mut out.a22,
            "b11" => &mut out.b11,
            "b22" => &mut out.b22,
            other => return Err(CliError::usage(format!("cannot scan parameter '{other}'"))),
        };
        *slot = Some(value);
        Ok(out)
    }

    pub fn build(&self) -> CliResult<(QuantumState, Map<String, Value>)> {
        let fam = self.family.name();
        let (state, params) = match self.family {
            Family::Werner => {
                let d = self.d.unwrap_or(2);
                let b = need(self.b, "b", fam)?;
                (werner(d, b)?, json!({ "d": d, "b": b }))
            }
            Family::Isotropic => {
                let d = self.d.unwrap_or(2);
                let e = need(self.epsilon, "epsilon", fam)?;
                (isotropic(d, e)?, json!({ "d": d, "epsilon": e }))
            }
            Family::Horodecki => {
                let a = need(self.a, "a", fam)?;
                (horodecki_3x3(a)?, json!({ "a": a }))
            }
            Family::HorodeckiMix => {
                let a = need(self.a, "a", fam)?;
                let p = need(self.p, "p", fam)?;
                (horodecki_mix(a, p)?, json!({ "a": a, "p": p }))
            }
            Family::Pseudopure => {
                let dims = self.dims.as_ref().map(|d| d.0.clone()).unwrap_or_else(|| vec![2, 2]);
                let [n1, n2] = dims[..] else {
                    return Err(CliError::usage("pseudopure needs two subsystem dimensions"));
                };
                let e = need(self.epsilon, "epsilon", fam)?;
                let v = match &self.vector {
                    Some(v) => unit(&v.0)?,
                    None if n1 == n2 => max_entangled_vector(n1),
                    None => return Err(CliError::usage("pseudopure needs --vector unless n1 = n2")),
                };
                let params = PseudopureParams::new(v.clone(), n1, n2, e)?;
                let vector: Vec<Value> = v.iter().map(|z| pair(*z)).collect();
                (pseudopure(&params)?, json!({ "n1": n1, "n2": n2, "epsilon": e, "vector": vector }))
            }
            Family::Sppt => {
                let t = SpptTriple::new(matrix_arg(&self.x1, "x1")?, matrix_arg(&self.x2, "x2")?, matrix_arg(&self.s, "s")?)?;
                let params = json!({
                    "x1": pairs_of(t.x1()),
                    "x2": pairs_of(t.x2()),
                    "s": pairs_of(t.s()),
                });
                (sppt_state(&t), params)
            }
            Family::Circulant => {
                let p = CirculantParams {
                    a11: need(self.a11, "a11", fam)?,
                    a12: self.a12.map_or(Complex64::new(0.0, 0.0), |c| c.0),
                    a22: need(self.a22, "a22", fam)?,
                    b11: need(self.b11, "b11", fam)?,
                    b12: self.b12.map_or(Complex64::new(0.0, 0.0), |c| c.0),
                    b22: need(self.b22, "b22", fam)?,
                };
                let c = circulant_2x2(p)?;
                let params = json!({
                    "a11": p.a11, "a12": pair(p.a12), "a22": p.a22,
                    "b11": p.b11, "b12": pair(p.b12), "b22": p.b22,
                    "sppt": c.sppt,
                });
                (c.state, params)
            }
            Family::MaximallyMixed => {
                let dims = self.dims.as_ref().map(|d| d.0.clone()).unwrap_or_else(|| vec![2, 2]);
                let profile = DimensionProfile::new(dims.clone())?;
                (maximally_mixed(&profile), json!({ "dims": dims }))
            }
        };
        let mut meta = Map::new();
        meta.insert("family".into(), Value::from(fam));
        meta.insert("parameters".into(), params);
        Ok((state, meta))
    }
}
