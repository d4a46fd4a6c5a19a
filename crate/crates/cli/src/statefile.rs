//! JSON interchange for states: `dims`, `normalized`, `matrix` as row-major
//! `[re, im]` pairs, and free-form `metadata`.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use sepball::{ComplexMatrix, DimensionProfile, HermitianCheckPolicy, QuantumState};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub normalized: bool,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Map<String, Value>>,
}

pub fn pairs_of(m: &ComplexMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

pub fn matrix_of(rows: &[Vec<[f64; 2]>]) -> CliResult<ComplexMatrix> {
    let rows: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
        .collect();
    Ok(ComplexMatrix::from_rows(&rows)?)
}

impl StateFile {
    pub fn from_state(state: &QuantumState, metadata: Option<Map<String, Value>>) -> Self {
        Self {
            dims: state.profile().dims().to_vec(),
            normalized: state.is_normalized(),
            matrix: pairs_of(state.matrix()),
            metadata,
        }
    }

    /// Validates the payload; `profile` replaces the stored dims when given.
    pub fn to_state(&self, profile: Option<&[usize]>, hermitian_tol: f64) -> CliResult<QuantumState> {
        let dims = profile.unwrap_or(&self.dims).to_vec();
        let profile = DimensionProfile::new(dims)?;
        let matrix = matrix_of(&self.matrix)?;
        let policy = HermitianCheckPolicy::new(hermitian_tol)?;
        Ok(QuantumState::with_policy(matrix, profile, self.normalized, policy)?)
    }

    pub fn family(&self) -> Option<&str> {
        self.metadata.as_ref()?.get("family")?.as_str()
    }

    pub fn parameters(&self) -> Option<&Map<String, Value>> {
        self.metadata.as_ref()?.get("parameters")?.as_object()
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn to_json(&self) -> CliResult<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn save(&self, path: &Path) -> CliResult<()> {
        let mut text = self.to_json()?;
        text.push('\n');
        fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}
