//! The nested block norm on `B(n1, …, nm)`.
//!
//! A matrix of side `n1·n2·…·nm` is viewed as an `n1 x n1` grid of blocks,
//! each of which lives in `B(n2, …, nm)`. The norm is the spectral norm of the
//! real `n1 x n1` matrix whose entries are the (recursive) norms of the blocks;
//! at the last level it is the plain spectral norm.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{real_spectral_norm, spectral_norm, ComplexMatrix};

/// Ordered subsystem dimensions `(n1, …, nm)`, first factor outermost.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DimensionProfile(Vec<usize>);

impl DimensionProfile {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Parameter("dimension profile needs at least one subsystem".into()));
        }
        if dims.contains(&0) {
            return Err(Error::Parameter(format!("subsystem dimensions must be positive, got {dims:?}")));
        }
        Ok(Self(dims))
    }

    pub fn bipartite(n1: usize, n2: usize) -> Result<Self> {
        Self::new(vec![n1, n2])
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    /// Number of subsystems `m`.
    pub fn parties(&self) -> usize {
        self.0.len()
    }

    pub fn total_dim(&self) -> usize {
        self.0.iter().product()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    /// Profile of a top-level block, `(n2, …, nm)`; `None` when `m = 1`.
    pub fn tail(&self) -> Option<DimensionProfile> {
        (self.0.len() > 1).then(|| DimensionProfile(self.0[1..].to_vec()))
    }

    pub fn is_bipartite(&self) -> bool {
        self.0.len() == 2
    }

    pub fn is_multiqubit(&self) -> bool {
        self.0.iter().all(|&d| d == 2)
    }

    /// Errors unless `x` is square with side `product(dims)`.
    pub fn check(&self, x: &ComplexMatrix) -> Result<()> {
        let expected = self.total_dim();
        if !x.is_square() || x.rows() != expected {
            return Err(Error::Profile {
                dims: self.0.clone(),
                expected,
                found: if x.is_square() { x.rows() } else { x.rows().max(x.cols()) },
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for DimensionProfile {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        Self::new(dims)
    }
}

impl From<DimensionProfile> for Vec<usize> {
    fn from(p: DimensionProfile) -> Self {
        p.0
    }
}

impl fmt::Display for DimensionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Zero-based position of a block within one level of the nesting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockIndex {
    pub level: usize,
    pub row: usize,
    pub col: usize,
}

/// The `(i, j)` top-level block (zero-based) of side `n2·…·nm`.
pub fn top_block(x: &ComplexMatrix, profile: &DimensionProfile, i: usize, j: usize) -> Result<ComplexMatrix> {
    profile.check(x)?;
    let n1 = profile.first();
    if i >= n1 || j >= n1 {
        return Err(Error::Index {
            level: 0,
            row: i,
            col: j,
            bound: n1,
        });
    }
    let s = profile.total_dim() / n1;
    Ok(x.submatrix(i * s, j * s, s, s))
}

/// Block reached by following `path` down the nesting, one index pair per level.
pub fn nested_block(x: &ComplexMatrix, profile: &DimensionProfile, path: &[BlockIndex]) -> Result<ComplexMatrix> {
    let mut block = x.clone();
    let mut prof = profile.clone();
    for (level, idx) in path.iter().enumerate() {
        let Some(tail) = prof.tail() else {
            return Err(Error::Index {
                level,
                row: idx.row,
                col: idx.col,
                bound: 0,
            });
        };
        block = top_block(&block, &prof, idx.row, idx.col).map_err(|e| match e {
            Error::Index { row, col, bound, .. } => Error::Index { level, row, col, bound },
            other => other,
        })?;
        prof = tail;
    }
    Ok(block)
}

/// The `n1 x n1` matrix of nested norms of the top-level blocks, row-major.
pub fn block_norm_matrix(x: &ComplexMatrix, profile: &DimensionProfile) -> Result<Vec<f64>> {
    profile.check(x)?;
    let tail = profile
        .tail()
        .ok_or_else(|| Error::Domain("a single-level profile has no block structure".into()))?;
    let n1 = profile.first();
    let s = tail.total_dim();
    let mut norms = Vec::with_capacity(n1 * n1);
    for i in 0..n1 {
        for j in 0..n1 {
            norms.push(nested_norm_unchecked(&x.submatrix(i * s, j * s, s, s), &tail));
        }
    }
    Ok(norms)
}

/// The `(n1, …, nm)`-nested norm of `x`.
pub fn nested_norm(x: &ComplexMatrix, profile: &DimensionProfile) -> Result<f64> {
    profile.check(x)?;
    Ok(nested_norm_unchecked(x, profile))
}

fn nested_norm_unchecked(x: &ComplexMatrix, profile: &DimensionProfile) -> f64 {
    let Some(tail) = profile.tail() else {
        return spectral_norm(x);
    };
    let n1 = profile.first();
    if n1 == 1 {
        return nested_norm_unchecked(x, &tail);
    }
    let s = tail.total_dim();
    let mut norms = Vec::with_capacity(n1 * n1);
    for i in 0..n1 {
        for j in 0..n1 {
            norms.push(nested_norm_unchecked(&x.submatrix(i * s, j * s, s, s), &tail));
        }
    }
    real_spectral_norm(n1, n1, &norms)
}
