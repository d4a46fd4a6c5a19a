use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, HermitianCheckPolicy};
use crate::nested::DimensionProfile;

/// Trace tolerance for states flagged as normalized.
pub const TRACE_TOL: f64 = 1e-9;

/// A Hermitian matrix on a fixed subsystem profile.
///
/// `normalized` selects the convention: trace-one density matrices are lifted
/// to identity scale (multiplied by the total dimension) before any ball test,
/// unnormalized ones are used as given.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    matrix: ComplexMatrix,
    profile: DimensionProfile,
    normalized: bool,
}

impl QuantumState {
    pub fn new(matrix: ComplexMatrix, profile: DimensionProfile, normalized: bool) -> Result<Self> {
        Self::with_policy(matrix, profile, normalized, HermitianCheckPolicy::default())
    }

    pub fn with_policy(
        matrix: ComplexMatrix,
        profile: DimensionProfile,
        normalized: bool,
        policy: HermitianCheckPolicy,
    ) -> Result<Self> {
        profile.check(&matrix)?;
        policy.check(&matrix)?;
        if normalized {
            let tr = matrix.trace();
            if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
                return Err(Error::Parameter(format!(
                    "normalized state must have unit trace, got {:.12}{:+.3e}i",
                    tr.re, tr.im
                )));
            }
        }
        Ok(Self {
            matrix,
            profile,
            normalized,
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn dim(&self) -> usize {
        self.profile.total_dim()
    }

    /// The matrix at identity scale: `dim·ρ` for normalized states, `ρ` otherwise.
    pub fn identity_scaled(&self) -> ComplexMatrix {
        if self.normalized {
            self.matrix.scale_real(self.dim() as f64)
        } else {
            self.matrix.clone()
        }
    }

    /// Same matrix reinterpreted on another profile with equal total dimension.
    pub fn with_profile(&self, profile: DimensionProfile) -> Result<Self> {
        profile.check(&self.matrix)?;
        Ok(Self {
            matrix: self.matrix.clone(),
            profile,
            normalized: self.normalized,
        })
    }

    pub fn into_parts(self) -> (ComplexMatrix, DimensionProfile, bool) {
        (self.matrix, self.profile, self.normalized)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_shape_hermiticity_and_trace() {
        let p = DimensionProfile::bipartite(2, 2).unwrap();
        let rho = ComplexMatrix::identity(4).scale_real(0.25);
        assert!(QuantumState::new(rho.clone(), p.clone(), true).is_ok());
        assert!(matches!(
            QuantumState::new(ComplexMatrix::identity(4), p.clone(), true),
            Err(Error::Parameter(_))
        ));
        assert!(QuantumState::new(ComplexMatrix::identity(4), p.clone(), false).is_ok());
        assert!(matches!(
            QuantumState::new(ComplexMatrix::identity(3), p.clone(), false),
            Err(Error::Profile { .. })
        ));
        let mut skew = ComplexMatrix::identity(4);
        skew[(0, 1)] = num_complex::Complex64::new(1.0, 0.0);
        assert!(matches!(QuantumState::new(skew, p, false), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn identity_scaling() {
        let p = DimensionProfile::bipartite(2, 3).unwrap();
        let s = QuantumState::new(ComplexMatrix::identity(6).scale_real(1.0 / 6.0), p, true).unwrap();
        let lifted = s.identity_scaled();
        assert!((&lifted - &ComplexMatrix::identity(6)).max_abs() < 1e-15);
    }
}
