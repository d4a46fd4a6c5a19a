//! Separability certificates for quantum states from norm balls around the
//! identity, built on the nested block spectral norm.

pub mod certify;
pub mod error;
pub mod families;
pub mod matrix;
pub mod nested;
pub mod oracle;
pub mod state;
pub mod structured;

pub use certify::{
    certify_frobenius_ball, certify_hildebrand_ball, certify_nested_ball, certify_nested_ball_scaled,
    certify_nested_ball_scaled_with, certify_spectral_ball, hildebrand_radius, nested_ball_radius,
    threshold_scan, threshold_scan_with, CertificateReport, Certifier, ScaledOptions, ScanOutcome,
    ScanProbe, Verdict,
};
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, HermitianCheckPolicy};
pub use nested::{nested_norm, BlockIndex, DimensionProfile};
pub use oracle::{ppt_check, separability_decide_low_dim, PptReport};
pub use state::QuantumState;
pub use structured::{
    certify_pseudopure, certify_sppt_gap, certify_sppt_eigen, is_sppt, PseudopureParams, SpptTriple,
};
