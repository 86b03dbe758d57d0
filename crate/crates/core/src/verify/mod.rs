//! Numerical certification of the lemmas, the four inequalities below their
//! radii, sharpness just above them, and the printed example equations.
//!
//! Everything here is a pure function of its arguments and a seed; suites fan
//! out over rayon and collect in grid order, so parallel and serial runs give
//! identical reports.

mod audit;
mod lemmas;
mod sharpness;
mod suites;
mod sums;

pub use audit::{audit, audit_all, AuditRecord, Verdict};
pub use lemmas::{lemma_p, lemma_q, ruscheweyh_bound};
pub use sharpness::{sharpness_probe, SharpnessProbe};
pub use suites::{run_suite, Check, Suite, SuiteReport};
pub use sums::{sum_a, sum_a_at, sum_b, sum_b_at, sum_c, sum_d, SumValue, ANGLES};

use thiserror::Error;

use crate::functions::FunctionError;
use crate::radius::RadiusError;
use crate::weights::WeightError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("tail bound stays above {tol:e} up to order {max_order} at r = {r}")]
    Truncation { r: f64, tol: f64, max_order: usize },
    #[error("probe radius {r} is outside the unit disk")]
    ProbeOutsideDomain { r: f64 },
    #[error("unsupported function for this sum: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Radius(#[from] RadiusError),
    #[error(transparent)]
    Function(#[from] FunctionError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}
