use rayon::prelude::*;
use serde::Serialize;

use super::VerifyError;
use crate::catalog::all_tables;
use crate::radius::{
    minimal_positive_root, EquationParams, LiteralTag, RadiusError, RadiusProblem, SolverOptions,
    Theorem,
};
use crate::weights::{WeightFamily, WeightKind};

/// Roots closer than this are the same radius.
pub const AUDIT_THRESHOLD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Consistent,
    Discrepant,
    SolverFailure,
}

/// Printed equation versus the theorem it claims to instantiate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRecord {
    pub tag: LiteralTag,
    pub theorem: Theorem,
    pub params: EquationParams,
    pub root_literal: Option<f64>,
    pub root_canonical: Option<f64>,
    /// `|F_canonical(root_literal)|`.
    pub cross_residual: Option<f64>,
    pub verdict: Verdict,
    /// Solver failures, if any.
    pub status: Option<String>,
    /// Whether `p` lies in the theorem's stated range.
    pub p_in_theorem_range: bool,
    /// Canonical root with the odd weights starting at `x³` (R13 only).
    pub alternate_root_canonical: Option<f64>,
    pub alternate_verdict: Option<Verdict>,
}

/// Root of a canonical problem without the `p`-range check, so that the
/// printed `p = 2` columns of T1 examples can be audited too.
fn canonical_root(problem: &RadiusProblem, options: &SolverOptions) -> Result<f64, RadiusError> {
    problem.family.validate()?;
    let f = problem.defining_function();
    minimal_positive_root(|x| f.eval(x), options).map(|r| r.root)
}

fn verdict(a: Option<f64>, b: Option<f64>) -> Verdict {
    match (a, b) {
        (Some(a), Some(b)) if (a - b).abs() <= AUDIT_THRESHOLD => Verdict::Consistent,
        (Some(_), Some(_)) => Verdict::Discrepant,
        _ => Verdict::SolverFailure,
    }
}

pub fn audit(
    tag: LiteralTag,
    params: EquationParams,
    options: &SolverOptions,
) -> Result<AuditRecord, VerifyError> {
    let literal = tag.literal_problem(params);
    literal.validate()?;
    let canonical = tag.canonical_problem(params);
    let mut failures = Vec::new();

    let root_literal = match literal.solve(options) {
        Ok(r) => Some(r.root),
        Err(e) => {
            failures.push(format!("literal: {e}"));
            None
        }
    };
    let root_canonical = match canonical_root(&canonical, options) {
        Ok(r) => Some(r),
        Err(e) => {
            failures.push(format!("canonical: {e}"));
            None
        }
    };
    let cross_residual = root_literal.and_then(|x| canonical.defining_function().eval(x).ok().map(f64::abs));

    let (alternate_root_canonical, alternate_verdict) = if tag == LiteralTag::R13 {
        let alt = RadiusProblem {
            family: WeightFamily::new(WeightKind::OddPower, 2)?,
            ..canonical
        };
        match canonical_root(&alt, options) {
            Ok(r) => (Some(r), Some(verdict(root_literal, Some(r)))),
            Err(e) => {
                failures.push(format!("alternate canonical: {e}"));
                (None, Some(Verdict::SolverFailure))
            }
        }
    } else {
        (None, None)
    };

    let p_in_theorem_range = match canonical.p {
        Some(p) => canonical.theorem.p_max().is_some_and(|max| p > 0.0 && p <= max),
        None => true,
    };
    Ok(AuditRecord {
        tag,
        theorem: tag.theorem(),
        params,
        root_literal,
        root_canonical,
        cross_residual,
        verdict: verdict(root_literal, root_canonical),
        status: (!failures.is_empty()).then(|| failures.join("; ")),
        p_in_theorem_range,
        alternate_root_canonical,
        alternate_verdict,
    })
}

/// Audit every cell of every table, in table order.
pub fn audit_all(options: &SolverOptions) -> Result<Vec<AuditRecord>, VerifyError> {
    let cells: Vec<(LiteralTag, EquationParams)> = all_tables()
        .into_iter()
        .flat_map(|t| t.cells.into_iter().map(move |c| (t.tag, c.params)))
        .collect();
    cells
        .par_iter()
        .map(|&(tag, params)| audit(tag, params, options))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(tag: LiteralTag, p: f64, m: u32, n: u32) -> AuditRecord {
        audit(tag, EquationParams::new(p, m, n), &SolverOptions::default()).unwrap()
    }

    #[test]
    fn affine_example_is_consistent() {
        let rec = run(LiteralTag::R4, 1.0, 1, 5);
        assert_eq!(rec.verdict, Verdict::Consistent);
        assert!((rec.root_literal.unwrap() - 0.438303).abs() < 5e-5);
        assert!(rec.cross_residual.unwrap() < 1e-9);
    }

    #[test]
    fn linear_example_is_discrepant() {
        let rec = run(LiteralTag::R5, 1.0, 1, 5);
        assert_eq!(rec.verdict, Verdict::Discrepant);
        assert!((rec.root_literal.unwrap() - 0.552822).abs() < 5e-5);
        // p(1−x)²(1−x^m) = 2x^N[N(1−x)+x](1+x^m), solved independently
        let f = |x: f64| (1.0 - x).powi(2) * (1.0 - x) - 2.0 * x.powi(5) * (5.0 * (1.0 - x) + x) * (1.0 + x);
        let oracle = minimal_positive_root(|x| Ok(f(x)), &SolverOptions::default()).unwrap().root;
        assert!((rec.root_canonical.unwrap() - oracle).abs() < 1e-10);
        assert!((oracle - 0.448).abs() < 1e-3);
    }

    #[test]
    fn derivative_example_consistent_only_for_n2() {
        let rec = run(LiteralTag::R8, 1.0, 1, 5);
        assert!((rec.root_literal.unwrap() - 0.470417).abs() < 5e-5);
        assert_eq!(rec.verdict, Verdict::Discrepant);
        let rec = run(LiteralTag::R8, 1.0, 2, 2);
        assert_eq!(rec.verdict, Verdict::Consistent);
    }

    #[test]
    fn odd_subordination_example_matches_the_shifted_family() {
        let rec = run(LiteralTag::R13, 1.0, 1, 1);
        assert_eq!(rec.verdict, Verdict::Discrepant);
        assert_eq!(rec.alternate_verdict, Some(Verdict::Consistent));
    }

    #[test]
    fn p_range_is_flagged() {
        assert!(run(LiteralTag::R1, 1.0, 1, 5).p_in_theorem_range);
        let rec = run(LiteralTag::R1, 2.0, 1, 5);
        assert!(!rec.p_in_theorem_range);
        assert_eq!(rec.verdict, Verdict::Consistent);
        assert!(run(LiteralTag::R14, 1.0, 1, 5).p_in_theorem_range);
    }
}
