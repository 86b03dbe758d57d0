use num_complex::Complex64;
use serde::Serialize;

use super::sums::{sum_a_at, sum_b_at, sum_c, sum_d};
use super::VerifyError;
use crate::functions::{AnalyticFunction, MoebiusExtremal, OuterMap};
use crate::radius::{Mode, RadiusProblem, SolverOptions, Theorem};

/// The extremal sum evaluated just beyond the canonical radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpnessProbe {
    pub problem: RadiusProblem,
    pub root: f64,
    pub epsilon: f64,
    pub delta: f64,
    pub r: f64,
    pub value: f64,
    pub bound: f64,
    /// `value − bound`; positive means the inequality fails at `r`.
    pub margin: f64,
    /// Coefficient of `(1−a)` in the expansion of the extremal sum (T1, T2).
    pub first_order: Option<f64>,
}

/// Evaluate the proof's extremal function at `r = root + epsilon`, `a = 1 − delta`.
///
/// T1 uses `g(z) = (a+z)/(1+az)`, T2 uses `h(z) = (a−z)/(1−az)`, both at
/// `z = r`; T3 and T4 use the Koebe and half-plane maps, where `delta` does
/// not enter. For T2, `r` must stay where `r/(1−r^m) < 1`.
pub fn sharpness_probe(
    problem: &RadiusProblem,
    epsilon: f64,
    delta: f64,
    options: &SolverOptions,
) -> Result<SharpnessProbe, VerifyError> {
    if !(epsilon > 0.0 && epsilon <= 0.1) {
        return Err(VerifyError::Domain(format!("epsilon = {epsilon} is outside (0, 0.1]")));
    }
    if !(0.0..=0.1).contains(&delta) {
        return Err(VerifyError::Domain(format!("delta = {delta} is outside [0, 0.1]")));
    }
    if problem.mode != Mode::Canonical {
        return Err(VerifyError::Domain("sharpness probes need a canonical problem".into()));
    }
    let root = problem.solve(options)?.root;
    let r = root + epsilon;
    if r >= 1.0 {
        return Err(VerifyError::ProbeOutsideDomain { r });
    }
    let family = &problem.family;
    let rm = problem.m.pow(r);
    let w = Complex64::new(rm, 0.0);
    let p = problem.p.unwrap_or(1.0);
    let a = 1.0 - delta;
    let (sum, first_order) = match problem.theorem {
        Theorem::T1 => {
            let g = AnalyticFunction::Moebius(MoebiusExtremal::plus(a));
            let tail = family.tail_sum(r)?;
            let coefficient = 2.0 * tail - p * (1.0 - rm) / (1.0 + rm) * family.head_weight;
            (sum_a_at(&g, family, p, r, w)?, Some(coefficient))
        }
        Theorem::T2 => {
            let h = AnalyticFunction::Moebius(MoebiusExtremal::minus(a));
            // Σ 2ψ_k/(1−r^m)^{k+1} = 2/(1−r^m) · Σ ψ_k evaluated at r/(1−r^m)
            let u = r / (1.0 - rm);
            if u >= 1.0 {
                return Err(VerifyError::ProbeOutsideDomain { r });
            }
            let series = family.tail_sum(u)?;
            let coefficient =
                2.0 / (1.0 - rm) * series - p * (1.0 + rm) / (1.0 - rm) * family.head_weight;
            (sum_b_at(&h, family, p, r, w)?, Some(coefficient))
        }
        Theorem::T3 => (
            sum_c(&AnalyticFunction::Koebe, OuterMap::Koebe, family, r, problem.m)?,
            None,
        ),
        Theorem::T4 => (
            sum_d(&AnalyticFunction::HalfPlane, OuterMap::HalfPlane, family, r, problem.m)?,
            None,
        ),
    };
    Ok(SharpnessProbe {
        problem: *problem,
        root,
        epsilon,
        delta,
        r,
        value: sum.value,
        bound: sum.bound,
        margin: sum.margin(),
        first_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::{EquationParams, LiteralTag};
    use crate::weights::WeightFamily;
    use crate::Order;

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn koebe_exceeds_a_quarter_above_the_root() {
        let problem =
            RadiusProblem::canonical(Theorem::T3, None, Order::Finite(1), WeightFamily::power(5))
                .unwrap();
        let probe = sharpness_probe(&problem, 0.01, 1e-3, &opts()).unwrap();
        assert!((probe.root - 0.171125).abs() < 5e-5);
        let r: f64 = probe.r;
        let direct = r / ((1.0 - r) * (1.0 - r))
            + (5..2000).map(|k| k as f64 * r.powi(k)).sum::<f64>()
            - 0.25;
        assert!((probe.margin - direct).abs() < 1e-11);
        assert!(probe.margin > 0.0);
        assert!(probe.first_order.is_none());
    }

    #[test]
    fn t1_margin_is_positive_with_positive_slope() {
        let problem = LiteralTag::R1.canonical_problem(EquationParams::new(1.0, 1, 5));
        for &eps in &[1e-2, 5e-3] {
            let probe = sharpness_probe(&problem, eps, 1e-3, &opts()).unwrap();
            assert!(probe.margin > 0.0, "{probe:?}");
            assert!(probe.first_order.unwrap() > 0.0);
            // leading order (1−a)·coefficient
            let fine = sharpness_probe(&problem, eps, 1e-5, &opts()).unwrap();
            let lead = fine.delta * fine.first_order.unwrap();
            assert!((fine.margin - lead).abs() < 0.01 * lead, "{fine:?}");
        }
    }

    #[test]
    fn degenerate_delta_collapses() {
        let problem = LiteralTag::R1.canonical_problem(EquationParams::new(1.0, 2, 5));
        let probe = sharpness_probe(&problem, 0.01, 0.0, &opts()).unwrap();
        assert_eq!(probe.margin, 0.0);
        let problem = LiteralTag::R8.canonical_problem(EquationParams::new(1.0, 3, 5));
        let probe = sharpness_probe(&problem, 0.01, 0.0, &opts()).unwrap();
        assert_eq!(probe.margin, 0.0);
    }

    #[test]
    fn t2_probe_beyond_the_kernel_range() {
        // a long tail pushes the root to just below u = x/(1−x) = 1
        let problem =
            RadiusProblem::canonical(Theorem::T2, Some(2.0), Order::Finite(1), WeightFamily::power(200))
                .unwrap();
        let root = problem.solve(&opts()).unwrap().root;
        assert!(root < 0.5 && root + 0.01 > 0.5, "{root}");
        let err = sharpness_probe(&problem, 0.01, 1e-3, &opts()).unwrap_err();
        assert!(matches!(err, VerifyError::ProbeOutsideDomain { .. }), "{err:?}");
        let problem = LiteralTag::R8.canonical_problem(EquationParams::new(2.0, 2, 15));
        assert!(sharpness_probe(&problem, 0.01, 1e-3, &opts()).unwrap().margin > 0.0);
    }

    #[test]
    fn probe_errors() {
        let problem = LiteralTag::R14.canonical_problem(EquationParams::new(1.0, 1, 5));
        assert!(sharpness_probe(&problem, 0.0, 1e-3, &opts()).is_err());
        assert!(sharpness_probe(&problem, 0.2, 1e-3, &opts()).is_err());
        assert!(sharpness_probe(&problem, 0.01, 0.5, &opts()).is_err());
        let literal = LiteralTag::R14.literal_problem(EquationParams::new(1.0, 1, 5));
        assert!(sharpness_probe(&literal, 0.01, 1e-3, &opts()).is_err());
    }
}
