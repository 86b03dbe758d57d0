//! Defining functions `F(x)` and their minimal positive roots.
//!
//! Each theorem reduces its sharp radius to the first zero of an explicit
//! function that is positive near the origin:
//!
//! | theorem | `F(x)` |
//! |---------|--------|
//! | T1 | `ν₀ − (2/p)·(1+x^m)/(1−x^m)·Σ ν_k(x)` |
//! | T2 | `ψ₀ − (2/p)·Σ (1+x^m)^{k−1}(1−x^{2m})^{−k} ψ_k(x)` |
//! | T3 | `1/4 − Σ k φ_k(x) − x^m/(1−x^m)²` |
//! | T4 | `1/2 − Σ λ_k(x) − x^m/(1−x^m)` |
//!
//! In the `m → ∞` mode every `x^m` is replaced by `0`.
//!
//! Alongside the canonical instantiation, each of the sixteen worked examples
//! has its equation kept exactly as printed ([`literal_equation`]); the audit
//! compares the two.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::weights::{WeightError, WeightFamily, WeightKind};
use crate::Order;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RadiusError {
    #[error("invalid problem: {0}")]
    Invalid(String),
    #[error("unknown equation tag `{0}`")]
    UnknownTag(String),
    #[error("x = {0} is outside [0, 1)")]
    Domain(f64),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("no sign change of F on ({lo}, {hi})")]
    NoSignChange { lo: f64, hi: f64 },
    #[error("F is undefined from x = {x} on ({reason}) before any sign change")]
    UndefinedRegion { x: f64, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Theorem {
    /// Coefficient sum under `Re f ≤ 1` (radius R₁).
    T1,
    /// Derivative sum for `|f| ≤ 1` (radius R₂).
    T2,
    /// Subordination to a univalent map (radius R₃).
    T3,
    /// Subordination to a convex univalent map (radius R₅).
    T4,
}

impl Theorem {
    /// Admissible `p` interval `(0, max]`, or `None` when `p` does not enter.
    pub fn p_max(self) -> Option<f64> {
        match self {
            Theorem::T1 => Some(1.0),
            Theorem::T2 => Some(2.0),
            Theorem::T3 | Theorem::T4 => None,
        }
    }
}

impl FromStr for Theorem {
    type Err = RadiusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T1" => Ok(Theorem::T1),
            "T2" => Ok(Theorem::T2),
            "T3" => Ok(Theorem::T3),
            "T4" => Ok(Theorem::T4),
            _ => Err(RadiusError::Invalid(format!("unknown theorem `{s}`"))),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The sixteen printed example equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LiteralTag {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
    R11,
    R12,
    R13,
    R14,
    R15,
    R16,
}

impl LiteralTag {
    pub const ALL: [LiteralTag; 16] = [
        LiteralTag::R1,
        LiteralTag::R2,
        LiteralTag::R3,
        LiteralTag::R4,
        LiteralTag::R5,
        LiteralTag::R6,
        LiteralTag::R7,
        LiteralTag::R8,
        LiteralTag::R9,
        LiteralTag::R10,
        LiteralTag::R11,
        LiteralTag::R12,
        LiteralTag::R13,
        LiteralTag::R14,
        LiteralTag::R15,
        LiteralTag::R16,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    /// Table identifier, `"R1"` … `"R16"`.
    pub fn table_id(self) -> String {
        format!("R{}", self.index())
    }

    pub fn theorem(self) -> Theorem {
        match self.index() {
            1..=7 => Theorem::T1,
            8..=10 => Theorem::T2,
            11..=13 => Theorem::T3,
            _ => Theorem::T4,
        }
    }

    /// Whether the equation carries the integer parameter `N` (or `n` for R7).
    pub fn uses_n(self) -> bool {
        use LiteralTag::*;
        matches!(self, R1 | R4 | R5 | R6 | R7 | R8 | R9 | R10 | R11 | R14)
    }

    pub fn uses_p(self) -> bool {
        matches!(self.theorem(), Theorem::T1 | Theorem::T2) && self != LiteralTag::R7
    }

    pub fn uses_m(self) -> bool {
        self != LiteralTag::R7
    }

    /// The weight family the example instantiates.
    pub fn canonical_family(self, n: u32) -> WeightFamily {
        use LiteralTag::*;
        let fam = |kind, start| WeightFamily::new(kind, start).expect("catalog family");
        match self {
            R1 | R8 | R11 | R14 => fam(WeightKind::Power, n),
            R2 | R12 | R15 => fam(WeightKind::EvenPower, 1),
            R3 | R13 | R16 => fam(WeightKind::OddPower, 1),
            R4 => fam(WeightKind::Affine, n),
            R5 => fam(WeightKind::Linear, n),
            R6 => fam(WeightKind::Quadratic, n),
            R7 => fam(WeightKind::StridePower { stride: n }, 1),
            R9 => fam(WeightKind::EvenPower, n),
            R10 => fam(WeightKind::OddPower, n),
        }
    }

    /// Canonical instantiation of the example's theorem. `p` is not range-checked.
    pub fn canonical_problem(self, params: EquationParams) -> RadiusProblem {
        let theorem = self.theorem();
        let (p, m) = match self {
            LiteralTag::R7 => (Some(1.0), Order::Finite(1)),
            _ => (
                theorem.p_max().map(|_| params.p),
                Order::Finite(params.m),
            ),
        };
        RadiusProblem {
            theorem,
            p,
            m,
            family: self.canonical_family(params.n),
            mode: Mode::Canonical,
        }
    }

    /// The example's printed equation as a [`RadiusProblem`] in literal mode.
    pub fn literal_problem(self, params: EquationParams) -> RadiusProblem {
        RadiusProblem {
            mode: Mode::Literal(self),
            ..self.canonical_problem(params)
        }
    }
}

impl fmt::Display for LiteralTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}eq", self.index())
    }
}

impl FromStr for LiteralTag {
    type Err = RadiusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let body = t.strip_suffix("eq").unwrap_or(t);
        let digits = body
            .strip_prefix('R')
            .or_else(|| body.strip_prefix('r'))
            .ok_or_else(|| RadiusError::UnknownTag(s.to_string()))?;
        match digits.parse::<usize>() {
            Ok(i) if (1..=16).contains(&i) => Ok(LiteralTag::ALL[i - 1]),
            _ => Err(RadiusError::UnknownTag(s.to_string())),
        }
    }
}

impl Serialize for LiteralTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parameters of a printed equation: exponent `p`, order `m`, and `N`
/// (the stride `n` for R7).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquationParams {
    pub p: f64,
    pub m: u32,
    pub n: u32,
}

impl EquationParams {
    pub fn new(p: f64, m: u32, n: u32) -> Self {
        EquationParams { p, m, n }
    }
}

/// A printed example equation, moved to the form `F(x) = 0` with `F(0⁺) > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiteralEquation {
    pub tag: LiteralTag,
    pub params: EquationParams,
}

/// Look up the printed equation for `tag`.
pub fn literal_equation(
    tag: LiteralTag,
    params: EquationParams,
) -> Result<LiteralEquation, RadiusError> {
    if !(params.p > 0.0 && params.p.is_finite()) {
        return Err(RadiusError::Invalid(format!("p = {} must be positive", params.p)));
    }
    if params.m < 1 || params.n < 1 {
        return Err(RadiusError::Invalid("m and N must be >= 1".into()));
    }
    Ok(LiteralEquation { tag, params })
}

impl LiteralEquation {
    pub fn eval(&self, x: f64) -> Result<f64, RadiusError> {
        if !(0.0..1.0).contains(&x) {
            return Err(RadiusError::Domain(x));
        }
        let EquationParams { p, m, n } = self.params;
        let xm = x.powi(m as i32);
        let nf = n as f64;
        let ni = n as i32;
        let xn = x.powi(ni);
        let x2 = x * x;
        use LiteralTag::*;
        Ok(match self.tag {
            // 2x^N(1+x^m) - p(1-x)(1-x^m) = 0
            R1 => p * (1.0 - x) * (1.0 - xm) - 2.0 * xn * (1.0 + xm),
            // 2x^2(1+x^m) - p(1-x^2)(1-x^m) = 0
            R2 => p * (1.0 - x2) * (1.0 - xm) - 2.0 * x2 * (1.0 + xm),
            // 2x(1+x^m) - p(1-x^2)(1-x^m) = 0
            R3 => p * (1.0 - x2) * (1.0 - xm) - 2.0 * x * (1.0 + xm),
            // 2x^N(1+N-Nx)(1+x^m) - p(1-x)^2(1-x^m) = 0
            R4 => {
                p * (1.0 - x).powi(2) * (1.0 - xm)
                    - 2.0 * xn * (1.0 + nf - nf * x) * (1.0 + xm)
            }
            // 2x^N[N(1-x)+x](1+x^m) = p(1-x^m)
            R5 => p * (1.0 - xm) - 2.0 * xn * (nf * (1.0 - x) + x) * (1.0 + xm),
            // x^N[(x+N)^2+x+N^2x^2-2Nx(x+N)](1+x^m) = p(1-x^m)(1-x)^3
            R6 => {
                let bracket =
                    (x + nf).powi(2) + x + nf * nf * x2 - 2.0 * nf * x * (x + nf);
                p * (1.0 - xm) * (1.0 - x).powi(3) - xn * bracket * (1.0 + xm)
            }
            // 2x^n(1+x) - (1-x)(1-x^n) = 0
            R7 => (1.0 - x) * (1.0 - xn) - 2.0 * xn * (1.0 + x),
            // 2x^N - p(1-x^{2m})(1-x-x^m) = 0
            R8 => p * (1.0 - xm * xm) * (1.0 - x - xm) - 2.0 * xn,
            // 2x^{2N} - p(1+x^m)(1-x^m)^{2(N-1)}[(1-x^m)^2-x^2] = 0
            R9 => {
                p * (1.0 + xm) * (1.0 - xm).powi(2 * (ni - 1)) * ((1.0 - xm).powi(2) - x2)
                    - 2.0 * x.powi(2 * ni)
            }
            // 2x^{2N-1} - p(1+x^m)(1-x^m)^{2N-3}[(1-x^m)^2-x^2] = 0
            R10 => {
                p * (1.0 + xm) * (1.0 - xm).powi(2 * ni - 3) * ((1.0 - xm).powi(2) - x2)
                    - 2.0 * x.powi(2 * ni - 1)
            }
            // 4x^m - (1-x^m)^2 + 4x^N[N(1-x)+x]((1-x^m)/(1-x))^2 = 0
            R11 => {
                (1.0 - xm).powi(2)
                    - 4.0 * xm
                    - 4.0 * xn * (nf * (1.0 - x) + x) * ((1.0 - xm) / (1.0 - x)).powi(2)
            }
            // 2x^2/(1-x^2)^2 + x^m/(1-x^m)^2 = 1/4
            R12 => 0.25 - 2.0 * x2 / (1.0 - x2).powi(2) - xm / (1.0 - xm).powi(2),
            // x^3(3-x^2)/(1-x^2)^2 + x^m/(1-x^m)^2 = 1/4
            R13 => {
                0.25 - x2 * x * (3.0 - x2) / (1.0 - x2).powi(2) - xm / (1.0 - xm).powi(2)
            }
            // 3x^m - 1 + 2x^N (1-x^m)/(1-x) = 0
            R14 => 1.0 - 3.0 * xm - 2.0 * xn * (1.0 - xm) / (1.0 - x),
            // x^2/(1-x^2) + x^m/(1-x^m) = 1/2
            R15 => 0.5 - x2 / (1.0 - x2) - xm / (1.0 - xm),
            // x/(1-x^2) + x^m/(1-x^m) = 1/2
            R16 => 0.5 - x / (1.0 - x2) - xm / (1.0 - xm),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Canonical,
    Literal(LiteralTag),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Canonical => f.write_str("canonical"),
            Mode::Literal(tag) => write!(f, "literal:{tag}"),
        }
    }
}

impl FromStr for Mode {
    type Err = RadiusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("canonical") {
            return Ok(Mode::Canonical);
        }
        match t.strip_prefix("literal:") {
            Some(tag) => Ok(Mode::Literal(tag.parse()?)),
            None => Err(RadiusError::Invalid(format!(
                "mode must be `canonical` or `literal:<tag>`, got `{s}`"
            ))),
        }
    }
}

impl Serialize for Mode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Everything needed to build a defining function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusProblem {
    pub theorem: Theorem,
    pub p: Option<f64>,
    pub m: Order,
    pub family: WeightFamily,
    pub mode: Mode,
}

impl RadiusProblem {
    /// A validated canonical problem.
    pub fn canonical(
        theorem: Theorem,
        p: Option<f64>,
        m: Order,
        family: WeightFamily,
    ) -> Result<Self, RadiusError> {
        let problem = RadiusProblem {
            theorem,
            p,
            m,
            family,
            mode: Mode::Canonical,
        };
        problem.validate()?;
        Ok(problem)
    }

    pub fn validate(&self) -> Result<(), RadiusError> {
        self.family.validate()?;
        match self.mode {
            Mode::Canonical => match (self.theorem.p_max(), self.p) {
                (Some(max), Some(p)) if p > 0.0 && p <= max => Ok(()),
                (Some(max), Some(p)) => Err(RadiusError::Invalid(format!(
                    "p = {p} is outside (0, {max}] for {}",
                    self.theorem
                ))),
                (Some(_), None) => Err(RadiusError::Invalid(format!(
                    "{} requires p",
                    self.theorem
                ))),
                (None, Some(_)) => Err(RadiusError::Invalid(format!(
                    "{} does not take p",
                    self.theorem
                ))),
                (None, None) => Ok(()),
            },
            Mode::Literal(tag) => {
                if tag.theorem() != self.theorem {
                    return Err(RadiusError::Invalid(format!(
                        "{tag} belongs to {}, not {}",
                        tag.theorem(),
                        self.theorem
                    )));
                }
                if !self.m.is_finite() && tag.uses_m() {
                    return Err(RadiusError::Invalid(format!(
                        "{tag} is a finite-m equation; use canonical mode for m = inf"
                    )));
                }
                if std::mem::discriminant(&tag.canonical_family(1).kind)
                    != std::mem::discriminant(&self.family.kind)
                {
                    return Err(RadiusError::Invalid(format!(
                        "{tag} instantiates the family `{}`, got `{}`",
                        tag.canonical_family(self.equation_n()),
                        self.family
                    )));
                }
                literal_equation(tag, self.equation_params()).map(|_| ())
            }
        }
    }

    fn equation_n(&self) -> u32 {
        match self.family.kind {
            WeightKind::StridePower { stride } => stride,
            _ => self.family.start,
        }
    }

    /// Parameters to feed the printed equation.
    pub fn equation_params(&self) -> EquationParams {
        let m = match self.m {
            Order::Finite(m) => m,
            Order::Infinite => 1,
        };
        EquationParams {
            p: self.p.unwrap_or(1.0),
            m,
            n: self.equation_n(),
        }
    }

    /// `F` for this problem; evaluation does not re-validate.
    pub fn defining_function(&self) -> DefiningFunction {
        DefiningFunction { problem: *self }
    }

    pub fn solve(&self, options: &SolverOptions) -> Result<RootResult, RadiusError> {
        self.validate()?;
        let f = self.defining_function();
        let mut result = minimal_positive_root(|x| f.eval(x), options)?;
        result.mode_used = Some(self.mode);
        Ok(result)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefiningFunction {
    problem: RadiusProblem,
}

impl DefiningFunction {
    pub fn problem(&self) -> &RadiusProblem {
        &self.problem
    }

    pub fn eval(&self, x: f64) -> Result<f64, RadiusError> {
        if !(0.0..1.0).contains(&x) {
            return Err(RadiusError::Domain(x));
        }
        let pr = &self.problem;
        if let Mode::Literal(tag) = pr.mode {
            return LiteralEquation {
                tag,
                params: pr.equation_params(),
            }
            .eval(x);
        }
        let fam = &pr.family;
        let xm = pr.m.pow(x);
        let p = pr.p.unwrap_or(1.0);
        Ok(match pr.theorem {
            Theorem::T1 => {
                fam.head_weight - 2.0 / p * (1.0 + xm) / (1.0 - xm) * fam.tail_sum(x)?
            }
            Theorem::T2 => fam.head_weight - 2.0 / p * fam.kernel_sum(x, pr.m)?,
            Theorem::T3 => 0.25 - fam.index_weighted_sum(x)? - xm / ((1.0 - xm) * (1.0 - xm)),
            Theorem::T4 => 0.5 - fam.tail_sum(x)? - xm / (1.0 - xm),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverOptions {
    pub scan_start: f64,
    pub scan_step: f64,
    pub bracket_width: f64,
    /// Upper end of the search interval, at most 1.
    pub search_hi: f64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            scan_start: 1e-9,
            scan_step: 1e-3,
            bracket_width: 1e-12,
            search_hi: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootResult {
    pub root: f64,
    pub bracket: [f64; 2],
    pub residual: f64,
    pub iterations: u32,
    pub mode_used: Option<Mode>,
}

/// First sign change of `f` scanning upward, refined by bisection.
///
/// An evaluation error during the scan marks the end of `f`'s domain and is
/// reported as [`RadiusError::UndefinedRegion`].
pub fn minimal_positive_root<F>(f: F, options: &SolverOptions) -> Result<RootResult, RadiusError>
where
    F: Fn(f64) -> Result<f64, RadiusError>,
{
    let SolverOptions {
        scan_start,
        scan_step,
        bracket_width,
        search_hi,
    } = *options;
    if !(scan_step > 0.0 && bracket_width > 0.0 && search_hi <= 1.0 && scan_start < search_hi) {
        return Err(RadiusError::Invalid(format!("bad solver options {options:?}")));
    }
    let undefined = |x: f64, e: RadiusError| RadiusError::UndefinedRegion {
        x,
        reason: e.to_string(),
    };

    let mut lo = scan_start;
    let mut f_lo = f(lo).map_err(|e| undefined(lo, e))?;
    let exact = |x: f64| RootResult {
        root: x,
        bracket: [x, x],
        residual: 0.0,
        iterations: 0,
        mode_used: None,
    };
    if f_lo == 0.0 {
        return Ok(exact(lo));
    }
    let mut i = 1u64;
    let (mut a, mut b, mut f_a) = loop {
        let x = scan_start + i as f64 * scan_step;
        if x >= search_hi {
            return Err(RadiusError::NoSignChange {
                lo: scan_start,
                hi: search_hi,
            });
        }
        let fx = f(x).map_err(|e| undefined(x, e))?;
        if fx == 0.0 {
            return Ok(exact(x));
        }
        if fx.signum() != f_lo.signum() {
            break (lo, x, f_lo);
        }
        lo = x;
        f_lo = fx;
        i += 1;
    };

    let mut iterations = 0u32;
    while b - a > bracket_width {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid).map_err(|e| undefined(mid, e))?;
        iterations += 1;
        if fm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if fm.signum() == f_a.signum() {
            a = mid;
            f_a = fm;
        } else {
            b = mid;
        }
    }
    let root = 0.5 * (a + b);
    let residual = f(root).map_err(|e| undefined(root, e))?.abs();
    Ok(RootResult {
        root,
        bracket: [a, b],
        residual,
        iterations,
        mode_used: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(problem: RadiusProblem) -> f64 {
        problem.solve(&SolverOptions::default()).unwrap().root
    }

    fn literal(tag: LiteralTag, p: f64, m: u32, n: u32) -> f64 {
        solve(tag.literal_problem(EquationParams::new(p, m, n)))
    }

    #[test]
    fn bohr_third_by_bisection() {
        let r = minimal_positive_root(|x| Ok(0.5 - x / (1.0 - x)), &SolverOptions::default())
            .unwrap();
        assert!((r.root - 1.0 / 3.0).abs() < 1e-12);
        assert!(r.bracket[1] - r.bracket[0] <= 1e-12);
    }

    #[test]
    fn theorem_a_limit_radius() {
        for p in [0.25, 0.5, 1.0] {
            let pr = RadiusProblem::canonical(
                Theorem::T1,
                Some(p),
                Order::Infinite,
                WeightFamily::power(1),
            )
            .unwrap();
            assert!((solve(pr) - p / (p + 2.0)).abs() < 1e-11);
        }
    }

    #[test]
    fn t4_empty_tail_gives_one_third() {
        let pr =
            RadiusProblem::canonical(Theorem::T4, None, Order::Finite(1), WeightFamily::zero())
                .unwrap();
        assert!((solve(pr) - 1.0 / 3.0).abs() < 1e-11);
    }

    #[test]
    fn t3_even_family_table_value() {
        let pr = RadiusProblem::canonical(Theorem::T3, None, Order::Finite(1), WeightFamily::even(1))
            .unwrap();
        assert!((solve(pr) - 0.14813).abs() < 5e-5);
    }

    #[test]
    fn t1_power_table_value() {
        let pr = RadiusProblem::canonical(
            Theorem::T1,
            Some(1.0),
            Order::Finite(1),
            WeightFamily::power(5),
        )
        .unwrap();
        assert!((solve(pr) - 0.568466).abs() < 5e-5);
    }

    #[test]
    fn literal_closed_forms() {
        assert!((literal(LiteralTag::R7, 1.0, 1, 1) - (5f64.sqrt() - 2.0)).abs() < 1e-10);
        assert!((literal(LiteralTag::R2, 2.0, 1, 1) - 0.5).abs() < 1e-10);
        assert!((literal(LiteralTag::R15, 1.0, 2, 1) - 1.0 / 5f64.sqrt()).abs() < 1e-10);
        assert!((literal(LiteralTag::R13, 1.0, 1, 1) - 0.164662).abs() < 5e-5);
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("R12eq".parse::<LiteralTag>().unwrap(), LiteralTag::R12);
        assert_eq!("r3".parse::<LiteralTag>().unwrap(), LiteralTag::R3);
        assert!(matches!("R17eq".parse::<LiteralTag>(), Err(RadiusError::UnknownTag(_))));
        assert!("Q1".parse::<LiteralTag>().is_err());
        assert_eq!(LiteralTag::R10.to_string(), "R10eq");
        assert_eq!("literal:R14eq".parse::<Mode>().unwrap(), Mode::Literal(LiteralTag::R14));
        assert!("literal:R99".parse::<Mode>().is_err());
    }

    #[test]
    fn p_range_is_enforced() {
        let fam = WeightFamily::power(5);
        assert!(RadiusProblem::canonical(Theorem::T1, Some(2.0), Order::Finite(1), fam).is_err());
        assert!(RadiusProblem::canonical(Theorem::T2, Some(2.0), Order::Finite(1), fam).is_ok());
        assert!(RadiusProblem::canonical(Theorem::T2, Some(2.5), Order::Finite(1), fam).is_err());
        assert!(RadiusProblem::canonical(Theorem::T3, Some(1.0), Order::Finite(1), fam).is_err());
        assert!(RadiusProblem::canonical(Theorem::T1, None, Order::Finite(1), fam).is_err());
        // the tables print p = 2 for T1 examples; literal mode accepts it
        let lit = LiteralTag::R1.literal_problem(EquationParams::new(2.0, 1, 5));
        assert!(lit.validate().is_ok());
    }

    #[test]
    fn literal_tag_must_match_theorem_and_family() {
        let mut pr = LiteralTag::R12.literal_problem(EquationParams::new(1.0, 2, 1));
        assert!(pr.validate().is_ok());
        pr.theorem = Theorem::T4;
        assert!(pr.validate().is_err());
        let mut pr = LiteralTag::R12.literal_problem(EquationParams::new(1.0, 2, 1));
        pr.family = WeightFamily::power(1);
        assert!(pr.validate().is_err());
        let mut pr = LiteralTag::R12.literal_problem(EquationParams::new(1.0, 2, 1));
        pr.m = Order::Infinite;
        assert!(pr.validate().is_err());
    }

    #[test]
    fn no_sign_change_is_reported() {
        let err = minimal_positive_root(|x| Ok(1.0 + x), &SolverOptions::default()).unwrap_err();
        assert!(matches!(err, RadiusError::NoSignChange { .. }));
        // T1 with an empty tail never changes sign
        let pr = RadiusProblem::canonical(Theorem::T1, Some(1.0), Order::Infinite, WeightFamily::zero())
            .unwrap();
        assert!(matches!(
            pr.solve(&SolverOptions::default()),
            Err(RadiusError::NoSignChange { .. })
        ));
    }

    #[test]
    fn domain_end_before_sign_change_is_reported() {
        let f = |x: f64| {
            if x < 0.4 {
                Ok(1.0)
            } else {
                Err(RadiusError::Domain(x))
            }
        };
        let err = minimal_positive_root(f, &SolverOptions::default()).unwrap_err();
        assert!(matches!(err, RadiusError::UndefinedRegion { .. }));
    }

    #[test]
    fn t2_root_stays_inside_kernel_domain() {
        for m in 1..=4 {
            let pr = RadiusProblem::canonical(
                Theorem::T2,
                Some(2.0),
                Order::Finite(m),
                WeightFamily::power(1),
            )
            .unwrap();
            let r = solve(pr);
            let u = r / (1.0 - r.powi(m as i32));
            assert!(u < 1.0);
        }
    }

    #[test]
    fn sign_pattern_around_root() {
        for tag in LiteralTag::ALL {
            let pr = tag.canonical_problem(EquationParams::new(1.0, 2, 5));
            let res = pr.solve(&SolverOptions::default()).unwrap();
            let f = pr.defining_function();
            assert!(f.eval(res.root - 1e-4).unwrap() > 0.0, "{tag}");
            assert!(f.eval(res.root + 1e-4).unwrap() < 0.0, "{tag}");
            assert!(res.residual <= 1e-9, "{tag}");
        }
    }
}
