//! Verification suites: each check aggregates a sweep into one pass/fail line.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::lemmas::{lemma_p, lemma_q, ruscheweyh_bound};
use super::sharpness::sharpness_probe;
use super::sums::{sum_a, sum_a_at, sum_b, sum_c, sum_d, SumValue};
use super::VerifyError;
use crate::catalog::{all_tables, verification_problems, CatalogProblem};
use crate::functions::{
    random_blaschke, random_schwarz, AnalyticFunction, BlaschkeProduct, MoebiusExtremal, OuterMap,
    SubordinationPair,
};
use crate::radius::{RadiusProblem, SolverOptions, Theorem};
use crate::Order;

/// Random functions drawn per catalog problem.
pub const RANDOM_FUNCTIONS: usize = 100;
/// Extremal parameters used below the radius.
pub const EXTREMAL_PARAMETERS: [f64; 3] = [0.5, 0.9, 0.99];
/// Slack for `sum ≤ bound` at `0.99·root`.
pub const INEQUALITY_TOL: f64 = 1e-10;
/// Slack for the derivative bound.
pub const RUSCHEWEYH_TOL: f64 = 1e-9;
/// Slack for lemma minima and monotone steps.
pub const LEMMA_TOL: f64 = 1e-12;
/// `|root(m = 1000) − root(m = ∞)|` bound.
pub const LIMIT_TOL: f64 = 1e-6;

const MAX_DEGREE: usize = 5;
const ZERO_RADIUS: f64 = 0.8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemmas,
    Inequalities,
    Sharpness,
    Radii,
    All,
}

impl Suite {
    const PARTS: [Suite; 4] = [Suite::Lemmas, Suite::Inequalities, Suite::Sharpness, Suite::Radii];

    fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Inequalities => "inequalities",
            Suite::Sharpness => "sharpness",
            Suite::Radii => "radii",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        [Suite::All]
            .into_iter()
            .chain(Suite::PARTS)
            .find(|x| x.name() == t)
            .ok_or_else(|| format!("unknown suite `{s}` (lemmas, inequalities, sharpness, radii, all)"))
    }
}

/// One invariant over one sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub evaluations: usize,
    pub violations: usize,
    /// The extreme observed value of the checked quantity.
    pub worst: f64,
    pub threshold: f64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<SuiteReport, VerifyError> {
    let options = SolverOptions::default();
    let mut checks = Vec::new();
    for part in Suite::PARTS {
        if suite != Suite::All && suite != part {
            continue;
        }
        checks.extend(match part {
            Suite::Lemmas => lemma_checks(seed),
            Suite::Inequalities => inequality_checks(seed, &options)?,
            Suite::Sharpness => sharpness_checks(&options)?,
            Suite::Radii => radius_checks(&options)?,
            Suite::All => unreachable!(),
        });
    }
    Ok(SuiteReport { suite, seed, checks })
}

/// Per-item outcome folded into a [`Check`]: the observed quantity, and a
/// failure note when it could not be evaluated.
type Observation = Result<f64, String>;

/// Fold observations where larger is worse (`value ≤ threshold` passes).
fn upper_check(suite: Suite, name: &str, threshold: f64, observed: &[Observation], detail: String) -> Check {
    fold(suite, name, threshold, observed, detail, |v, t| v <= t, f64::NEG_INFINITY, f64::max)
}

/// Fold observations where smaller is worse (`value ≥ threshold` passes).
fn lower_check(suite: Suite, name: &str, threshold: f64, observed: &[Observation], detail: String) -> Check {
    fold(suite, name, threshold, observed, detail, |v, t| v >= t, f64::INFINITY, f64::min)
}

/// Fold observations that must exceed `threshold` strictly.
fn strict_lower_check(suite: Suite, name: &str, threshold: f64, observed: &[Observation], detail: String) -> Check {
    fold(suite, name, threshold, observed, detail, |v, t| v > t, f64::INFINITY, f64::min)
}

#[allow(clippy::too_many_arguments)]
fn fold(
    suite: Suite,
    name: &str,
    threshold: f64,
    observed: &[Observation],
    detail: String,
    ok: impl Fn(f64, f64) -> bool,
    start: f64,
    pick: impl Fn(f64, f64) -> f64,
) -> Check {
    let mut worst = start;
    let mut violations = 0;
    let mut errors = Vec::new();
    for o in observed {
        match o {
            Ok(v) => {
                worst = pick(worst, *v);
                if !ok(*v, threshold) {
                    violations += 1;
                }
            }
            Err(e) => {
                violations += 1;
                if errors.len() < 3 {
                    errors.push(e.clone());
                }
            }
        }
    }
    let mut detail = detail;
    if !errors.is_empty() {
        detail = format!("{detail}; errors: {}", errors.join(" | "));
    }
    Check {
        suite,
        name: name.to_string(),
        passed: violations == 0 && !observed.is_empty(),
        evaluations: observed.len(),
        violations,
        worst,
        threshold,
        detail,
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn grid(step: f64, count: usize) -> Vec<f64> {
    (0..count).map(|i| i as f64 * step).collect()
}

// ---------------------------------------------------------------- lemmas

fn lemma_checks(seed: u64) -> Vec<Check> {
    let s = Suite::Lemmas;
    let xs = grid(0.005, 200);
    let q_ps: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();
    let p_ps: Vec<f64> = (1..=20).map(|i| i as f64 / 10.0).collect();

    // (min value, max successive increase) per (r, p, m) line
    let sweep = |ps: &[f64], lemma: fn(f64, f64, f64, u32) -> Result<f64, VerifyError>| {
        let lines: Vec<(f64, f64, u32)> = xs
            .iter()
            .flat_map(|&r| ps.iter().flat_map(move |&p| (1..=4).map(move |m| (r, p, m))))
            .collect();
        lines
            .par_iter()
            .map(|&(r, p, m)| {
                let values: Vec<f64> = xs.iter().map(|&x| lemma(x, r, p, m).expect("grid in range")).collect();
                let min = values.iter().copied().fold(f64::INFINITY, f64::min);
                let rise = values.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max);
                (Ok(min), Ok(rise))
            })
            .collect::<Vec<(Observation, Observation)>>()
    };
    let q = sweep(&q_ps, lemma_q);
    let p = sweep(&p_ps, lemma_p);
    let split = |v: Vec<(Observation, Observation)>| -> (Vec<Observation>, Vec<Observation>) { v.into_iter().unzip() };
    let (q_min, q_rise) = split(q);
    let (p_min, p_rise) = split(p);
    let grid_note = |pmax: &str| format!("x, r in {{0, 0.005, ..., 0.995}}, m in 1..=4, p in {{0.1, ..., {pmax}}}");

    let mut checks = vec![
        lower_check(s, "lemma_q_nonnegative", -LEMMA_TOL, &q_min, grid_note("1.0")),
        upper_check(s, "lemma_q_nonincreasing", LEMMA_TOL, &q_rise, "largest step up along x".into()),
        lower_check(s, "lemma_p_nonnegative", -LEMMA_TOL, &p_min, grid_note("2.0")),
        upper_check(s, "lemma_p_nonincreasing", LEMMA_TOL, &p_rise, "largest step up along x".into()),
    ];

    // derivative bound for the unit ball
    let rs: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let rusch: Vec<Observation> = (0..RANDOM_FUNCTIONS as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, i);
            let f = AnalyticFunction::Blaschke(random_blaschke(&mut rng, MAX_DEGREE, ZERO_RADIUS));
            let mut worst = f64::NEG_INFINITY;
            for &r in &rs {
                for j in 0..16 {
                    let z = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / 16.0);
                    let fz = f.eval(z).map_err(|e| e.to_string())?.norm();
                    for k in 1..=8 {
                        let lhs = f.kth_derivative_magnitude(z, k).map_err(|e| e.to_string())?;
                        worst = worst.max(lhs - ruscheweyh_bound(r, fz, k));
                    }
                }
            }
            Ok(worst)
        })
        .collect();
    checks.push(upper_check(
        s,
        "ruscheweyh_bound",
        RUSCHEWEYH_TOL,
        &rusch,
        format!("{RANDOM_FUNCTIONS} Blaschke products, k <= 8, |z| in {{0.1, ..., 0.9}} x 16 angles; worst excess"),
    ));

    // |a_k| ≤ 2(1−a) on the plus family
    let coeff: Vec<Observation> = (0..1000)
        .map(|i| {
            let g = MoebiusExtremal::plus(i as f64 / 1000.0);
            let excess = (1..=50)
                .map(|k| g.coefficient(k).abs() - 2.0 * (1.0 - g.a))
                .fold(f64::NEG_INFINITY, f64::max);
            Ok(excess)
        })
        .collect();
    checks.push(upper_check(
        s,
        "re_le_1_coefficient_bound",
        1e-15,
        &coeff,
        "a in {0, 0.001, ..., 0.999}, k <= 50; worst excess of (1-a^2)a^(k-1) over 2(1-a)".into(),
    ));

    // |b_k| ≤ k (Koebe), |b_k| ≤ 1 (convex) for g ≺ f
    let order = 40;
    let sub: Vec<(Observation, Observation)> = (0..RANDOM_FUNCTIONS as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(seed, 1_000 + i);
            let w = random_schwarz(&mut rng, MAX_DEGREE, ZERO_RADIUS);
            let excess = |outer: OuterMap| -> Observation {
                let pair = SubordinationPair::new(outer, w.clone()).map_err(|e| e.to_string())?;
                let c = AnalyticFunction::Subordinate(pair).taylor_coefficients(order);
                Ok((1..=order)
                    .map(|k| {
                        let cap = if outer == OuterMap::Koebe { k as f64 } else { 1.0 };
                        c.coefficients[k].norm() - cap
                    })
                    .fold(f64::NEG_INFINITY, f64::max))
            };
            (excess(OuterMap::Koebe), excess(OuterMap::HalfPlane))
        })
        .collect();
    let (koebe, half): (Vec<_>, Vec<_>) = sub.into_iter().unzip();
    checks.push(upper_check(s, "subordinate_coefficients_koebe", 1e-9, &koebe, format!("{RANDOM_FUNCTIONS} Schwarz functions, k <= {order}; worst excess of |b_k| over k")));
    checks.push(upper_check(s, "subordinate_coefficients_convex", 1e-9, &half, format!("{RANDOM_FUNCTIONS} Schwarz functions, k <= {order}; worst excess of |b_k| over 1")));
    checks
}

// ---------------------------------------------------------- inequalities

/// `w(z) = z(z+a)/(1+az)`, tending to the identity as `a → 1`.
fn extremal_inner(a: f64) -> BlaschkeProduct {
    BlaschkeProduct::new(
        vec![Complex64::new(0.0, 0.0), Complex64::new(-a, 0.0)],
        Complex64::new(1.0, 0.0),
    )
    .expect("zeros inside the disk")
}

fn theorem_sum(problem: &RadiusProblem, f: &AnalyticFunction, r: f64) -> Result<SumValue, VerifyError> {
    let fam = &problem.family;
    let p = problem.p.unwrap_or(1.0);
    match problem.theorem {
        Theorem::T1 => sum_a(f, fam, p, r, problem.m),
        Theorem::T2 => sum_b(f, fam, p, r, problem.m),
        Theorem::T3 => sum_c(f, OuterMap::Koebe, fam, r, problem.m),
        Theorem::T4 => sum_d(f, OuterMap::HalfPlane, fam, r, problem.m),
    }
}

/// Extremal and random admissible functions for a theorem.
fn test_functions(theorem: Theorem, rng: &mut ChaCha8Rng) -> Vec<AnalyticFunction> {
    let outer = if theorem == Theorem::T3 { OuterMap::Koebe } else { OuterMap::HalfPlane };
    let subordinate = |w: BlaschkeProduct| {
        AnalyticFunction::Subordinate(SubordinationPair::new(outer, w).expect("w(0) = 0"))
    };
    let mut fs: Vec<AnalyticFunction> = EXTREMAL_PARAMETERS
        .iter()
        .map(|&a| match theorem {
            Theorem::T1 => AnalyticFunction::Moebius(MoebiusExtremal::plus(a)),
            Theorem::T2 => AnalyticFunction::Moebius(MoebiusExtremal::minus(a)),
            Theorem::T3 | Theorem::T4 => subordinate(extremal_inner(a)),
        })
        .collect();
    for _ in 0..RANDOM_FUNCTIONS {
        fs.push(match theorem {
            Theorem::T1 | Theorem::T2 => {
                AnalyticFunction::Blaschke(random_blaschke(rng, MAX_DEGREE, ZERO_RADIUS))
            }
            Theorem::T3 | Theorem::T4 => subordinate(random_schwarz(rng, MAX_DEGREE, ZERO_RADIUS)),
        });
    }
    fs
}

struct InequalityOutcome {
    theorem: Theorem,
    margins: Vec<Observation>,
    /// sup over the circle minus the value at `z = r`, plus family only
    axis_excess: Vec<Observation>,
}

fn inequality_checks(seed: u64, options: &SolverOptions) -> Result<Vec<Check>, VerifyError> {
    let s = Suite::Inequalities;
    let problems = verification_problems();
    let outcomes: Vec<InequalityOutcome> = problems
        .par_iter()
        .enumerate()
        .map(|(i, cp)| {
            let problem = &cp.problem;
            let label = describe(cp);
            let root = match problem.solve(options) {
                Ok(r) => r.root,
                Err(e) => {
                    return InequalityOutcome {
                        theorem: problem.theorem,
                        margins: vec![Err(format!("{label}: {e}"))],
                        axis_excess: Vec::new(),
                    }
                }
            };
            let r = 0.99 * root;
            let mut rng = rng_for(seed, 10_000 + i as u64);
            let fs = test_functions(problem.theorem, &mut rng);
            let margins = fs
                .iter()
                .map(|f| {
                    theorem_sum(problem, f, r)
                        .map(|v| v.margin())
                        .map_err(|e| format!("{label}: {e}"))
                })
                .collect();
            let axis_excess = if problem.theorem == Theorem::T1 {
                let p = problem.p.unwrap_or(1.0);
                let w = Complex64::new(problem.m.pow(r), 0.0);
                fs[..EXTREMAL_PARAMETERS.len()]
                    .iter()
                    .map(|f| {
                        let sup = sum_a(f, &problem.family, p, r, problem.m);
                        let axis = sum_a_at(f, &problem.family, p, r, w);
                        match (sup, axis) {
                            (Ok(s), Ok(a)) => Ok(s.value - a.value),
                            (Err(e), _) | (_, Err(e)) => Err(format!("{label}: {e}")),
                        }
                    })
                    .collect()
            } else {
                Vec::new()
            };
            InequalityOutcome {
                theorem: problem.theorem,
                margins,
                axis_excess,
            }
        })
        .collect();

    let mut checks = Vec::new();
    for (theorem, sum) in [(Theorem::T1, "A"), (Theorem::T2, "B"), (Theorem::T3, "C"), (Theorem::T4, "D")] {
        let relevant: Vec<&InequalityOutcome> = outcomes.iter().filter(|o| o.theorem == theorem).collect();
        let margins: Vec<Observation> = relevant.iter().flat_map(|o| o.margins.iter().cloned()).collect();
        checks.push(upper_check(
            s,
            &format!("inequality_{theorem}"),
            INEQUALITY_TOL,
            &margins,
            format!(
                "{} problems at r = 0.99 root, extremal a in {EXTREMAL_PARAMETERS:?} + {RANDOM_FUNCTIONS} random functions each; worst {sum} - bound",
                relevant.len()
            ),
        ));
    }
    let axis: Vec<Observation> = outcomes.iter().flat_map(|o| o.axis_excess.iter().cloned()).collect();
    checks.push(upper_check(
        s,
        "plus_family_peaks_on_real_axis",
        1e-12,
        &axis,
        "T1 extremal family: sup over 64 angles minus the value at z = r".into(),
    ));
    Ok(checks)
}

fn describe(cp: &CatalogProblem) -> String {
    format!(
        "{} {} m={} N={} p={}",
        cp.tag.table_id(),
        cp.problem.theorem,
        cp.params.m,
        cp.params.n,
        cp.params.p
    )
}

// ------------------------------------------------------------- sharpness

fn sharpness_checks(options: &SolverOptions) -> Result<Vec<Check>, VerifyError> {
    let s = Suite::Sharpness;
    let problems = verification_problems();
    let outcomes: Vec<(Theorem, Observation, Vec<Observation>)> = problems
        .par_iter()
        .map(|cp| {
            let label = describe(cp);
            let probe = sharpness_probe(&cp.problem, 0.01, 1e-3, options);
            let margin = probe
                .as_ref()
                .map(|p| p.margin)
                .map_err(|e| format!("{label}: {e}"));
            let slopes = if cp.problem.theorem.p_max().is_some() {
                [1e-2, 5e-3]
                    .iter()
                    .map(|&eps| {
                        sharpness_probe(&cp.problem, eps, 1e-3, options)
                            .map(|p| p.first_order.unwrap_or(f64::NAN))
                            .map_err(|e| format!("{label}: {e}"))
                    })
                    .collect()
            } else {
                Vec::new()
            };
            (cp.problem.theorem, margin, slopes)
        })
        .collect();

    let mut checks = Vec::new();
    for theorem in [Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4] {
        let rel: Vec<_> = outcomes.iter().filter(|o| o.0 == theorem).collect();
        let margins: Vec<Observation> = rel.iter().map(|o| o.1.clone()).collect();
        let extremal = match theorem {
            Theorem::T1 => "g, a = 1 - 1e-3",
            Theorem::T2 => "h, a = 1 - 1e-3",
            Theorem::T3 => "Koebe",
            Theorem::T4 => "half-plane map",
        };
        checks.push(strict_lower_check(
            s,
            &format!("sharpness_{theorem}"),
            0.0,
            &margins,
            format!(
                "{} problems at r = root + 0.01 with {extremal}; smallest margin",
                rel.len()
            ),
        ));
        if theorem.p_max().is_some() {
            let slopes: Vec<Observation> = rel.iter().flat_map(|o| o.2.iter().cloned()).collect();
            checks.push(strict_lower_check(
                s,
                &format!("first_order_{theorem}"),
                0.0,
                &slopes,
                "coefficient of (1 - a) at r = root + {0.01, 0.005}; smallest value".into(),
            ));
        }
    }
    Ok(checks)
}

// ----------------------------------------------------------------- radii

fn radius_checks(options: &SolverOptions) -> Result<Vec<Check>, VerifyError> {
    let s = Suite::Radii;
    let canonical: Vec<RadiusProblem> = verification_problems().into_iter().map(|c| c.problem).collect();
    let literal: Vec<RadiusProblem> = all_tables()
        .into_iter()
        .flat_map(|t| t.cells.into_iter().map(move |c| t.tag.literal_problem(c.params)))
        .collect();
    let catalog: Vec<RadiusProblem> = canonical.iter().chain(literal.iter()).copied().collect();

    // m → ∞ limit, once per (theorem, p, family)
    let mut families: Vec<RadiusProblem> = Vec::new();
    for p in &canonical {
        if !families.iter().any(|q| q.theorem == p.theorem && q.p == p.p && q.family == p.family) {
            families.push(*p);
        }
    }
    let limits: Vec<Observation> = families
        .par_iter()
        .map(|p| {
            let at = |m| RadiusProblem { m, ..*p }.solve(options).map(|r| r.root);
            match (at(Order::Finite(1000)), at(Order::Infinite)) {
                (Ok(a), Ok(b)) => Ok((a - b).abs()),
                (Err(e), _) | (_, Err(e)) => Err(format!("{} {}: {e}", p.theorem, p.family)),
            }
        })
        .collect();

    let halved = SolverOptions {
        scan_step: options.scan_step / 2.0,
        ..*options
    };
    let solved: Vec<(Observation, Observation, Observation)> = catalog
        .par_iter()
        .map(|p| {
            let label = format!("{} {} {}", p.theorem, p.mode, p.family);
            let full = p.solve(options).map_err(|e| format!("{label}: {e}"));
            let half = p.solve(&halved).map_err(|e| format!("{label}: {e}"));
            match (full, half) {
                (Ok(a), Ok(b)) => {
                    let f = p.defining_function();
                    let sign_change = match (f.eval(a.bracket[0]), f.eval(a.bracket[1])) {
                        (Ok(lo), Ok(hi)) if lo * hi <= 0.0 => Ok(a.bracket[1] - a.bracket[0]),
                        _ => Err(format!("{label}: no sign change across {:?}", a.bracket)),
                    };
                    (Ok((a.root - b.root).abs()), Ok(a.residual), sign_change)
                }
                (Err(e), _) | (_, Err(e)) => (Err(e.clone()), Err(e.clone()), Err(e)),
            }
        })
        .collect();
    let mut stability = Vec::new();
    let mut residual = Vec::new();
    let mut bracket = Vec::new();
    for (a, b, c) in solved {
        stability.push(a);
        residual.push(b);
        bracket.push(c);
    }

    // roots nondecreasing in m, N and p over each literal table
    let mut steps: Vec<Observation> = Vec::new();
    for table in all_tables() {
        let roots: Vec<(crate::radius::EquationParams, Result<f64, String>)> = table
            .cells
            .par_iter()
            .map(|c| {
                (
                    c.params,
                    table
                        .tag
                        .literal_problem(c.params)
                        .solve(options)
                        .map(|r| r.root)
                        .map_err(|e| format!("{}: {e}", table.table_id)),
                )
            })
            .collect();
        for (i, (pi, ri)) in roots.iter().enumerate() {
            for (pj, rj) in &roots[i + 1..] {
                let dims = [(pi.m, pj.m), (pi.n, pj.n)];
                let differs: Vec<bool> = dims.iter().map(|(a, b)| a != b).collect();
                let p_step = pi.p != pj.p;
                let count = differs.iter().filter(|d| **d).count() + p_step as usize;
                if count != 1 {
                    continue;
                }
                let forward = if pi.m != pj.m {
                    pi.m < pj.m
                } else if pi.n != pj.n {
                    pi.n < pj.n
                } else {
                    pi.p < pj.p
                };
                steps.push(match (ri, rj) {
                    (Ok(a), Ok(b)) => Ok(if forward { a - b } else { b - a }),
                    (Err(e), _) | (_, Err(e)) => Err(e.clone()),
                });
            }
        }
    }

    Ok(vec![
        upper_check(s, "limit_m_infinity", LIMIT_TOL, &limits, format!("{} families; largest |root(m=1000) - root(m=inf)|", families.len())),
        upper_check(s, "root_stability", 1e-10, &stability, format!("{} catalog problems; largest root change when the scan step is halved", catalog.len())),
        upper_check(s, "root_residual", 1e-9, &residual, "largest |F(root)|".into()),
        upper_check(s, "bracket_width", 1e-12, &bracket, "widest sign-change bracket".into()),
        upper_check(s, "table_monotonicity", LEMMA_TOL, &steps, "literal roots along m, N and p; largest decrease".into()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Lemmas, Suite::Inequalities, Suite::Sharpness, Suite::Radii, Suite::All] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn extremal_inner_is_a_schwarz_function() {
        let w = extremal_inner(0.9);
        assert!(w.eval(Complex64::new(0.0, 0.0)).norm() < 1e-15);
        let z = Complex64::new(0.3, 0.2);
        let direct = z * (z + 0.9) / (1.0 + 0.9 * z);
        assert!((w.eval(z) - direct).norm() < 1e-15);
    }

    #[test]
    fn fold_counts_errors_as_violations() {
        let c = upper_check(Suite::Lemmas, "x", 1.0, &[Ok(0.5), Err("boom".into()), Ok(2.0)], String::new());
        assert_eq!(c.violations, 2);
        assert_eq!(c.worst, 2.0);
        assert!(!c.passed);
        assert!(c.detail.contains("boom"));
    }
}
