//! The four Bohr–Rogosinski type sums and the bounds they are compared with.
//!
//! Truncated series always carry a certified tail bound, and the reported
//! value is `partial sum + tail bound`, so a value below the bound is a proof
//! of the inequality at that point up to rounding.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::VerifyError;
use crate::functions::{AnalyticFunction, BlaschkeProduct, CoefficientBound, MoebiusSign, OuterMap};
use crate::weights::{WeightError, WeightFamily};
use crate::Order;

/// Points on `|z| = r` used for the supremum.
pub const ANGLES: usize = 64;
/// Target for every truncation tail.
const TAIL_TOL: f64 = 1e-12;
/// Largest truncation order tried.
const MAX_ORDER: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumValue {
    pub value: f64,
    pub bound: f64,
}

impl SumValue {
    pub fn margin(&self) -> f64 {
        self.value - self.bound
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.value <= self.bound + tol
    }
}

fn check_radius(r: f64) -> Result<(), VerifyError> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(VerifyError::Domain(format!("r = {r} is outside [0, 1)")))
    }
}

fn check_p(p: f64) -> Result<(), VerifyError> {
    if p > 0.0 {
        Ok(())
    } else {
        Err(VerifyError::Domain(format!("p = {p} must be positive")))
    }
}

/// `z^m` for `z = r e^{iθ}` over the angle grid.
fn circle_images(r: f64, m: Order) -> Vec<Complex64> {
    match m {
        Order::Infinite => vec![Complex64::new(0.0, 0.0)],
        Order::Finite(m) => {
            let rm = r.powi(m as i32);
            (0..ANGLES)
                .map(|j| Complex64::from_polar(rm, m as f64 * 2.0 * PI * j as f64 / ANGLES as f64))
                .collect()
        }
    }
}

/// `Σ_{j>after} bound_j w_j(r)`, with a divergent series counted as `+∞`.
fn bounded_tail(
    bound: CoefficientBound,
    family: &WeightFamily,
    r: f64,
    after: u64,
) -> Result<f64, VerifyError> {
    match bound.weighted_tail(family, r, after) {
        Ok(t) => Ok(t),
        Err(WeightError::Divergence { .. }) => Ok(f64::INFINITY),
        Err(WeightError::Domain(x)) if x >= 1.0 => Ok(f64::INFINITY),
        Err(e) => Err(e.into()),
    }
}

fn best_tail(
    bounds: &[CoefficientBound],
    family: &WeightFamily,
    r: f64,
    after: u64,
) -> Result<f64, VerifyError> {
    let mut best = f64::INFINITY;
    for &b in bounds {
        best = best.min(bounded_tail(b, family, r, after)?);
    }
    Ok(best)
}

/// Smallest `K ≤ MAX_ORDER` whose tail is at most `TAIL_TOL`, with that tail.
fn truncation_order(
    bounds: &[CoefficientBound],
    family: &WeightFamily,
    r: f64,
) -> Result<(usize, f64), VerifyError> {
    let top = best_tail(bounds, family, r, MAX_ORDER as u64)?;
    if !(top <= TAIL_TOL) {
        return Err(VerifyError::Truncation {
            r,
            tol: TAIL_TOL,
            max_order: MAX_ORDER,
        });
    }
    let (mut lo, mut hi, mut tail) = (0usize, MAX_ORDER, top);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let t = best_tail(bounds, family, r, mid as u64)?;
        if t <= TAIL_TOL {
            hi = mid;
            tail = t;
        } else {
            lo = mid + 1;
        }
    }
    Ok((hi, tail))
}

/// `Σ_{j ≤ K} |c_j| w_j(r)` over the lattice of `family`.
fn partial_sum(coefficients: &[Complex64], family: &WeightFamily, r: f64) -> f64 {
    let k = coefficients.len() as u64;
    family
        .exponents()
        .take_while(|&j| j < k)
        .map(|j| coefficients[j as usize].norm() * family.weight(j, r))
        .sum()
}

fn cauchy_bound(b: &BlaschkeProduct, center_abs: f64) -> CoefficientBound {
    let (radius, max) = b.cauchy_circle();
    let rho = radius - center_abs;
    CoefficientBound::Geometric {
        scale: max / rho,
        ratio: 1.0 / rho,
    }
}

/// Exact `Σ_k |c_k(w)| w_k(r)` for a Möbius member expanded at `w`.
fn moebius_local_sum(
    a: f64,
    sign: MoebiusSign,
    w: Complex64,
    family: &WeightFamily,
    r: f64,
) -> Result<f64, VerifyError> {
    let d = match sign {
        MoebiusSign::Plus => (1.0 + a * w).norm(),
        MoebiusSign::Minus => (1.0 - a * w).norm(),
    };
    let exact = CoefficientBound::Geometric {
        scale: (1.0 - a * a) / (d * d),
        ratio: a / d,
    };
    bounded_tail(exact, family, r, 0)
}

/// `Σ_{k≥1} |a_k| ν_k(r)` for the Taylor coefficients at the origin.
fn coefficient_sum(f: &AnalyticFunction, family: &WeightFamily, r: f64) -> Result<f64, VerifyError> {
    match f {
        AnalyticFunction::Constant { .. } => Ok(0.0),
        AnalyticFunction::Moebius(g) => {
            moebius_local_sum(g.a, g.sign, Complex64::new(0.0, 0.0), family, r)
        }
        _ => {
            let mut bounds = vec![f.coefficient_bound()];
            if let AnalyticFunction::Blaschke(b) = f {
                bounds.push(cauchy_bound(b, 0.0));
            }
            let (order, tail) = truncation_order(&bounds, family, r)?;
            let series = f.taylor_coefficients(order);
            Ok(partial_sum(&series.coefficients, family, r) + tail)
        }
    }
}

/// `|f(w)|^p ν₀(r) + Σ_{k≥1} |a_k| ν_k(r)` at the single point `w = z^m`.
pub fn sum_a_at(
    f: &AnalyticFunction,
    family: &WeightFamily,
    p: f64,
    r: f64,
    w: Complex64,
) -> Result<SumValue, VerifyError> {
    check_radius(r)?;
    check_p(p)?;
    let head = f.eval(w)?.norm().powf(p) * family.head_weight;
    Ok(SumValue {
        value: head + coefficient_sum(f, family, r)?,
        bound: family.head_weight,
    })
}

/// `max_{|z|=r} |f(z^m)|^p ν₀(r) + Σ_{k≥1} |a_k| ν_k(r)` against `ν₀(r)`.
pub fn sum_a(
    f: &AnalyticFunction,
    family: &WeightFamily,
    p: f64,
    r: f64,
    m: Order,
) -> Result<SumValue, VerifyError> {
    check_radius(r)?;
    check_p(p)?;
    let coefficients = coefficient_sum(f, family, r)?;
    let mut head = 0.0f64;
    for w in circle_images(r, m) {
        head = head.max(f.eval(w)?.norm().powf(p));
    }
    Ok(SumValue {
        value: head * family.head_weight + coefficients,
        bound: family.head_weight,
    })
}

/// `|f(w)|^p ψ₀(r) + Σ_{k≥1} |f^{(k)}(w)/k!| ψ_k(r)` at the single point `w = z^m`.
pub fn sum_b_at(
    f: &AnalyticFunction,
    family: &WeightFamily,
    p: f64,
    r: f64,
    w: Complex64,
) -> Result<SumValue, VerifyError> {
    check_radius(r)?;
    check_p(p)?;
    let fw = f.eval(w)?;
    let head = fw.norm().powf(p) * family.head_weight;
    let series = match f {
        AnalyticFunction::Constant { .. } => 0.0,
        AnalyticFunction::Moebius(g) => moebius_local_sum(g.a, g.sign, w, family, r)?,
        AnalyticFunction::Blaschke(b) => {
            let s = w.norm();
            let ruscheweyh = CoefficientBound::Geometric {
                scale: (1.0 - fw.norm_sqr()) / ((1.0 + s) * (1.0 - s)),
                ratio: 1.0 / (1.0 - s),
            };
            let (order, tail) = truncation_order(&[ruscheweyh, cauchy_bound(b, s)], family, r)?;
            partial_sum(&b.local_taylor(w, order), family, r) + tail
        }
        other => {
            return Err(VerifyError::Unsupported(format!(
                "the derivative sum needs a member of the unit ball, got {}",
                kind_name(other)
            )))
        }
    };
    Ok(SumValue {
        value: head + series,
        bound: family.head_weight,
    })
}

/// Maximum of [`sum_b_at`] over `w = z^m`, `|z| = r`, against `ψ₀(r)`.
pub fn sum_b(
    f: &AnalyticFunction,
    family: &WeightFamily,
    p: f64,
    r: f64,
    m: Order,
) -> Result<SumValue, VerifyError> {
    check_radius(r)?;
    let mut best = SumValue {
        value: f64::NEG_INFINITY,
        bound: family.head_weight,
    };
    for w in circle_images(r, m) {
        let s = sum_b_at(f, family, p, r, w)?;
        if s.value > best.value {
            best = s;
        }
    }
    Ok(best)
}

fn kind_name(f: &AnalyticFunction) -> &'static str {
    match f {
        AnalyticFunction::Constant { .. } => "a constant",
        AnalyticFunction::Moebius(_) => "a Möbius map",
        AnalyticFunction::Blaschke(_) => "a Blaschke product",
        AnalyticFunction::Koebe => "the Koebe function",
        AnalyticFunction::HalfPlane => "the half-plane map",
        AnalyticFunction::Subordinate(_) => "a subordinate composition",
    }
}

fn subordinate_to(g: &AnalyticFunction, outer: OuterMap) -> bool {
    match g {
        AnalyticFunction::Constant { value } => *value == Complex64::new(0.0, 0.0),
        AnalyticFunction::Koebe => outer == OuterMap::Koebe,
        AnalyticFunction::HalfPlane => outer == OuterMap::HalfPlane,
        AnalyticFunction::Subordinate(pair) => pair.outer == outer,
        _ => false,
    }
}

fn subordinate_sum(
    g: &AnalyticFunction,
    outer: OuterMap,
    family: &WeightFamily,
    r: f64,
    m: Order,
) -> Result<SumValue, VerifyError> {
    check_radius(r)?;
    if !subordinate_to(g, outer) {
        return Err(VerifyError::Unsupported(format!(
            "{} is not a catalogued function subordinate to {outer:?}",
            kind_name(g)
        )));
    }
    let coefficients = match g {
        AnalyticFunction::Constant { .. } => 0.0,
        _ => {
            let (order, tail) = truncation_order(&[outer.subordinate_bound()], family, r)?;
            partial_sum(&g.taylor_coefficients(order).coefficients, family, r) + tail
        }
    };
    let mut head = 0.0f64;
    for w in circle_images(r, m) {
        head = head.max(g.eval(w)?.norm());
    }
    Ok(SumValue {
        value: head + coefficients,
        bound: outer.value_at_origin() + outer.boundary_distance(),
    })
}

/// `max_{|z|=r} |g(z^m)| + Σ_{k≥1} |b_k| φ_k(r)` against `|f(0)| + dist(f(0), ∂f(𝔻))`
/// for `g ≺ f = outer`.
pub fn sum_c(
    g: &AnalyticFunction,
    outer: OuterMap,
    family: &WeightFamily,
    r: f64,
    m: Order,
) -> Result<SumValue, VerifyError> {
    subordinate_sum(g, outer, family, r, m)
}

/// The convex counterpart of [`sum_c`]; `outer` must be convex.
pub fn sum_d(
    g: &AnalyticFunction,
    outer: OuterMap,
    family: &WeightFamily,
    r: f64,
    m: Order,
) -> Result<SumValue, VerifyError> {
    if !outer.is_convex() {
        return Err(VerifyError::Unsupported(format!("{outer:?} is not convex")));
    }
    subordinate_sum(g, outer, family, r, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{BlaschkeProduct, MoebiusExtremal, SubordinationPair};
    use crate::weights::WeightKind;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn degenerate_moebius_collapses_to_head_weight() {
        let g = AnalyticFunction::Moebius(MoebiusExtremal::plus(1.0));
        let fam = WeightFamily::power(5);
        let s = sum_a(&g, &fam, 1.0, 0.6, Order::Finite(1)).unwrap();
        assert_eq!(s.value, 1.0);
        assert_eq!(s.bound, 1.0);
    }

    #[test]
    fn moebius_closed_form_matches_partial_sum() {
        let a = 0.7;
        let r = 0.55;
        let g = MoebiusExtremal::plus(a);
        let fam = WeightFamily::new(WeightKind::Quadratic, 2).unwrap();
        let oracle: f64 = (2..4000)
            .map(|k| g.coefficient(k).abs() * fam.weight(k as u64, r))
            .sum();
        let s = sum_a_at(&AnalyticFunction::Moebius(g), &fam, 1.0, r, real(0.0)).unwrap();
        assert!((s.value - a - oracle).abs() < 1e-13);
    }

    #[test]
    fn t1_extremal_below_and_above_the_table_root() {
        let fam = WeightFamily::power(5);
        let below = AnalyticFunction::Moebius(MoebiusExtremal::plus(0.99));
        let s = sum_a(&below, &fam, 1.0, 0.568466 - 0.01, Order::Finite(1)).unwrap();
        assert!(s.value <= s.bound, "{s:?}");
        let above = AnalyticFunction::Moebius(MoebiusExtremal::plus(0.999));
        let s = sum_a(&above, &fam, 1.0, 0.568466 + 0.01, Order::Finite(1)).unwrap();
        assert!(s.value > s.bound, "{s:?}");
    }

    #[test]
    fn plus_family_peaks_on_the_real_axis() {
        let fam = WeightFamily::power(3);
        for &a in &[0.1, 0.5, 0.9] {
            let g = AnalyticFunction::Moebius(MoebiusExtremal::plus(a));
            for &m in &[1, 2, 3] {
                let r = 0.7;
                let on_axis = sum_a_at(&g, &fam, 1.0, r, real(r.powi(m))).unwrap();
                let sup = sum_a(&g, &fam, 1.0, r, Order::Finite(m as u32)).unwrap();
                assert!(sup.value <= on_axis.value + 1e-12);
            }
        }
    }

    #[test]
    fn constant_derivative_sum() {
        let c = AnalyticFunction::Constant { value: Complex64::new(0.3, 0.4) };
        let fam = WeightFamily::with_head(WeightKind::Power, 1, 0.8).unwrap();
        let s = sum_b(&c, &fam, 1.5, 0.5, Order::Finite(2)).unwrap();
        assert!((s.value - 0.5f64.powf(1.5) * 0.8).abs() < 1e-15);
        assert_eq!(s.bound, 0.8);
    }

    #[test]
    fn blaschke_derivative_sum_matches_quadrature_terms() {
        let b = BlaschkeProduct::new(
            vec![Complex64::new(0.3, 0.1), Complex64::new(-0.5, 0.2)],
            Complex64::new(0.0, 1.0),
        )
        .unwrap();
        let f = AnalyticFunction::Blaschke(b);
        let fam = WeightFamily::power(1);
        let r = 0.4;
        let w = Complex64::from_polar(r, 0.9);
        let s = sum_b_at(&f, &fam, 1.0, r, w).unwrap();
        let mut oracle = f.eval(w).unwrap().norm();
        for k in 1..80 {
            oracle += f.kth_derivative_magnitude(w, k).unwrap() * r.powi(k as i32);
        }
        assert!((s.value - oracle).abs() < 1e-10, "{} vs {oracle}", s.value);
    }

    #[test]
    fn minus_family_sum_matches_the_sharpness_expansion() {
        // h(r^m)^p ψ₀ + (1−a²) Σ a^{k−1}/(1−a r^m)^{k+1} ψ_k(r)
        let (a, r, p) = (0.8, 0.3, 1.0);
        let fam = WeightFamily::power(2);
        let rm: f64 = r * r;
        let mut oracle = ((a - rm) / (1.0 - a * rm)).powf(p);
        for k in 2..400 {
            oracle += (1.0 - a * a) * a.powi(k - 1) / (1.0 - a * rm).powi(k + 1) * r.powi(k);
        }
        let h = AnalyticFunction::Moebius(MoebiusExtremal::minus(a));
        let s = sum_b_at(&h, &fam, p, r, real(rm)).unwrap();
        assert!((s.value - oracle).abs() < 1e-13);
    }

    #[test]
    fn koebe_below_and_at_the_boundary_root() {
        let identity = SubordinationPair::new(OuterMap::Koebe, BlaschkeProduct::identity()).unwrap();
        let g = AnalyticFunction::Subordinate(identity);
        let s = sum_c(&g, OuterMap::Koebe, &WeightFamily::power(5), 0.17, Order::Finite(1)).unwrap();
        assert!(s.holds(0.0), "{s:?}");
        assert_eq!(s.bound, 0.25);
        let s = sum_c(&g, OuterMap::Koebe, &WeightFamily::zero(), 0.171573, Order::Finite(1)).unwrap();
        assert!(s.margin().abs() < 1e-5, "{s:?}");
    }

    #[test]
    fn zero_function_is_trivially_below() {
        let zero = AnalyticFunction::Constant { value: Complex64::new(0.0, 0.0) };
        let s = sum_c(&zero, OuterMap::Koebe, &WeightFamily::power(1), 0.9, Order::Finite(1)).unwrap();
        assert_eq!(s.value, 0.0);
        let s = sum_d(&zero, OuterMap::HalfPlane, &WeightFamily::power(1), 0.9, Order::Finite(1)).unwrap();
        assert_eq!(s.bound, 0.5);
    }

    #[test]
    fn rejects_mismatched_functions() {
        let fam = WeightFamily::power(1);
        assert!(sum_d(&AnalyticFunction::Koebe, OuterMap::Koebe, &fam, 0.1, Order::Finite(1)).is_err());
        assert!(sum_c(&AnalyticFunction::HalfPlane, OuterMap::Koebe, &fam, 0.1, Order::Finite(1)).is_err());
        assert!(sum_b(&AnalyticFunction::Koebe, &fam, 1.0, 0.1, Order::Finite(1)).is_err());
        assert!(sum_a(&AnalyticFunction::Koebe, &fam, 1.0, 1.0, Order::Finite(1)).is_err());
    }

    #[test]
    fn truncation_failure_is_reported() {
        let b = AnalyticFunction::Blaschke(
            BlaschkeProduct::new(vec![Complex64::new(0.99, 0.0)], Complex64::new(1.0, 0.0)).unwrap(),
        );
        let err = sum_b(&b, &WeightFamily::power(1), 1.0, 0.999, Order::Finite(1)).unwrap_err();
        assert!(matches!(err, VerifyError::Truncation { .. }), "{err:?}");
    }
}
