//! Catalog of analytic functions on the unit disk.
//!
//! The members are the ones the four theorems need: the Möbius extremal
//! families `g(z) = (a+z)/(1+az)` and `h(z) = (a-z)/(1-az)`, finite Blaschke
//! products (random members of the unit ball of `H^∞`), the Koebe function,
//! the half-plane map `z/(1-z)`, and compositions `outer ∘ w` with a Schwarz
//! function `w`.
//!
//! Taylor data is computed by exact power-series arithmetic wherever a closed
//! form exists. Contour quadrature ([`contour_coefficient`]) is the general
//! fallback and the independent check for everything else.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::weights::{linear_tail, WeightError, WeightFamily};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FunctionError {
    #[error("|z| = {0} is outside the open unit disk")]
    Domain(f64),
    #[error("contour quadrature for k = {k} did not stabilize with {nodes} nodes")]
    NonConvergence { k: usize, nodes: usize },
    #[error("invalid function: {0}")]
    Invalid(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

const ORIGIN: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn check_disk(z: Complex64) -> Result<(), FunctionError> {
    let r = z.norm();
    if r < 1.0 {
        Ok(())
    } else {
        Err(FunctionError::Domain(r))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoebiusSign {
    /// `g(z) = (a+z)/(1+az)`
    Plus,
    /// `h(z) = (a-z)/(1-az)`
    Minus,
}

/// The one-parameter extremal families of the sharpness arguments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MoebiusExtremal {
    pub a: f64,
    pub sign: MoebiusSign,
}

impl MoebiusExtremal {
    /// `a = 1` is accepted as the degenerate constant `1`.
    pub fn new(a: f64, sign: MoebiusSign) -> Result<Self, FunctionError> {
        if !(0.0..=1.0).contains(&a) {
            return Err(FunctionError::Invalid(format!("a = {a} is outside [0, 1]")));
        }
        Ok(MoebiusExtremal { a, sign })
    }

    pub fn plus(a: f64) -> Self {
        Self::new(a, MoebiusSign::Plus).expect("a in [0, 1]")
    }

    pub fn minus(a: f64) -> Self {
        Self::new(a, MoebiusSign::Minus).expect("a in [0, 1]")
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let a = self.a;
        match self.sign {
            MoebiusSign::Plus => (a + z) / (1.0 + a * z),
            MoebiusSign::Minus => (a - z) / (1.0 - a * z),
        }
    }

    /// Taylor coefficient `c_k` at the origin.
    pub fn coefficient(&self, k: usize) -> f64 {
        let a = self.a;
        if k == 0 {
            return a;
        }
        let mag = (1.0 - a * a) * a.powi(k as i32 - 1);
        match self.sign {
            MoebiusSign::Plus if k % 2 == 0 => -mag,
            MoebiusSign::Plus => mag,
            MoebiusSign::Minus => -mag,
        }
    }

    /// `f^{(k)}(z0)/k!` for `k ≥ 1`.
    pub fn local_coefficient(&self, z0: Complex64, k: usize) -> Complex64 {
        let a = self.a;
        let scale = (1.0 - a * a) * a.powi(k as i32 - 1);
        match self.sign {
            MoebiusSign::Plus => {
                let s = if k % 2 == 1 { scale } else { -scale };
                s / (1.0 + a * z0).powi(k as i32 + 1)
            }
            MoebiusSign::Minus => -scale / (1.0 - a * z0).powi(k as i32 + 1),
        }
    }
}

/// `B(z) = λ Π (z - α)/(1 - ᾱ z)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlaschkeProduct {
    pub zeros: Vec<Complex64>,
    pub rotation: Complex64,
}

impl BlaschkeProduct {
    pub fn new(zeros: Vec<Complex64>, rotation: Complex64) -> Result<Self, FunctionError> {
        if let Some(z) = zeros.iter().find(|z| !(z.norm() < 1.0)) {
            return Err(FunctionError::Invalid(format!("zero {z} is not inside the disk")));
        }
        if (rotation.norm() - 1.0).abs() > 1e-12 {
            return Err(FunctionError::Invalid(format!(
                "rotation {rotation} is not unimodular"
            )));
        }
        Ok(BlaschkeProduct { zeros, rotation })
    }

    /// `B(z) = z`.
    pub fn identity() -> Self {
        BlaschkeProduct {
            zeros: vec![ORIGIN],
            rotation: ONE,
        }
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.zeros
            .iter()
            .fold(self.rotation, |acc, &alpha| acc * (z - alpha) / (1.0 - alpha.conj() * z))
    }

    /// Taylor coefficients of `t ↦ B(z0 + t)` up to order `order`.
    ///
    /// Each factor `φ(z0+t) = (c + t)/(d - ᾱ t)` with `c = z0 - α`,
    /// `d = 1 - ᾱ z0` is multiplied in through `d Q_n - ᾱ Q_{n-1} = c P_n + P_{n-1}`.
    pub fn local_taylor(&self, z0: Complex64, order: usize) -> Vec<Complex64> {
        let mut p = vec![ORIGIN; order + 1];
        p[0] = self.rotation;
        let mut q = vec![ORIGIN; order + 1];
        for &alpha in &self.zeros {
            let ab = alpha.conj();
            let c = z0 - alpha;
            let d = 1.0 - ab * z0;
            let mut prev_p = ORIGIN;
            let mut prev_q = ORIGIN;
            for n in 0..=order {
                let qn = (c * p[n] + prev_p + ab * prev_q) / d;
                prev_p = p[n];
                prev_q = qn;
                q[n] = qn;
            }
            std::mem::swap(&mut p, &mut q);
        }
        p
    }

    /// A radius `R > 1` inside the domain of analyticity and `M ≥ max_{|z|=R} |B|`.
    pub fn cauchy_circle(&self) -> (f64, f64) {
        let rho = self.zeros.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let radius = if rho == 0.0 { 2.0 } else { 0.5 * (1.0 + 1.0 / rho) };
        let bound = self
            .zeros
            .iter()
            .map(|z| {
                let s = z.norm();
                (radius + s) / (1.0 - s * radius)
            })
            .product();
        (radius, bound)
    }
}

/// Univalent outer maps with known distance from `f(0)` to the image boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OuterMap {
    /// `z/(1-z)²`, image boundary at distance `1/4`.
    Koebe,
    /// `z/(1-z)`, convex, image `Re w > -1/2`.
    HalfPlane,
}

impl OuterMap {
    pub fn eval(self, z: Complex64) -> Complex64 {
        match self {
            OuterMap::Koebe => z / ((1.0 - z) * (1.0 - z)),
            OuterMap::HalfPlane => z / (1.0 - z),
        }
    }

    pub fn value_at_origin(self) -> f64 {
        0.0
    }

    /// `dist(f(0), ∂f(𝔻))`.
    pub fn boundary_distance(self) -> f64 {
        match self {
            OuterMap::Koebe => 0.25,
            OuterMap::HalfPlane => 0.5,
        }
    }

    pub fn is_convex(self) -> bool {
        self == OuterMap::HalfPlane
    }

    /// `f^{(k)}(z0)/k!` for `k ≥ 1`.
    pub fn local_coefficient(self, z0: Complex64, k: usize) -> Complex64 {
        let s = 1.0 - z0;
        match self {
            // z/(1-z)² = 1/(1-z)² - 1/(1-z)
            OuterMap::Koebe => (k as f64 + 1.0) / s.powi(k as i32 + 2) - 1.0 / s.powi(k as i32 + 1),
            // z/(1-z) = 1/(1-z) - 1
            OuterMap::HalfPlane => 1.0 / s.powi(k as i32 + 1),
        }
    }

    /// Coefficients of `outer ∘ w` for a series `w` with `w_0 = 0`.
    pub fn compose_series(self, w: &[Complex64]) -> Vec<Complex64> {
        let n = w.len();
        // outer(w) = w / D(w) with D = (1-w)² or (1-w)
        let one_minus: Vec<Complex64> = (0..n)
            .map(|i| if i == 0 { ONE - w[0] } else { -w[i] })
            .collect();
        let denom = match self {
            OuterMap::Koebe => {
                let mut d = vec![ORIGIN; n];
                for i in 0..n {
                    for j in 0..n - i {
                        d[i + j] += one_minus[i] * one_minus[j];
                    }
                }
                d
            }
            OuterMap::HalfPlane => one_minus,
        };
        let mut g = vec![ORIGIN; n];
        for k in 0..n {
            let mut acc = w[k];
            for i in 1..=k {
                acc -= denom[i] * g[k - i];
            }
            g[k] = acc / denom[0];
        }
        g
    }

    /// Coefficient bound for every `g ≺ outer`: `|b_k| ≤ k |f'(0)|` (Koebe),
    /// `|b_k| ≤ |f'(0)|` (convex).
    pub fn subordinate_bound(self) -> CoefficientBound {
        match self {
            OuterMap::Koebe => CoefficientBound::Linear(1.0),
            OuterMap::HalfPlane => CoefficientBound::Constant(1.0),
        }
    }
}

/// `g = outer ∘ inner` with `inner(0) = 0`, hence `g ≺ outer`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubordinationPair {
    pub outer: OuterMap,
    pub inner: BlaschkeProduct,
}

impl SubordinationPair {
    pub fn new(outer: OuterMap, inner: BlaschkeProduct) -> Result<Self, FunctionError> {
        if inner.eval(ORIGIN).norm() > 1e-14 {
            return Err(FunctionError::Invalid(
                "inner function must vanish at the origin".into(),
            ));
        }
        Ok(SubordinationPair { outer, inner })
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.outer.eval(self.inner.eval(z))
    }
}

/// Proven bound on `|c_k|`, `k ≥ 1`, for a whole function class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoefficientBound {
    Zero,
    /// `|c_k| ≤ c`
    Constant(f64),
    /// `|c_k| ≤ c·k`
    Linear(f64),
    /// `|c_k| ≤ scale · ratio^{k-1}`
    Geometric { scale: f64, ratio: f64 },
}

impl CoefficientBound {
    /// Bound on `Σ_{k > after} |c_k| w_k(r)`.
    pub fn weighted_tail(
        self,
        family: &WeightFamily,
        r: f64,
        after: u64,
    ) -> Result<f64, WeightError> {
        Ok(match self {
            CoefficientBound::Zero => 0.0,
            CoefficientBound::Constant(c) => c * family.tail_beyond(r, after)?,
            CoefficientBound::Linear(c) => c * family.index_weighted_tail_beyond(r, after)?,
            CoefficientBound::Geometric { scale, ratio } => {
                if ratio == 0.0 {
                    if after == 0 {
                        scale * family.weight(1, r)
                    } else {
                        0.0
                    }
                } else {
                    scale / ratio * family.tail_beyond(ratio * r, after)?
                }
            }
        })
    }
}

/// Taylor coefficients `c_0..c_K` with a certified bound for the rest.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientSeries {
    pub coefficients: Vec<Complex64>,
    pub truncation_order: usize,
    pub bound: CoefficientBound,
}

impl CoefficientSeries {
    /// Upper bound on `Σ_{k>K} |c_k| r^k`.
    pub fn tail_bound(&self, r: f64) -> f64 {
        let k = self.truncation_order as i32;
        match self.bound {
            CoefficientBound::Zero => 0.0,
            CoefficientBound::Constant(c) => c * r.powi(k + 1) / (1.0 - r),
            CoefficientBound::Linear(c) => c * linear_tail(r, k as u32 + 1),
            CoefficientBound::Geometric { scale, ratio } => {
                scale * r * (ratio * r).powi(k) / (1.0 - ratio * r)
            }
        }
    }

    /// Horner evaluation of the truncated series.
    pub fn eval_truncated(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(ORIGIN, |acc, &c| acc * z + c)
    }

    /// `Σ_{k=1}^{K} |c_k| w_k(r)`.
    pub fn weighted_sum(&self, family: &WeightFamily, r: f64) -> f64 {
        family
            .exponents()
            .take_while(|&j| j as usize <= self.truncation_order)
            .map(|j| self.coefficients[j as usize].norm() * family.weight(j, r))
            .sum()
    }
}

/// A member of the function catalog.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AnalyticFunction {
    Constant { value: Complex64 },
    Moebius(MoebiusExtremal),
    Blaschke(BlaschkeProduct),
    Koebe,
    HalfPlane,
    Subordinate(SubordinationPair),
}

impl AnalyticFunction {
    pub fn eval(&self, z: Complex64) -> Result<Complex64, FunctionError> {
        check_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        match self {
            AnalyticFunction::Constant { value } => *value,
            AnalyticFunction::Moebius(m) => m.eval(z),
            AnalyticFunction::Blaschke(b) => b.eval(z),
            AnalyticFunction::Koebe => OuterMap::Koebe.eval(z),
            AnalyticFunction::HalfPlane => OuterMap::HalfPlane.eval(z),
            AnalyticFunction::Subordinate(pair) => pair.eval(z),
        }
    }

    /// Class bound on `|c_k|`, `k ≥ 1`.
    pub fn coefficient_bound(&self) -> CoefficientBound {
        match self {
            AnalyticFunction::Constant { .. } => CoefficientBound::Zero,
            AnalyticFunction::Moebius(m) => CoefficientBound::Geometric {
                scale: 1.0 - m.a * m.a,
                ratio: m.a,
            },
            // Wiener: |c_k| ≤ 1 - |c_0|² for |f| ≤ 1
            AnalyticFunction::Blaschke(b) => {
                CoefficientBound::Constant(1.0 - b.eval(ORIGIN).norm_sqr())
            }
            AnalyticFunction::Koebe => CoefficientBound::Linear(1.0),
            AnalyticFunction::HalfPlane => CoefficientBound::Constant(1.0),
            AnalyticFunction::Subordinate(pair) => pair.outer.subordinate_bound(),
        }
    }

    pub fn taylor_coefficients(&self, order: usize) -> CoefficientSeries {
        let coefficients = match self {
            AnalyticFunction::Constant { value } => {
                let mut c = vec![ORIGIN; order + 1];
                c[0] = *value;
                c
            }
            AnalyticFunction::Moebius(m) => (0..=order)
                .map(|k| Complex64::new(m.coefficient(k), 0.0))
                .collect(),
            AnalyticFunction::Blaschke(b) => b.local_taylor(ORIGIN, order),
            AnalyticFunction::Koebe => (0..=order).map(|k| Complex64::new(k as f64, 0.0)).collect(),
            AnalyticFunction::HalfPlane => (0..=order)
                .map(|k| if k == 0 { ORIGIN } else { ONE })
                .collect(),
            AnalyticFunction::Subordinate(pair) => {
                let w = pair.inner.local_taylor(ORIGIN, order);
                pair.outer.compose_series(&w)
            }
        };
        CoefficientSeries {
            coefficients,
            truncation_order: order,
            bound: self.coefficient_bound(),
        }
    }

    /// Taylor coefficients of `t ↦ f(z0 + t)`; `None` when no closed form is wired.
    pub fn local_taylor(&self, z0: Complex64, order: usize) -> Option<Vec<Complex64>> {
        let closed = |f: &dyn Fn(usize) -> Complex64, value: Complex64| {
            let mut c = Vec::with_capacity(order + 1);
            c.push(value);
            c.extend((1..=order).map(f));
            c
        };
        match self {
            AnalyticFunction::Constant { value } => {
                let mut c = vec![ORIGIN; order + 1];
                c[0] = *value;
                Some(c)
            }
            AnalyticFunction::Moebius(m) => {
                Some(closed(&|k| m.local_coefficient(z0, k), m.eval(z0)))
            }
            AnalyticFunction::Blaschke(b) => Some(b.local_taylor(z0, order)),
            AnalyticFunction::Koebe => Some(closed(
                &|k| OuterMap::Koebe.local_coefficient(z0, k),
                OuterMap::Koebe.eval(z0),
            )),
            AnalyticFunction::HalfPlane => Some(closed(
                &|k| OuterMap::HalfPlane.local_coefficient(z0, k),
                OuterMap::HalfPlane.eval(z0),
            )),
            AnalyticFunction::Subordinate(_) => None,
        }
    }

    /// `|f^{(k)}(z0)|/k!`.
    pub fn kth_derivative_magnitude(&self, z0: Complex64, k: usize) -> Result<f64, FunctionError> {
        check_disk(z0)?;
        if k == 0 {
            return Err(FunctionError::Invalid("derivative order must be >= 1".into()));
        }
        match self {
            AnalyticFunction::Moebius(m) => Ok(m.local_coefficient(z0, k).norm()),
            AnalyticFunction::Koebe => Ok(OuterMap::Koebe.local_coefficient(z0, k).norm()),
            AnalyticFunction::HalfPlane => Ok(OuterMap::HalfPlane.local_coefficient(z0, k).norm()),
            AnalyticFunction::Subordinate(_) => Ok(contour_coefficient(self, z0, k)?.norm()),
            _ => Ok(self.local_taylor(z0, k).expect("closed form")[k].norm()),
        }
    }
}

/// Smallest node count tried by [`contour_coefficient`].
const CONTOUR_MIN_NODES: usize = 16;
/// Largest node count before giving up.
const CONTOUR_MAX_NODES: usize = 1 << 16;

/// `f^{(k)}(z0)/k!` by the trapezoidal rule on `|z - z0| = (1 - |z0|)/2`.
///
/// Node counts double until two successive estimates differ by less than
/// `1e-11·max(1, M/ρ^k)`, with `M` the largest `|f|` seen on the contour.
pub fn contour_coefficient(
    f: &AnalyticFunction,
    z0: Complex64,
    k: usize,
) -> Result<Complex64, FunctionError> {
    check_disk(z0)?;
    let rho = 0.5 * (1.0 - z0.norm());
    let mut nodes = CONTOUR_MIN_NODES.max((2 * k + 2).next_power_of_two());
    let mut previous: Option<Complex64> = None;
    while nodes <= CONTOUR_MAX_NODES {
        let mut acc = ORIGIN;
        let mut max_mod = 0.0f64;
        for j in 0..nodes {
            let theta = 2.0 * PI * j as f64 / nodes as f64;
            let e = Complex64::from_polar(1.0, theta);
            let v = f.eval_unchecked(z0 + rho * e);
            max_mod = max_mod.max(v.norm());
            acc += v * Complex64::from_polar(1.0, -(k as f64) * theta);
        }
        let estimate = acc / (nodes as f64 * rho.powi(k as i32));
        let tol = 1e-11 * (max_mod / rho.powi(k as i32)).max(1.0);
        if let Some(prev) = previous {
            if (estimate - prev).norm() < tol {
                return Ok(estimate);
            }
        }
        previous = Some(estimate);
        nodes *= 2;
    }
    Err(FunctionError::NonConvergence {
        k,
        nodes: CONTOUR_MAX_NODES,
    })
}

/// Zeros uniform on `|z| < zero_radius`, degree uniform on `1..=max_degree`,
/// uniform rotation.
pub fn random_blaschke<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: usize,
    zero_radius: f64,
) -> BlaschkeProduct {
    let degree = rng.random_range(1..=max_degree);
    let zeros = (0..degree).map(|_| random_point(rng, zero_radius)).collect();
    BlaschkeProduct {
        zeros,
        rotation: Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI)),
    }
}

/// A random Blaschke product vanishing at the origin (a Schwarz function).
pub fn random_schwarz<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: usize,
    zero_radius: f64,
) -> BlaschkeProduct {
    let mut b = random_blaschke(rng, max_degree, zero_radius);
    b.zeros[0] = ORIGIN;
    b
}

fn random_point<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * rng.random::<f64>().sqrt();
    Complex64::from_polar(r, rng.random_range(0.0..2.0 * PI))
}
