//! Weight sequences `{ν_k}`, `{ψ_k}`, `{φ_k}`, `{λ_k}` and their sums.
//!
//! Every catalog family has the shape `w_j(x) = c(j)·x^j` where `c` is a
//! polynomial of degree at most two and `j` runs over an arithmetic lattice
//! `j = s·k + o`, `k ≥ start`. That shape gives closed forms for the three
//! sums the radius equations need:
//!
//! - [`WeightFamily::tail_sum`]: `Σ_j w_j(x)`
//! - [`WeightFamily::index_weighted_sum`]: `Σ_j j·w_j(x)`
//! - [`WeightFamily::kernel_sum`]: `Σ_j (1+x^m)^{j-1} (1-x^{2m})^{-j} w_j(x)`
//!
//! Partial sums are never used for evaluation; they only appear in tests.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::Order;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WeightError {
    #[error("x = {0} is outside [0, 1)")]
    Domain(f64),
    #[error("kernel series diverges at x = {x} (u = x/(1-x^m) = {u} >= 1)")]
    Divergence { x: f64, u: f64 },
    #[error("invalid weight family: {0}")]
    Invalid(String),
}

/// The coefficient pattern of a weight family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightKind {
    /// `x^k`, `k ≥ N`.
    Power,
    /// `x^{2k}`, `k ≥ N`.
    EvenPower,
    /// `x^{2k-1}`, `k ≥ N`.
    OddPower,
    /// `x^{n k}`, `k ≥ N`.
    StridePower { stride: u32 },
    /// `k·x^k`, `k ≥ N`.
    Linear,
    /// `(k+1)·x^k`, `k ≥ N`.
    Affine,
    /// `k²·x^k`, `k ≥ N`.
    Quadratic,
    /// `(c0 + c1 k + c2 k²)·x^k`, `k ≥ N`.
    Polynomial { c0: f64, c1: f64, c2: f64 },
    /// No terms at all; the `N → ∞` limit of every tail.
    Zero,
}

/// A non-negative weight sequence with an optional head weight `ν_0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightFamily {
    pub kind: WeightKind,
    /// First lattice index `k` carrying a nonzero weight.
    pub start: u32,
    /// The constant zeroth weight `ν_0`/`ψ_0`. Ignored by the subordination theorems.
    pub head_weight: f64,
}

impl WeightFamily {
    pub fn new(kind: WeightKind, start: u32) -> Result<Self, WeightError> {
        Self::with_head(kind, start, 1.0)
    }

    pub fn with_head(kind: WeightKind, start: u32, head_weight: f64) -> Result<Self, WeightError> {
        let family = WeightFamily {
            kind,
            start,
            head_weight,
        };
        family.validate()?;
        Ok(family)
    }

    pub fn power(start: u32) -> Self {
        Self::new(WeightKind::Power, start).expect("start must be >= 1")
    }

    pub fn even(start: u32) -> Self {
        Self::new(WeightKind::EvenPower, start).expect("start must be >= 1")
    }

    pub fn odd(start: u32) -> Self {
        Self::new(WeightKind::OddPower, start).expect("start must be >= 1")
    }

    pub fn zero() -> Self {
        WeightFamily {
            kind: WeightKind::Zero,
            start: 1,
            head_weight: 1.0,
        }
    }

    pub fn validate(&self) -> Result<(), WeightError> {
        if self.start < 1 {
            return Err(WeightError::Invalid("start must be >= 1".into()));
        }
        if !(self.head_weight.is_finite() && self.head_weight >= 0.0) {
            return Err(WeightError::Invalid(format!(
                "head weight must be finite and non-negative, got {}",
                self.head_weight
            )));
        }
        match self.kind {
            WeightKind::StridePower { stride } if stride == 0 => {
                Err(WeightError::Invalid("stride must be >= 1".into()))
            }
            WeightKind::Polynomial { c0, c1, c2 } => {
                if ![c0, c1, c2].iter().all(|c| c.is_finite()) {
                    return Err(WeightError::Invalid("coefficients must be finite".into()));
                }
                if c2 < 0.0 || (c2 == 0.0 && c1 < 0.0) {
                    return Err(WeightError::Invalid(
                        "polynomial coefficient becomes negative for large k".into(),
                    ));
                }
                // smallest value over integer k >= start
                let j0 = self.start as f64;
                let mut min = c0 + c1 * j0 + c2 * j0 * j0;
                if c2 > 0.0 {
                    let vertex = -c1 / (2.0 * c2);
                    if vertex > j0 {
                        for k in [vertex.floor(), vertex.ceil()] {
                            min = min.min(c0 + c1 * k + c2 * k * k);
                        }
                    }
                }
                if min < 0.0 {
                    return Err(WeightError::Invalid(format!(
                        "polynomial coefficient is negative (min {min}) for k >= {}",
                        self.start
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Lattice `(s, o)` with exponents `j = s·k + o`.
    fn lattice(&self) -> (u64, i64) {
        match self.kind {
            WeightKind::EvenPower => (2, 0),
            WeightKind::OddPower => (2, -1),
            WeightKind::StridePower { stride } => (stride as u64, 0),
            _ => (1, 0),
        }
    }

    /// Coefficients `[c0, c1, c2]` of `c(j)` in the exponent `j`.
    fn coefficient_poly(&self) -> [f64; 3] {
        match self.kind {
            WeightKind::Linear => [0.0, 1.0, 0.0],
            WeightKind::Affine => [1.0, 1.0, 0.0],
            WeightKind::Quadratic => [0.0, 0.0, 1.0],
            WeightKind::Polynomial { c0, c1, c2 } => [c0, c1, c2],
            WeightKind::Zero => [0.0, 0.0, 0.0],
            _ => [1.0, 0.0, 0.0],
        }
    }

    /// Exponent of the first nonzero term, or `None` for the empty family.
    pub fn first_exponent(&self) -> Option<u64> {
        if self.kind == WeightKind::Zero {
            return None;
        }
        let (s, o) = self.lattice();
        Some((s as i64 * self.start as i64 + o) as u64)
    }

    /// Exponents carrying a weight, in increasing order.
    pub fn exponents(&self) -> impl Iterator<Item = u64> {
        let (s, _) = self.lattice();
        let first = self.first_exponent();
        (0u64..)
            .map_while(move |i| first.map(|j0| j0 + s * i))
    }

    /// The individual weight `w_j(x)`; zero off the lattice.
    pub fn weight(&self, j: u64, x: f64) -> f64 {
        let Some(j0) = self.first_exponent() else {
            return 0.0;
        };
        let (s, _) = self.lattice();
        if j < j0 || (j - j0) % s != 0 {
            return 0.0;
        }
        let jf = j as f64;
        let [c0, c1, c2] = self.coefficient_poly();
        (c0 + c1 * jf + c2 * jf * jf) * x.powi(j as i32)
    }

    /// `Σ_j w_j(x)` in closed form.
    pub fn tail_sum(&self, x: f64) -> Result<f64, WeightError> {
        check_unit(x)?;
        let n = self.start as f64;
        let nn = self.start as i32;
        Ok(match self.kind {
            WeightKind::Zero => 0.0,
            WeightKind::Power => x.powi(nn) / (1.0 - x),
            WeightKind::EvenPower => x.powi(2 * nn) / (1.0 - x * x),
            WeightKind::OddPower => x.powi(2 * nn - 1) / (1.0 - x * x),
            WeightKind::StridePower { stride } => {
                let y = x.powi(stride as i32);
                y.powi(nn) / (1.0 - y)
            }
            WeightKind::Linear => linear_tail(x, self.start),
            WeightKind::Affine => {
                x.powi(nn) * (1.0 + n - n * x) / ((1.0 - x) * (1.0 - x))
            }
            WeightKind::Quadratic => quadratic_tail_printed(x, self.start),
            WeightKind::Polynomial { .. } => self.lattice_series(x, 0, None),
        })
    }

    /// `Σ_j j·w_j(x)` in closed form.
    pub fn index_weighted_sum(&self, x: f64) -> Result<f64, WeightError> {
        check_unit(x)?;
        Ok(self.lattice_series(x, 1, None))
    }

    /// `Σ_j (1+x^m)^{j-1} (1-x^{2m})^{-j} w_j(x)`.
    ///
    /// Each kernel factor equals `1/((1+x^m)(1-x^m)^j)`, so the series is
    /// `tail_sum(u)/(1+x^m)` with `u = x/(1-x^m)`, finite only for `u < 1`.
    pub fn kernel_sum(&self, x: f64, m: Order) -> Result<f64, WeightError> {
        check_unit(x)?;
        let xm = m.pow(x);
        let u = x / (1.0 - xm);
        if u >= 1.0 {
            return Err(WeightError::Divergence { x, u });
        }
        Ok(self.tail_sum(u)? / (1.0 + xm))
    }

    /// `Σ_{j > after} w_j(x)`.
    pub fn tail_beyond(&self, x: f64, after: u64) -> Result<f64, WeightError> {
        check_unit(x)?;
        Ok(self.lattice_series(x, 0, Some(after)))
    }

    /// `Σ_{j > after} j·w_j(x)`.
    pub fn index_weighted_tail_beyond(&self, x: f64, after: u64) -> Result<f64, WeightError> {
        check_unit(x)?;
        Ok(self.lattice_series(x, 1, Some(after)))
    }

    /// Generic route: `Σ_{j ∈ lattice, j > after} j^extra · c(j) · x^j`.
    ///
    /// With `j = j0 + s·i` and `y = x^s` the sum is `x^{j0} Σ_i P(i) y^i` for a
    /// polynomial `P` of degree ≤ 3, evaluated through `Σ_i i^e y^i = Li_{-e}(y)`.
    fn lattice_series(&self, x: f64, extra: usize, after: Option<u64>) -> f64 {
        let Some(mut j0) = self.first_exponent() else {
            return 0.0;
        };
        let (s, _) = self.lattice();
        if let Some(after) = after {
            if after >= j0 {
                j0 += ((after - j0) / s + 1) * s;
            }
        }
        // c(j)·j^extra as coefficients in j
        let base = self.coefficient_poly();
        let mut poly = [0.0f64; 4];
        for (d, c) in base.iter().enumerate() {
            poly[d + extra] += c;
        }
        // re-expand in i: j = j0 + s i
        let (sf, jf) = (s as f64, j0 as f64);
        let mut in_i = [0.0f64; 4];
        for (d, &c) in poly.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            for e in 0..=d {
                in_i[e] += c * binomial(d, e) * sf.powi(e as i32) * jf.powi((d - e) as i32);
            }
        }
        let y = x.powi(s as i32);
        let total: f64 = in_i
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0.0)
            .map(|(e, c)| c * polylog_neg(e, y))
            .sum();
        x.powi(j0 as i32) * total
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.start;
        match self.kind {
            WeightKind::Power => write!(f, "x^k (k>={n})"),
            WeightKind::EvenPower => write!(f, "x^(2k) (k>={n})"),
            WeightKind::OddPower => write!(f, "x^(2k-1) (k>={n})"),
            WeightKind::StridePower { stride } => write!(f, "x^({stride}k) (k>={n})"),
            WeightKind::Linear => write!(f, "k x^k (k>={n})"),
            WeightKind::Affine => write!(f, "(k+1) x^k (k>={n})"),
            WeightKind::Quadratic => write!(f, "k^2 x^k (k>={n})"),
            WeightKind::Polynomial { c0, c1, c2 } => {
                write!(f, "({c0} + {c1} k + {c2} k^2) x^k (k>={n})")
            }
            WeightKind::Zero => f.write_str("empty"),
        }
    }
}

fn check_unit(x: f64) -> Result<(), WeightError> {
    if (0.0..1.0).contains(&x) {
        Ok(())
    } else {
        Err(WeightError::Domain(x))
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `Σ_{i≥0} i^e y^i` for `e ≤ 3` (Eulerian numerators).
fn polylog_neg(e: usize, y: f64) -> f64 {
    let q = 1.0 - y;
    match e {
        0 => 1.0 / q,
        1 => y / (q * q),
        2 => y * (1.0 + y) / (q * q * q),
        3 => y * (1.0 + 4.0 * y + y * y) / (q * q * q * q),
        _ => unreachable!("weight polynomials have degree <= 3"),
    }
}

/// `Σ_{n≥N} n x^n = x^N [N(1-x) + x] / (1-x)²`.
pub fn linear_tail(x: f64, start: u32) -> f64 {
    let n = start as f64;
    x.powi(start as i32) * (n * (1.0 - x) + x) / ((1.0 - x) * (1.0 - x))
}

/// `Σ_{n≥N} n² x^n` with the numerator `(x+N)² + x + N²x² − 2Nx(x+N)`.
pub fn quadratic_tail_printed(x: f64, start: u32) -> f64 {
    let n = start as f64;
    let numer = (x + n) * (x + n) + x + n * n * x * x - 2.0 * n * x * (x + n);
    x.powi(start as i32) * numer / ((1.0 - x) * (1.0 - x) * (1.0 - x))
}

/// `Σ_{n≥N} n² x^n` with the numerator expanded as `N² − (2N²−2N−1)x + (N−1)²x²`.
pub fn quadratic_tail_expanded(x: f64, start: u32) -> f64 {
    let n = start as f64;
    let numer = n * n - (2.0 * n * n - 2.0 * n - 1.0) * x + (n - 1.0) * (n - 1.0) * x * x;
    x.powi(start as i32) * numer / ((1.0 - x) * (1.0 - x) * (1.0 - x))
}
