use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// The exponent `m` in `f(z^m)`, including the `m → ∞` limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    /// `x^m`, which is `0` in the limit mode for every `x ∈ [0, 1)`.
    pub fn pow(self, x: f64) -> f64 {
        match self {
            Order::Finite(m) => x.powi(m as i32),
            Order::Infinite => 0.0,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid order `{0}`: expected a positive integer or `inf`")]
pub struct ParseOrderError(String);

impl FromStr for Order {
    type Err = ParseOrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Order::Infinite);
        }
        match t.parse::<u32>() {
            Ok(m) if m >= 1 => Ok(Order::Finite(m)),
            _ => Err(ParseOrderError(s.to_string())),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(m) => serializer.serialize_u32(*m),
            Order::Infinite => serializer.serialize_str("inf"),
        }
    }
}
