//! Generalized Bohr and Bohr–Rogosinski radii.
//!
//! The crate computes sharp radii for weighted Bohr–Rogosinski type sums as
//! the minimal positive root of an explicit defining function, reproduces the
//! published tables of those roots, and numerically certifies the inequalities
//! behind them against extremal and randomly sampled analytic functions.
//!
//! Module map:
//!
//! - [`weights`]: weight sequences and closed-form tail sums.
//! - [`functions`]: the catalog of analytic test functions (Möbius extremals,
//!   Blaschke products, Koebe and half-plane maps, subordinate compositions).
//! - [`radius`]: defining functions and the minimal-positive-root solver.
//! - [`catalog`]: the sixteen printed example equations with their golden tables.
//! - [`verify`]: lemma grids, inequality sums, sharpness probes and the
//!   canonical-vs-literal audit.
//! - [`cli`]: configuration, report rendering and the command implementations
//!   behind the `bohr` binary.

pub mod catalog;
pub mod cli;
pub mod functions;
pub mod radius;
pub mod verify;
pub mod weights;

mod order;

pub use order::Order;
