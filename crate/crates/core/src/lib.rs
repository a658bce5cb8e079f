//! Metaheuristic optimizers assembled from a shared pool of search operators.
//!
//! The crate is organised around the idea that most population-based
//! "nature-inspired" optimizers are recombinations of a small number of
//! recurring mechanisms: moves toward other points, region sampling, restarts,
//! random walks, probabilistic acceptance and so on.
//!
//! * [`engine`] holds search spaces, populations, the seeded random stream and
//!   the evaluation-budgeted run loop.
//! * [`components`] is the operator pool.
//! * [`algorithms`] composes the operators into a roster of 34 optimizers.
//! * [`benchmarks`] provides test functions and the random-search baseline.
//! * [`taxonomy`] records which concepts and features each optimizer uses.
//!
//! Everything minimizes.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

pub mod algorithms;
pub mod benchmarks;
pub mod components;
pub mod engine;
mod error;
pub mod taxonomy;

pub use error::{Error, Result};

/// Library version, embedded in trace headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
