//! Numerical companions to the Landau-function form of the Riemann Hypothesis.
//!
//! The crate computes Landau's function `g(n)`, the primes `p_n`, the
//! logarithmic integral and its inverse, the Chebyshev functions, the
//! zeta-zero constant `c = Σ 1/|ρ(ρ+1)|` and the superchampion numbers `N_ρ`,
//! then checks the inequalities relating them over concrete ranges.

// `!(x >= lo)` is used deliberately so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod champions;
pub mod chebyshev;
pub mod error;
pub mod ext;
pub mod fmt;
pub mod landau;
pub mod logintegral;
pub mod parallel;
pub mod primes;
pub mod report;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use ext::Dd;
