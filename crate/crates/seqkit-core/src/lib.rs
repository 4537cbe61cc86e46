//! Exact-arithmetic toolkit for formal power series reversion,
//! convolutional recurrences, Riordan arrays, recursive (doubly infinite)
//! matrices, and dual Riordan arrays.
//!
//! All coefficients are arbitrary-precision rationals; there is no floating
//! point anywhere. Truncation orders are explicit parameters, every
//! operation is a pure function, and all values are immutable after
//! construction, so they are freely shareable across threads.

pub mod convrec;
pub mod error;
pub mod laurent;
pub mod patalan;
pub mod rational;
pub mod riordan;
pub mod serialize;
pub mod series;

pub use error::{Error, Result};
pub use laurent::{laurent_int_pow, LaurentSeries};
pub use rational::{Int, Rat};
pub use series::{binomial_series, PowerSeries};
