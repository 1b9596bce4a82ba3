//! Exact rational scalars and truncated univariate power series.
//!
//! Every identity check in this crate is an exact equality, so the only
//! numeric types used on the verification paths live here.

mod scalar;
mod series;

pub use scalar::{ExactScalar, ParseScalarError};
pub use series::{SeriesError, TruncatedSeries};
