//! Exact unramified local theory of the product `L(s + α, π) L(2s, Λ², π)`.
//!
//! * [`exact_series`]: rational scalars and truncated power series in `t = q^{-s}`.
//! * [`weights_schur`]: dominant weights, Schur values, Casselman–Shalika values.
//! * [`group_combinatorics`]: `w_n`, `w'_n`, the subgroup `H_n`, modulus characters.
//! * [`local_factors`]: the weight-sum integral against the Euler-product closed form.
//! * [`partial_l`]: Satake tables and the partial L-function as a Dirichlet series.
//! * [`cli`]: the `linperiod` command line.

pub mod cli;
pub mod exact_series;
pub mod group_combinatorics;
pub mod local_factors;
pub mod matrix;
pub mod partial_l;
pub mod sampling;
pub mod weights_schur;

pub use exact_series::{ExactScalar, TruncatedSeries};
pub use weights_schur::{DominantWeight, SatakeData};
