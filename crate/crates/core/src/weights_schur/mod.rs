//! Dominant weights, exact Schur polynomial values and the spherical
//! Whittaker function on the torus.

mod schur;
mod weight;
mod whittaker;

pub use schur::{
    schur_alternant, schur_jacobi_trudi, schur_jacobi_trudi_with, schur_laurent, HomogeneousTable,
    SchurError,
};
pub use weight::{
    alt_statistic, enumerate_weights, DominantWeight, SatakeData, SatakeError, WeightError,
};
pub use whittaker::{whittaker_value, WhittakerValue};
