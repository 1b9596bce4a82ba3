use super::{schur_laurent, DominantWeight, SatakeData, SchurError};
use crate::exact_series::ExactScalar;
use crate::group_combinatorics::{borel_modulus_exponent, TorusExponentVector};

/// `W⁰(ϖ^λ) = δ_B^{1/2}(ϖ^λ) s_λ(z)`, kept as the exact Schur factor and the
/// exponent `e` of `v = q^{1/2}` with `δ_B^{1/2}(ϖ^λ) = v^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhittakerValue {
    pub schur_part: ExactScalar,
    pub v_exponent: i64,
}

/// Casselman–Shalika value of the normalised spherical Whittaker function at
/// the torus element `ϖ^λ`. Off the dominant cone the function vanishes,
/// which is why only [`DominantWeight`] is accepted.
pub fn whittaker_value(
    lambda: &DominantWeight,
    data: &SatakeData,
) -> Result<WhittakerValue, SchurError> {
    let schur_part = schur_laurent(lambda, data.z())?;
    let torus = TorusExponentVector::new(lambda.parts().to_vec());
    Ok(WhittakerValue {
        schur_part,
        v_exponent: -borel_modulus_exponent(&torus),
    })
}
