//! Unramified local computation: the weight sum over `Λ^{++}`, the closed
//! form Euler factors, and the identity between them.
//!
//! Everything is a power series in `t = q^{-s}`. The weight sum
//! `Σ_λ s_λ(z) u^{c(λ)} t^{|λ|}` is computed from weight enumeration and
//! Jacobi–Trudi determinants; the product side is computed by expanding
//! `∏(1 - u z_i t) ∏_{j<k}(1 - z_j z_k t^2)` and inverting it as a series.
//! The two paths share only the scalar and series arithmetic.

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact_series::{ExactScalar, TruncatedSeries};
use crate::weights_schur::{
    alt_statistic, enumerate_weights, schur_jacobi_trudi_with, HomogeneousTable, SatakeData,
};

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EulerFactorError {
    #[error("an Euler factor needs constant term 1")]
    ConstantTermNotOne,
    #[error("t_scale must be positive")]
    ZeroScale,
}

/// A polynomial `P(t)` with `P(0) = 1`, standing for the local factor
/// `1/P(t)`. `t_scale` records that `P` is a polynomial in `t^{t_scale}`;
/// coefficients are always indexed by the power of `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerFactor {
    poly: Vec<ExactScalar>,
    t_scale: u32,
}

impl EulerFactor {
    pub fn one() -> Self {
        EulerFactor {
            poly: vec![ExactScalar::one()],
            t_scale: 1,
        }
    }

    pub fn from_coeffs(mut poly: Vec<ExactScalar>, t_scale: u32) -> Result<Self, EulerFactorError> {
        if t_scale == 0 {
            return Err(EulerFactorError::ZeroScale);
        }
        if !poly.first().is_some_and(|c| c.is_one()) {
            return Err(EulerFactorError::ConstantTermNotOne);
        }
        while poly.len() > 1 && poly.last().is_some_and(|c| c.is_zero()) {
            poly.pop();
        }
        Ok(EulerFactor { poly, t_scale })
    }

    /// `∏ (1 - c t^{t_scale})` over the given roots `c`.
    fn from_linear_terms(terms: impl IntoIterator<Item = ExactScalar>, t_scale: u32) -> Self {
        let step = t_scale as usize;
        let mut poly = vec![ExactScalar::one()];
        for c in terms {
            let mut next = poly.clone();
            next.resize(poly.len() + step, ExactScalar::zero());
            for (k, a) in poly.iter().enumerate() {
                if !a.is_zero() {
                    next[k + step] -= &(a * &c);
                }
            }
            poly = next;
        }
        EulerFactor::from_coeffs(poly, t_scale).expect("constant term is 1")
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.poly
    }

    pub fn t_scale(&self) -> u32 {
        self.t_scale
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn product(&self, other: &EulerFactor) -> EulerFactor {
        let mut poly = vec![ExactScalar::zero(); self.poly.len() + other.poly.len() - 1];
        for (i, a) in self.poly.iter().enumerate() {
            for (j, b) in other.poly.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        EulerFactor::from_coeffs(poly, self.t_scale.gcd(&other.t_scale)).expect("product of units")
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, self.poly.clone())
    }

    /// Expansion of `1/P(t)` through `t^order`.
    pub fn inverse_series(&self, order: usize) -> TruncatedSeries {
        self.to_series(order).invert().expect("P(0) = 1 is a unit")
    }

    /// `P(t)` at a complex point.
    pub fn evaluate(&self, t: Complex64) -> Complex64 {
        self.poly
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c.to_f64())
    }
}

/// Which exterior-square factor enters the product side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExteriorConvention {
    /// `∏_{j<k}(1 - z_j z_k t^2)`, the factor at `2s`.
    #[default]
    DoubledArgument,
    /// `∏_{j<k}(1 - z_j z_k t)`, the factor at `s`.
    SameArgument,
}

/// `∏_i (1 - u z_i t)`, the denominator of `L(s, α ⊗ π⁰)`.
pub fn standard_factor(data: &SatakeData) -> EulerFactor {
    EulerFactor::from_linear_terms(data.z().iter().map(|z| data.u() * z), 1)
}

/// `∏_{j<k} (1 - z_j z_k t^2)`, the denominator of `L(2s, Λ², π⁰)`.
pub fn exterior_square_factor(data: &SatakeData) -> EulerFactor {
    exterior_square_factor_with(data, ExteriorConvention::DoubledArgument)
}

pub fn exterior_square_factor_with(
    data: &SatakeData,
    convention: ExteriorConvention,
) -> EulerFactor {
    let z = data.z();
    let pairs = (0..z.len()).flat_map(|j| (j + 1..z.len()).map(move |k| &z[j] * &z[k]));
    let scale = match convention {
        ExteriorConvention::DoubledArgument => 2,
        ExteriorConvention::SameArgument => 1,
    };
    EulerFactor::from_linear_terms(pairs, scale)
}

/// `standard_factor · exterior_square_factor`, whose inverse is the local
/// factor `L(s, α ⊗ π⁰) L(2s, Λ², π⁰)` at an unramified place.
pub fn linear_local_factor(data: &SatakeData) -> EulerFactor {
    standard_factor(data).product(&exterior_square_factor(data))
}

/// `Σ_{k ≤ order} (Σ_{λ ∈ Λ^{++}, |λ| = k} s_λ(z) u^{c(λ)}) t^k`.
///
/// Degrees are evaluated in parallel; the result does not depend on
/// scheduling.
pub fn weight_sum_integral(data: &SatakeData, order: usize) -> TruncatedSeries {
    let n = data.rank();
    let table = HomogeneousTable::new(data.z(), order + n - 1);
    let coeffs: Vec<ExactScalar> = (0..=order)
        .into_par_iter()
        .map(|k| {
            enumerate_weights(n, k as u64)
                .iter()
                .map(|lambda| {
                    let s =
                        schur_jacobi_trudi_with(lambda, &table).expect("partition with n parts");
                    s * data.u().pow(alt_statistic(lambda))
                })
                .sum()
        })
        .collect();
    TruncatedSeries::from_coeffs(order, coeffs)
}

/// `1 / (standard_factor · exterior_square_factor)` through `t^order`.
pub fn product_side(data: &SatakeData, order: usize) -> TruncatedSeries {
    product_side_with(data, order, ExteriorConvention::DoubledArgument)
}

pub fn product_side_with(
    data: &SatakeData,
    order: usize,
    convention: ExteriorConvention,
) -> TruncatedSeries {
    standard_factor(data)
        .product(&exterior_square_factor_with(data, convention))
        .inverse_series(order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub degree: usize,
    pub weight_sum: ExactScalar,
    pub product: ExactScalar,
}

/// Outcome of comparing the weight sum with the product side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub order: usize,
    pub discrepancy: Option<Discrepancy>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.discrepancy.is_none()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.discrepancy {
            None => write!(f, "PASS (exact through t^{})", self.order),
            Some(d) => write!(
                f,
                "FAIL: first discrepancy at t^{}: weight sum = {}, product = {}",
                d.degree, d.weight_sum, d.product
            ),
        }
    }
}

pub fn verify_macdonald(data: &SatakeData, order: usize) -> IdentityReport {
    verify_macdonald_with(data, order, ExteriorConvention::DoubledArgument)
}

pub fn verify_macdonald_with(
    data: &SatakeData,
    order: usize,
    convention: ExteriorConvention,
) -> IdentityReport {
    let lhs = weight_sum_integral(data, order);
    let rhs = product_side_with(data, order, convention);
    let discrepancy = lhs
        .first_difference(&rhs)
        .expect("same order")
        .map(|degree| Discrepancy {
            degree,
            weight_sum: lhs.coeff(degree),
            product: rhs.coeff(degree),
        });
    IdentityReport { order, discrepancy }
}
