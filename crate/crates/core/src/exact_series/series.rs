use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::ExactScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is zero, series is not a unit")]
    NotAUnit,
    #[error("cannot extend a series of order {have} to order {want}")]
    CannotExtend { have: usize, want: usize },
}

/// A power series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})` with exact
/// rational coefficients.
///
/// Always holds exactly `order + 1` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactScalar>,
}

impl TruncatedSeries {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<ExactScalar>) -> Self {
        coeffs.resize(order + 1, ExactScalar::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, ExactScalar::one())
    }

    pub fn constant(order: usize, c: ExactScalar) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    /// `c * t^power`, zero if `power > order`.
    pub fn monomial(order: usize, c: ExactScalar, power: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ExactScalar> {
        self.coeffs
    }

    /// Coefficient of `t^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> ExactScalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![ExactScalar::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via `b_0 = 1/a_0`,
    /// `b_k = -(a_1 b_{k-1} + ... + a_k b_0) / a_0`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0_inv = self.coeffs[0].recip().ok_or(SeriesError::NotAUnit)?;
        let n = self.order();
        let mut b: Vec<ExactScalar> = Vec::with_capacity(n + 1);
        b.push(a0_inv.clone());
        for k in 1..=n {
            let mut acc = ExactScalar::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &b[k - j];
                }
            }
            b.push(-(acc * &a0_inv));
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::CannotExtend {
                have: self.order(),
                want: order,
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>, SeriesError> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }
}

impl std::fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<ExactScalar>::deserialize(deserializer)?;
        if coeffs.is_empty() {
            return Err(serde::de::Error::custom(
                "a series needs at least one coefficient",
            ));
        }
        Ok(TruncatedSeries { coeffs })
    }
}
