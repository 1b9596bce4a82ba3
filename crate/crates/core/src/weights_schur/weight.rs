use std::fmt;

use thiserror::Error;

use crate::exact_series::ExactScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeightError {
    #[error("a weight needs at least one part")]
    Empty,
    #[error("parts {0:?} are not weakly decreasing")]
    NotDominant(Vec<i64>),
}

/// An integer vector `λ_1 ≥ λ_2 ≥ ... ≥ λ_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight {
    parts: Vec<i64>,
}

impl DominantWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self, WeightError> {
        if parts.is_empty() {
            return Err(WeightError::Empty);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(WeightError::NotDominant(parts));
        }
        Ok(DominantWeight { parts })
    }

    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "a weight needs at least one part");
        DominantWeight { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|λ| = λ_1 + ... + λ_n`.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn last(&self) -> i64 {
        *self.parts.last().expect("nonempty")
    }

    /// Whether the last part is nonnegative, i.e. λ is a partition padded
    /// with zeros.
    pub fn is_nonnegative(&self) -> bool {
        self.last() >= 0
    }

    /// Subtracts `c` from every part.
    pub fn shift(&self, c: i64) -> DominantWeight {
        DominantWeight {
            parts: self.parts.iter().map(|p| p - c).collect(),
        }
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All weights with `n` nonnegative parts summing to `total`, in
/// lexicographically descending order.
pub fn enumerate_weights(n: usize, total: u64) -> Vec<DominantWeight> {
    fn fill(
        remaining: u64,
        slots: usize,
        cap: u64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<DominantWeight>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(DominantWeight {
                    parts: prefix.clone(),
                });
            }
            return;
        }
        // the current part must leave room for the rest under the same cap
        let lo = remaining.div_ceil(slots as u64);
        let hi = cap.min(remaining);
        for part in (lo..=hi).rev() {
            prefix.push(part as i64);
            fill(remaining - part, slots - 1, part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    fill(total, n, total, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `c(λ) = λ_1 - λ_2 + λ_3 - ...`, the number of odd-length columns of the
/// Young diagram when λ is a partition.
pub fn alt_statistic(lambda: &DominantWeight) -> i64 {
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| if i % 2 == 0 { p } else { -p })
        .sum()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SatakeError {
    #[error("no Satake parameters given")]
    Empty,
    #[error("Satake parameter z_{index} is zero")]
    ZeroParameter { index: usize },
    #[error("twist value is zero")]
    ZeroTwist,
}

/// Unramified local data: Satake parameters `z_i = χ_i(ϖ)` and the twist
/// value `u = α(ϖ)`, all nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeData {
    z: Vec<ExactScalar>,
    u: ExactScalar,
}

impl SatakeData {
    pub fn new(z: Vec<ExactScalar>, u: ExactScalar) -> Result<Self, SatakeError> {
        if z.is_empty() {
            return Err(SatakeError::Empty);
        }
        if let Some(i) = z.iter().position(|x| x.is_zero()) {
            return Err(SatakeError::ZeroParameter { index: i + 1 });
        }
        if u.is_zero() {
            return Err(SatakeError::ZeroTwist);
        }
        Ok(SatakeData { z, u })
    }

    pub fn z(&self) -> &[ExactScalar] {
        &self.z
    }

    pub fn u(&self) -> &ExactScalar {
        &self.u
    }

    pub fn rank(&self) -> usize {
        self.z.len()
    }
}
