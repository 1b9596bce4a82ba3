use std::fmt;

use thiserror::Error;

use crate::exact_series::ExactScalar;
use crate::matrix::SquareMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("{0:?} is not a permutation of 1..=n")]
    NotABijection(Vec<usize>),
    #[error("w'_n is only defined for n >= 2, got n = {0}")]
    TooSmall(usize),
}

/// A permutation of `{1, ..., n}` stored as its image vector: `images[i-1]`
/// is the image of `i`. Its matrix has a 1 in row `images[j-1]`, column `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InterleavePerm {
    images: Vec<usize>,
}

impl InterleavePerm {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(PermError::NotABijection(images));
            }
            seen[x] = true;
        }
        Ok(InterleavePerm { images })
    }

    pub fn identity(n: usize) -> Self {
        InterleavePerm {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i` (1-indexed).
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        InterleavePerm { images: inv }
    }

    pub fn to_matrix(&self) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(self.n());
        for (j, &x) in self.images.iter().enumerate() {
            m.set(x - 1, j, ExactScalar::one());
        }
        m
    }

    /// Restriction to `G_{n-1}`: drop row `n` of the permutation matrix and
    /// the column holding its 1, then relabel. On image vectors this deletes
    /// the value `n`. Returns `None` for `n = 0`.
    pub fn restrict(&self) -> Option<Self> {
        let n = self.n();
        if n == 0 {
            return None;
        }
        Some(InterleavePerm {
            images: self.images.iter().copied().filter(|&x| x != n).collect(),
        })
    }
}

impl fmt::Debug for InterleavePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for InterleavePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `w_n`: the first `⌈n/2⌉` indices go to the odd slots `1, 3, 5, ...` in
/// order and the remaining ones to the even slots `2, 4, ...`.
///
/// For odd `n = 2m+1` this is the reading in which the first `m+1` indices
/// (the larger Levi block) fill all odd slots; it is the unique candidate
/// from [`odd_wn_readings`] compatible with both neighbours under
/// [`InterleavePerm::restrict`].
pub fn build_wn(n: usize) -> InterleavePerm {
    let head = n.div_ceil(2);
    let images = (1..=n)
        .map(|i| if i <= head { 2 * i - 1 } else { 2 * (i - head) })
        .collect();
    InterleavePerm { images }
}

/// The two candidate readings of `w_{2m+1}`: first the one fixing `2m+1`
/// and interleaving only the first `2m` indices, then the one sending the
/// first `m+1` indices to the odd slots.
pub fn odd_wn_readings(m: usize) -> [InterleavePerm; 2] {
    let n = 2 * m + 1;
    let fixing_last = (1..=n)
        .map(|i| {
            if i <= m {
                2 * i - 1
            } else if i <= 2 * m {
                2 * (i - m)
            } else {
                n
            }
        })
        .collect();
    let odd_first = (1..=n)
        .map(|i| {
            if i <= m + 1 {
                2 * i - 1
            } else {
                2 * (i - m - 1)
            }
        })
        .collect();
    [
        InterleavePerm {
            images: fixing_last,
        },
        InterleavePerm { images: odd_first },
    ]
}

/// `w'_n`.
///
/// Even `n = 2m`: `i ↦ 2i-1` for `i ≤ m`, `m+1 ↦ 2m`, `m+1+i ↦ 2i` for
/// `i < m`. Odd `n = 2m+1`: `i ↦ 2i` for `i ≤ m`, `m+1 ↦ 2m+1`,
/// `m+1+i ↦ 2i-1` for `i ≤ m`.
pub fn build_wn_prime(n: usize) -> Result<InterleavePerm, PermError> {
    if n < 2 {
        return Err(PermError::TooSmall(n));
    }
    let m = n / 2;
    let images = if n.is_multiple_of(2) {
        (1..=n)
            .map(|i| match i {
                i if i <= m => 2 * i - 1,
                i if i == m + 1 => n,
                i => 2 * (i - m - 1),
            })
            .collect()
    } else {
        (1..=n)
            .map(|i| match i {
                i if i <= m => 2 * i,
                i if i == m + 1 => n,
                i => 2 * (i - m - 1) - 1,
            })
            .collect()
    };
    Ok(InterleavePerm { images })
}
