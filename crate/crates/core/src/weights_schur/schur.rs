use thiserror::Error;

use super::DominantWeight;
use crate::exact_series::ExactScalar;
use crate::matrix::SquareMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("weight {0} has a negative part; use the Laurent evaluation")]
    NegativePart(DominantWeight),
    #[error("weight has {parts} parts but {vars} variables were given")]
    LengthMismatch { parts: usize, vars: usize },
    #[error("variables are not pairwise distinct, the Vandermonde denominator vanishes")]
    SingularDenominator,
    #[error("a variable is zero, negative powers are undefined")]
    ZeroVariable,
}

/// Complete homogeneous symmetric sums `h_0, ..., h_d` of a fixed set of
/// variables, read off from `∏ 1/(1 - z_i t)`.
#[derive(Debug, Clone)]
pub struct HomogeneousTable {
    vars: usize,
    values: Vec<ExactScalar>,
    zero: ExactScalar,
}

impl HomogeneousTable {
    pub fn new(z: &[ExactScalar], max_degree: usize) -> Self {
        let mut values = vec![ExactScalar::zero(); max_degree + 1];
        values[0] = ExactScalar::one();
        // multiply by 1/(1 - z t) one variable at a time: b_k = a_k + z b_{k-1}
        for zi in z {
            for k in 1..=max_degree {
                let carry = zi * &values[k - 1];
                values[k] += carry;
            }
        }
        HomogeneousTable {
            vars: z.len(),
            values,
            zero: ExactScalar::zero(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn max_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// `h_k`, zero for negative `k`. Panics past the table's degree.
    pub fn get(&self, k: i64) -> &ExactScalar {
        if k < 0 {
            return &self.zero;
        }
        self.values.get(k as usize).unwrap_or_else(|| {
            panic!(
                "h_{k} requested from a table of degree {}",
                self.max_degree()
            )
        })
    }
}

fn check_partition(lambda: &DominantWeight, vars: usize) -> Result<(), SchurError> {
    if lambda.len() != vars {
        return Err(SchurError::LengthMismatch {
            parts: lambda.len(),
            vars,
        });
    }
    if !lambda.is_nonnegative() {
        return Err(SchurError::NegativePart(lambda.clone()));
    }
    Ok(())
}

/// `s_λ(z)` as the Jacobi–Trudi determinant `det(h_{λ_i - i + j})`.
pub fn schur_jacobi_trudi(
    lambda: &DominantWeight,
    z: &[ExactScalar],
) -> Result<ExactScalar, SchurError> {
    check_partition(lambda, z.len())?;
    let degree = (lambda.parts()[0] as usize) + lambda.len() - 1;
    let table = HomogeneousTable::new(z, degree);
    schur_jacobi_trudi_with(lambda, &table)
}

/// Jacobi–Trudi evaluation against a precomputed `h` table, so a batch of
/// weights over the same variables shares one table.
pub fn schur_jacobi_trudi_with(
    lambda: &DominantWeight,
    table: &HomogeneousTable,
) -> Result<ExactScalar, SchurError> {
    check_partition(lambda, table.vars())?;
    // rows for zero parts are unit rows below the diagonal block, so only the
    // nonzero parts contribute
    let parts: Vec<i64> = lambda
        .parts()
        .iter()
        .copied()
        .take_while(|&p| p > 0)
        .collect();
    let l = parts.len();
    let m = SquareMatrix::from_fn(l, |i, j| table.get(parts[i] - i as i64 + j as i64).clone());
    Ok(m.determinant())
}

/// `s_λ(z)` as the ratio of alternants `det(z_i^{λ_j+n-j}) / det(z_i^{n-j})`.
///
/// Both determinants are expanded over permutations, sharing nothing with
/// the Jacobi–Trudi path; this is the oracle that path is tested against.
pub fn schur_alternant(
    lambda: &DominantWeight,
    z: &[ExactScalar],
) -> Result<ExactScalar, SchurError> {
    check_partition(lambda, z.len())?;
    let n = z.len();
    for i in 0..n {
        for j in i + 1..n {
            if z[i] == z[j] {
                return Err(SchurError::SingularDenominator);
            }
        }
    }
    let numerator = leibniz_det(n, |i, j| z[i].pow(lambda.parts()[j] + (n - 1 - j) as i64));
    let vandermonde = leibniz_det(n, |i, j| z[i].pow((n - 1 - j) as i64));
    Ok(numerator / vandermonde)
}

fn leibniz_det(n: usize, entry: impl Fn(usize, usize) -> ExactScalar) -> ExactScalar {
    let cells: Vec<Vec<ExactScalar>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = ExactScalar::zero();
    // Heap's algorithm; each step is one transposition so the sign flips
    let mut counters = vec![0usize; n];
    let mut sign_positive = true;
    let term = |perm: &[usize]| -> ExactScalar {
        perm.iter()
            .enumerate()
            .map(|(i, &j)| &cells[i][j])
            .product()
    };
    total += term(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign_positive = !sign_positive;
            let t = term(&perm);
            if sign_positive {
                total += t;
            } else {
                total -= &t;
            }
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    total
}

/// Schur value for any dominant weight, using
/// `s_λ = (z_1 ⋯ z_n)^{λ_n} s_{λ - λ_n(1,...,1)}`.
pub fn schur_laurent(
    lambda: &DominantWeight,
    z: &[ExactScalar],
) -> Result<ExactScalar, SchurError> {
    if lambda.len() != z.len() {
        return Err(SchurError::LengthMismatch {
            parts: lambda.len(),
            vars: z.len(),
        });
    }
    let shift = lambda.last();
    if shift >= 0 {
        return schur_jacobi_trudi(lambda, z);
    }
    let det: ExactScalar = z.iter().product();
    if det.is_zero() {
        return Err(SchurError::ZeroVariable);
    }
    Ok(det.pow(shift) * schur_jacobi_trudi(&lambda.shift(shift), z)?)
}
