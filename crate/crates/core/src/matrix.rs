//! Small dense square matrices over [`ExactScalar`].

use std::fmt;

use crate::exact_series::ExactScalar;

#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    size: usize,
    entries: Vec<ExactScalar>,
}

impl SquareMatrix {
    pub fn zeros(size: usize) -> Self {
        SquareMatrix {
            size,
            entries: vec![ExactScalar::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, ExactScalar::one());
        }
        m
    }

    pub fn diagonal(diag: &[ExactScalar]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// Panics unless every row has `rows.len()` entries.
    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            assert_eq!(row.len(), size, "matrix is not square");
            entries.extend(row);
        }
        SquareMatrix { size, entries }
    }

    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Zero-indexed entry access.
    pub fn get(&self, row: usize, col: usize) -> &ExactScalar {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: ExactScalar) {
        self.entries[row * self.size + col] = value;
    }

    /// `diag(a, b)` with `a` in the upper-left corner.
    pub fn block_diag(a: &SquareMatrix, b: &SquareMatrix) -> Self {
        let n = a.size + b.size;
        let mut m = Self::zeros(n);
        for i in 0..a.size {
            for j in 0..a.size {
                m.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.size {
            for j in 0..b.size {
                m.set(a.size + i, a.size + j, b.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.size, other.size, "matrix sizes differ");
        let n = self.size;
        SquareMatrix::from_fn(n, |i, j| {
            (0..n)
                .filter(|&k| !self.get(i, k).is_zero() && !other.get(k, j).is_zero())
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        })
    }

    pub fn transpose(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.size, |i, j| self.get(j, i).clone())
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    ///
    /// Each division in the elimination step is exact, so intermediate
    /// entries stay minors of the input rather than growing as in naive
    /// rational Gaussian elimination.
    pub fn determinant(&self) -> ExactScalar {
        let n = self.size;
        if n == 0 {
            return ExactScalar::one();
        }
        let mut m: Vec<Vec<ExactScalar>> = self.entries.chunks(n).map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = ExactScalar::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return ExactScalar::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
                m[i][k] = ExactScalar::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.size.max(1)))
            .finish()
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.size.max(1)).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ExactScalar::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn small_determinants() {
        assert_eq!(SquareMatrix::zeros(0).determinant(), ExactScalar::one());
        assert_eq!(
            int_matrix(&[&[1, 2], &[3, 4]]).determinant(),
            ExactScalar::from_int(-2)
        );
        // needs a pivot swap
        assert_eq!(
            int_matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).determinant(),
            ExactScalar::from_int(-2)
        );
        assert_eq!(
            int_matrix(&[&[1, 2], &[2, 4]]).determinant(),
            ExactScalar::zero()
        );
    }

    #[test]
    fn vandermonde() {
        // det(x_i^j) = prod_{i<j} (x_j - x_i)
        let xs = [2i64, 3, 5, 7];
        let m = SquareMatrix::from_fn(4, |i, j| ExactScalar::from_int(xs[i]).pow(j as i64));
        let mut expected = 1;
        for i in 0..4 {
            for j in i + 1..4 {
                expected *= xs[j] - xs[i];
            }
        }
        assert_eq!(m.determinant(), ExactScalar::from_int(expected));
    }

    #[test]
    fn rational_entries() {
        let m = SquareMatrix::from_rows(vec![
            vec![ExactScalar::ratio(1, 2), ExactScalar::ratio(1, 3)],
            vec![ExactScalar::ratio(1, 4), ExactScalar::ratio(1, 5)],
        ]);
        assert_eq!(
            m.determinant(),
            ExactScalar::ratio(1, 10) - ExactScalar::ratio(1, 12)
        );
    }
}
