use thiserror::Error;

use super::build_wn;
use crate::matrix::SquareMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("block sizes ({0}, {1}) are neither (m, m) nor (m+1, m)")]
pub struct BlockSizeError(pub usize, pub usize);

/// `h(g_1, g_2) = w_n diag(g_1, g_2) w_n^{-1}`, computed by relabelling:
/// entry `(w(i), w(j))` of the result is entry `(i, j)` of the block matrix.
pub fn interleave(g1: &SquareMatrix, g2: &SquareMatrix) -> Result<SquareMatrix, BlockSizeError> {
    let (a, b) = (g1.size(), g2.size());
    if a == 0 || !(a == b || a == b + 1) {
        return Err(BlockSizeError(a, b));
    }
    let n = a + b;
    let w = build_wn(n);
    let block = SquareMatrix::block_diag(g1, g2);
    let mut out = SquareMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.set(
                w.images()[i] - 1,
                w.images()[j] - 1,
                block.get(i, j).clone(),
            );
        }
    }
    Ok(out)
}

/// Whether `w_n^{-1} g w_n` is block diagonal with blocks `(⌈n/2⌉, ⌊n/2⌋)`.
pub fn is_in_hn(g: &SquareMatrix) -> bool {
    let n = g.size();
    let w = build_wn(n);
    let head = n.div_ceil(2);
    // (w^{-1} g w)[i][j] = g[w(i)][w(j)]
    (0..n).all(|i| {
        (0..n).all(|j| {
            (i < head) == (j < head) || g.get(w.images()[i] - 1, w.images()[j] - 1).is_zero()
        })
    })
}
