//! Brute-force oracles shared by the integration targets. Nothing here calls
//! into the code paths it is used to check.
#![allow(dead_code)]

use linperiod::matrix::SquareMatrix;
use linperiod::partial_l::{ingest, SatakeTable};
use linperiod::ExactScalar;

pub fn toy_table() -> SatakeTable {
    ingest(concat!(env!("CARGO_MANIFEST_DIR"), "/data/toy_rank2.sat"))
        .expect("bundled table parses")
}

/// All permutations of `1..=n` as image vectors.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                prefix.push(x + 1);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Number of partitions of `k` into at most `n` parts.
pub fn partition_count(k: usize, n: usize) -> usize {
    // p(k, n) = p(k, n - 1) + p(k - n, n)
    let mut table = vec![vec![0usize; n + 1]; k + 1];
    table[0].fill(1);
    for total in 1..=k {
        for parts in 1..=n {
            table[total][parts] = table[total][parts - 1]
                + if total >= parts {
                    table[total - parts][parts]
                } else {
                    0
                };
        }
    }
    table[k][n]
}

/// Semistandard Young tableaux of the given shape with entries in `1..=n`,
/// counted by trying every filling.
pub fn ssyt_count(shape: &[usize], n: usize) -> usize {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let total = n.pow(cells.len() as u32);
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let mut grid = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; shape.len()];
        for &(r, c) in &cells {
            grid[r][c] = rest % n + 1;
            rest /= n;
        }
        let ok = cells.iter().all(|&(r, c)| {
            (c == 0 || grid[r][c - 1] <= grid[r][c]) && (r == 0 || grid[r - 1][c] < grid[r][c])
        });
        if ok {
            count += 1;
        }
    }
    count
}

/// `P · A · P^{-1}` by explicit matrix products, with `P` the permutation
/// matrix carrying a 1 at `(images[j], j)`.
pub fn explicit_conjugate(images: &[usize], a: &SquareMatrix) -> SquareMatrix {
    let n = images.len();
    let p = SquareMatrix::from_fn(n, |i, j| ExactScalar::from_int((images[j] == i + 1) as i64));
    let p_inv = p.transpose();
    p.mul(a).mul(&p_inv)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
