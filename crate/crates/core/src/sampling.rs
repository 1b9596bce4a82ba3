//! Seeded generators for test and CLI inputs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exact_series::ExactScalar;
use crate::weights_schur::SatakeData;

/// `±1, ±2, ±3, ±1/2, ±1/3`.
pub fn satake_alphabet() -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(10);
    for (num, den) in [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3)] {
        out.push(ExactScalar::ratio(num, den));
        out.push(ExactScalar::ratio(-num, den));
    }
    out
}

/// Rank-`n` data with every `z_i` and `u` drawn from [`satake_alphabet`].
pub fn random_satake_data<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SatakeData {
    let alphabet = satake_alphabet();
    let mut pick = || alphabet.choose(rng).expect("nonempty").clone();
    let z = (0..n).map(|_| pick()).collect();
    let u = pick();
    SatakeData::new(z, u).expect("alphabet has no zero")
}

/// A nonzero rational `a/b` with `|a| ≤ 9`, `1 ≤ b ≤ 5`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> ExactScalar {
    loop {
        let num = rng.gen_range(-9i64..=9);
        if num != 0 {
            return ExactScalar::ratio(num, rng.gen_range(1i64..=5));
        }
    }
}

/// `n` pairwise distinct nonzero rationals.
pub fn random_distinct_rationals<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<ExactScalar> {
    let mut out: Vec<ExactScalar> = Vec::with_capacity(n);
    while out.len() < n {
        let x = random_rational(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}
