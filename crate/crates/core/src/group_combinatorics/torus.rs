use rand::Rng;
use thiserror::Error;

use crate::exact_series::ExactScalar;

/// Exponents `(e_1, ..., e_n)` of the torus element
/// `diag(ϖ^{e_1}, ..., ϖ^{e_n})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusExponentVector(Vec<i64>);

impl TorusExponentVector {
    pub fn new(exps: Vec<i64>) -> Self {
        TorusExponentVector(exps)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Odd-indexed entries (`a'`) and even-indexed entries (`a''`).
pub fn torus_split(a: &TorusExponentVector) -> (TorusExponentVector, TorusExponentVector) {
    let odd = a.0.iter().step_by(2).copied().collect();
    let even = a.0.iter().skip(1).step_by(2).copied().collect();
    (TorusExponentVector(odd), TorusExponentVector(even))
}

/// `E` with `δ_{B_n}(ϖ^a) = q^{-E}`, i.e. `E = Σ a_i (n + 1 - 2i)`, where
/// `n` is the length of `a`.
pub fn borel_modulus_exponent(a: &TorusExponentVector) -> i64 {
    let n = a.n() as i64;
    a.0.iter()
        .enumerate()
        .map(|(i, &e)| e * (n - 1 - 2 * i as i64))
        .sum()
}

/// `Σ a'_i - Σ a''_j`, so that `δ(ϖ^a) = q^{-(Σ a'_i - Σ a''_j)}` for the
/// character `h(h_1, h_2) ↦ |det h_1| / |det h_2|`.
pub fn delta_character_exponent(a: &TorusExponentVector) -> i64 {
    let (odd, even) = torus_split(a);
    odd.total() - even.total()
}

/// Both sides of the modulus splitting relation, as exponents of
/// `v = q^{1/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitExponents {
    /// `δ_{B_m}(a') δ_{B_m}(a'') δ(a)^{1/2}` for even `n`,
    /// `δ_{B_{m+1}}(a') δ_{B_m}(a'')` for odd `n`.
    pub split_side: i64,
    /// `δ_{B_n}^{1/2}(a)`.
    pub full_side: i64,
}

pub fn modulus_split_exponents(a: &TorusExponentVector) -> SplitExponents {
    let (odd, even) = torus_split(a);
    // δ_B(x) = q^{-E} = v^{-2E}
    let mut split_side = -2 * borel_modulus_exponent(&odd) - 2 * borel_modulus_exponent(&even);
    if a.n().is_multiple_of(2) {
        split_side -= delta_character_exponent(a);
    }
    SplitExponents {
        split_side,
        full_side: -borel_modulus_exponent(a),
    }
}

/// Whether the block-size-aware modulus splitting relation holds at `a`.
pub fn modulus_split_check(a: &TorusExponentVector) -> bool {
    let e = modulus_split_exponents(a);
    e.split_side == e.full_side
}

/// First vector in `[-range, range]^n` (odometer order) violating the
/// splitting relation.
pub fn exhaustive_split_counterexample(n: usize, range: i64) -> Option<TorusExponentVector> {
    let mut a = vec![-range; n];
    loop {
        let v = TorusExponentVector(a.clone());
        if !modulus_split_check(&v) {
            return Some(v);
        }
        // advance the odometer
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            if a[i] < range {
                a[i] += 1;
                break;
            }
            a[i] = -range;
            i += 1;
        }
    }
}

/// Same as [`exhaustive_split_counterexample`] over `samples` uniform draws.
pub fn sampled_split_counterexample<R: Rng + ?Sized>(
    n: usize,
    range: i64,
    samples: usize,
    rng: &mut R,
) -> Option<TorusExponentVector> {
    (0..samples)
        .map(|_| TorusExponentVector((0..n).map(|_| rng.gen_range(-range..=range)).collect()))
        .find(|v| !modulus_split_check(v))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("character value at the uniformizer must be nonzero")]
    ZeroValue,
    #[error("residue field size must exceed 1, got {0}")]
    BadModulus(ExactScalar),
}

/// An unramified character of `F^*`, determined by `u = χ(ϖ)`, together
/// with the residue field size `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnramifiedCharacter {
    u: ExactScalar,
    q: ExactScalar,
}

impl UnramifiedCharacter {
    pub fn new(u: ExactScalar, q: ExactScalar) -> Result<Self, CharacterError> {
        if u.is_zero() {
            return Err(CharacterError::ZeroValue);
        }
        if q <= ExactScalar::one() {
            return Err(CharacterError::BadModulus(q));
        }
        Ok(UnramifiedCharacter { u, q })
    }

    pub fn value_at_uniformizer(&self) -> &ExactScalar {
        &self.u
    }

    pub fn q(&self) -> &ExactScalar {
        &self.q
    }

    /// The real `r` with `|χ(x)| = |x|^r`; since `|ϖ| = q^{-1}` this is
    /// `-log|u| / log q`.
    pub fn real_part(&self) -> f64 {
        -self.u.ln_abs() / self.q.ln_abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(xs: &[i64]) -> TorusExponentVector {
        TorusExponentVector::new(xs.to_vec())
    }

    #[test]
    fn split_examples() {
        assert_eq!(torus_split(&t(&[1, 2, 3, 4])), (t(&[1, 3]), t(&[2, 4])));
        assert_eq!(
            torus_split(&t(&[1, 2, 3, 4, 5])),
            (t(&[1, 3, 5]), t(&[2, 4]))
        );
        assert_eq!(torus_split(&t(&[7, 8])), (t(&[7]), t(&[8])));
        assert_eq!(torus_split(&t(&[7])), (t(&[7]), t(&[])));
    }

    #[test]
    fn borel_exponents() {
        assert_eq!(borel_modulus_exponent(&t(&[1, 0])), 1);
        assert_eq!(borel_modulus_exponent(&t(&[0, 0, 0])), 0);
        assert_eq!(borel_modulus_exponent(&t(&[1, 1, 1, 1])), 0);
        assert_eq!(borel_modulus_exponent(&t(&[1, 0, 0, 0, 0])), 4);
        assert_eq!(borel_modulus_exponent(&t(&[0, 0, 0, 0, 1])), -4);
    }

    #[test]
    fn delta_exponents() {
        assert_eq!(delta_character_exponent(&t(&[1, 0, 0, 0])), 1);
        assert_eq!(delta_character_exponent(&t(&[0, 0, 0, 0])), 0);
        assert_eq!(delta_character_exponent(&t(&[1, 1, 1, 1])), 0);
        assert_eq!(delta_character_exponent(&t(&[0, 3, 0, 0])), -3);
    }

    #[test]
    fn split_relation_examples() {
        for (e1, e2) in [(0, 0), (1, 0), (3, -2), (-1, 5)] {
            let e = modulus_split_exponents(&t(&[e1, e2]));
            assert_eq!(e.full_side, -(e1 - e2));
            assert!(modulus_split_check(&t(&[e1, e2])));
        }
        // n = 3: both sides are q^{-(e1 - e3)} = v^{-2(e1 - e3)}
        let e = modulus_split_exponents(&t(&[4, -1, 2]));
        assert_eq!(
            e,
            SplitExponents {
                split_side: -4,
                full_side: -4
            }
        );
        // n = 5, a = (1,0,0,0,0): q^{-2} on both sides
        let e = modulus_split_exponents(&t(&[1, 0, 0, 0, 0]));
        assert_eq!(
            e,
            SplitExponents {
                split_side: -4,
                full_side: -4
            }
        );
    }

    #[test]
    fn literal_readings_fail() {
        // same rank on every factor, a' and a'' padded with zeros
        let a = t(&[0, 1, 0, 0]);
        let (odd, even) = torus_split(&a);
        let pad = |v: &TorusExponentVector| {
            let mut x = v.exps().to_vec();
            x.resize(a.n(), 0);
            t(&x)
        };
        let padded = borel_modulus_exponent(&pad(&odd)) + borel_modulus_exponent(&pad(&even));
        assert_ne!(borel_modulus_exponent(&a), padded);
        // block ranks but no square root on the full modulus
        let a = t(&[1, 0, 0]);
        let (odd, even) = torus_split(&a);
        assert_ne!(
            borel_modulus_exponent(&a),
            borel_modulus_exponent(&odd) + borel_modulus_exponent(&even)
        );
    }

    #[test]
    fn small_exhaustive_ranges() {
        for n in 0..=5 {
            assert_eq!(exhaustive_split_counterexample(n, 2), None);
        }
    }

    #[test]
    fn real_part_examples() {
        let q4 = ExactScalar::from_int(4);
        let chi = |u: ExactScalar| UnramifiedCharacter::new(u, q4.clone()).unwrap();
        assert_eq!(chi(ExactScalar::one()).real_part(), 0.0);
        assert!((chi(ExactScalar::ratio(1, 4)).real_part() - 1.0).abs() < 1e-15);
        assert!((chi(ExactScalar::from_int(4)).real_part() + 1.0).abs() < 1e-15);
        assert!((chi(ExactScalar::from_int(-2)).real_part() + 0.5).abs() < 1e-15);
        assert_eq!(
            UnramifiedCharacter::new(ExactScalar::zero(), q4),
            Err(CharacterError::ZeroValue)
        );
        assert!(UnramifiedCharacter::new(ExactScalar::one(), ExactScalar::one()).is_err());
    }
}
