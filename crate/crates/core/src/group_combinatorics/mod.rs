//! Interleaving permutations, the subgroup `H_n` they define, and
//! exponent calculus for the modulus characters on the diagonal torus.
//!
//! Torus elements `diag(ϖ^{e_1}, ..., ϖ^{e_n})` are represented by their
//! integer exponent vectors. Characters that are powers of `q` (or of
//! `v = q^{1/2}`) are represented by integer exponents, so nothing here is
//! ever evaluated numerically except [`UnramifiedCharacter::real_part`].

mod hn;
mod perm;
mod torus;

pub use hn::{interleave, is_in_hn, BlockSizeError};
pub use perm::{build_wn, build_wn_prime, odd_wn_readings, InterleavePerm, PermError};
pub use torus::{
    borel_modulus_exponent, delta_character_exponent, exhaustive_split_counterexample,
    modulus_split_check, modulus_split_exponents, sampled_split_counterexample, torus_split,
    CharacterError, SplitExponents, TorusExponentVector, UnramifiedCharacter,
};
