mod common;

use linperiod::exact_series::{ExactScalar, TruncatedSeries};
use linperiod::group_combinatorics::{build_wn, interleave, is_in_hn, InterleavePerm};
use linperiod::local_factors::{
    exterior_square_factor, linear_local_factor, product_side, standard_factor, verify_macdonald,
    weight_sum_integral,
};
use linperiod::matrix::SquareMatrix;
use linperiod::partial_l::{assemble, assemble_with, FactorSelection};
use linperiod::sampling::{random_distinct_rationals, random_rational, random_satake_data};
use linperiod::weights_schur::{
    enumerate_weights, schur_alternant, schur_jacobi_trudi, DominantWeight, SatakeData,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ExactScalar::ratio(n, d))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(scalar(), order + 1)
        .prop_map(move |c| TruncatedSeries::from_coeffs(order, c))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (
        series(order),
        scalar().prop_filter("nonzero", |c| !c.is_zero()),
    )
        .prop_map(move |(s, c0)| {
            let mut c = s.into_coeffs();
            c[0] = c0;
            TruncatedSeries::from_coeffs(order, c)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_laws(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.try_add(&b).unwrap().try_sub(&b).unwrap(), a);
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series(7)) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.try_mul(&inv).unwrap(), TruncatedSeries::one(7));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn truncation_is_coherent(a in unit_series(8), b in series(8), m in 0usize..8) {
        let am = a.truncate(m).unwrap();
        let bm = b.truncate(m).unwrap();
        prop_assert_eq!(a.try_mul(&b).unwrap().truncate(m).unwrap(), am.try_mul(&bm).unwrap());
        prop_assert_eq!(a.invert().unwrap().truncate(m).unwrap(), am.invert().unwrap());
    }

    #[test]
    fn schur_is_homogeneous(
        parts in prop::collection::vec(0i64..4, 1..5),
        zs in prop::collection::vec(scalar(), 4),
        c in scalar().prop_filter("nonzero", |c| !c.is_zero()),
    ) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.len();
        let lambda = DominantWeight::new(parts).unwrap();
        let z = &zs[..n];
        let scaled: Vec<ExactScalar> = z.iter().map(|x| x * &c).collect();
        prop_assert_eq!(
            schur_jacobi_trudi(&lambda, &scaled).unwrap(),
            c.pow(lambda.size()) * schur_jacobi_trudi(&lambda, z).unwrap()
        );
    }

    #[test]
    fn weight_sum_is_symmetric(seed in any::<u64>(), n in 1usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = random_satake_data(n, &mut rng);
        let mut z = data.z().to_vec();
        z.reverse();
        let swapped = SatakeData::new(z, data.u().clone()).unwrap();
        prop_assert_eq!(weight_sum_integral(&data, 5), weight_sum_integral(&swapped, 5));
    }
}

#[test]
fn jacobi_trudi_matches_alternant_on_small_weights() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=4 {
        for _ in 0..5 {
            let z = random_distinct_rationals(n, &mut rng);
            for total in 0..=5 {
                for lambda in enumerate_weights(n, total) {
                    assert_eq!(
                        schur_jacobi_trudi(&lambda, &z),
                        schur_alternant(&lambda, &z),
                        "{lambda:?} {z:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn weight_counts_are_partition_counts() {
    for n in 1..=7 {
        for k in 0..=12 {
            assert_eq!(
                enumerate_weights(n, k as u64).len(),
                common::partition_count(k, n),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn schur_at_ones_counts_tableaux() {
    for n in 1..=4 {
        let ones = vec![ExactScalar::one(); n];
        for total in 0..=4 {
            for lambda in enumerate_weights(n, total) {
                let shape: Vec<usize> = lambda
                    .parts()
                    .iter()
                    .map(|&p| p as usize)
                    .filter(|&p| p > 0)
                    .collect();
                let expected = common::ssyt_count(&shape, n) as i64;
                assert_eq!(
                    schur_jacobi_trudi(&lambda, &ones).unwrap(),
                    ExactScalar::from_int(expected),
                    "{lambda:?}"
                );
            }
        }
    }
}

#[test]
fn weight_sum_at_ones_counts_tableaux() {
    for n in 1..=3 {
        let data = SatakeData::new(vec![ExactScalar::one(); n], ExactScalar::one()).unwrap();
        let series = weight_sum_integral(&data, 4);
        for k in 0..=4 {
            let expected: usize = enumerate_weights(n, k as u64)
                .iter()
                .map(|l| {
                    let shape: Vec<usize> = l
                        .parts()
                        .iter()
                        .map(|&p| p as usize)
                        .filter(|&p| p > 0)
                        .collect();
                    common::ssyt_count(&shape, n)
                })
                .sum();
            assert_eq!(
                series.coeff(k),
                ExactScalar::from_int(expected as i64),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn local_factor_inverse_splits() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=5 {
        let data = random_satake_data(n, &mut rng);
        let order = 10;
        let whole = linear_local_factor(&data).inverse_series(order);
        let split = standard_factor(&data)
            .inverse_series(order)
            .try_mul(&exterior_square_factor(&data).inverse_series(order))
            .unwrap();
        assert_eq!(whole, split);
        assert_eq!(whole, product_side(&data, order));
        assert_eq!(exterior_square_factor(&data).degree(), n * (n - 1));
    }
}

#[test]
fn identity_holds_with_repeated_parameters() {
    let two = ExactScalar::from_int(2);
    let data = SatakeData::new(
        vec![two.clone(), two.clone(), two.clone(), two],
        ExactScalar::ratio(-1, 3),
    )
    .unwrap();
    assert!(verify_macdonald(&data, 8).holds());
}

#[test]
fn weight_sum_independent_of_thread_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let data = random_satake_data(5, &mut rng);
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let many = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let a = single.install(|| weight_sum_integral(&data, 8));
    let b = many.install(|| weight_sum_integral(&data, 8));
    assert_eq!(a, b);

    let table = common::toy_table();
    let a = single.install(|| assemble(&table, 2000).to_json());
    let b = many.install(|| assemble(&table, 2000).to_json());
    assert_eq!(a, b);
}

fn random_matrix(rng: &mut ChaCha8Rng, size: usize, density: f64) -> SquareMatrix {
    SquareMatrix::from_fn(size, |_, _| {
        if rng.gen_bool(density) {
            random_rational(rng)
        } else {
            ExactScalar::zero()
        }
    })
}

#[test]
fn interleave_is_conjugation() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in 1usize..=8 {
        let (a, b) = (n.div_ceil(2), n / 2);
        for _ in 0..5 {
            let g1 = random_matrix(&mut rng, a, 0.8);
            let g2 = random_matrix(&mut rng, b, 0.8);
            let relabelled = interleave(&g1, &g2).unwrap();
            let explicit = common::explicit_conjugate(
                build_wn(n).images(),
                &SquareMatrix::block_diag(&g1, &g2),
            );
            assert_eq!(relabelled, explicit);
            assert!(is_in_hn(&relabelled));
        }
    }
}

#[test]
fn hn_compatible_with_lower_rank_on_sparse_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for n in 2..=9 {
        for _ in 0..200 {
            let g = random_matrix(&mut rng, n - 1, 0.15);
            let embedded = SquareMatrix::block_diag(&g, &SquareMatrix::identity(1));
            assert_eq!(is_in_hn(&embedded), is_in_hn(&g), "n={n} g={g:?}");
        }
    }
}

#[test]
fn permutation_restrictions() {
    for m in 1..=4 {
        assert_eq!(build_wn(2 * m + 1).restrict().unwrap(), build_wn(2 * m));
        assert_eq!(build_wn(2 * m + 2).restrict().unwrap(), build_wn(2 * m + 1));
    }
    assert_eq!(
        InterleavePerm::identity(3).restrict().unwrap(),
        InterleavePerm::identity(2)
    );
}

#[test]
fn partial_l_factorizes_into_its_two_factors() {
    let table = common::toy_table();
    let bound = 3000;
    let full = assemble(&table, bound);
    let std_only = assemble_with(&table, bound, FactorSelection::StandardOnly);
    let ext_only = assemble_with(&table, bound, FactorSelection::ExteriorSquareOnly);
    let product = std_only.convolve(&ext_only);
    for m in 1..=bound {
        assert_eq!(&product[(m - 1) as usize], full.coeff(m), "m = {m}");
    }
}
