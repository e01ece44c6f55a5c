mod common;

use common::*;
use lrcex::families::{construct_e, horn_nonvanishing_two_rows, two_row_partitions};
use lrcex::lr::{enumerate_lr_fillings, is_lr_filling, lr_coefficient, multi_lr_coefficient};
use lrcex::quiver::{euler_form, kronecker_quiver};
use lrcex::{BigUint, Partition, SkewShape};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size, any::<u64>()).prop_map(|(size, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_partition(&mut rng, size)
    })
}

fn arb_triple(max_size: u32) -> impl Strategy<Value = (Partition, Partition, Partition)> {
    any::<u64>().prop_map(move |seed| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_triple(&mut rng, max_size)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn symmetric_in_the_two_factors((l, m, n) in arb_triple(12)) {
        prop_assert_eq!(lr_coefficient(&l, &m, &n), lr_coefficient(&l, &n, &m));
    }

    #[test]
    fn invariant_under_conjugation((l, m, n) in arb_triple(12)) {
        prop_assert_eq!(
            lr_coefficient(&l, &m, &n),
            lr_coefficient(&l.conjugate(), &m.conjugate(), &n.conjugate())
        );
    }

    #[test]
    fn agrees_with_enumeration((l, m, n) in arb_triple(12)) {
        prop_assert_eq!(lr_coefficient(&l, &m, &n), lr_by_enumeration(&l, &m, &n));
    }

    #[test]
    fn enumerated_fillings_are_valid_and_distinct((l, m, n) in arb_triple(10)) {
        let shape = SkewShape::new(l, m).unwrap();
        let all = enumerate_lr_fillings(&shape, &n);
        for f in &all {
            prop_assert!(is_lr_filling(f, &n));
        }
        for w in all.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn vanishes_on_size_mismatch(l in arb_partition(10), m in arb_partition(6), n in arb_partition(6)) {
        prop_assume!(l.size() != m.size() + n.size());
        prop_assert_eq!(lr_coefficient(&l, &m, &n), BigUint::from(0u8));
    }

    #[test]
    fn multi_lr_ignores_factor_order(gamma in arb_partition(9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut left = gamma.size() as u32;
        let mut factors = Vec::new();
        for _ in 0..2 {
            let s = rand::Rng::gen_range(&mut rng, 0..=left);
            factors.push(random_partition(&mut rng, s));
            left -= s;
        }
        factors.push(random_partition(&mut rng, left));
        let base = multi_lr_coefficient(&gamma, &factors);
        prop_assert_eq!(&base, &multi_lr_by_enumeration(&gamma, &factors));
        for perm in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
            let permuted: Vec<Partition> = perm.iter().map(|&i| factors[i].clone()).collect();
            prop_assert_eq!(&base, &multi_lr_coefficient(&gamma, &permuted));
        }
    }

    #[test]
    fn euler_form_on_kronecker_quivers(l in 1u32..6, a in (0i64..5, 0i64..5), b in (0i64..5, 0i64..5)) {
        let q = kronecker_quiver(l).unwrap();
        let x = q.dimension_vector(vec![a.0, a.1]).unwrap();
        let y = q.dimension_vector(vec![b.0, b.1]).unwrap();
        prop_assert_eq!(euler_form(&q, &x, &y).unwrap(), a.0 * b.0 + a.1 * b.1 - l as i64 * a.1 * b.0);
    }
}

#[test]
fn e_images_are_valid_for_every_exponent() {
    for n in 1..=6u32 {
        for a1 in 0..=n {
            for a2 in 0..=n - a1 {
                let e = construct_e(n, [a1, a2, n - a1 - a2]).unwrap();
                let content = Partition::new(vec![3 * n, 2 * n, n]).unwrap();
                assert!(is_lr_filling(&e, &content));
            }
        }
    }
}

#[test]
fn horn_agrees_with_multi_lr_oracle_for_small_n() {
    for n in 1..=3u32 {
        let gamma = Partition::rectangle(n, 2);
        let pool = two_row_partitions(n);
        for a in &pool {
            for b in &pool {
                for c in &pool {
                    let factors = [a.clone(), b.clone(), c.clone()];
                    let oracle = multi_lr_by_enumeration(&gamma, &factors);
                    assert_eq!(
                        horn_nonvanishing_two_rows(n, &factors),
                        oracle >= BigUint::from(1u8)
                    );
                }
            }
        }
    }
}

#[test]
fn pascal_oracle_sanity() {
    assert_eq!(binomial(26, 5), BigUint::from(65780u32));
    assert_eq!(binomial(23, 2), BigUint::from(253u32));
    assert_eq!(partitions_of(5, 5, 5).len(), 7);
}
