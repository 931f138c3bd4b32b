//! Cross-module invariants at their full documented bounds. Heavier than
//! the unit tests, still comfortably inside `cargo test` budgets.

use num_bigint::BigInt;
use qparts::fps::{pochhammer_inf, LaurentSeries};
use qparts::partitions::{
    count_no_ones, count_smallest_at_least, count_smallest_exactly_once, enumerate, p_fixed_diff,
    p_fixed_diff_dp, p_table, smallest_multiplicity_counts,
};

#[test]
fn enumeration_statistics_to_fifty() {
    let table = p_table(51);
    for n in 1..=50u32 {
        let mut count = 0u64;
        let mut smallest_unique = 0u64;
        let mut smallest_repeats = 0u64;
        for pi in enumerate(n) {
            count += 1;
            if pi.smallest_multiplicity() == 1 {
                smallest_unique += 1;
            } else {
                smallest_repeats += 1;
            }
        }
        let p_n = &table[n as usize];
        assert_eq!(&BigInt::from(count), p_n, "count(enumerate({n})) = p({n})");
        assert_eq!(
            BigInt::from(smallest_unique + smallest_repeats),
            p_n.clone(),
            "c({n}) + a({n}) = p({n})"
        );
        assert_eq!(&count_smallest_at_least(n, 1), p_n, "a_1({n}) = p({n})");
    }
    // The per-statistic operations agree with the combined pass above on a
    // sample of the range.
    for n in [1u32, 7, 19, 33, 50] {
        let c = count_smallest_exactly_once(n);
        let a = count_smallest_at_least(n, 2);
        assert_eq!(&c + &a, table[n as usize], "ops at n={n}");
    }
}

#[test]
fn no_ones_equals_partition_increment_to_fifty() {
    let table = p_table(51);
    for n in 1..=50u32 {
        let expected = &table[n as usize + 1] - &table[n as usize];
        assert_eq!(count_no_ones(n), expected, "d({n}) = p({n}+1) - p({n})");
    }
}

#[test]
fn multiplicity_counts_non_increasing() {
    for n in 1..=30u32 {
        let batch = smallest_multiplicity_counts(n, 8);
        for (m, w) in batch.windows(2).enumerate() {
            assert!(w[0] >= w[1], "a_m({n}) rose from m={} to m={}", m + 1, m + 2);
        }
    }
}

#[test]
fn fixed_difference_exhausts_partitions_to_forty() {
    // One enumeration pass per n builds the full difference histogram;
    // its total must be p(n) and every column must match the DP route.
    let table = p_table(40);
    for n in 1..=40u32 {
        let mut histogram = vec![0u64; n as usize];
        for pi in enumerate(n) {
            histogram[(pi.largest() - pi.smallest()) as usize] += 1;
        }
        let total: u64 = histogram.iter().sum();
        assert_eq!(BigInt::from(total), table[n as usize], "sum_t p({n},t) = p({n})");
        for (t, &count) in histogram.iter().enumerate() {
            assert_eq!(
                p_fixed_diff_dp(n, t as u32),
                BigInt::from(count),
                "dp vs filter at n={n} t={t}"
            );
        }
    }
    // The single-t filter operation agrees with the batched histogram.
    assert_eq!(p_fixed_diff(40, 13), p_fixed_diff_dp(40, 13));
    assert_eq!(p_fixed_diff(37, 0), p_fixed_diff_dp(37, 0));
}

#[test]
fn euler_product_inverse_generates_p_to_two_hundred() {
    let table = p_table(200);
    let series = pochhammer_inf(1, 200).invert().unwrap();
    for n in 0..=200i64 {
        assert_eq!(series.coeff(n).unwrap(), table[n as usize], "p({n})");
    }
}

#[test]
fn pochhammer_splice_full_grid() {
    for k in 1..=5u32 {
        for n in 0..=10u32 {
            let lhs = qparts::fps::pochhammer_fin(k, n, 40).mul(&pochhammer_inf(k + n, 40));
            assert_eq!(lhs, pochhammer_inf(k, 40), "k={k} n={n}");
        }
    }
    // Alignment sanity for the same law written with explicit windows.
    let lhs = qparts::fps::pochhammer_fin(2, 3, 25).mul(&pochhammer_inf(5, 25));
    assert_eq!(lhs.order(), 25);
    assert_eq!(lhs.lowest_exp(), 0);
    assert_eq!(lhs, pochhammer_inf(2, 25));
    assert_ne!(lhs, LaurentSeries::one(25));
}
