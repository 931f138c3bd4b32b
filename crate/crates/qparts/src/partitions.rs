//! Integer partitions and their smallest-part statistics.
//!
//! A partition of n is a non-increasing list of positive parts summing to
//! n. This module enumerates partitions in reverse-lexicographic order and
//! counts the statistics the rest of the crate verifies:
//!
//! ```text
//! p(n)      all partitions of n
//! a_m(n)    smallest part occurs at least m times; a(n) = a_2(n) (OEIS A117989)
//! c(n)      smallest part occurs exactly once
//! d(n)      partitions of n+1 with no part equal to 1
//! p(n,t)    largest part minus smallest part equals t
//! ```
//!
//! Enumeration is the ground truth: every counting function here filters
//! the stream of partitions directly, except p(n), which uses the Euler
//! pentagonal recurrence and is itself validated against enumeration.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A partition: non-increasing positive parts. Ordering is lexicographic
/// on the part list, so sorting a set of partitions descending reproduces
/// the reverse-lexicographic enumeration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes: sorts the parts non-increasing. Zero parts and the
    /// empty partition are rejected; the statistics here start at n = 1.
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "empty partition");
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.is_empty() && parts[parts.len() - 1] >= 1);
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The partitioned number: sum of all parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts[0]
    }

    pub fn smallest(&self) -> u32 {
        self.parts[self.parts.len() - 1]
    }

    /// How many times the smallest part occurs.
    pub fn smallest_multiplicity(&self) -> u32 {
        let s = self.smallest();
        self.parts.iter().rev().take_while(|&&p| p == s).count() as u32
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Iterator over all partitions of n in reverse-lexicographic order:
/// n first, the all-ones partition last.
pub struct Partitions {
    current: Vec<u32>,
    started: bool,
    done: bool,
}

/// Streams every partition of n exactly once, reverse-lexicographically.
pub fn enumerate(n: u32) -> Partitions {
    assert!(n >= 1, "partitions are enumerated for n >= 1 only");
    Partitions { current: vec![n], started: false, done: false }
}

impl Iterator for Partitions {
    type Item = Partition;

    /// The successor of a partition strips its trailing 1s, decrements the
    /// last part that exceeds 1, and redistributes the freed amount in
    /// chunks no larger than the decremented part. This yields the next
    /// partition in reverse-lexicographic order.
    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Partition::from_sorted(self.current.clone()));
        }
        let Some(i) = self.current.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let ones = (self.current.len() - i - 1) as u32;
        let m = self.current[i] - 1;
        self.current.truncate(i + 1);
        self.current[i] = m;
        let mut rem = ones + 1;
        while rem > m {
            self.current.push(m);
            rem -= m;
        }
        self.current.push(rem);
        Some(Partition::from_sorted(self.current.clone()))
    }
}

/// p(n) for 0..=n_max by the Euler pentagonal recurrence
///
/// ```text
/// p(n) = sum_{j>=1} (-1)^(j+1) [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ]
/// ```
///
/// Not enumeration-backed; validated against `enumerate` in tests.
pub fn p_table(n_max: u32) -> Vec<BigInt> {
    let mut table = vec![BigInt::zero(); n_max as usize + 1];
    table[0] = BigInt::one();
    for n in 1..=n_max as i64 {
        let mut acc = BigInt::zero();
        let mut j = 1i64;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            if j % 2 == 1 {
                acc += &table[(n - g1) as usize];
                if g2 <= n {
                    acc += &table[(n - g2) as usize];
                }
            } else {
                acc -= &table[(n - g1) as usize];
                if g2 <= n {
                    acc -= &table[(n - g2) as usize];
                }
            }
            j += 1;
        }
        table[n as usize] = acc;
    }
    table
}

/// p(n), the number of unrestricted partitions; p(0) = 1 for the empty
/// partition.
pub fn p(n: u32) -> BigInt {
    p_table(n).pop().unwrap()
}

/// a_m(n) for every m in 1..=m_max from a single enumeration pass; entry
/// m-1 counts the partitions of n whose smallest part occurs at least m
/// times. The tallies fit u64 comfortably at every enumerable n.
pub fn smallest_multiplicity_counts(n: u32, m_max: u32) -> Vec<BigInt> {
    assert!(n >= 1 && m_max >= 1);
    let mut buckets = vec![0u64; m_max as usize + 1];
    for pi in enumerate(n) {
        buckets[pi.smallest_multiplicity().min(m_max) as usize] += 1;
    }
    let mut out = vec![BigInt::zero(); m_max as usize];
    let mut running = 0u64;
    for m in (1..=m_max as usize).rev() {
        running += buckets[m];
        out[m - 1] = BigInt::from(running);
    }
    out
}

/// a_m(n): partitions of n whose smallest part occurs at least m times.
/// a_1(n) = p(n); a_2(n) = a(n) is OEIS A117989.
pub fn count_smallest_at_least(n: u32, m: u32) -> BigInt {
    smallest_multiplicity_counts(n, m).pop().unwrap()
}

/// c(n): partitions of n whose smallest part occurs exactly once.
pub fn count_smallest_exactly_once(n: u32) -> BigInt {
    assert!(n >= 1);
    let count = enumerate(n).filter(|pi| pi.smallest_multiplicity() == 1).count();
    BigInt::from(count)
}

/// d(n): partitions of n+1 with no part equal to 1. The n+1 offset puts
/// d(n) at the same index as the c(n) it is equinumerous with.
pub fn count_no_ones(n: u32) -> BigInt {
    assert!(n >= 1);
    let count = enumerate(n + 1).filter(|pi| pi.smallest() >= 2).count();
    BigInt::from(count)
}

/// p(n,t): partitions of n whose largest and smallest parts differ by
/// exactly t, by filtering the enumeration stream.
pub fn p_fixed_diff(n: u32, t: u32) -> BigInt {
    assert!(n >= 1);
    let count = enumerate(n).filter(|pi| pi.largest() - pi.smallest() == t).count();
    BigInt::from(count)
}

/// Fast path for p(n,t) without enumerating partitions of n.
///
/// For t = 0 the partitions are exactly the rectangles s+s+...+s, one per
/// divisor s of n. For t >= 1, group by smallest part s: removing one copy
/// of s and one copy of s+t from a partition counted by p(n,t) leaves an
/// arbitrary multiset of parts in [s, s+t] summing to n - 2s - t, and
/// putting those two parts back restores the extremes, so the grouping is
/// a bijection onto bounded-part partitions, counted by a coin-style DP.
pub fn p_fixed_diff_dp(n: u32, t: u32) -> BigInt {
    assert!(n >= 1);
    if t == 0 {
        let divisors = (1..=n).filter(|&s| n.is_multiple_of(s)).count();
        return BigInt::from(divisors);
    }
    let mut total = BigInt::zero();
    let mut s = 1u32;
    while 2 * s + t <= n {
        total += count_parts_in_range(n - 2 * s - t, s, s + t);
        s += 1;
    }
    total
}

/// Partitions of `target` with every part in lo..=hi (1 for target = 0).
fn count_parts_in_range(target: u32, lo: u32, hi: u32) -> BigInt {
    let mut ways = vec![BigInt::zero(); target as usize + 1];
    ways[0] = BigInt::one();
    for part in lo..=hi {
        if part > target {
            break;
        }
        for j in part as usize..=target as usize {
            let prev = ways[j - part as usize].clone();
            ways[j] += prev;
        }
    }
    ways.pop().unwrap()
}

/// All statistics for one n, each by its own route: p by the pentagonal
/// recurrence, the rest by independent enumeration filters, so the stored
/// rows cross-check each other (c + a = p ties the recurrence to the
/// enumeration).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub n: u32,
    pub p_n: BigInt,
    pub a_n: BigInt,
    pub c_n: BigInt,
    pub d_n: BigInt,
    pub p2n_n: BigInt,
    pub a_m: BTreeMap<u32, BigInt>,
}

impl CountTable {
    pub fn compute(n: u32, m_values: &[u32]) -> Self {
        assert!(n >= 1);
        let a_m = m_values.iter().map(|&m| (m, count_smallest_at_least(n, m))).collect();
        Self {
            n,
            p_n: p(n),
            a_n: count_smallest_at_least(n, 2),
            c_n: count_smallest_exactly_once(n),
            d_n: count_no_ones(n),
            p2n_n: p_fixed_diff(2 * n, n),
            a_m,
        }
    }
}
