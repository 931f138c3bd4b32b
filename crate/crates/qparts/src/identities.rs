//! Coefficient-level verification of the smallest-part identities.
//!
//! The generating function for a(n) (smallest part occurs at least twice,
//! OEIS A117989) admits a chain of six rewritings, from the defining sum
//! to a closed form in the partition generating function:
//!
//! ```text
//! S1 = sum_{k>=1} q^(2k) / (q^k)_inf
//! S2 = (q^2/(q)_inf) * sum_{k>=0} (q)_k q^(2k)
//! S3 = (q^2 (q^3)_inf / (q^2)_inf) * sum_{k>=0} (q^2)_k q^k / ((q)_k (q^3)_k)
//! S4 = sum_{k>=0} q^(k+2) / ((q)_k (1 - q^(k+2)))
//! S5 = sum_{k>=0} q^(k+2)/(q)_(k+2) - sum_{k>=0} q^(2k+3)/(q)_(k+2)
//! S6 = 2/(q)_inf - 1/(q (q)_inf) + 1/q - 1
//! ```
//!
//! S2 = S3 is Heine's transformation specialized at a = b = q, c = 0,
//! t = q^2; S5 = S6 rests on Cauchy's identity at a = 0 with t = q and
//! t = q^2. Each stage is built independently and compared coefficientwise,
//! so every rewriting step is checked rather than assumed. The closed form
//! reads off a(n) = 2p(n) - p(n+1), with the q^-1 and q^0 coefficients of
//! S6 cancelling to zero.
//!
//! The defining sum with q^(mk) in place of q^(2k) generates a_m(n)
//! (smallest part occurs at least m times): the bijection sending a
//! partition with all parts >= k, prefixed by m extra copies of k, to a
//! partition with smallest part k of multiplicity >= m is exactly the
//! term-by-term reading of q^(mk)/(q^k)_inf. m = 1 recovers 1/(q)_inf
//! and m = 2 recovers S1. The remaining identity a(n) = p(2n, n) has no
//! series shortcut here; it is verified against the fixed-difference
//! count directly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::bijections::{self, Bijection};
use crate::exec;
use crate::fps::{pochhammer_fin, pochhammer_inf, LaurentSeries};
use crate::partitions::{
    count_smallest_at_least, p_fixed_diff, p_fixed_diff_dp, p_table, smallest_multiplicity_counts,
};

/// Labels for the six chain stages and the three classical-identity sides
/// built alongside them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StageId {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    /// Cauchy's identity at a = 0, t = q: sum_{k>=0} q^k/(q)_k.
    CauchyT1,
    /// Cauchy's identity at a = 0, t = q^2: sum_{k>=0} q^(2k)/(q)_k.
    CauchyT2,
    /// The Heine-transformed side, identical in form to S3.
    HeineSpec,
}

pub const CHAIN: [StageId; 6] =
    [StageId::S1, StageId::S2, StageId::S3, StageId::S4, StageId::S5, StageId::S6];

impl fmt::Display for StageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StageId::S1 => "S1",
            StageId::S2 => "S2",
            StageId::S3 => "S3",
            StageId::S4 => "S4",
            StageId::S5 => "S5",
            StageId::S6 => "S6",
            StageId::CauchyT1 => "CAUCHY_T1",
            StageId::CauchyT2 => "CAUCHY_T2",
            StageId::HeineSpec => "HEINE_SPEC",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown stage label {0:?}; expected S1..S6, CAUCHY_T1, CAUCHY_T2, or HEINE_SPEC")]
pub struct UnknownStage(pub String);

impl FromStr for StageId {
    type Err = UnknownStage;

    fn from_str(s: &str) -> Result<Self, UnknownStage> {
        match s.to_ascii_uppercase().as_str() {
            "S1" => Ok(StageId::S1),
            "S2" => Ok(StageId::S2),
            "S3" => Ok(StageId::S3),
            "S4" => Ok(StageId::S4),
            "S5" => Ok(StageId::S5),
            "S6" => Ok(StageId::S6),
            "CAUCHY_T1" => Ok(StageId::CauchyT1),
            "CAUCHY_T2" => Ok(StageId::CauchyT2),
            "HEINE_SPEC" => Ok(StageId::HeineSpec),
            _ => Err(UnknownStage(s.to_string())),
        }
    }
}

/// Builds the named stage exactly through `order`. Sums are cut where a
/// term's minimal exponent passes `order`; the omitted tail lives entirely
/// above the window, so the truncation is exact, not approximate.
pub fn build_stage(stage: StageId, order: i64) -> LaurentSeries {
    assert!(order >= 2, "stages need order >= 2");
    match stage {
        StageId::S1 => stage1(order),
        StageId::S2 => stage2(order),
        StageId::S3 | StageId::HeineSpec => stage3(order),
        StageId::S4 => stage4(order),
        StageId::S5 => stage5(order),
        StageId::S6 => stage6(order),
        StageId::CauchyT1 => cauchy_t1(order),
        StageId::CauchyT2 => cauchy_t2(order),
    }
}

/// Adds term series, all built to exactly `order`.
fn sum_terms(order: i64, terms: Vec<LaurentSeries>) -> LaurentSeries {
    terms.into_iter().fold(LaurentSeries::zero(order), |acc, t| acc.add(&t))
}

/// Unit inversion cannot fail on the products built here (leading
/// coefficient 1 by construction).
fn inv(s: LaurentSeries) -> LaurentSeries {
    s.invert().expect("unit-leading series")
}

fn stage1(order: i64) -> LaurentSeries {
    let ks: Vec<i64> = (1..).take_while(|k| 2 * k <= order).collect();
    let terms =
        exec::map_collect(ks, |k| inv(pochhammer_inf(k as u32, order - 2 * k)).shift(2 * k));
    sum_terms(order, terms)
}

fn stage2(order: i64) -> LaurentSeries {
    let io = order - 2;
    let ks: Vec<i64> = (0..).take_while(|k| 2 * k <= io).collect();
    let terms = exec::map_collect(ks, |k| pochhammer_fin(1, k as u32, io - 2 * k).shift(2 * k));
    let inner = sum_terms(io, terms);
    inv(pochhammer_inf(1, io)).shift(2).mul(&inner)
}

fn stage3(order: i64) -> LaurentSeries {
    let io = order - 2;
    let prefactor = pochhammer_inf(3, io).mul(&inv(pochhammer_inf(2, io))).shift(2);
    let ks: Vec<i64> = (0..=io).collect();
    let terms = exec::map_collect(ks, |k| {
        let t_ord = io - k;
        pochhammer_fin(2, k as u32, t_ord)
            .mul(&inv(pochhammer_fin(1, k as u32, t_ord)))
            .mul(&inv(pochhammer_fin(3, k as u32, t_ord)))
            .shift(k)
    });
    prefactor.mul(&sum_terms(io, terms))
}

fn stage4(order: i64) -> LaurentSeries {
    let ks: Vec<i64> = (0..).take_while(|k| k + 2 <= order).collect();
    let terms = exec::map_collect(ks, |k| {
        let t_ord = order - (k + 2);
        let one_minus =
            LaurentSeries::one(t_ord).sub(&LaurentSeries::monomial(BigInt::from(1), k + 2, t_ord));
        inv(pochhammer_fin(1, k as u32, t_ord).mul(&one_minus)).shift(k + 2)
    });
    sum_terms(order, terms)
}

fn stage5(order: i64) -> LaurentSeries {
    let first_ks: Vec<i64> = (0..).take_while(|k| k + 2 <= order).collect();
    let first = exec::map_collect(first_ks, |k| {
        inv(pochhammer_fin(1, k as u32 + 2, order - (k + 2))).shift(k + 2)
    });
    let second_ks: Vec<i64> = (0..).take_while(|k| 2 * k + 3 <= order).collect();
    let second = exec::map_collect(second_ks, |k| {
        inv(pochhammer_fin(1, k as u32 + 2, order - (2 * k + 3))).shift(2 * k + 3)
    });
    sum_terms(order, first).sub(&sum_terms(order, second))
}

fn stage6(order: i64) -> LaurentSeries {
    // 1/(q (q)_inf) must stay exact through `order` after the shift down,
    // so the Euler inverse is built one exponent higher.
    let euler_inv_hi = inv(pochhammer_inf(1, order + 1));
    let two_over = euler_inv_hi.truncate(order).scale(&BigInt::from(2));
    two_over
        .sub(&euler_inv_hi.shift(-1))
        .add(&LaurentSeries::monomial(BigInt::from(1), -1, order))
        .sub(&LaurentSeries::one(order))
}

fn cauchy_t1(order: i64) -> LaurentSeries {
    let ks: Vec<i64> = (0..=order).collect();
    let terms = exec::map_collect(ks, |k| inv(pochhammer_fin(1, k as u32, order - k)).shift(k));
    sum_terms(order, terms)
}

fn cauchy_t2(order: i64) -> LaurentSeries {
    let ks: Vec<i64> = (0..).take_while(|k| 2 * k <= order).collect();
    let terms =
        exec::map_collect(ks, |k| inv(pochhammer_fin(1, k as u32, order - 2 * k)).shift(2 * k));
    sum_terms(order, terms)
}

/// sum_{k>=1} q^(mk)/(q^k)_inf truncated to `order`: the generating
/// function whose coefficient at n counts partitions of n with smallest
/// part occurring at least m times (the k-th term contributes the
/// partitions with smallest part exactly k: m forced copies of k plus
/// arbitrarily many parts >= k).
pub fn g_m(m: u32, order: i64) -> LaurentSeries {
    assert!(m >= 1);
    assert!(order >= 0);
    let m = m as i64;
    let ks: Vec<i64> = (1..).take_while(|k| m * k <= order).collect();
    let terms =
        exec::map_collect(ks, |k| inv(pochhammer_inf(k as u32, order - m * k)).shift(m * k));
    sum_terms(order, terms)
}

/// One stage of a chain comparison: the built series and its agreement
/// with the following stage.
#[derive(Debug, Clone)]
pub struct StageReport {
    pub stage: StageId,
    pub series: LaurentSeries,
    /// Agreement with the next stage on the compared exponents; vacuously
    /// true for the final stage.
    pub equal_to_next: bool,
    pub first_mismatch: Option<i64>,
}

/// Builds S1..S6 to `order` and compares consecutive stages on exponents
/// 1..=order.
pub fn verify_chain(order: i64) -> Vec<StageReport> {
    assert!(order >= 2);
    let series = exec::map_collect(CHAIN.to_vec(), |s| build_stage(s, order));
    let mut reports = Vec::with_capacity(CHAIN.len());
    for (i, series_i) in series.iter().enumerate() {
        let first_mismatch =
            series.get(i + 1).and_then(|next| series_i.first_mismatch(next, 1, order));
        reports.push(StageReport {
            stage: CHAIN[i],
            series: series_i.clone(),
            equal_to_next: first_mismatch.is_none(),
            first_mismatch,
        });
    }
    reports
}

/// One failed comparison: which check, at which exponent or n, and the
/// two values that disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: String,
    pub at: i64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Debug, Clone)]
pub struct VerificationSummary {
    pub identity: String,
    pub lo: i64,
    pub hi: i64,
    pub pass: bool,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationSummary {
    fn new(identity: impl Into<String>, lo: i64, hi: i64, mismatches: Vec<Mismatch>) -> Self {
        Self { identity: identity.into(), lo, hi, pass: mismatches.is_empty(), mismatches }
    }
}

fn push_if_different(out: &mut Vec<Mismatch>, check: &str, at: i64, lhs: BigInt, rhs: BigInt) {
    if lhs != rhs {
        out.push(Mismatch { check: check.to_string(), at, lhs, rhs });
    }
}

/// Compares two series on lo..=hi (both must be exact through hi).
fn compare_series(
    out: &mut Vec<Mismatch>,
    check: &str,
    lhs: &LaurentSeries,
    rhs: &LaurentSeries,
    lo: i64,
    hi: i64,
) {
    for e in lo..=hi {
        push_if_different(out, check, e, lhs.coeff(e).unwrap(), rhs.coeff(e).unwrap());
    }
}

/// Both Cauchy specializations used by the chain, plus their shifted forms:
///
/// ```text
/// sum_{k>=0} q^k/(q)_k        = 1/(q)_inf
/// sum_{k>=0} q^(2k)/(q)_k     = 1/(q^2)_inf
/// sum_{k>=0} q^(k+2)/(q)_(k+2)    = 1/(q)_inf - 1/(1-q)
/// sum_{k>=0} q^(2(k+2))/(q)_(k+2) = 1/(q^2)_inf - (1-q+q^2)/(1-q)
/// ```
pub fn verify_cauchy_specializations(order: i64) -> VerificationSummary {
    assert!(order >= 1);
    let mut mismatches = Vec::new();
    let euler_inv = inv(pochhammer_inf(1, order));
    let no_ones_inv = inv(pochhammer_inf(2, order));
    let geom =
        inv(LaurentSeries::one(order).sub(&LaurentSeries::monomial(BigInt::from(1), 1, order)));

    compare_series(
        &mut mismatches,
        "t=q: sum q^k/(q)_k = 1/(q)_inf",
        &cauchy_t1(order),
        &euler_inv,
        0,
        order,
    );
    compare_series(
        &mut mismatches,
        "t=q^2: sum q^(2k)/(q)_k = 1/(q^2)_inf",
        &cauchy_t2(order),
        &no_ones_inv,
        0,
        order,
    );

    let shifted_ks: Vec<i64> = (0..).take_while(|k| k + 2 <= order).collect();
    let shifted_t1 = sum_terms(
        order,
        exec::map_collect(shifted_ks, |k| {
            inv(pochhammer_fin(1, k as u32 + 2, order - (k + 2))).shift(k + 2)
        }),
    );
    compare_series(
        &mut mismatches,
        "shifted t=q: sum q^(k+2)/(q)_(k+2) = 1/(q)_inf - 1/(1-q)",
        &shifted_t1,
        &euler_inv.sub(&geom),
        0,
        order,
    );

    let shifted_ks2: Vec<i64> = (0..).take_while(|k| 2 * (k + 2) <= order).collect();
    let shifted_t2 = sum_terms(
        order,
        exec::map_collect(shifted_ks2, |k| {
            inv(pochhammer_fin(1, k as u32 + 2, order - 2 * (k + 2))).shift(2 * (k + 2))
        }),
    );
    let poly = LaurentSeries::one(order)
        .sub(&LaurentSeries::monomial(BigInt::from(1), 1, order))
        .add(&LaurentSeries::monomial(BigInt::from(1), 2, order));
    compare_series(
        &mut mismatches,
        "shifted t=q^2: sum q^(2(k+2))/(q)_(k+2) = 1/(q^2)_inf - (1-q+q^2)/(1-q)",
        &shifted_t2,
        &no_ones_inv.sub(&poly.mul(&geom)),
        0,
        order,
    );

    VerificationSummary::new("cauchy_specializations", 0, order, mismatches)
}

/// Heine's transformation at a = b = q, c = 0, t = q^2, i.e. S2 = S3.
pub fn verify_heine_specialization(order: i64) -> VerificationSummary {
    assert!(order >= 2);
    let mut mismatches = Vec::new();
    compare_series(&mut mismatches, "S2 = S3", &stage2(order), &stage3(order), 0, order);
    VerificationSummary::new("heine_specialization", 0, order, mismatches)
}

/// Where a(n) comes from in verify_formula1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula1Mode {
    /// Filter the partition enumeration (the ground truth; also checks
    /// c(n) = d(n), which enumeration makes independently testable).
    Enumeration,
    /// Coefficients of the defining sum S1.
    Series,
    /// Coefficients of the closed form S6.
    ClosedForm,
}

/// a(n) = 2p(n) - p(n+1) for 1 <= n <= n_max, with a(n) drawn from the
/// chosen mode and p(n) from the pentagonal recurrence.
pub fn verify_formula1(n_max: u32, mode: Formula1Mode) -> VerificationSummary {
    assert!(n_max >= 1);
    let table = p_table(n_max + 1);
    let closed = |n: u32| BigInt::from(2) * &table[n as usize] - &table[n as usize + 1];
    let mut mismatches = Vec::new();
    match mode {
        Formula1Mode::Enumeration => {
            let ns: Vec<u32> = (1..=n_max).collect();
            let rows = exec::map_collect(ns, |n| {
                (
                    n,
                    count_smallest_at_least(n, 2),
                    crate::partitions::count_smallest_exactly_once(n),
                    crate::partitions::count_no_ones(n),
                )
            });
            for (n, a, c, d) in rows {
                push_if_different(&mut mismatches, "a(n) = 2p(n) - p(n+1)", n as i64, a, closed(n));
                push_if_different(&mut mismatches, "c(n) = d(n)", n as i64, c, d);
            }
        }
        Formula1Mode::Series | Formula1Mode::ClosedForm => {
            let (series, check) = match mode {
                Formula1Mode::Series => (stage1(n_max as i64), "coeff(S1, n) = 2p(n) - p(n+1)"),
                _ => (stage6(n_max as i64), "coeff(S6, n) = 2p(n) - p(n+1)"),
            };
            for n in 1..=n_max {
                push_if_different(
                    &mut mismatches,
                    check,
                    n as i64,
                    series.coeff(n as i64).unwrap(),
                    closed(n),
                );
            }
        }
    }
    let label = match mode {
        Formula1Mode::Enumeration => "formula1[enumeration]",
        Formula1Mode::Series => "formula1[series]",
        Formula1Mode::ClosedForm => "formula1[closed_form]",
    };
    VerificationSummary::new(label, 1, n_max as i64, mismatches)
}

/// a(n) = p(2n, n) for 1 <= n <= n_max by full enumeration on both sides,
/// with the forward psi image cross-checked against |F(n)|.
pub fn verify_formula2(n_max: u32) -> VerificationSummary {
    assert!(n_max >= 1);
    let ns: Vec<u32> = (1..=n_max).collect();
    let rows = exec::map_collect(ns, |n| {
        let a = count_smallest_at_least(n, 2);
        let fixed = p_fixed_diff(2 * n, n);
        let image: std::collections::BTreeSet<_> = Bijection::Psi
            .source_family(n)
            .members()
            .iter()
            .map(|pi| bijections::psi_forward(pi).expect("member of A(n)"))
            .collect();
        (n, a, fixed, image.len())
    });
    let mut mismatches = Vec::new();
    for (n, a, fixed, image_size) in rows {
        push_if_different(&mut mismatches, "a(n) = p(2n, n)", n as i64, a, fixed.clone());
        push_if_different(
            &mut mismatches,
            "|psi(A(n))| = |F(n)|",
            n as i64,
            BigInt::from(image_size),
            fixed,
        );
    }
    VerificationSummary::new("formula2", 1, n_max as i64, mismatches)
}

/// a(n) = p(2n, n) with the right side on the dynamic-programming fast
/// path, which reaches n well past where enumerating partitions of 2n
/// stays reasonable.
pub fn verify_formula2_dp(n_max: u32) -> VerificationSummary {
    assert!(n_max >= 1);
    let ns: Vec<u32> = (1..=n_max).collect();
    let rows =
        exec::map_collect(ns, |n| (n, count_smallest_at_least(n, 2), p_fixed_diff_dp(2 * n, n)));
    let mut mismatches = Vec::new();
    for (n, a, fixed) in rows {
        push_if_different(&mut mismatches, "a(n) = p_dp(2n, n)", n as i64, a, fixed);
    }
    VerificationSummary::new("formula2[dp]", 1, n_max as i64, mismatches)
}

/// coeff(G_m, n) = a_m(n) for 1 <= m <= m_max, 1 <= n <= n_max, with the
/// degenerate column G_1 checked against p(n) and G_2 checked against S1
/// across the whole window.
pub fn verify_gm(m_max: u32, n_max: u32, order: i64) -> VerificationSummary {
    assert!(m_max >= 1 && n_max >= 1);
    assert!((n_max as i64) <= order, "coefficients above `order` are not exact");
    let ns: Vec<u32> = (1..=n_max).collect();
    let stats = exec::map_collect(ns, |n| smallest_multiplicity_counts(n, m_max));
    let table = p_table(n_max);
    let series_by_m = exec::map_collect((1..=m_max).collect::<Vec<u32>>(), |m| g_m(m, order));

    let mut mismatches = Vec::new();
    for (m_idx, series) in series_by_m.iter().enumerate() {
        let m = m_idx as u32 + 1;
        let check = format!("coeff(G_{m}, n) = a_{m}(n)");
        for n in 1..=n_max {
            push_if_different(
                &mut mismatches,
                &check,
                n as i64,
                series.coeff(n as i64).unwrap(),
                stats[n as usize - 1][m_idx].clone(),
            );
        }
    }
    for n in 1..=n_max {
        push_if_different(
            &mut mismatches,
            "coeff(G_1, n) = p(n)",
            n as i64,
            series_by_m[0].coeff(n as i64).unwrap(),
            table[n as usize].clone(),
        );
    }
    if let Some(g2) = series_by_m.get(1) {
        compare_series(&mut mismatches, "G_2 = S1", g2, &stage1(order), 1, order);
    }
    VerificationSummary::new("g_m", 1, n_max as i64, mismatches)
}
