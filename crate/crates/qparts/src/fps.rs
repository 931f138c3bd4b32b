//! Exact arithmetic on truncated Laurent series in q.
//!
//! A series carries an explicit truncation window: `coeffs[i]` is the exact
//! integer coefficient of q^(lowest_exp + i), every coefficient with exponent
//! in `lowest_exp..=order` is stored, everything below `lowest_exp` is exactly
//! zero, and nothing is claimed above `order`. All operations compute the
//! widest window on which the result is still exact, so a coefficient read
//! inside the window is a proved value, never an approximation.
//!
//! Exponents may dip to q^-1 (and no lower); that is enough Laurent headroom
//! for the closed forms built on top of this module, e.g.
//!
//! ```text
//! 2/(q)_inf - 1/(q*(q)_inf) + 1/q - 1
//! ```
//!
//! Coefficients are arbitrary-precision (`num_bigint::BigInt`): partition
//! counts overflow u64 around n = 416, which is inside the orders a caller
//! may reasonably request.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Smallest exponent a series may occupy. One unit of Laurent headroom is
/// enough for every closed form in this crate; anything lower is a bug in
/// the caller, not a representable object.
pub const MIN_LOWEST_EXP: i64 = -1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Inversion needs a leading coefficient of +1 or -1 to stay in integer
    /// coefficients. The zero series reports its (zero) leading coefficient.
    #[error("cannot invert: leading coefficient {found} at q^{exponent} is not +1 or -1")]
    NonUnitLeadingCoefficient { exponent: i64, found: BigInt },
    /// The requested exponent lies above the truncation window, where the
    /// coefficient is unknown rather than zero.
    #[error("coefficient of q^{exponent} lies above truncation order {order}")]
    ExponentAboveTruncation { exponent: i64, order: i64 },
}

/// Truncated Laurent series with exact window `lowest_exp..=order`.
#[derive(Debug, Clone)]
pub struct LaurentSeries {
    lowest_exp: i64,
    order: i64,
    /// Invariant: `coeffs.len() == (order - lowest_exp + 1)`.
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    fn from_window(lowest_exp: i64, order: i64, coeffs: Vec<BigInt>) -> Self {
        assert!(
            lowest_exp >= MIN_LOWEST_EXP,
            "lowest exponent {lowest_exp} below the q^{MIN_LOWEST_EXP} floor"
        );
        assert!(order >= lowest_exp, "empty window {lowest_exp}..={order}");
        assert_eq!(coeffs.len() as i64, order - lowest_exp + 1);
        Self { lowest_exp, order, coeffs }
    }

    /// The zero series, exact through `order`.
    pub fn zero(order: i64) -> Self {
        assert!(order >= 0);
        Self::from_window(0, order, vec![BigInt::zero(); order as usize + 1])
    }

    /// The constant 1, exact through `order`.
    pub fn one(order: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `coeff * q^exp`, exact through `order`. A monomial above the window
    /// is indistinguishable from zero on it.
    pub fn monomial(coeff: BigInt, exp: i64, order: i64) -> Self {
        assert!(
            exp >= MIN_LOWEST_EXP,
            "monomial exponent {exp} below the q^{MIN_LOWEST_EXP} floor"
        );
        if exp > order || coeff.is_zero() {
            return Self::zero(order);
        }
        let mut coeffs = vec![BigInt::zero(); (order - exp + 1) as usize];
        coeffs[0] = coeff;
        Self::from_window(exp, order, coeffs)
    }

    /// Series with the given coefficients starting at `lowest_exp`; the
    /// window ends exactly where the coefficients do.
    pub fn from_coeffs(lowest_exp: i64, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        let order = lowest_exp + coeffs.len() as i64 - 1;
        Self::from_window(lowest_exp, order, coeffs)
    }

    pub fn lowest_exp(&self) -> i64 {
        self.lowest_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of q^exponent. Zero below the window; asking above the
    /// truncation order is an error because that coefficient was never
    /// computed.
    pub fn coeff(&self, exponent: i64) -> Result<BigInt, SeriesError> {
        if exponent > self.order {
            return Err(SeriesError::ExponentAboveTruncation { exponent, order: self.order });
        }
        Ok(self.window_coeff(exponent))
    }

    /// Coefficient lookup where exponents above the window read as zero.
    /// Only correct for exponents at or below `self.order`.
    fn window_coeff(&self, exponent: i64) -> BigInt {
        debug_assert!(exponent <= self.order);
        if exponent < self.lowest_exp {
            BigInt::zero()
        } else {
            self.coeffs[(exponent - self.lowest_exp) as usize].clone()
        }
    }

    /// Pointwise sum. Exact wherever both inputs are exact, so the result
    /// window ends at the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        let lowest = self.lowest_exp.min(other.lowest_exp);
        let order = self.order.min(other.order);
        let coeffs =
            (lowest..=order).map(|e| self.window_coeff(e) + other.window_coeff(e)).collect();
        Self::from_window(lowest, order, coeffs)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Self::from_window(self.lowest_exp, self.order, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply every coefficient by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * k).collect();
        Self::from_window(self.lowest_exp, self.order, coeffs)
    }

    /// Cauchy product. A term of the product at exponent e needs every
    /// splitting e = i + j with i, j inside the factors' windows, so the
    /// result is exact through
    /// `min(self.order + other.lowest_exp, other.order + self.lowest_exp)`.
    pub fn mul(&self, other: &Self) -> Self {
        let lowest = self.lowest_exp + other.lowest_exp;
        let order = (self.order + other.lowest_exp).min(other.order + self.lowest_exp);
        let mut coeffs = vec![BigInt::zero(); (order - lowest + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ei = self.lowest_exp + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ei + other.lowest_exp + j as i64;
                if e > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[(e - lowest) as usize] += a * b;
                }
            }
        }
        Self::from_window(lowest, order, coeffs)
    }

    /// Multiply by q^m (a pure exponent shift; the window shifts with it).
    pub fn shift(&self, m: i64) -> Self {
        Self::from_window(self.lowest_exp + m, self.order + m, self.coeffs.clone())
    }

    /// Shrink the window to end at `new_order`.
    pub fn truncate(&self, new_order: i64) -> Self {
        assert!(self.lowest_exp <= new_order && new_order <= self.order);
        let keep = (new_order - self.lowest_exp + 1) as usize;
        Self::from_window(self.lowest_exp, new_order, self.coeffs[..keep].to_vec())
    }

    /// Multiplicative inverse. Writing self = u * q^L * (1 + higher terms)
    /// with L = lowest_exp and leading coefficient u = ±1, the inverse is
    /// u * q^-L times the inverse of the unit power-series part, computed
    /// by the triangular recurrence
    ///
    /// ```text
    /// h_0 = u,   h_j = -u * sum_{i=1..j} f_i * h_{j-i}
    /// ```
    ///
    /// The unit part is exact through degree `order - L`, and so is h; the
    /// shift back by q^-L lands the result window at `-L ..= order - 2L`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let lead = &self.coeffs[0];
        if !lead.abs().is_one() {
            return Err(SeriesError::NonUnitLeadingCoefficient {
                exponent: self.lowest_exp,
                found: lead.clone(),
            });
        }
        let l = self.lowest_exp;
        assert!(
            -l >= MIN_LOWEST_EXP,
            "inverse of a series starting at q^{l} falls below the q^{MIN_LOWEST_EXP} floor"
        );
        let lead = lead.clone();
        let deg = self.coeffs.len() - 1;
        let mut h = vec![BigInt::zero(); deg + 1];
        h[0] = lead.clone();
        for j in 1..=deg {
            let mut s = BigInt::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() && !h[j - i].is_zero() {
                    s += &self.coeffs[i] * &h[j - i];
                }
            }
            h[j] = -&lead * s;
        }
        Ok(Self::from_window(-l, self.order - 2 * l, h))
    }
}

/// Two truncated series are equal when they agree everywhere both are
/// defined, i.e. on every exponent up to the smaller order. This relation
/// is intentionally not transitive across very different windows, so only
/// `PartialEq` is implemented.
impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_mismatch(other, MIN_LOWEST_EXP, self.order.min(other.order)).is_none()
    }
}

impl LaurentSeries {
    /// First exponent in `lo..=hi` (clamped to both windows) where the two
    /// series differ, or None when they agree on the whole range.
    pub fn first_mismatch(&self, other: &Self, lo: i64, hi: i64) -> Option<i64> {
        let hi = hi.min(self.order).min(other.order);
        (lo..=hi).find(|&e| self.window_coeff(e) != other.window_coeff(e))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.lowest_exp + i as i64;
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// (q^k)_inf = prod_{i>=0} (1 - q^(k+i)), truncated to `order`. Factors
/// with exponent above `order` are 1 on the window and are skipped, so the
/// result is exact. Multiplying by (1 - q^e) is the in-place update
/// c[x] -= c[x-e], walked downward so each old value is read once.
pub fn pochhammer_inf(k: u32, order: i64) -> LaurentSeries {
    assert!(k >= 1, "base exponent must be at least 1");
    assert!(order >= 0);
    let mut coeffs = vec![BigInt::zero(); order as usize + 1];
    coeffs[0] = BigInt::one();
    for e in k as i64..=order {
        mul_one_minus_q_pow(&mut coeffs, e as usize);
    }
    LaurentSeries::from_window(0, order, coeffs)
}

/// (q^base_exp)_n = prod_{i=0..n-1} (1 - q^(base_exp+i)), truncated to
/// `order`. The empty product (n = 0) is 1.
pub fn pochhammer_fin(base_exp: u32, n: u32, order: i64) -> LaurentSeries {
    assert!(base_exp >= 1, "base exponent must be at least 1");
    assert!(order >= 0);
    let mut coeffs = vec![BigInt::zero(); order as usize + 1];
    coeffs[0] = BigInt::one();
    for i in 0..n as i64 {
        let e = base_exp as i64 + i;
        if e > order {
            break;
        }
        mul_one_minus_q_pow(&mut coeffs, e as usize);
    }
    LaurentSeries::from_window(0, order, coeffs)
}

fn mul_one_minus_q_pow(coeffs: &mut [BigInt], e: usize) {
    for x in (e..coeffs.len()).rev() {
        if !coeffs[x - e].is_zero() {
            let t = coeffs[x - e].clone();
            coeffs[x] -= t;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ls(lowest: i64, coeffs: &[i64]) -> LaurentSeries {
        LaurentSeries::from_coeffs(lowest, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Independent oracle: dense product of (1 - q^e) for e in start..=end,
    /// by plain copy-and-subtract convolution on i64 arrays. Shares no code
    /// with the series type.
    fn poch_oracle(start: i64, end: i64, order: i64) -> Vec<i64> {
        let n = order as usize;
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for e in start..=end.min(order) {
            let mut next = p.clone();
            for x in 0..=n {
                if p[x] != 0 && x + e as usize <= n {
                    next[x + e as usize] -= p[x];
                }
            }
            p = next;
        }
        p
    }

    fn assert_coeffs(s: &LaurentSeries, lowest: i64, expected: &[i64]) {
        assert_eq!(s.lowest_exp(), lowest);
        assert_eq!(s.order(), lowest + expected.len() as i64 - 1);
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(
                s.coeff(lowest + i as i64).unwrap(),
                BigInt::from(c),
                "at exponent {}",
                lowest + i as i64
            );
        }
    }

    #[test]
    fn pochhammer_inf_small_window() {
        // (q)_inf to order 5 is 1 - q - q^2 + q^5 (pentagonal numbers 1, 2, 5).
        let s = pochhammer_inf(1, 5);
        assert_coeffs(&s, 0, &[1, -1, -1, 0, 0, 1]);
        let oracle = poch_oracle(1, 5, 5);
        for e in 0..=5 {
            assert_eq!(s.coeff(e).unwrap(), BigInt::from(oracle[e as usize]));
        }
        // (q^2)_inf to order 3: (1 - q^2)(1 - q^3) = 1 - q^2 - q^3.
        assert_coeffs(&pochhammer_inf(2, 3), 0, &[1, 0, -1, -1]);
        // Every factor of (q^4)_inf is above order 3.
        assert_eq!(pochhammer_inf(4, 3), LaurentSeries::one(3));
    }

    #[test]
    fn pochhammer_fin_small_window() {
        assert_eq!(pochhammer_fin(1, 0, 6), LaurentSeries::one(6));
        // (q)_2 = (1 - q)(1 - q^2) = 1 - q - q^2 + q^3, exact well past degree 3.
        let s = pochhammer_fin(1, 2, 10);
        assert_coeffs(&s, 0, &[1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0]);
        assert_coeffs(&pochhammer_fin(3, 1, 5), 0, &[1, 0, 0, -1, 0, 0]);
        // Factors above the window change nothing: (q)_9 = (q)_2 through order 2.
        assert_eq!(pochhammer_fin(1, 9, 2), pochhammer_fin(1, 2, 2));
        let oracle = poch_oracle(2, 4, 9);
        let s = pochhammer_fin(2, 3, 9);
        for e in 0..=9 {
            assert_eq!(s.coeff(e).unwrap(), BigInt::from(oracle[e as usize]));
        }
    }

    #[test]
    fn add_keeps_smaller_order() {
        let f = ls(0, &[1, -1]);
        let g = ls(0, &[2, 1, 5]);
        assert_coeffs(&f.add(&g), 0, &[3, 0]);
        // Laurent alignment: (q^-1 + 1) + 1 = q^-1 + 2, covering -1..=0
        // only, since the second summand is exact only through 0.
        let f = ls(-1, &[1, 1]);
        let g = ls(0, &[1]);
        assert_coeffs(&f.add(&g), -1, &[1, 2]);
    }

    #[test]
    fn mul_telescopes_geometric() {
        let one_minus_q = ls(0, &[1, -1, 0, 0, 0, 0]);
        let geo = ls(0, &[1, 1, 1, 1, 1, 1]);
        assert_eq!(one_minus_q.mul(&geo), LaurentSeries::one(5));
        // Window shrink: a factor exact only to order 1 caps the product.
        let short = ls(0, &[1, -1]);
        let prod = short.mul(&geo);
        assert_eq!(prod.order(), 1);
        assert_coeffs(&prod, 0, &[1, 0]);
    }

    #[test]
    fn mul_with_laurent_parts() {
        let qinv = LaurentSeries::monomial(BigInt::one(), -1, 4);
        let q = LaurentSeries::monomial(BigInt::one(), 1, 4);
        let prod = qinv.mul(&q);
        assert_eq!(prod.lowest_exp(), 0);
        assert_eq!(prod.order(), 3);
        assert_eq!(prod, LaurentSeries::one(3));
    }

    #[test]
    fn invert_geometric() {
        let f = ls(0, &[1, -1, 0, 0, 0, 0, 0]);
        assert_coeffs(&f.invert().unwrap(), 0, &[1, 1, 1, 1, 1, 1, 1]);
        let g = ls(0, &[-1, 1, 0, 0]);
        assert_coeffs(&g.invert().unwrap(), 0, &[-1, -1, -1, -1]);
    }

    #[test]
    fn invert_euler_product_counts_partitions() {
        // 1/(q)_inf generates p(n): 1, 1, 2, 3, 5, 7, 11, 15, ...
        let g = pochhammer_inf(1, 7).invert().unwrap();
        assert_coeffs(&g, 0, &[1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn invert_widens_window_for_laurent_input() {
        // f = q^-1 - 1 = q^-1 (1 - q); 1/f = q/(1 - q) = q + q^2 + ...
        // exact through order 4 - 2*(-1) = 6.
        let f = ls(-1, &[1, -1, 0, 0, 0, 0]);
        let inv = f.invert().unwrap();
        assert_coeffs(&inv, 1, &[1, 1, 1, 1, 1, 1]);
        assert_eq!(inv.order(), 6);
    }

    #[test]
    #[should_panic(expected = "floor")]
    fn invert_below_laurent_floor_panics() {
        // A series starting at q^2 would need q^-2 in the inverse.
        ls(2, &[1, 0, 0]).invert().unwrap();
    }

    #[test]
    fn invert_rejects_non_units() {
        assert_eq!(
            ls(0, &[2, 1]).invert(),
            Err(SeriesError::NonUnitLeadingCoefficient { exponent: 0, found: BigInt::from(2) })
        );
        // A zero leading coefficient is not a unit either; callers must
        // shift such series down before inverting.
        assert_eq!(
            ls(0, &[0, 0, 3]).invert(),
            Err(SeriesError::NonUnitLeadingCoefficient { exponent: 0, found: BigInt::zero() })
        );
        assert_eq!(
            LaurentSeries::zero(4).invert(),
            Err(SeriesError::NonUnitLeadingCoefficient { exponent: 0, found: BigInt::zero() })
        );
    }

    #[test]
    fn coeff_respects_window() {
        let f = ls(2, &[4, 5]);
        assert_eq!(f.coeff(0).unwrap(), BigInt::zero());
        assert_eq!(f.coeff(-1).unwrap(), BigInt::zero());
        assert_eq!(f.coeff(3).unwrap(), BigInt::from(5));
        assert_eq!(f.coeff(4), Err(SeriesError::ExponentAboveTruncation { exponent: 4, order: 3 }));
    }

    #[test]
    fn shift_and_truncate() {
        let f = ls(0, &[1, 2, 3]);
        let shifted = f.shift(2);
        assert_coeffs(&shifted, 2, &[1, 2, 3]);
        assert_coeffs(&shifted.shift(-3), -1, &[1, 2, 3]);
        assert_coeffs(&f.truncate(1), 0, &[1, 2]);
    }

    #[test]
    fn scale_sub_neg() {
        let f = ls(0, &[1, 2]);
        assert_coeffs(&f.scale(&BigInt::from(-3)), 0, &[-3, -6]);
        assert_coeffs(&f.sub(&ls(0, &[1, 1])), 0, &[0, 1]);
        assert_coeffs(&f.neg(), 0, &[-1, -2]);
    }

    #[test]
    fn equality_is_window_aware() {
        // Same values, different bookkeeping for the zero at q^-1.
        let f = ls(-1, &[0, 1, 1]);
        let g = ls(0, &[1, 1, 1]);
        assert_eq!(f, g);
        assert_ne!(ls(0, &[1, 1]), ls(0, &[1, 2]));
        assert_eq!(ls(0, &[1, 1]).first_mismatch(&ls(0, &[1, 2, 9]), 0, 5), Some(1));
    }

    #[test]
    fn display_formats() {
        assert_eq!(pochhammer_inf(1, 5).to_string(), "1 - q - q^2 + q^5 + O(q^6)");
        assert_eq!(LaurentSeries::zero(3).to_string(), "0 + O(q^4)");
        assert_eq!(ls(-1, &[1, 0, 3]).to_string(), "q^-1 + 3*q + O(q^2)");
    }

    #[test]
    fn pochhammer_splice_small_grid() {
        // (q^k)_n * (q^(k+n))_inf = (q^k)_inf, the finite product peeled off
        // the front of the infinite one.
        for k in 1..=3u32 {
            for n in 0..=4u32 {
                let lhs = pochhammer_fin(k, n, 25).mul(&pochhammer_inf(k + n, 25));
                let rhs = pochhammer_inf(k, 25);
                assert_eq!(lhs, rhs, "k={k} n={n}");
            }
        }
    }

    fn arb_series() -> impl Strategy<Value = LaurentSeries> {
        (0i64..=2, proptest::collection::vec(-6i64..=6, 1..=14)).prop_map(|(lowest, c)| {
            LaurentSeries::from_coeffs(lowest, c.into_iter().map(BigInt::from).collect())
        })
    }

    fn arb_unit_series() -> impl Strategy<Value = LaurentSeries> {
        (any::<bool>(), proptest::collection::vec(-6i64..=6, 0..=13)).prop_map(|(neg, rest)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(rest);
            LaurentSeries::from_coeffs(0, c.into_iter().map(BigInt::from).collect())
        })
    }

    proptest! {
        #[test]
        fn add_commutes(f in arb_series(), g in arb_series()) {
            prop_assert!(f.add(&g) == g.add(&f));
        }

        #[test]
        fn add_associates(f in arb_series(), g in arb_series(), h in arb_series()) {
            prop_assert!(f.add(&g).add(&h) == f.add(&g.add(&h)));
        }

        #[test]
        fn mul_commutes(f in arb_series(), g in arb_series()) {
            prop_assert!(f.mul(&g) == g.mul(&f));
        }

        #[test]
        fn mul_associates(f in arb_series(), g in arb_series(), h in arb_series()) {
            prop_assert!(f.mul(&g).mul(&h) == f.mul(&g.mul(&h)));
        }

        #[test]
        fn mul_distributes_over_add(f in arb_series(), g in arb_series(), h in arb_series()) {
            prop_assert!(f.mul(&g.add(&h)) == f.mul(&g).add(&f.mul(&h)));
        }

        #[test]
        fn identities_hold(f in arb_series()) {
            prop_assert!(f.add(&LaurentSeries::zero(f.order().max(0))) == f);
            prop_assert!(f.mul(&LaurentSeries::one(f.order().max(0))) == f);
            prop_assert!(f.sub(&f) == LaurentSeries::zero(f.order().max(0)));
        }

        #[test]
        fn invert_then_mul_gives_one(f in arb_unit_series()) {
            let inv = f.invert().unwrap();
            let prod = f.mul(&inv);
            prop_assert!(prod == LaurentSeries::one(prod.order()));
        }
    }
}
