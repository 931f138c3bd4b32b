//! Partition statistics around the smallest part, verified three ways.
//!
//! The central quantity is a(n), the number of partitions of n whose
//! smallest part occurs at least twice (OEIS A117989). It satisfies
//!
//! ```text
//! a(n) = 2p(n) - p(n+1)          (closed form)
//! a(n) = p(2n, n)                (fixed extreme difference n in 2n)
//! ```
//!
//! together with the equinumerosity c(n) = d(n) of smallest-part-unique
//! partitions of n and 1-free partitions of n+1. This crate makes each
//! route executable and cross-checks them:
//!
//! - [`fps`]: exact truncated Laurent series over big integers, with
//!   q-Pochhammer products.
//! - [`partitions`]: reverse-lexicographic enumeration and the counting
//!   statistics p(n), a_m(n), c(n), d(n), p(n,t); enumeration is the
//!   ground truth everything else is compared against.
//! - [`bijections`]: the constructive maps realizing c(n) = d(n) and
//!   a(n) = p(2n, n), with exhaustive per-n verification.
//! - [`identities`]: the six-stage series derivation of the closed form
//!   (via specializations of Heine's transformation and Cauchy's
//!   identity), the a_m(n) generating functions, and reporting types.
//!
//! Verification sweeps and series term construction fan out over rayon
//! when the `parallel` feature (default) is enabled; results are
//! identical with and without it.

pub mod bijections;
mod exec;
pub mod fps;
pub mod identities;
pub mod partitions;
