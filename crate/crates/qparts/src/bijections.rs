//! The two constructive bijections behind the smallest-part identities.
//!
//! phi: C(n) -> D(n) adds 1 to the unique smallest part, landing in the
//! partitions of n+1 with no part 1; its inverse subtracts 1 from one copy
//! of the smallest part. This realizes c(n) = d(n) = p(n+1) - p(n).
//!
//! psi: A(n) -> F(n) adds n to one copy of the repeated smallest part,
//! landing in the partitions of 2n whose extreme parts differ by exactly
//! n; its inverse subtracts n from the (necessarily unique) largest part.
//! This realizes a(n) = p(2n, n).
//!
//! Membership is validated eagerly on entry: the maps are only defined on
//! their families, and silent misuse would mask exactly the case analysis
//! the bijections rest on.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exec;
use crate::partitions::{enumerate, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// A(n): partitions of n whose smallest part occurs at least twice.
    SmallestRepeats,
    /// C(n): partitions of n whose smallest part occurs exactly once.
    SmallestUnique,
    /// D(n): partitions of n+1 with no part equal to 1.
    NoOnes,
    /// F(n): partitions of 2n with largest minus smallest equal to n.
    FixedDifference,
}

/// One of the four partition families, at index n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyTag {
    pub kind: FamilyKind,
    pub n: u32,
}

impl FamilyTag {
    pub fn new(kind: FamilyKind, n: u32) -> Self {
        assert!(n >= 1);
        Self { kind, n }
    }

    /// The number whose partitions the family draws from (n, n+1, or 2n).
    pub fn ambient(&self) -> u32 {
        match self.kind {
            FamilyKind::SmallestRepeats | FamilyKind::SmallestUnique => self.n,
            FamilyKind::NoOnes => self.n + 1,
            FamilyKind::FixedDifference => 2 * self.n,
        }
    }

    pub fn contains(&self, pi: &Partition) -> bool {
        pi.n() == self.ambient()
            && match self.kind {
                FamilyKind::SmallestRepeats => pi.smallest_multiplicity() >= 2,
                FamilyKind::SmallestUnique => pi.smallest_multiplicity() == 1,
                FamilyKind::NoOnes => pi.smallest() >= 2,
                FamilyKind::FixedDifference => pi.largest() - pi.smallest() == self.n,
            }
    }

    /// Every member, in reverse-lexicographic enumeration order.
    pub fn members(&self) -> Vec<Partition> {
        enumerate(self.ambient()).filter(|pi| self.contains(pi)).collect()
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            FamilyKind::SmallestRepeats => 'A',
            FamilyKind::SmallestUnique => 'C',
            FamilyKind::NoOnes => 'D',
            FamilyKind::FixedDifference => 'F',
        };
        write!(f, "{letter}({})", self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{partition} is not in {family}: {reason}")]
    NotInFamily { family: FamilyTag, partition: Partition, reason: &'static str },
    /// A theorem about the map failed. Unreachable through valid inputs;
    /// reported separately from misuse on purpose.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(&'static str),
}

/// phi: C(n) -> D(n). Adds 1 to the unique smallest part. Every other
/// part strictly exceeds the old smallest, so no part 1 survives.
pub fn phi_forward(pi: &Partition) -> Result<Partition, BijectionError> {
    if pi.smallest_multiplicity() != 1 {
        return Err(BijectionError::NotInFamily {
            family: FamilyTag::new(FamilyKind::SmallestUnique, pi.n()),
            partition: pi.clone(),
            reason: "smallest part does not occur exactly once",
        });
    }
    let mut parts = pi.parts().to_vec();
    *parts.last_mut().unwrap() += 1;
    let image = Partition::new(parts);
    debug_assert!(image.smallest() >= 2);
    Ok(image)
}

/// phi inverse: D(n) -> C(n). Subtracts 1 from one copy of the smallest
/// part; the lowered copy dips strictly below everything else, so the new
/// smallest part occurs exactly once.
pub fn phi_inverse(pi_prime: &Partition) -> Result<Partition, BijectionError> {
    if pi_prime.smallest() < 2 {
        return Err(BijectionError::NotInFamily {
            family: FamilyTag::new(FamilyKind::NoOnes, pi_prime.n().max(2) - 1),
            partition: pi_prime.clone(),
            reason: "contains a part equal to 1",
        });
    }
    let mut parts = pi_prime.parts().to_vec();
    *parts.last_mut().unwrap() -= 1;
    let image = Partition::new(parts);
    debug_assert_eq!(image.smallest_multiplicity(), 1);
    Ok(image)
}

/// psi: A(n) -> F(n). Adds n to one copy of the repeated smallest part s.
/// The raised copy becomes the largest part: every original part is at
/// most n - s (a second copy of s is elsewhere in the sum), below s + n.
/// A copy of s remains, so the extreme difference is exactly n.
pub fn psi_forward(pi: &Partition) -> Result<Partition, BijectionError> {
    let n = pi.n();
    if pi.smallest_multiplicity() < 2 {
        return Err(BijectionError::NotInFamily {
            family: FamilyTag::new(FamilyKind::SmallestRepeats, n),
            partition: pi.clone(),
            reason: "smallest part occurs only once",
        });
    }
    let mut parts = pi.parts().to_vec();
    *parts.last_mut().unwrap() += n;
    let image = Partition::new(parts);
    debug_assert_eq!(image.n(), 2 * n);
    debug_assert_eq!(image.largest() - image.smallest(), n);
    Ok(image)
}

/// psi inverse: F(n) -> A(n). Subtracts n from the largest part L, which
/// is necessarily unique: a second copy of L = (L - n) + n >= 1 + n would
/// push the sum past 2n. The lowered part equals the old smallest L - n,
/// doubling it up.
pub fn psi_inverse(pi_prime: &Partition) -> Result<Partition, BijectionError> {
    let sum = pi_prime.n();
    let family = FamilyTag::new(FamilyKind::FixedDifference, (sum / 2).max(1));
    if !sum.is_multiple_of(2) {
        return Err(BijectionError::NotInFamily {
            family,
            partition: pi_prime.clone(),
            reason: "sum is odd, expected a partition of 2n",
        });
    }
    let n = sum / 2;
    if pi_prime.largest() - pi_prime.smallest() != n {
        return Err(BijectionError::NotInFamily {
            family,
            partition: pi_prime.clone(),
            reason: "difference of extreme parts is not n",
        });
    }
    if pi_prime.parts().iter().filter(|&&p| p == pi_prime.largest()).count() != 1 {
        return Err(BijectionError::InternalInvariant(
            "largest part of a fixed-difference partition must be unique",
        ));
    }
    let mut parts = pi_prime.parts().to_vec();
    parts[0] -= n;
    let image = Partition::new(parts);
    debug_assert!(image.smallest_multiplicity() >= 2);
    Ok(image)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bijection {
    Phi,
    Psi,
}

impl Bijection {
    pub fn source_family(self, n: u32) -> FamilyTag {
        match self {
            Bijection::Phi => FamilyTag::new(FamilyKind::SmallestUnique, n),
            Bijection::Psi => FamilyTag::new(FamilyKind::SmallestRepeats, n),
        }
    }

    pub fn target_family(self, n: u32) -> FamilyTag {
        match self {
            Bijection::Phi => FamilyTag::new(FamilyKind::NoOnes, n),
            Bijection::Psi => FamilyTag::new(FamilyKind::FixedDifference, n),
        }
    }

    pub fn forward(self, pi: &Partition) -> Result<Partition, BijectionError> {
        match self {
            Bijection::Phi => phi_forward(pi),
            Bijection::Psi => psi_forward(pi),
        }
    }

    pub fn inverse(self, pi: &Partition) -> Result<Partition, BijectionError> {
        match self {
            Bijection::Phi => phi_inverse(pi),
            Bijection::Psi => psi_inverse(pi),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bijection::Phi => "phi",
            Bijection::Psi => "psi",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BijectionTrace {
    pub source: Partition,
    pub image: Partition,
    /// True iff inverse(forward(source)) returned the source structurally.
    pub round_trip_ok: bool,
}

#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub which: Bijection,
    pub n: u32,
    pub traces: Vec<BijectionTrace>,
    pub source_size: usize,
    pub target_size: usize,
    /// The forward images, as a set, are exactly the target family.
    pub image_is_target: bool,
    pub pass: bool,
}

/// Exhaustively checks one bijection at one n: maps every source member
/// forward, round-trips it back, and compares the image set against the
/// full target family. Failures land in the report, never in a panic or
/// error, so one run surfaces everything.
pub fn verify_bijection(which: Bijection, n: u32) -> BijectionReport {
    let source = which.source_family(n).members();
    let target: BTreeSet<Partition> = which.target_family(n).members().into_iter().collect();
    let traces = exec::map_collect(source, |pi| {
        let image =
            which.forward(&pi).expect("enumerated source member rejected by its own forward map");
        let round_trip_ok = which.inverse(&image).as_ref() == Ok(&pi);
        BijectionTrace { source: pi, image, round_trip_ok }
    });
    let image_set: BTreeSet<Partition> = traces.iter().map(|t| t.image.clone()).collect();
    let image_is_target = image_set == target;
    // Set equality plus matching counts rules out collapsed (non-injective)
    // images, giving bijectivity, not just surjectivity.
    let pass =
        image_is_target && traces.len() == target.len() && traces.iter().all(|t| t.round_trip_ok);
    BijectionReport {
        which,
        n,
        source_size: traces.len(),
        target_size: target.len(),
        image_is_target,
        pass,
        traces,
    }
}

/// One report per n in 1..=n_max.
pub fn verify_range(which: Bijection, n_max: u32) -> Vec<BijectionReport> {
    exec::map_collect((1..=n_max).collect(), move |n| verify_bijection(which, n))
}
