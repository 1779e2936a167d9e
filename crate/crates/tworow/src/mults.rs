//! Multiplicities of simples in baby Vermas.
//!
//! The nesting order on the arcs of a matching (inner arcs below the arcs
//! separating them from the inner circle) is a forest, and the multiplicity
//! is the number of its linear extensions read top-down: labellings of the
//! arcs by `1..n` increasing outward. The hook-length formula
//! `m(α) = n! / ∏ c(arc)` computes that count from the subtree sizes
//! `c(arc)` of [`AnnularMatching::nesting_counts`]; a brute-force count
//! over all `n!` labellings serves as its oracle.
//!
//! The identity tying the multiplicities to the tensor calculus is
//! `Σ_α n(α) · class(α) = v0 ⊗ ... ⊗ v0`, the class of a baby Verma;
//! [`classes_identity_check`] verifies it exactly and reports the residual
//! on failure.

use crate::kgroup::{class_of_matching, TensorVector};
use crate::matchings::{enumerate_cross_unbounded, AnnularMatching, MatchingError};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Brute-force labelling counts walk all `n!` permutations.
pub const MAX_BRUTE_FORCE_ARCS: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultsError {
    #[error("{0} arcs exceed the brute-force labelling cap {MAX_BRUTE_FORCE_ARCS}")]
    TooManyArcs(usize),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// The hook-length multiplicity `n! / ∏ c(arc)`. The division is exact on
/// forests; a non-zero remainder would mean the nesting order lost its
/// forest structure, so it panics as an internal error.
pub fn multiplicity(alpha: &AnnularMatching) -> BigInt {
    let mut numerator = BigInt::one();
    for t in 1..=alpha.n() {
        numerator *= t;
    }
    let mut denominator = BigInt::one();
    for count in alpha.nesting_counts().values() {
        denominator *= *count;
    }
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(
        remainder.is_zero(),
        "hook product {denominator} does not divide {}! for {alpha}",
        alpha.n()
    );
    quotient
}

/// Exhaustive count of the good labellings: bijections from arcs to
/// `1..n` that increase outward along the nesting order. Labellings are
/// scanned in lexicographic order over permutations.
pub fn count_good_labellings(alpha: &AnnularMatching) -> Result<u64, MultsError> {
    let n = alpha.n();
    if n > MAX_BRUTE_FORCE_ARCS {
        return Err(MultsError::TooManyArcs(n));
    }
    let nested = alpha.nested_pairs();
    let mut good = 0u64;
    for labels in (1..=n).permutations(n) {
        // labels[idx] is the label of arcs()[idx]
        if nested.iter().all(|&(inner, outer)| labels[inner] < labels[outer]) {
            good += 1;
        }
    }
    Ok(good)
}

/// The class of a baby Verma: the point class `v0 ⊗ ... ⊗ v0`.
pub fn baby_verma_class(m: usize, n: usize) -> TensorVector {
    TensorVector::all_zeros(m + 2 * n)
}

/// Per-matching line of a [`ClassesReport`].
#[derive(Debug, Clone, Serialize)]
pub struct MatchingMultiplicity {
    pub subset: Vec<usize>,
    pub mult: u64,
    pub n_labellings: u64,
}

/// Result of checking `Σ_α n(α) · class(α) = v0 ⊗ ... ⊗ v0` over all of
/// `Cross(m, n)`.
#[derive(Debug, Clone)]
pub struct ClassesReport {
    pub m: usize,
    pub n: usize,
    pub identity_holds: bool,
    /// `Σ_α n(α) class(α) - v0 ⊗ ... ⊗ v0`; zero exactly when the identity
    /// holds, kept for debugging when it does not.
    pub residual: TensorVector,
    pub per_matching: Vec<MatchingMultiplicity>,
}

impl Serialize for ClassesReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("ClassesReport", 4)?;
        state.serialize_field("mn", &[self.m, self.n])?;
        state.serialize_field("identity_holds", &self.identity_holds)?;
        if !self.identity_holds {
            state.serialize_field("residual", &self.residual)?;
        } else {
            state.skip_field("residual")?;
        }
        state.serialize_field("per_matching", &self.per_matching)?;
        state.end()
    }
}

/// Sums the labelled classes of every matching in `Cross(m, n)` and
/// compares against the baby-Verma class. Also records, per matching, the
/// hook-formula multiplicity next to the brute-force labelling count.
pub fn classes_identity_check(m: usize, n: usize) -> Result<ClassesReport, MultsError> {
    let k = m + 2 * n;
    let mut sum = TensorVector::zero(k);
    let mut per_matching = Vec::new();
    for alpha in enumerate_cross_unbounded(m, n)? {
        let labellings = count_good_labellings(&alpha)?;
        let hook = multiplicity(&alpha);
        sum = &sum + &class_of_matching(&alpha).scale(&BigInt::from(labellings));
        per_matching.push(MatchingMultiplicity {
            subset: alpha.to_subset().positions().to_vec(),
            mult: u64::try_from(&hook).expect("hook multiplicity fits u64 at these sizes"),
            n_labellings: labellings,
        });
    }
    let residual = &sum - &baby_verma_class(m, n);
    Ok(ClassesReport {
        m,
        n,
        identity_holds: residual.is_zero(),
        residual,
        per_matching,
    })
}
