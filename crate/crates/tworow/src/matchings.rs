//! Annular crossingless matchings `Cross(m, n)`.
//!
//! A matching lives on an annulus with `m` points on the inner circle and
//! `k = m + 2n` labelled points on the outer circle. Exactly `n` disjoint
//! arcs join pairs of outer points without crossings; the remaining `m`
//! outer points are connected straight to the inner circle (through
//! strands). A marked radial line sits in the gap between outer positions
//! `k` and `1`; each arc either crosses it or not, which splits the arc set
//! as `C(α) = C0(α) ⊔ C1(α)`.
//!
//! Everything here is reduced to span arithmetic: an arc bounds a disk free
//! of the inner circle on one side, and that side is a cyclic interval of
//! outer positions. All geometric predicates (crossing, nesting, enclosure)
//! are decided on those intervals, so the module is exact and total.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Soft cap on `m + 2n` for enumeration; beyond this the binomial counts
/// stop being desk-scale.
pub const MAX_POSITIONS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatchingError {
    #[error("arc endpoints must satisfy 1 <= i < j <= {k}, got ({i}, {j})")]
    ArcOutOfRange { i: usize, j: usize, k: usize },
    #[error("expected {expected} arcs, got {actual}")]
    ArcCountMismatch { expected: usize, actual: usize },
    #[error("position {0} is an endpoint of more than one arc")]
    DuplicateEndpoint(usize),
    #[error("arcs ({0}, {1}) and ({2}, {3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("position {pos} inside the disk of arc ({i}, {j}) is not enclosed by a nested arc")]
    NotEnclosed { pos: usize, i: usize, j: usize },
    #[error("subset must be strictly increasing and within 1..={k}: {positions:?}")]
    BadSubset { positions: Vec<usize>, k: usize },
    #[error("subset has {actual} elements, expected m + n = {expected}")]
    BadSubsetSize { actual: usize, expected: usize },
    #[error("m + 2n = {0} exceeds the enumeration cap {MAX_POSITIONS}")]
    TooLarge(usize),
}

/// An arc on the outer circle, stored as endpoints `i < j` plus the flag
/// saying whether it crosses the marked line between positions `k` and `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub i: usize,
    pub j: usize,
    pub crosses: bool,
}

impl Arc {
    pub fn new(i: usize, j: usize, crosses: bool) -> Self {
        assert!(i < j, "arc endpoints must satisfy i < j, got ({i}, {j})");
        Arc { i, j, crosses }
    }

    /// The disk side of the arc as a directed cyclic walk `start -> end`
    /// (increasing positions, wrapping after `k`). Non-crossing arcs walk
    /// `i -> j`; crossing arcs walk `j -> i` through the gap.
    fn walk(&self) -> (usize, usize) {
        if self.crosses {
            (self.j, self.i)
        } else {
            (self.i, self.j)
        }
    }

    /// Positions strictly inside the disk side, as a bitmask (bit `p - 1`
    /// set for position `p`).
    pub(crate) fn span_mask(&self, k: usize) -> u32 {
        let (start, end) = self.walk();
        let mut mask = 0u32;
        let mut p = cyclic_next(start, k);
        while p != end {
            mask |= 1 << (p - 1);
            p = cyclic_next(p, k);
        }
        mask
    }

    /// Span plus the two endpoints.
    pub(crate) fn closure_mask(&self, k: usize) -> u32 {
        self.span_mask(k) | 1 << (self.i - 1) | 1 << (self.j - 1)
    }

    /// Endpoint marked plus under the subset bijection: the one from which
    /// the balancing traversal started the other way.
    fn plus_endpoint(&self) -> usize {
        if self.crosses {
            self.j
        } else {
            self.i
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)?;
        if self.crosses {
            write!(f, "*")?;
        }
        Ok(())
    }
}

fn cyclic_next(p: usize, k: usize) -> usize {
    if p == k {
        1
    } else {
        p + 1
    }
}

fn cyclic_prev(p: usize, k: usize) -> usize {
    if p == 1 {
        k
    } else {
        p - 1
    }
}

/// An element of `Cross(m, n)`: `n` arcs on `m + 2n` outer positions, the
/// uncovered positions being through strands. Arcs are kept sorted, so
/// equality and hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AnnularMatching {
    m: usize,
    n: usize,
    arcs: Vec<Arc>,
}

/// A strictly sorted set of `m + n` outer positions; the plus-marked points
/// of the subset-to-matching bijection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SubsetLabel(Vec<usize>);

impl SubsetLabel {
    pub fn new(positions: Vec<usize>) -> Result<Self, MatchingError> {
        if !positions.windows(2).all(|w| w[0] < w[1]) || positions.first().is_some_and(|&p| p == 0)
        {
            return Err(MatchingError::BadSubset {
                positions,
                k: usize::MAX,
            });
        }
        Ok(SubsetLabel(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// `{1, ..., k}` choose `size`, in lexicographic order.
fn subsets_lex(k: usize, size: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (1..=k).combinations(size).collect()
}

impl AnnularMatching {
    /// Validates a candidate configuration and builds the matching.
    pub fn new(m: usize, n: usize, mut arcs: Vec<Arc>) -> Result<Self, MatchingError> {
        arcs.sort();
        let candidate = AnnularMatching { m, n, arcs };
        candidate.check()?;
        Ok(candidate)
    }

    /// Total validity predicate over a candidate configuration.
    pub fn is_valid_configuration(m: usize, n: usize, arcs: &[Arc]) -> bool {
        AnnularMatching {
            m,
            n,
            arcs: arcs.to_vec(),
        }
        .check()
        .is_ok()
    }

    fn check(&self) -> Result<(), MatchingError> {
        let k = self.positions();
        if self.arcs.len() != self.n {
            return Err(MatchingError::ArcCountMismatch {
                expected: self.n,
                actual: self.arcs.len(),
            });
        }
        let mut endpoint_mask = 0u32;
        for arc in &self.arcs {
            if !(1 <= arc.i && arc.i < arc.j && arc.j <= k) {
                return Err(MatchingError::ArcOutOfRange {
                    i: arc.i,
                    j: arc.j,
                    k,
                });
            }
            for p in [arc.i, arc.j] {
                let bit = 1 << (p - 1);
                if endpoint_mask & bit != 0 {
                    return Err(MatchingError::DuplicateEndpoint(p));
                }
                endpoint_mask |= bit;
            }
        }
        // Laminarity: disk closures are pairwise disjoint or nested.
        for (a, b) in pairs(&self.arcs) {
            let ca = a.closure_mask(k);
            let cb = b.closure_mask(k);
            let inter = ca & cb;
            if inter != 0 && inter != ca && inter != cb {
                return Err(MatchingError::Crossing(a.i, a.j, b.i, b.j));
            }
        }
        // Enclosure: every position inside a disk belongs to an arc nested
        // in that disk. In particular no through strand sits inside any
        // disk, and two arcs cannot both wrap the inner circle away.
        for a in &self.arcs {
            let span = a.span_mask(k);
            for p in 1..=k {
                if span & (1 << (p - 1)) == 0 {
                    continue;
                }
                let enclosed = self.arcs.iter().any(|b| {
                    b != a && (b.i == p || b.j == p) && b.closure_mask(k) & !span == 0
                });
                if !enclosed {
                    return Err(MatchingError::NotEnclosed {
                        pos: p,
                        i: a.i,
                        j: a.j,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of outer-circle positions, `m + 2n`.
    pub fn positions(&self) -> usize {
        self.m + 2 * self.n
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Outer positions connected to the inner circle, in increasing order.
    pub fn through_points(&self) -> Vec<usize> {
        let mut covered = 0u32;
        for arc in &self.arcs {
            covered |= 1 << (arc.i - 1) | 1 << (arc.j - 1);
        }
        (1..=self.positions())
            .filter(|p| covered & (1 << (p - 1)) == 0)
            .collect()
    }

    /// The partition `C(α) = C0(α) ⊔ C1(α)` by the marked-line flag.
    pub fn arc_decomposition(&self) -> (Vec<Arc>, Vec<Arc>) {
        self.arcs.iter().partition(|a| !a.crosses)
    }

    /// No arc crosses the marked line.
    pub fn is_good(&self) -> bool {
        self.arcs.iter().all(|a| !a.crosses)
    }

    /// Relabels every position `p -> p - shift (mod k)`, the clockwise
    /// rotation of all strands, and renormalizes arcs. `rotate(_, k)` is the
    /// identity and `rotate` is an action of `Z/k`.
    pub fn rotate(&self, shift: i64) -> AnnularMatching {
        let k = self.positions();
        if k == 0 {
            return self.clone();
        }
        let wrap = |p: usize| -> usize {
            let raw = (p as i64 - 1 - shift).rem_euclid(k as i64);
            raw as usize + 1
        };
        let mut arcs: Vec<Arc> = self
            .arcs
            .iter()
            .map(|arc| {
                let (start, end) = arc.walk();
                let (start, end) = (wrap(start), wrap(end));
                Arc {
                    i: start.min(end),
                    j: start.max(end),
                    // the disk walk wraps the gap exactly when start > end
                    crosses: start > end,
                }
            })
            .collect();
        arcs.sort();
        AnnularMatching {
            m: self.m,
            n: self.n,
            arcs,
        }
    }

    /// Smallest `shift >= 0` with `β = rotate(self, -shift)` good, together
    /// with `β`; then `self = β.rotate(shift)`.
    ///
    /// Every valid matching has one: rotating the marked line into the gap
    /// just below the start of a maximal arc's disk walk (or below a through
    /// strand) clears every arc off the line.
    pub fn good_rotation(&self) -> (usize, AnnularMatching) {
        let k = self.positions().max(1);
        for shift in 0..k {
            let beta = self.rotate(-(shift as i64));
            if beta.is_good() {
                return (shift, beta);
            }
        }
        unreachable!("valid matching {self} admits no good rotation");
    }

    /// All `2^n` ways of picking one endpoint per arc, each with its sign
    /// `(-1)^(number of arcs whose larger endpoint was picked)`. Ordered
    /// with the smaller endpoint varying slowest over sorted arcs.
    pub fn endpoint_choices(&self) -> Vec<(Vec<usize>, i32)> {
        let mut out = Vec::with_capacity(1 << self.n);
        for pick in 0u32..(1 << self.n) {
            let mut chosen: Vec<usize> = Vec::with_capacity(self.n);
            let mut sign = 1;
            for (idx, arc) in self.arcs.iter().enumerate() {
                if pick & (1 << idx) == 0 {
                    chosen.push(arc.i.min(arc.j));
                } else {
                    chosen.push(arc.i.max(arc.j));
                    sign = -sign;
                }
            }
            chosen.sort_unstable();
            out.push((chosen, sign));
        }
        out
    }

    /// True when `inner`'s closure lies inside `outer`'s disk, i.e. `outer`
    /// separates `inner` from the inner circle.
    pub fn separates(&self, outer: &Arc, inner: &Arc) -> bool {
        let k = self.positions();
        inner != outer && inner.closure_mask(k) & !outer.span_mask(k) == 0
    }

    /// The hook values `c(arc) = 1 + #{arcs separated from the inner circle
    /// by it}` of the nesting order.
    pub fn nesting_counts(&self) -> BTreeMap<Arc, usize> {
        self.arcs
            .iter()
            .map(|a| {
                let below = self.arcs.iter().filter(|b| self.separates(a, b)).count();
                (*a, 1 + below)
            })
            .collect()
    }

    /// Index pairs `(inner, outer)` of the strict nesting order on `arcs()`.
    pub fn nested_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (bi, b) in self.arcs.iter().enumerate() {
            for (ai, a) in self.arcs.iter().enumerate() {
                if self.separates(a, b) {
                    pairs.push((bi, ai));
                }
            }
        }
        pairs
    }

    /// The inverse of the subset bijection: through points plus each arc's
    /// plus endpoint.
    pub fn to_subset(&self) -> SubsetLabel {
        let mut positions = self.through_points();
        positions.extend(self.arcs.iter().map(Arc::plus_endpoint));
        positions.sort_unstable();
        SubsetLabel(positions)
    }
}

impl fmt::Display for AnnularMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cross({},{}){{", self.m, self.n)?;
        for (idx, arc) in self.arcs.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{arc}")?;
        }
        write!(f, "}}")
    }
}

impl<'de> Deserialize<'de> for AnnularMatching {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        struct Raw {
            m: usize,
            n: usize,
            arcs: Vec<Arc>,
        }
        let raw = Raw::deserialize(deserializer)?;
        AnnularMatching::new(raw.m, raw.n, raw.arcs).map_err(serde::de::Error::custom)
    }
}

fn pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> {
    items
        .iter()
        .enumerate()
        .flat_map(move |(i, a)| items[i + 1..].iter().map(move |b| (a, b)))
}

/// Builds the matching attached to a subset of plus points: walk each minus
/// point (largest first) toward decreasing labels, wrapping after `1`, and
/// join it to the first free plus point with equally many pluses and
/// minuses strictly in between. The arc crosses the marked line exactly
/// when the walk wrapped.
pub fn subset_to_matching(
    subset: &SubsetLabel,
    m: usize,
    n: usize,
) -> Result<AnnularMatching, MatchingError> {
    let k = m + 2 * n;
    if subset.len() != m + n {
        return Err(MatchingError::BadSubsetSize {
            actual: subset.len(),
            expected: m + n,
        });
    }
    if subset.positions().iter().any(|&p| p < 1 || p > k) {
        return Err(MatchingError::BadSubset {
            positions: subset.positions().to_vec(),
            k,
        });
    }
    let is_plus = |p: usize| subset.contains(p);
    let mut matched = vec![false; k + 1];
    let mut arcs = Vec::with_capacity(n);
    let minuses: Vec<usize> = (1..=k).rev().filter(|&p| !is_plus(p)).collect();
    for &b in &minuses {
        let mut pluses_between = 0usize;
        let mut minuses_between = 0usize;
        let mut wrapped = false;
        let mut c = b;
        loop {
            if c == 1 {
                wrapped = true;
            }
            c = cyclic_prev(c, k);
            assert_ne!(c, b, "unmatched minus point {b} in subset {subset}");
            if is_plus(c) && !matched[c] && pluses_between == minuses_between {
                arcs.push(Arc {
                    i: b.min(c),
                    j: b.max(c),
                    crosses: wrapped,
                });
                matched[c] = true;
                matched[b] = true;
                break;
            }
            if is_plus(c) {
                pluses_between += 1;
            } else {
                minuses_between += 1;
            }
        }
    }
    AnnularMatching::new(m, n, arcs)
}

/// All of `Cross(m, n)`, one matching per `m + n`-subset of the outer
/// positions, in lexicographic subset order.
pub fn enumerate_cross(m: usize, n: usize) -> Result<Vec<AnnularMatching>, MatchingError> {
    let k = m + 2 * n;
    if k > MAX_POSITIONS {
        return Err(MatchingError::TooLarge(k));
    }
    enumerate_cross_unbounded(m, n)
}

/// `enumerate_cross` without the size cap; counts grow binomially.
pub fn enumerate_cross_unbounded(m: usize, n: usize) -> Result<Vec<AnnularMatching>, MatchingError> {
    let k = m + 2 * n;
    subsets_lex(k, m + n)
        .into_iter()
        .map(|positions| subset_to_matching(&SubsetLabel(positions), m, n))
        .collect()
}

/// Subsets of `{1, ..., m+2n}` of size `m + n` in lexicographic order,
/// matching the enumeration order of `enumerate_cross`.
pub fn enumerate_subsets(m: usize, n: usize) -> Vec<SubsetLabel> {
    subsets_lex(m + 2 * n, m + n).into_iter().map(SubsetLabel).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn arc(i: usize, j: usize, crosses: bool) -> Arc {
        Arc::new(i, j, crosses)
    }

    fn matching(m: usize, n: usize, arcs: Vec<Arc>) -> AnnularMatching {
        AnnularMatching::new(m, n, arcs).unwrap()
    }

    /// The worked Cross(2,2) example: arcs (1,2) and (3,6), the latter
    /// crossing the line.
    fn cross22_example() -> AnnularMatching {
        matching(2, 2, vec![arc(1, 2, false), arc(3, 6, true)])
    }

    /// Independent oracle: enumerate every candidate arc configuration and
    /// keep the valid ones.
    fn brute_force_cross(m: usize, n: usize) -> BTreeSet<Vec<Arc>> {
        use itertools::Itertools;
        let k = m + 2 * n;
        let mut found = BTreeSet::new();
        for endpoints in (1..=k).combinations(2 * n) {
            for pairing in pairings(&endpoints) {
                for flags in 0u32..(1 << n) {
                    let arcs: Vec<Arc> = pairing
                        .iter()
                        .enumerate()
                        .map(|(idx, &(i, j))| arc(i, j, flags & (1 << idx) != 0))
                        .collect();
                    if AnnularMatching::is_valid_configuration(m, n, &arcs) {
                        let mut sorted = arcs.clone();
                        sorted.sort();
                        found.insert(sorted);
                    }
                }
            }
        }
        found
    }

    fn pairings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![vec![]];
        }
        let first = points[0];
        let mut out = Vec::new();
        for idx in 1..points.len() {
            let partner = points[idx];
            let rest: Vec<usize> = points[1..]
                .iter()
                .copied()
                .filter(|&p| p != partner)
                .collect();
            for mut tail in pairings(&rest) {
                tail.push((first, partner));
                out.push(tail);
            }
        }
        out
    }

    #[test]
    fn validates_the_worked_example() {
        assert!(AnnularMatching::is_valid_configuration(
            2,
            2,
            &[arc(1, 2, false), arc(3, 6, true)]
        ));
    }

    #[test]
    fn validates_the_empty_matching() {
        assert!(AnnularMatching::is_valid_configuration(0, 0, &[]));
    }

    #[test]
    fn rejects_crossing_arcs() {
        // spans {2} and {3} interleave with the endpoints
        assert!(!AnnularMatching::is_valid_configuration(
            2,
            2,
            &[arc(1, 3, false), arc(2, 4, false)]
        ));
    }

    #[test]
    fn rejects_shared_endpoints_and_bad_counts() {
        assert!(!AnnularMatching::is_valid_configuration(
            0,
            2,
            &[arc(1, 2, false), arc(2, 3, false)]
        ));
        assert!(!AnnularMatching::is_valid_configuration(1, 1, &[]));
    }

    #[test]
    fn rejects_unenclosed_through_strand() {
        // position 2 sits inside the disk of (1,3) but is a through strand
        assert!(!AnnularMatching::is_valid_configuration(2, 1, &[arc(1, 3, false)]));
    }

    #[test]
    fn rejects_double_wrap() {
        // both arcs claim the region containing the other; geometrically they cross
        assert!(!AnnularMatching::is_valid_configuration(
            0,
            2,
            &[arc(1, 2, true), arc(3, 4, true)]
        ));
    }

    #[test]
    fn enumerate_cross_0_1() {
        let all = enumerate_cross(0, 1).unwrap();
        assert_eq!(
            all,
            vec![
                matching(0, 1, vec![arc(1, 2, false)]),
                matching(0, 1, vec![arc(1, 2, true)]),
            ]
        );
    }

    #[test]
    fn enumerate_cross_2_0_is_identity_only() {
        let all = enumerate_cross(2, 0).unwrap();
        assert_eq!(all, vec![matching(2, 0, vec![])]);
    }

    #[test]
    fn enumerate_counts_match_binomials() {
        let binom = |k: usize, r: usize| -> usize {
            (0..r).fold(1usize, |acc, t| acc * (k - t) / (t + 1))
        };
        for (m, n) in [(2, 2), (0, 3), (3, 1), (1, 2)] {
            let all = enumerate_cross(m, n).unwrap();
            assert_eq!(all.len(), binom(m + 2 * n, m + n), "Cross({m},{n})");
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn enumeration_agrees_with_brute_force() {
        for (m, n) in [(0, 1), (0, 2), (1, 1), (2, 1), (2, 2), (0, 3)] {
            let enumerated: BTreeSet<Vec<Arc>> = enumerate_cross(m, n)
                .unwrap()
                .into_iter()
                .map(|alpha| alpha.arcs().to_vec())
                .collect();
            assert_eq!(enumerated, brute_force_cross(m, n), "Cross({m},{n})");
        }
    }

    #[test]
    fn enumerate_respects_the_size_cap() {
        assert_eq!(enumerate_cross(21, 0), Err(MatchingError::TooLarge(21)));
        assert!(enumerate_cross_unbounded(21, 0).is_ok());
    }

    #[test]
    fn subset_bijection_reproduces_the_worked_example() {
        let subset = SubsetLabel::new(vec![1, 4, 5, 6]).unwrap();
        let alpha = subset_to_matching(&subset, 2, 2).unwrap();
        assert_eq!(alpha, cross22_example());
        assert_eq!(alpha.to_subset(), subset);
    }

    #[test]
    fn subset_bijection_with_no_arcs() {
        let subset = SubsetLabel::new(vec![1, 2]).unwrap();
        let alpha = subset_to_matching(&subset, 2, 0).unwrap();
        assert!(alpha.arcs().is_empty());
        assert_eq!(alpha.to_subset(), subset);
    }

    #[test]
    fn subset_bijection_round_trips_exhaustively() {
        for (m, n) in [(0, 1), (0, 2), (1, 1), (2, 2), (3, 1), (1, 2), (0, 4)] {
            let subsets = enumerate_subsets(m, n);
            let matchings = enumerate_cross(m, n).unwrap();
            assert_eq!(subsets.len(), matchings.len());
            for (subset, alpha) in subsets.iter().zip(&matchings) {
                assert_eq!(&alpha.to_subset(), subset, "Cross({m},{n})");
                assert_eq!(&subset_to_matching(subset, m, n).unwrap(), alpha);
            }
        }
    }

    #[test]
    fn decomposition_of_the_worked_example() {
        let (c0, c1) = cross22_example().arc_decomposition();
        assert_eq!(c0, vec![arc(1, 2, false)]);
        assert_eq!(c1, vec![arc(3, 6, true)]);
    }

    #[test]
    fn good_matchings_have_empty_c1() {
        let alpha = matching(0, 2, vec![arc(1, 2, false), arc(3, 4, false)]);
        let (_, c1) = alpha.arc_decomposition();
        assert!(c1.is_empty());
        assert!(alpha.is_good());
    }

    #[test]
    fn cross_0_1_elements_have_one_empty_side() {
        for alpha in enumerate_cross(0, 1).unwrap() {
            let (c0, c1) = alpha.arc_decomposition();
            assert_eq!(c0.is_empty() as usize + c1.is_empty() as usize, 1);
        }
    }

    #[test]
    fn rotation_moves_the_sl2_arc_across_the_line() {
        let good = matching(0, 1, vec![arc(1, 2, false)]);
        assert_eq!(good.rotate(1), matching(0, 1, vec![arc(1, 2, true)]));
        assert_eq!(good.rotate(0), good);
        assert_eq!(good.rotate(2), good);
    }

    #[test]
    fn rotation_is_an_action() {
        for (m, n) in [(0, 2), (2, 2), (1, 2)] {
            let k = (m + 2 * n) as i64;
            for alpha in enumerate_cross(m, n).unwrap() {
                assert_eq!(alpha.rotate(k), alpha);
                for a in 0..k {
                    for b in 0..k {
                        assert_eq!(alpha.rotate(a).rotate(b), alpha.rotate(a + b));
                    }
                }
                // rotations of a valid matching stay valid
                for a in 0..k {
                    let rotated = alpha.rotate(a);
                    assert!(AnnularMatching::is_valid_configuration(
                        m,
                        n,
                        rotated.arcs()
                    ));
                }
            }
        }
    }

    #[test]
    fn good_rotation_of_sl2_crossing() {
        let crossing = matching(0, 1, vec![arc(1, 2, true)]);
        let (shift, beta) = crossing.good_rotation();
        assert_eq!(shift, 1);
        assert_eq!(beta, matching(0, 1, vec![arc(1, 2, false)]));
        assert_eq!(beta.rotate(shift as i64), crossing);

        let good = matching(0, 1, vec![arc(1, 2, false)]);
        assert_eq!(good.good_rotation(), (0, good.clone()));
    }

    #[test]
    fn every_matching_has_a_good_rotation() {
        for (m, n) in [(0, 1), (0, 2), (0, 3), (1, 1), (2, 2), (4, 1), (1, 2), (2, 3)] {
            for alpha in enumerate_cross(m, n).unwrap() {
                let (shift, beta) = alpha.good_rotation();
                assert!(beta.is_good());
                assert_eq!(beta.rotate(shift as i64), alpha);
                // the brute-force oracle agrees on minimality
                let oracle = (0..alpha.positions())
                    .find(|&t| alpha.rotate(-(t as i64)).is_good())
                    .unwrap();
                assert_eq!(shift, oracle);
            }
        }
    }

    #[test]
    fn endpoint_choices_of_the_worked_example() {
        let choices: BTreeMap<Vec<usize>, i32> =
            cross22_example().endpoint_choices().into_iter().collect();
        assert_eq!(choices.len(), 4);
        assert_eq!(choices[&vec![1, 3]], 1);
        assert_eq!(choices[&vec![1, 6]], -1);
        assert_eq!(choices[&vec![2, 3]], -1);
        assert_eq!(choices[&vec![2, 6]], 1);
    }

    #[test]
    fn endpoint_choices_of_empty_matching() {
        let alpha = matching(3, 0, vec![]);
        assert_eq!(alpha.endpoint_choices(), vec![(vec![], 1)]);
    }

    #[test]
    fn endpoint_choices_match_definition_brute_force() {
        // independent regeneration: scan all subsets of positions and keep
        // those hitting every arc exactly once; recompute the sign from the
        // max-endpoint count
        for (m, n) in [(0, 2), (2, 2), (1, 2)] {
            for alpha in enumerate_cross(m, n).unwrap() {
                let k = alpha.positions();
                let mut expected = BTreeMap::new();
                for bits in 0u32..(1 << k) {
                    let set: Vec<usize> = (1..=k).filter(|p| bits & (1 << (p - 1)) != 0).collect();
                    let hits_each_once = alpha.arcs().iter().all(|a| {
                        set.contains(&a.i) as usize + set.contains(&a.j) as usize == 1
                    });
                    if hits_each_once && set.len() == alpha.n() {
                        let max_picks = alpha
                            .arcs()
                            .iter()
                            .filter(|a| set.contains(&a.j.max(a.i)))
                            .count();
                        expected.insert(set, if max_picks % 2 == 0 { 1 } else { -1 });
                    }
                }
                let actual: BTreeMap<Vec<usize>, i32> =
                    alpha.endpoint_choices().into_iter().collect();
                assert_eq!(actual, expected);
                assert_eq!(actual.len(), 1 << alpha.n());
            }
        }
    }

    #[test]
    fn nesting_counts_of_the_worked_example() {
        let alpha = cross22_example();
        let counts = alpha.nesting_counts();
        assert_eq!(counts[&arc(1, 2, false)], 1);
        assert_eq!(counts[&arc(3, 6, true)], 2);
    }

    #[test]
    fn nesting_counts_on_chains_and_antichains() {
        let antichain = matching(0, 3, (0..3).map(|t| arc(2 * t + 1, 2 * t + 2, false)).collect());
        assert!(antichain.nesting_counts().values().all(|&c| c == 1));

        let n = 4;
        let chain = matching(0, n, (1..=n).map(|t| arc(t, 2 * n + 1 - t, false)).collect());
        let mut values: Vec<usize> = chain.nesting_counts().into_values().collect();
        values.sort_unstable();
        assert_eq!(values, vec![1, 2, 3, 4]);
    }

    #[test]
    fn nesting_order_is_a_forest_with_maxima() {
        // ancestors of any arc form a chain, so the Hasse diagram is a
        // forest; and every component has a maximal element by finiteness
        for (m, n) in [(0, 3), (2, 2), (1, 2), (0, 4)] {
            for alpha in enumerate_cross(m, n).unwrap() {
                let pairs = alpha.nested_pairs();
                for idx in 0..alpha.n() {
                    let mut ancestors: Vec<usize> = pairs
                        .iter()
                        .filter(|&&(b, _)| b == idx)
                        .map(|&(_, a)| a)
                        .collect();
                    ancestors.sort_unstable();
                    for (&x, &y) in super::pairs(&ancestors) {
                        assert!(
                            pairs.contains(&(x, y)) || pairs.contains(&(y, x)),
                            "ancestors of arc {idx} in {alpha} are not a chain"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn good_matchings_never_wrap() {
        for (m, n) in [(0, 3), (2, 2)] {
            for alpha in enumerate_cross(m, n).unwrap() {
                if alpha.is_good() {
                    let k = alpha.positions();
                    for a in alpha.arcs() {
                        // span of a non-crossing arc is the plain interval
                        let expected: u32 = (a.i + 1..a.j).map(|p| 1 << (p - 1)).sum();
                        assert_eq!(a.span_mask(k), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn json_round_trip_matches_spec_shape() {
        let alpha = cross22_example();
        let json = serde_json::to_string(&alpha).unwrap();
        assert_eq!(
            json,
            r#"{"m":2,"n":2,"arcs":[{"i":1,"j":2,"crosses":false},{"i":3,"j":6,"crosses":true}]}"#
        );
        let back: AnnularMatching = serde_json::from_str(&json).unwrap();
        assert_eq!(back, alpha);
        // invalid configurations do not deserialize
        let bad = r#"{"m":2,"n":2,"arcs":[{"i":1,"j":3,"crosses":false},{"i":2,"j":4,"crosses":false}]}"#;
        assert!(serde_json::from_str::<AnnularMatching>(bad).is_err());
    }
}
