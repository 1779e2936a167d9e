//! The Robinson–Schensted consistency layer.
//!
//! A subset label turns into a permutation by listing the subset in
//! descending order followed by its complement in descending order. Row
//! insertion applied to that word always produces a shape with at most two
//! columns, and the combinatorial Gelfand–Kirillov proxy
//! `k(k-1)/2 - col2` of the shape must equal the degree in `p` of the
//! dimension polynomial of the matching attached to the same subset. The
//! second column length itself matches `n - |C1(α)|`, one cell per arc
//! avoiding the marked line.

use crate::dims::dim_degree;
use crate::matchings::{enumerate_subsets, subset_to_matching, MatchingError, SubsetLabel};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RsError {
    #[error("not a permutation of 1..={n}: {word:?}")]
    NotAPermutation { word: Vec<usize>, n: usize },
    #[error("block {which} of {word:?} is not strictly decreasing")]
    NotDescending { word: Vec<usize>, which: &'static str },
    #[error("insertion produced a row of length {0} > 2")]
    TooManyColumns(usize),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

/// A maximal-length coset representative: strictly decreasing on the first
/// `split` positions and on the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPermutation {
    word: Vec<usize>,
    split: usize,
}

impl CosetPermutation {
    pub fn new(word: Vec<usize>, split: usize) -> Result<Self, RsError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x < 1 || x > n || seen[x] {
                return Err(RsError::NotAPermutation { word, n });
            }
            seen[x] = true;
        }
        let split = split.min(n);
        if !word[..split].windows(2).all(|w| w[0] > w[1]) {
            return Err(RsError::NotDescending { word, which: "first" });
        }
        if !word[split..].windows(2).all(|w| w[0] > w[1]) {
            return Err(RsError::NotDescending { word, which: "second" });
        }
        Ok(CosetPermutation { word, split })
    }

    /// One-line notation `w(1), ..., w(k)`.
    pub fn one_line(&self) -> &[usize] {
        &self.word
    }

    pub fn split(&self) -> usize {
        self.split
    }
}

/// A partition of `k` with at most two columns, recorded by column lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoColumnShape {
    pub col1: usize,
    pub col2: usize,
}

impl Serialize for TwoColumnShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("TwoColumnShape", 2)?;
        state.serialize_field("col1", &self.col1)?;
        state.serialize_field("col2", &self.col2)?;
        state.end()
    }
}

impl TwoColumnShape {
    pub fn size(&self) -> usize {
        self.col1 + self.col2
    }
}

/// The permutation of a subset: the subset descending, then the complement
/// descending.
pub fn subset_to_permutation(subset: &SubsetLabel, m: usize, n: usize) -> CosetPermutation {
    let k = m + 2 * n;
    let mut word: Vec<usize> = subset.positions().iter().rev().copied().collect();
    word.extend((1..=k).rev().filter(|&p| !subset.contains(p)));
    CosetPermutation::new(word, m + n).expect("subset blocks are descending by construction")
}

/// Row-insertion shape of the one-line word. For coset permutations the
/// result never exceeds two columns; a third column is reported as an
/// error rather than silently truncated.
pub fn rs_shape(w: &CosetPermutation) -> Result<TwoColumnShape, RsError> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in w.one_line() {
        let mut incoming = x;
        for row in rows.iter_mut() {
            // bump the leftmost entry greater than the incoming one
            match row.iter().position(|&y| y > incoming) {
                Some(at) => {
                    std::mem::swap(&mut row[at], &mut incoming);
                }
                None => {
                    row.push(incoming);
                    if row.len() > 2 {
                        return Err(RsError::TooManyColumns(row.len()));
                    }
                    incoming = 0;
                    break;
                }
            }
        }
        if incoming != 0 {
            rows.push(vec![incoming]);
        }
    }
    Ok(TwoColumnShape {
        col1: rows.len(),
        col2: rows.iter().filter(|row| row.len() >= 2).count(),
    })
}

/// The Gelfand–Kirillov proxy of a two-column shape of size `k`:
/// `k(k-1)/2 - col2`.
pub fn gk_dimension(shape: &TwoColumnShape) -> usize {
    let k = shape.size();
    k * (k - 1) / 2 - shape.col2
}

/// Per-subset line of a [`DegreeReport`].
#[derive(Debug, Clone, Serialize)]
pub struct DegreeComparison {
    pub subset: Vec<usize>,
    pub degree_formula: usize,
    pub degree_rs: usize,
    pub col2: usize,
    pub plain_arcs: usize,
}

/// Result of comparing, for every subset, the dimension-polynomial degree
/// of its matching with the shape-derived degree of its permutation.
#[derive(Debug, Clone)]
pub struct DegreeReport {
    pub m: usize,
    pub n: usize,
    pub all_match: bool,
    pub per_subset: Vec<DegreeComparison>,
}

impl DegreeReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &DegreeComparison> {
        self.per_subset
            .iter()
            .filter(|row| row.degree_formula != row.degree_rs || row.col2 != row.plain_arcs)
    }
}

impl Serialize for DegreeReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("DegreeReport", 3)?;
        state.serialize_field("mn", &[self.m, self.n])?;
        state.serialize_field("all_match", &self.all_match)?;
        state.serialize_field("per_subset", &self.per_subset)?;
        state.end()
    }
}

/// Runs the degree comparison over all subsets for `(m, n)`: the degree of
/// the dimension polynomial equals the Gelfand–Kirillov proxy, and the
/// second column counts the arcs avoiding the marked line.
pub fn degree_match_check(m: usize, n: usize) -> Result<DegreeReport, RsError> {
    let mut per_subset = Vec::new();
    for subset in enumerate_subsets(m, n) {
        let alpha = subset_to_matching(&subset, m, n)?;
        let shape = rs_shape(&subset_to_permutation(&subset, m, n))?;
        let crossing = alpha.arcs().iter().filter(|a| a.crosses).count();
        per_subset.push(DegreeComparison {
            subset: subset.positions().to_vec(),
            degree_formula: dim_degree(&alpha),
            degree_rs: gk_dimension(&shape),
            col2: shape.col2,
            plain_arcs: n - crossing,
        });
    }
    let all_match = per_subset
        .iter()
        .all(|row| row.degree_formula == row.degree_rs && row.col2 == row.plain_arcs);
    Ok(DegreeReport {
        m,
        n,
        all_match,
        per_subset,
    })
}
