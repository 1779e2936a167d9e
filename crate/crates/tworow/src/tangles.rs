//! A small DSL for words in the elementary affine tangle generators, with
//! arity checking and evaluation to operators on [`TensorVector`]s.
//!
//! The grammar is `word = term (";" term)*` where each term is
//! `kind(n, i)` with `kind` one of `g f t1 t2 s w1 w2` (the strand index
//! `i` is omitted for the rotation `r(n)`). Terms are listed left to right
//! but compose like functions: **the rightmost term applies first**, so
//! `"f(3,1); g(3,2)"` means `f ∘ g`.
//!
//! Only the induced maps on the tensor lattice are implemented; the
//! over/under distinction of `t1`/`t2` is kept in the syntax tree for
//! round-tripping but both evaluate to the same transposition, and both
//! framing twists `w1`/`w2` evaluate to negation.

use crate::kgroup::TensorVector;
use crate::matchings::AnnularMatching;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TangleError {
    #[error("syntax error at byte {offset}: expected {expected}, found {found:?}")]
    Syntax {
        offset: usize,
        expected: &'static str,
        found: String,
    },
    #[error("empty tangle word")]
    Empty,
    #[error("term {term} ({gen}): strand index {i} out of range 1..={max}")]
    IndexRange {
        term: usize,
        gen: String,
        i: usize,
        max: usize,
    },
    #[error("term {term} ({gen}): boundary parameter {n} too small")]
    BoundaryTooSmall { term: usize, gen: String, n: usize },
    #[error("arity mismatch at term {term} ({gen}): expects input arity {expected}, previous terms produce {actual}")]
    ArityMismatch {
        term: usize,
        gen: String,
        expected: usize,
        actual: usize,
    },
    #[error("word expects input arity {expected}, vector has arity {actual}")]
    InputArity { expected: usize, actual: usize },
}

/// The eight elementary generator kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenKind {
    /// Cup `g`: a `(n-2, n)` tangle adding an arc at `(i, i+1)`.
    G,
    /// Cap `f`: a `(n, n-2)` tangle closing the strands at `(i, i+1)`.
    F,
    /// Positive crossing `t1` of strands `i, i+1`.
    T1,
    /// Negative crossing `t2` of strands `i, i+1`.
    T2,
    /// Clockwise rotation `r` of all strands.
    R,
    /// Wrap `s`: strand `i` circles the annulus.
    S,
    /// Positive framing twist `w1` of strand `i`.
    W1,
    /// Negative framing twist `w2` of strand `i`.
    W2,
}

impl GenKind {
    fn name(self) -> &'static str {
        match self {
            GenKind::G => "g",
            GenKind::F => "f",
            GenKind::T1 => "t1",
            GenKind::T2 => "t2",
            GenKind::R => "r",
            GenKind::S => "s",
            GenKind::W1 => "w1",
            GenKind::W2 => "w2",
        }
    }
}

/// One elementary generator with its boundary parameter `n` and strand
/// index (absent for the rotation).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleGen {
    pub kind: GenKind,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

impl TangleGen {
    /// `(input, output)` arities.
    pub fn arities(&self) -> (usize, usize) {
        match self.kind {
            GenKind::G => (self.n - 2, self.n),
            GenKind::F => (self.n, self.n - 2),
            _ => (self.n, self.n),
        }
    }

    fn validate(&self, term: usize) -> Result<(), TangleError> {
        let gen = self.to_string();
        match self.kind {
            GenKind::R => {
                if self.n == 0 {
                    return Err(TangleError::BoundaryTooSmall { term, gen, n: 0 });
                }
            }
            kind => {
                // cups/caps need a pair to add or close, crossings need two strands
                let min_n = match kind {
                    GenKind::G | GenKind::F | GenKind::T1 | GenKind::T2 => 2,
                    _ => 1,
                };
                if self.n < min_n {
                    return Err(TangleError::BoundaryTooSmall { term, gen, n: self.n });
                }
                let i = self.i.expect("non-rotation generators carry an index");
                if i < 1 || i > self.n {
                    return Err(TangleError::IndexRange {
                        term,
                        gen,
                        i,
                        max: self.n,
                    });
                }
            }
        }
        Ok(())
    }

    /// The induced map on the tensor lattice. Index `i = n` wraps around
    /// the annulus and is realized by conjugating the `i = 1` generator
    /// with the rotation.
    fn apply(&self, v: &TensorVector) -> TensorVector {
        let i = self.i.unwrap_or(1);
        match self.kind {
            GenKind::G => {
                if i == self.n {
                    v.cup_insert(1).rotation()
                } else {
                    v.cup_insert(i)
                }
            }
            GenKind::F => {
                if i == self.n {
                    v.rotation_inv().cap(1)
                } else {
                    v.cap(i)
                }
            }
            GenKind::T1 | GenKind::T2 => {
                if i == self.n {
                    v.rotation_inv().swap(1).rotation()
                } else {
                    v.swap(i)
                }
            }
            GenKind::R => v.rotation(),
            GenKind::S => v.s_twist(i),
            GenKind::W1 | GenKind::W2 => v.framing_twist(),
        }
    }
}

impl fmt::Display for TangleGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.i {
            Some(i) => write!(f, "{}({},{})", self.kind.name(), self.n, i),
            None => write!(f, "{}({})", self.kind.name(), self.n),
        }
    }
}

/// An arity-checked word in the elementary generators. The stored sequence
/// is in source order (leftmost first); evaluation runs right to left.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangleWord {
    gens: Vec<TangleGen>,
    domain: usize,
    codomain: usize,
}

impl TangleWord {
    /// Arity-checks a generator sequence in source order.
    pub fn new(gens: Vec<TangleGen>) -> Result<Self, TangleError> {
        if gens.is_empty() {
            return Err(TangleError::Empty);
        }
        for (idx, gen) in gens.iter().enumerate() {
            gen.validate(idx + 1)?;
        }
        // chain arities right to left
        let mut arity = gens.last().unwrap().arities().0;
        let domain = arity;
        for (idx, gen) in gens.iter().enumerate().rev() {
            let (input, output) = gen.arities();
            if input != arity {
                return Err(TangleError::ArityMismatch {
                    term: idx + 1,
                    gen: gen.to_string(),
                    expected: input,
                    actual: arity,
                });
            }
            arity = output;
        }
        Ok(TangleWord {
            gens,
            domain,
            codomain: arity,
        })
    }

    /// The identity word on `arity` strands (not expressible in the text
    /// grammar; used when building words for arc-free matchings).
    pub fn identity(arity: usize) -> Self {
        TangleWord {
            gens: Vec::new(),
            domain: arity,
            codomain: arity,
        }
    }

    pub fn generators(&self) -> &[TangleGen] {
        &self.gens
    }

    pub fn domain_arity(&self) -> usize {
        self.domain
    }

    pub fn codomain_arity(&self) -> usize {
        self.codomain
    }

    /// Concatenation `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &TangleWord) -> Result<Self, TangleError> {
        if self.domain != rhs.codomain {
            return Err(TangleError::ArityMismatch {
                term: self.gens.len(),
                gen: self
                    .gens
                    .last()
                    .map(|g| g.to_string())
                    .unwrap_or_else(|| "id".into()),
                expected: self.domain,
                actual: rhs.codomain,
            });
        }
        let mut gens = self.gens.clone();
        gens.extend(rhs.gens.iter().copied());
        Ok(TangleWord {
            gens,
            domain: rhs.domain,
            codomain: self.codomain,
        })
    }

    /// Evaluates the word on a vector of the matching arity.
    pub fn apply(&self, v: &TensorVector) -> Result<TensorVector, TangleError> {
        if v.arity() != self.domain {
            return Err(TangleError::InputArity {
                expected: self.domain,
                actual: v.arity(),
            });
        }
        let mut out = v.clone();
        for gen in self.gens.iter().rev() {
            out = gen.apply(&out);
        }
        Ok(out)
    }

    /// The matrix of the word over the monomial bases, as columns indexed
    /// by the domain basis in bitstring order. Entry order inside each
    /// column follows the codomain basis in bitstring order.
    pub fn matrix(&self) -> Vec<Vec<num_bigint::BigInt>> {
        let cols = 1u32 << self.domain;
        let rows = 1u32 << self.codomain;
        (0..cols)
            .map(|col| {
                let image = self
                    .apply(&TensorVector::basis(self.domain, bit_reverse(col, self.domain)))
                    .expect("arity matches by construction");
                (0..rows)
                    .map(|row| image.coeff(bit_reverse(row, self.codomain)))
                    .collect()
            })
            .collect()
    }
}

/// Bitstring order ("00" < "01" < "10") reads factor 1 first, which is the
/// reverse of the internal key packing.
fn bit_reverse(index: u32, arity: usize) -> u32 {
    let mut key = 0;
    for s in 0..arity {
        if index & (1 << (arity - 1 - s)) != 0 {
            key |= 1 << s;
        }
    }
    key
}

impl fmt::Display for TangleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "id({})", self.domain);
        }
        for (idx, gen) in self.gens.iter().enumerate() {
            if idx > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{gen}")?;
        }
        Ok(())
    }
}

/// Parses and arity-checks a tangle word.
pub fn parse(text: &str) -> Result<TangleWord, TangleError> {
    let mut gens = Vec::new();
    let mut cursor = Cursor {
        text,
        bytes: text.as_bytes(),
        pos: 0,
    };
    loop {
        cursor.skip_ws();
        let gen = cursor.term()?;
        gens.push(gen);
        cursor.skip_ws();
        match cursor.peek() {
            None => break,
            Some(b';') => {
                cursor.pos += 1;
            }
            Some(_) => {
                return Err(cursor.unexpected("';' or end of input"));
            }
        }
    }
    TangleWord::new(gens)
}

struct Cursor<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn unexpected(&self, expected: &'static str) -> TangleError {
        let found = match self.bytes.get(self.pos) {
            Some(_) => {
                let rest = &self.text[self.pos..];
                rest.chars().next().map(String::from).unwrap_or_default()
            }
            None => "end of input".into(),
        };
        TangleError::Syntax {
            offset: self.pos,
            expected,
            found,
        }
    }

    fn expect(&mut self, byte: u8, expected: &'static str) -> Result<(), TangleError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn number(&mut self) -> Result<usize, TangleError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected("a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.unexpected("a smaller number"))
    }

    fn term(&mut self) -> Result<TangleGen, TangleError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let kind = match &self.text[start..self.pos] {
            "g" => GenKind::G,
            "f" => GenKind::F,
            "t1" => GenKind::T1,
            "t2" => GenKind::T2,
            "r" => GenKind::R,
            "s" => GenKind::S,
            "w1" => GenKind::W1,
            "w2" => GenKind::W2,
            _ => {
                self.pos = start;
                return Err(self.unexpected("a generator (g, f, t1, t2, r, s, w1, w2)"));
            }
        };
        self.expect(b'(', "'('")?;
        let n = self.number()?;
        let i = if kind == GenKind::R {
            None
        } else {
            self.expect(b',', "','")?;
            Some(self.number()?)
        };
        self.expect(b')', "')'")?;
        Ok(TangleGen { kind, n, i })
    }
}

/// A word realizing a matching: rotations applied to a chain of cups. The
/// good position of the matching is factored by repeatedly extracting an
/// innermost adjacent arc (smallest index first), and the rotation shift is
/// prepended. Applying the word to `v0^{⊗m}` yields the matching's class.
pub fn word_for_matching(alpha: &AnnularMatching) -> TangleWord {
    let (shift, good) = alpha.good_rotation();
    let k = alpha.positions();
    let mut cups: Vec<TangleGen> = Vec::with_capacity(alpha.n());
    let mut arcs: Vec<(usize, usize)> = good.arcs().iter().map(|a| (a.i, a.j)).collect();
    let mut arity = k;
    while !arcs.is_empty() {
        let pos = arcs
            .iter()
            .position(|&(i, j)| j == i + 1)
            .expect("a good matching always has an adjacent arc");
        let (i, _) = arcs.remove(pos);
        cups.push(TangleGen {
            kind: GenKind::G,
            n: arity,
            i: Some(i),
        });
        for (a, b) in arcs.iter_mut() {
            if *a > i {
                *a -= 2;
            }
            if *b > i {
                *b -= 2;
            }
        }
        arity -= 2;
    }
    let mut gens: Vec<TangleGen> = (0..shift)
        .map(|_| TangleGen {
            kind: GenKind::R,
            n: k,
            i: None,
        })
        .collect();
    gens.extend(cups);
    if gens.is_empty() {
        TangleWord::identity(alpha.m())
    } else {
        TangleWord::new(gens).expect("matching words chain by construction")
    }
}

/// Outcome of one relation check: the relation name, the arity it was
/// checked at, and the first failing basis vector if any.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub arity: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Verifies the tangle relations used downstream, as exact operator
/// identities over the full monomial bases of all arities up to `k_max`:
/// Reidemeister II, the Reidemeister I kink against the framing twist,
/// both zigzags, the rotation decomposition through the wrap generator,
/// the circle value `-2`, and far commutativity.
pub fn relation_suite(k_max: usize) -> Vec<RelationCheck> {
    let mut checks = Vec::new();
    let mut check = |name: String, arity: usize, lhs_rhs: &dyn Fn(&TensorVector) -> (TensorVector, TensorVector)| {
        for key in 0..(1u32 << arity) {
            let v = TensorVector::basis(arity, key);
            let (lhs, rhs) = lhs_rhs(&v);
            if lhs != rhs {
                checks.push(RelationCheck {
                    name,
                    arity,
                    passed: false,
                    counterexample: Some(format!("v{}", crate::kgroup::render_bits(arity, key))),
                });
                return;
            }
        }
        checks.push(RelationCheck {
            name,
            arity,
            passed: true,
            counterexample: None,
        });
    };

    for n in 2..=k_max {
        for i in 1..n {
            check(format!("R2: t1({n},{i}) ; t2({n},{i}) = id"), n, &|v| {
                (v.swap(i).swap(i), v.clone())
            });
        }
    }
    for n in 1..=k_max.saturating_sub(2) {
        // kink through the cup at 1, crossing above at 2, cap at 1
        check(format!("R1: f({},1) ; t1({},2) ; g({},1) = w(1) = -id", n + 2, n + 2, n + 2), n, &|v| {
            (v.cup_insert(1).swap(2).cap(1), v.framing_twist())
        });
        check(format!("R1: f({},2) ; t1({},1) ; g({},2) = w(1) = -id", n + 2, n + 2, n + 2), n, &|v| {
            (v.cup_insert(2).swap(1).cap(2), v.framing_twist())
        });
    }
    for n in 0..=k_max.saturating_sub(2) {
        for i in 1..=n + 1 {
            if i >= 2 {
                check(format!("zigzag: f({},{}) ; g({},{}) = id", n + 2, i - 1, n + 2, i), n, &|v| {
                    (v.cup_insert(i).cap(i - 1), v.clone())
                });
            }
            if i <= n {
                check(format!("zigzag: f({},{}) ; g({},{}) = id", n + 2, i + 1, n + 2, i), n, &|v| {
                    (v.cup_insert(i).cap(i + 1), v.clone())
                });
            }
            check(format!("circle: f({},{i}) ; g({},{i}) = -2 id", n + 2, n + 2), n, &|v| {
                (
                    v.cup_insert(i).cap(i),
                    v.scale(&num_bigint::BigInt::from(-2)),
                )
            });
        }
    }
    for n in 1..=k_max {
        check(format!("rotation: r({n}) = s({n},{n}) ; t({n},{}) ; ... ; t({n},1)", n.saturating_sub(1)), n, &|v| {
            let mut swapped = v.clone();
            for at in 1..n {
                swapped = swapped.swap(at);
            }
            (v.rotation(), swapped.s_twist(n))
        });
    }
    for n in 4..=k_max {
        for i in 1..n {
            for j in i + 2..n {
                check(format!("far commutativity: t({n},{i}) ; t({n},{j})"), n, &|v| {
                    (v.swap(i).swap(j), v.swap(j).swap(i))
                });
            }
        }
    }
    for n in 0..=k_max.saturating_sub(4) {
        for i in 1..=n + 1 {
            for j in i..=n + 1 {
                check(
                    format!("cup interchange: g({},{i}) ; g({},{j}) = g({},{}) ; g({},{i})", n + 4, n + 2, n + 4, j + 2, n + 2),
                    n,
                    &|v| (v.cup_insert(j).cup_insert(i), v.cup_insert(i).cup_insert(j + 2)),
                );
            }
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kgroup::class_of_matching;
    use crate::matchings::enumerate_cross;

    fn gen(kind: GenKind, n: usize, i: impl Into<Option<usize>>) -> TangleGen {
        TangleGen {
            kind,
            n,
            i: i.into(),
        }
    }

    #[test]
    fn parses_the_rotation_word() {
        let word = parse("s(4,4); t1(4,3); t1(4,2); t1(4,1)").unwrap();
        assert_eq!(word.domain_arity(), 4);
        assert_eq!(word.codomain_arity(), 4);
        assert_eq!(
            word.generators(),
            &[
                gen(GenKind::S, 4, 4),
                gen(GenKind::T1, 4, 3),
                gen(GenKind::T1, 4, 2),
                gen(GenKind::T1, 4, 1),
            ]
        );
    }

    #[test]
    fn parses_a_single_cup() {
        let word = parse("g(2,1)").unwrap();
        assert_eq!(word.domain_arity(), 0);
        assert_eq!(word.codomain_arity(), 2);
    }

    #[test]
    fn rejects_arity_mismatch_at_the_offending_term() {
        // f(4,1) needs input arity 4 but g(2,1) produces 2
        let err = parse("f(4,1); g(2,1)").unwrap_err();
        assert_eq!(
            err,
            TangleError::ArityMismatch {
                term: 1,
                gen: "f(4,1)".into(),
                expected: 4,
                actual: 2,
            }
        );
    }

    #[test]
    fn rejects_syntax_and_range_errors() {
        assert!(matches!(parse(""), Err(TangleError::Empty) | Err(TangleError::Syntax { .. })));
        assert!(matches!(parse("q(2,1)"), Err(TangleError::Syntax { .. })));
        assert!(matches!(parse("g(2,1) t1(2,1)"), Err(TangleError::Syntax { .. })));
        assert!(matches!(parse("g(2,1"), Err(TangleError::Syntax { .. })));
        assert!(matches!(parse("t1(3,7)"), Err(TangleError::IndexRange { .. })));
        assert!(matches!(parse("g(1,1)"), Err(TangleError::BoundaryTooSmall { .. })));
        assert!(matches!(parse("r(2,1)"), Err(TangleError::Syntax { .. })));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(parse(" g( 2 , 1 ) ").unwrap(), parse("g(2,1)").unwrap());
    }

    #[test]
    fn printing_round_trips() {
        for text in [
            "g(2,1)",
            "s(4,4); t1(4,3); t1(4,2); t1(4,1)",
            "f(3,1); t2(3,2); g(3,1)",
            "r(5); w1(5,2); t2(5,4)",
        ] {
            let word = parse(text).unwrap();
            assert_eq!(parse(&word.to_string()).unwrap(), word);
        }
    }

    #[test]
    fn crossings_evaluate_to_swaps() {
        let word = parse("t1(2,1)").unwrap();
        let v = TensorVector::basis_from_bits("01");
        assert_eq!(word.apply(&v).unwrap(), TensorVector::basis_from_bits("10"));
        let word2 = parse("t2(2,1)").unwrap();
        assert_eq!(word2.apply(&v).unwrap(), TensorVector::basis_from_bits("10"));
    }

    #[test]
    fn rotation_word_equals_rotation_operator() {
        for k in 1..=6usize {
            let mut text = format!("s({k},{k})");
            for i in (1..k).rev() {
                text.push_str(&format!("; t2({k},{i})"));
            }
            let word = parse(&text).unwrap();
            for key in 0..(1u32 << k) {
                let v = TensorVector::basis(k, key);
                assert_eq!(word.apply(&v).unwrap(), v.rotation());
            }
        }
    }

    #[test]
    fn reidemeister_one_word_is_minus_identity() {
        let word = parse("f(3,1); t1(3,2); g(3,1)").unwrap();
        assert_eq!(word.domain_arity(), 1);
        assert_eq!(word.codomain_arity(), 1);
        for key in 0..2u32 {
            let v = TensorVector::basis(1, key);
            assert_eq!(word.apply(&v).unwrap(), v.framing_twist());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism() {
        let a = parse("g(4,2)").unwrap();
        let b = parse("t1(2,1); g(2,1)").unwrap();
        let composed = a.compose(&b).unwrap();
        let v = TensorVector::scalar(3);
        assert_eq!(
            composed.apply(&v).unwrap(),
            a.apply(&b.apply(&v).unwrap()).unwrap()
        );
        assert!(parse("g(2,1)").unwrap().compose(&parse("g(2,1)").unwrap()).is_err());
    }

    #[test]
    fn wrap_indexed_generators_respect_rotation_conjugation() {
        // t(n, n) = r ∘ t(n, 1) ∘ r^{-1} and likewise for cups/caps
        for n in [2usize, 3, 4] {
            for key in 0..(1u32 << n) {
                let v = TensorVector::basis(n, key);
                let direct = gen(GenKind::T1, n, n).apply(&v);
                let conj = v.rotation_inv().swap(1).rotation();
                assert_eq!(direct, conj);
            }
            for key in 0..(1u32 << (n - 2)) {
                let v = TensorVector::basis(n - 2, key);
                assert_eq!(gen(GenKind::G, n, n).apply(&v), v.cup_insert(1).rotation());
            }
        }
        // the wrap cup followed by the wrap cap closes a circle: -2
        let scalar = TensorVector::scalar(1);
        let circle = gen(GenKind::F, 2, 2).apply(&gen(GenKind::G, 2, 2).apply(&scalar));
        assert_eq!(circle, TensorVector::scalar(-2));
    }

    #[test]
    fn relation_suite_passes_at_arity_six() {
        let checks = relation_suite(6);
        assert!(!checks.is_empty());
        for check in &checks {
            assert!(check.passed, "{} failed at {:?}", check.name, check.counterexample);
        }
    }

    #[test]
    fn words_rebuild_matching_classes() {
        for (m, n) in [(0, 1), (0, 2), (1, 1), (2, 1), (2, 2), (0, 3), (1, 2), (4, 0)] {
            for alpha in enumerate_cross(m, n).unwrap() {
                let word = word_for_matching(&alpha);
                assert_eq!(word.domain_arity(), m);
                assert_eq!(word.codomain_arity(), m + 2 * n);
                let base = TensorVector::all_zeros(m);
                assert_eq!(
                    word.apply(&base).unwrap(),
                    class_of_matching(&alpha),
                    "word {word} for {alpha}"
                );
            }
        }
    }

    #[test]
    fn matrix_of_identity_composite() {
        let word = parse("t1(2,1); t2(2,1)").unwrap();
        let matrix = word.matrix();
        for (col, column) in matrix.iter().enumerate() {
            for (row, entry) in column.iter().enumerate() {
                let expected = i32::from(row == col);
                assert_eq!(entry, &num_bigint::BigInt::from(expected));
            }
        }
    }

    #[test]
    fn ast_serializes_compactly() {
        let word = parse("g(4,2); r(2)").unwrap();
        let json = serde_json::to_string(&word).unwrap();
        assert_eq!(
            json,
            r#"{"gens":[{"kind":"g","n":4,"i":2},{"kind":"r","n":2}],"domain":2,"codomain":4}"#
        );
    }
}
