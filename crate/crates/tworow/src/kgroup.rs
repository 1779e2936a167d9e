//! Exact linear algebra on the tensor power `(Z^2)^{⊗k}`.
//!
//! The rank-`2^k` lattice models the Grothendieck group of the `k`-th
//! iterated projective-line bundle: the monomial basis `v_I` is indexed by
//! `k`-bitstrings (bit `s` chooses `v0` or `v1` in factor `s`), the Euler
//! characteristic reads off the coefficient of `v0 ⊗ ... ⊗ v0`, and the
//! endomorphism `θ: v0 -> v0, v1 -> v1 - v0` is the effect of twisting one
//! factor by the tautological line bundle. On top of that sit the
//! elementary tangle operators (cup, cap, crossing, rotation, wrap) and
//! the classes of matchings built from them.
//!
//! Coefficients are arbitrary-precision integers throughout; nothing in
//! this module rounds.

use crate::matchings::AnnularMatching;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Basis keys are bitmasks with bit `s - 1` holding factor `s`.
type Key = u32;

/// An exact integer vector in `(Z^2)^{⊗k}`, stored sparsely over the
/// monomial basis. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorVector {
    arity: usize,
    coeffs: BTreeMap<Key, BigInt>,
}

impl TensorVector {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= 30, "tensor arity {arity} out of supported range");
        TensorVector {
            arity,
            coeffs: BTreeMap::new(),
        }
    }

    /// The arity-0 vector holding a single integer.
    pub fn scalar(value: impl Into<BigInt>) -> Self {
        let mut v = TensorVector::zero(0);
        v.add_term(0, value.into());
        v
    }

    /// The basis vector `v_I` for the bitmask `I` (bit `s - 1` = factor `s`).
    pub fn basis(arity: usize, key: Key) -> Self {
        let mut v = TensorVector::zero(arity);
        assert!(key < (1 << arity), "basis key {key:#b} exceeds arity {arity}");
        v.add_term(key, BigInt::one());
        v
    }

    /// Basis vector from a left-to-right bitstring, factor 1 first.
    pub fn basis_from_bits(bits: &str) -> Self {
        let (arity, key) = parse_bits(bits).expect("malformed bitstring");
        Self::basis(arity, key)
    }

    /// `v0 ⊗ ... ⊗ v0`, the class of a point.
    pub fn all_zeros(arity: usize) -> Self {
        Self::basis(arity, 0)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of the basis key (zero when absent).
    pub fn coeff(&self, key: Key) -> BigInt {
        self.coeffs.get(&key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Key, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    fn add_term(&mut self, key: Key, value: BigInt) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.arity);
        }
        TensorVector {
            arity: self.arity,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k, c * factor))
                .collect(),
        }
    }

    /// Linear extension of a map on basis keys. The callback pushes each
    /// image term of a single basis vector into the accumulator.
    fn map_basis(
        &self,
        out_arity: usize,
        mut image: impl FnMut(Key, &BigInt, &mut TensorVector),
    ) -> Self {
        let mut out = TensorVector::zero(out_arity);
        for (&key, coeff) in &self.coeffs {
            image(key, coeff, &mut out);
        }
        out
    }

    fn assert_factor(&self, factor: usize) {
        assert!(
            (1..=self.arity).contains(&factor),
            "factor {factor} out of range for arity {}",
            self.arity
        );
    }

    /// Coefficient of `v0 ⊗ ... ⊗ v0`; the Euler-characteristic functional.
    pub fn euler_char(&self) -> BigInt {
        self.coeff(0)
    }

    /// `θ^e` on one factor: `v0 -> v0`, `v1 -> v1 - e·v0`, any integer `e`.
    pub fn theta_power(&self, factor: usize, e: i64) -> Self {
        self.assert_factor(factor);
        let bit = 1 << (factor - 1);
        let e = BigInt::from(e);
        self.map_basis(self.arity, |key, coeff, out| {
            out.add_term(key, coeff.clone());
            if key & bit != 0 {
                out.add_term(key & !bit, -&e * coeff);
            }
        })
    }

    /// Factor-wise `θ` powers: the twist by a line bundle with the given
    /// exponent in each factor.
    pub fn twist(&self, exponents: &[i64]) -> Self {
        assert_eq!(
            exponents.len(),
            self.arity,
            "twist exponents must match arity {}",
            self.arity
        );
        let mut out = self.clone();
        for (idx, &e) in exponents.iter().enumerate() {
            if e != 0 {
                out = out.theta_power(idx + 1, e);
            }
        }
        out
    }

    /// Splices `v1 ⊗ v0 - v0 ⊗ v1` into positions `(at, at + 1)`,
    /// raising the arity by two. `1 <= at <= arity + 1`.
    pub fn cup_insert(&self, at: usize) -> Self {
        assert!(
            (1..=self.arity + 1).contains(&at),
            "cup position {at} out of range for arity {}",
            self.arity
        );
        let low_mask: Key = (1 << (at - 1)) - 1;
        self.map_basis(self.arity + 2, |key, coeff, out| {
            let spread = (key & low_mask) | ((key & !low_mask) << 2);
            out.add_term(spread | (1 << (at - 1)), coeff.clone());
            out.add_term(spread | (1 << at), -coeff.clone());
        })
    }

    /// Contracts factors `(at, at + 1)` with the pairing
    /// `v0 ⊗ v1 -> 1, v1 ⊗ v0 -> -1, v0 ⊗ v0 = v1 ⊗ v1 -> 0`,
    /// lowering the arity by two. The values are forced by requiring the
    /// zigzag identities against `cup_insert`; a closed circle evaluates
    /// to `-2`.
    pub fn cap(&self, at: usize) -> Self {
        assert!(self.arity >= 2, "cap needs arity >= 2");
        assert!(
            (1..=self.arity - 1).contains(&at),
            "cap position {at} out of range for arity {}",
            self.arity
        );
        let low_mask: Key = (1 << (at - 1)) - 1;
        let pair_mask: Key = 0b11 << (at - 1);
        self.map_basis(self.arity - 2, |key, coeff, out| {
            let pair = (key & pair_mask) >> (at - 1);
            let squeezed = (key & low_mask) | ((key >> 2) & !low_mask);
            match pair {
                0b10 => out.add_term(squeezed, coeff.clone()), // v0 ⊗ v1
                0b01 => out.add_term(squeezed, -coeff.clone()), // v1 ⊗ v0
                _ => {}
            }
        })
    }

    /// Transposes factors `at` and `at + 1`; both crossings act this way
    /// at this level.
    pub fn swap(&self, at: usize) -> Self {
        assert!(
            self.arity >= 2 && (1..=self.arity - 1).contains(&at),
            "swap position {at} out of range for arity {}",
            self.arity
        );
        let lo = 1 << (at - 1);
        let hi = 1 << at;
        self.map_basis(self.arity, |key, coeff, out| {
            let mut new = key & !(lo | hi);
            if key & lo != 0 {
                new |= hi;
            }
            if key & hi != 0 {
                new |= lo;
            }
            out.add_term(new, coeff.clone());
        })
    }

    /// Clockwise rotation: factor 1 wraps to the last slot and picks up a
    /// `θ^{-1}` (`v1 -> v1 + v0`), everything else shifts down one place.
    pub fn rotation(&self) -> Self {
        assert!(self.arity >= 1, "rotation needs arity >= 1");
        let top = 1 << (self.arity - 1);
        self.map_basis(self.arity, |key, coeff, out| {
            let shifted = key >> 1;
            if key & 1 == 0 {
                out.add_term(shifted, coeff.clone());
            } else {
                out.add_term(shifted | top, coeff.clone());
                out.add_term(shifted, coeff.clone());
            }
        })
    }

    /// Inverse of [`rotation`](Self::rotation): the last factor wraps to
    /// the front and picks up a `θ` (`v1 -> v1 - v0`).
    pub fn rotation_inv(&self) -> Self {
        assert!(self.arity >= 1, "rotation needs arity >= 1");
        let top = 1 << (self.arity - 1);
        self.map_basis(self.arity, |key, coeff, out| {
            let shifted = (key & !top) << 1;
            if key & top == 0 {
                out.add_term(shifted, coeff.clone());
            } else {
                out.add_term(shifted | 1, coeff.clone());
                out.add_term(shifted, -coeff.clone());
            }
        })
    }

    /// The wrap generator: `θ^{-1}` on one factor.
    pub fn s_twist(&self, factor: usize) -> Self {
        self.theta_power(factor, -1)
    }

    /// The framing twist: negation. Both twist directions negate here.
    pub fn framing_twist(&self) -> Self {
        -self
    }

    /// Renders the bitstring of a key at this arity, factor 1 leftmost.
    pub fn bits_string(&self, key: Key) -> String {
        render_bits(self.arity, key)
    }
}

/// Factor-1-first rendering of a basis key.
pub fn render_bits(arity: usize, key: Key) -> String {
    (1..=arity)
        .map(|s| if key & (1 << (s - 1)) != 0 { '1' } else { '0' })
        .collect()
}

fn parse_bits(bits: &str) -> Result<(usize, Key), String> {
    let mut key = 0u32;
    let mut arity = 0usize;
    for (idx, ch) in bits.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => key |= 1 << idx,
            other => return Err(format!("invalid bit {other:?} in {bits:?}")),
        }
        arity = idx + 1;
        if arity > 30 {
            return Err(format!("bitstring {bits:?} too long"));
        }
    }
    Ok((arity, key))
}

/// The pure tensor `⊗_s (v1 - (e_s - 1) v0)` expanded over the monomial
/// basis: the class of the line bundle with the given exponents. Exponents
/// 0 and 1 give the spanning classes; other integers follow from the
/// two-term relation `[Λ^{-1}] = 2[O] - [Λ]`.
pub fn line_bundle_class(exponents: &[i64]) -> TensorVector {
    let arity = exponents.len();
    let mut out = TensorVector::zero(arity);
    // coefficient of a key: product of (1 - e_s) over its zero bits
    for key in 0u32..(1 << arity) {
        let mut coeff = BigInt::one();
        for (idx, &e) in exponents.iter().enumerate() {
            if key & (1 << idx) == 0 {
                coeff *= 1 - e;
                if coeff.is_zero() {
                    break;
                }
            }
        }
        out.add_term(key, coeff);
    }
    out
}

/// The class of a matching in `(Z^2)^{⊗(m+2n)}`.
///
/// For a good matching this is the signed sum of basis vectors over all
/// one-endpoint-per-arc choices; in general the matching is first rotated
/// into a good position and the class rotated back. The result does not
/// depend on which good rotation is used (see the crate tests), and for
/// `n = 0` it is the point class `v0 ⊗ ... ⊗ v0`.
pub fn class_of_matching(alpha: &AnnularMatching) -> TensorVector {
    let (shift, good) = alpha.good_rotation();
    let arity = alpha.positions();
    let mut class = TensorVector::zero(arity);
    for (picked, sign) in good.endpoint_choices() {
        let mut key: Key = 0;
        for p in picked {
            key |= 1 << (p - 1);
        }
        class.add_term(key, BigInt::from(sign));
    }
    for _ in 0..shift {
        class = class.rotation();
    }
    class
}

impl Add for &TensorVector {
    type Output = TensorVector;
    fn add(self, rhs: &TensorVector) -> TensorVector {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in addition");
        let mut out = self.clone();
        for (&key, coeff) in &rhs.coeffs {
            out.add_term(key, coeff.clone());
        }
        out
    }
}

impl Sub for &TensorVector {
    type Output = TensorVector;
    fn sub(self, rhs: &TensorVector) -> TensorVector {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in subtraction");
        let mut out = self.clone();
        for (&key, coeff) in &rhs.coeffs {
            out.add_term(key, -coeff.clone());
        }
        out
    }
}

impl Neg for &TensorVector {
    type Output = TensorVector;
    fn neg(self) -> TensorVector {
        TensorVector {
            arity: self.arity,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Add for TensorVector {
    type Output = TensorVector;
    fn add(self, rhs: TensorVector) -> TensorVector {
        &self + &rhs
    }
}

impl Sub for TensorVector {
    type Output = TensorVector;
    fn sub(self, rhs: TensorVector) -> TensorVector {
        &self - &rhs
    }
}

impl Neg for TensorVector {
    type Output = TensorVector;
    fn neg(self) -> TensorVector {
        -&self
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<Key> = self.coeffs.keys().copied().collect();
        keys.sort_by_key(|&k| render_bits(self.arity, k));
        for (idx, key) in keys.iter().enumerate() {
            let coeff = &self.coeffs[key];
            if idx == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            if self.arity == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "v{}", render_bits(self.arity, *key))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    bits: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct VectorRepr {
    k: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for TensorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut terms: Vec<TermRepr> = self
            .coeffs
            .iter()
            .map(|(&key, coeff)| TermRepr {
                bits: render_bits(self.arity, key),
                coeff: coeff.to_string(),
            })
            .collect();
        terms.sort_by(|a, b| a.bits.cmp(&b.bits));
        VectorRepr {
            k: self.arity,
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = VectorRepr::deserialize(deserializer)?;
        let mut out = TensorVector::zero(repr.k);
        for term in repr.terms {
            let (arity, key) = parse_bits(&term.bits).map_err(D::Error::custom)?;
            if arity != repr.k {
                return Err(D::Error::custom(format!(
                    "term {:?} has {} bits, expected {}",
                    term.bits, arity, repr.k
                )));
            }
            let coeff: BigInt = term
                .coeff
                .parse()
                .map_err(|e| D::Error::custom(format!("bad coefficient {:?}: {e}", term.coeff)))?;
            out.add_term(key, coeff);
        }
        Ok(out)
    }
}
