//! Dimension polynomials for the simple modules labelled by annular
//! matchings.
//!
//! For `α ∈ Cross(m, n)` and an integral weight `μ` of length `k = m + 2n`,
//! the closed dimension formula is
//!
//! ```text
//! dim(α, μ, p) = p^(k(k-1)/2 - n)
//!              · ∏_{(i,j) ∈ C0(α)} (μ_i - μ_j - i + j)
//!              · ∏_{(i,j) ∈ C1(α)} (p - μ_i + μ_j + i - j)
//! ```
//!
//! valid under the admissibility bound `μ_1 - μ_k + (k - 1) < p`. Two
//! independent routes compute it: the factored form above, and the
//! Frobenius route `p^(k(k-1)/2) · d_α((μ + ρ)/p)` through the Euler
//! polynomial `d_α(λ) = ∏_{C0} (λ_i - λ_j) · ∏_{C1} (1 - λ_i + λ_j)`,
//! evaluated in exact rational arithmetic. The Euler polynomial itself is
//! cross-checked against the tensor-calculus functional
//! `χ(T_{-λ} · class(α))`. The ρ-shift enters only through differences,
//! normalized as `ρ_i - ρ_j = j - i`.

use crate::kgroup::class_of_matching;
use crate::matchings::AnnularMatching;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimsError {
    #[error("weight has {actual} entries, expected m + 2n = {expected}")]
    WeightLength { actual: usize, expected: usize },
    #[error("admissibility violated: mu_1 - mu_{k} + {shift} = {lhs} >= p = {p}")]
    Inadmissible {
        k: usize,
        shift: i64,
        lhs: i64,
        p: u64,
    },
    #[error("Frobenius route produced the non-integer value {0}")]
    NonIntegerFrobenius(String),
    #[error("route mismatch: closed form {closed} != Frobenius route {frobenius}")]
    RouteMismatch { closed: BigInt, frobenius: BigInt },
}

/// An integral weight in coordinates; only differences of entries enter
/// any formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn entry(&self, pos: usize) -> i64 {
        self.0[pos - 1]
    }

    fn check_len(&self, expected: usize) -> Result<(), DimsError> {
        if self.len() != expected {
            return Err(DimsError::WeightLength {
                actual: self.len(),
                expected,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for entry in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{entry}")?;
            first = false;
        }
        Ok(())
    }
}

/// Which side of the marked line an arc's factor comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKind {
    C0,
    C1,
}

/// One linear factor, tagged by its arc `(i, j)` and its side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearFactor {
    pub kind: FactorKind,
    pub i: usize,
    pub j: usize,
}

/// The factored Euler polynomial `d_α`: a product of `(λ_i - λ_j)` over
/// `C0(α)` and `(1 - λ_i + λ_j)` over `C1(α)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerPolynomial {
    pub factors: Vec<LinearFactor>,
}

impl EulerPolynomial {
    pub fn eval(&self, lambda: &Weight) -> BigInt {
        let mut product = BigInt::one();
        for factor in &self.factors {
            let diff = lambda.entry(factor.i) - lambda.entry(factor.j);
            let value = match factor.kind {
                FactorKind::C0 => diff,
                FactorKind::C1 => 1 - diff,
            };
            product *= value;
            if product.is_zero() {
                break;
            }
        }
        product
    }

    pub fn eval_rational(&self, lambda: &[BigRational]) -> BigRational {
        let mut product = BigRational::one();
        for factor in &self.factors {
            let diff = &lambda[factor.i - 1] - &lambda[factor.j - 1];
            let value = match factor.kind {
                FactorKind::C0 => diff,
                FactorKind::C1 => BigRational::one() - diff,
            };
            product *= value;
        }
        product
    }
}

impl fmt::Display for EulerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (idx, factor) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, " * ")?;
            }
            match factor.kind {
                FactorKind::C0 => write!(f, "(l{} - l{})", factor.i, factor.j)?,
                FactorKind::C1 => write!(f, "(1 - l{} + l{})", factor.i, factor.j)?,
            }
        }
        Ok(())
    }
}

/// The factored dimension polynomial: a power of `p` and `n` tagged linear
/// factors in the weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimFormula {
    pub prefactor_exp: usize,
    pub factors: Vec<LinearFactor>,
}

impl DimFormula {
    /// Renders the general symbolic formula, weight entries as `l1..lk`.
    pub fn symbolic(&self) -> String {
        let mut out = format!("p^{}", self.prefactor_exp);
        for factor in &self.factors {
            let constant = factor.j as i64 - factor.i as i64;
            match factor.kind {
                FactorKind::C0 => {
                    out.push_str(&format!(" * (l{} - l{} + {})", factor.i, factor.j, constant));
                }
                FactorKind::C1 => {
                    out.push_str(&format!(" * (p - l{} + l{} - {})", factor.i, factor.j, constant));
                }
            }
        }
        out
    }

    /// Renders the formula specialized at `μ = 0`; unit factors drop out.
    pub fn symbolic_at_zero(&self) -> String {
        let mut out = format!("p^{}", self.prefactor_exp);
        for factor in &self.factors {
            let constant = factor.j as i64 - factor.i as i64;
            match factor.kind {
                FactorKind::C0 => {
                    if constant != 1 {
                        out.push_str(&format!(" * {constant}"));
                    }
                }
                FactorKind::C1 => out.push_str(&format!(" * (p - {constant})")),
            }
        }
        out
    }
}

/// The value of the closed formula at `(μ, p)` together with the warning
/// flag raised when some factor is not positive (possible for non-dominant
/// weights, where the positivity guarantee does not apply).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimValue {
    pub value: BigInt,
    pub nonpositive_factor: bool,
}

impl Serialize for DimValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        // values overflow 64 bits routinely, so they travel as strings
        let mut state = serializer.serialize_struct("DimValue", 2)?;
        state.serialize_field("value", &self.value.to_string())?;
        state.serialize_field("nonpositive_factor", &self.nonpositive_factor)?;
        state.end()
    }
}

/// Codimension of the relevant Springer fiber: `k(k-1)/2 - n`. This is the
/// exponent of the guaranteed `p`-power divisor of every dimension.
pub fn springer_codim(m: usize, n: usize) -> usize {
    let k = m + 2 * n;
    k * (k - 1) / 2 - n
}

/// The factored Euler polynomial of a matching.
pub fn euler_polynomial(alpha: &AnnularMatching) -> EulerPolynomial {
    EulerPolynomial {
        factors: tagged_factors(alpha),
    }
}

fn tagged_factors(alpha: &AnnularMatching) -> Vec<LinearFactor> {
    alpha
        .arcs()
        .iter()
        .map(|arc| LinearFactor {
            kind: if arc.crosses { FactorKind::C1 } else { FactorKind::C0 },
            i: arc.i,
            j: arc.j,
        })
        .collect()
}

/// Independent recomputation of `d_α(λ)` through the tensor calculus:
/// `χ(T_{-λ_1, ..., -λ_k} · class(α))`. Must agree with
/// [`euler_polynomial`] at every integer point.
pub fn euler_eval_oracle(alpha: &AnnularMatching, lambda: &Weight) -> Result<BigInt, DimsError> {
    lambda.check_len(alpha.positions())?;
    let negated: Vec<i64> = lambda.0.iter().map(|&x| -x).collect();
    Ok(class_of_matching(alpha).twist(&negated).euler_char())
}

/// The factored dimension polynomial of a matching.
pub fn dim_formula(alpha: &AnnularMatching) -> DimFormula {
    DimFormula {
        prefactor_exp: springer_codim(alpha.m(), alpha.n()),
        factors: tagged_factors(alpha),
    }
}

/// Degree in `p` of the dimension polynomial for fixed `μ`:
/// `k(k-1)/2 - n + |C1(α)|`.
pub fn dim_degree(alpha: &AnnularMatching) -> usize {
    let crossing = alpha.arcs().iter().filter(|a| a.crosses).count();
    springer_codim(alpha.m(), alpha.n()) + crossing
}

fn check_admissibility(mu: &Weight, p: u64) -> Result<(), DimsError> {
    let k = mu.len();
    if k == 0 {
        return Ok(());
    }
    let shift = (k - 1) as i64;
    let lhs = mu.entry(1) - mu.entry(k) + shift;
    if lhs >= p as i64 {
        return Err(DimsError::Inadmissible { k, shift, lhs, p });
    }
    Ok(())
}

/// Evaluates the closed dimension formula at an admissible `(μ, p)` and
/// verifies the result against the Frobenius route before returning it.
pub fn dim_module(alpha: &AnnularMatching, mu: &Weight, p: u64) -> Result<DimValue, DimsError> {
    mu.check_len(alpha.positions())?;
    check_admissibility(mu, p)?;
    let closed = dim_closed_form(alpha, mu, p);
    let frobenius = dim_frobenius(alpha, mu, p)?;
    if closed.value != frobenius {
        return Err(DimsError::RouteMismatch {
            closed: closed.value,
            frobenius,
        });
    }
    Ok(closed)
}

/// The closed-form product, without the internal cross-check. Exposed so
/// the two routes can be compared independently.
pub fn dim_closed_form(alpha: &AnnularMatching, mu: &Weight, p: u64) -> DimValue {
    let formula = dim_formula(alpha);
    let p = BigInt::from(p);
    let mut value = p.pow(formula.prefactor_exp as u32);
    let mut nonpositive = false;
    for factor in &formula.factors {
        let diff = mu.entry(factor.i) - mu.entry(factor.j) + factor.j as i64 - factor.i as i64;
        let term = match factor.kind {
            FactorKind::C0 => BigInt::from(diff),
            FactorKind::C1 => &p - BigInt::from(diff),
        };
        if !term.is_positive() {
            nonpositive = true;
        }
        value *= term;
    }
    DimValue {
        value,
        nonpositive_factor: nonpositive,
    }
}

/// The Frobenius route: `p^(k(k-1)/2) · d_α((μ + ρ)/p)` with `ρ_i = -i`,
/// in exact rational arithmetic. The denominators must clear exactly.
pub fn dim_frobenius(alpha: &AnnularMatching, mu: &Weight, p: u64) -> Result<BigInt, DimsError> {
    mu.check_len(alpha.positions())?;
    let k = alpha.positions();
    let p_int = BigInt::from(p);
    let shifted: Vec<BigRational> = (1..=k)
        .map(|pos| {
            BigRational::new(BigInt::from(mu.entry(pos) - pos as i64), p_int.clone())
        })
        .collect();
    let d_alpha = euler_polynomial(alpha).eval_rational(&shifted);
    let scaled = d_alpha * BigRational::from_integer(p_int.pow((k * (k - 1) / 2) as u32));
    if !scaled.is_integer() {
        return Err(DimsError::NonIntegerFrobenius(scaled.to_string()));
    }
    Ok(scaled.to_integer())
}
