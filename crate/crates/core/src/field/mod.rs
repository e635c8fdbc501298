//! Exact scalar arithmetic.
//!
//! Arithmetic is routed through a context object (`Ring` / `Field`) rather
//! than operator overloading on the elements: finite fields are chosen at
//! runtime (prime, modulus), so the element type alone cannot know how to
//! multiply. Elements are small `Clone + Eq` values; the context owns the
//! tables.

mod gf;
pub mod moduli;
mod quad;
pub(crate) mod rational;

use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use gf::{FieldEmbedding, FiniteField};
pub use quad::QuadRing;
pub use rational::Rationals;

/// A commutative ring with unit.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// An exact field.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    /// `None` when infinite.
    fn cardinality(&self) -> Option<u64>;

    fn spec(&self) -> FieldSpec;

    /// All elements in encoding order, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Inverse of the Frobenius `x -> x^p` (only meaningful in positive
    /// characteristic; finite fields are perfect so it always exists there).
    fn frobenius_root(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Canonical JSON encoding of a scalar.
    fn encode(&self, a: &Self::Elem) -> serde_json::Value;
    fn decode(&self, v: &serde_json::Value) -> Result<Self::Elem>;

    /// Total order on encodings; used for deterministic tie-breaking.
    fn order_key(&self, a: &Self::Elem) -> OrderKey;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    /// Roots of the polynomial with these little-endian coefficients, each
    /// listed once in `order_key` order. `None` when the search cannot be
    /// completed. Finite fields evaluate exhaustively.
    fn poly_roots(&self, coeffs: &[Self::Elem]) -> Option<Vec<Self::Elem>> {
        let elems = self.elements()?;
        Some(
            elems
                .into_iter()
                .filter(|x| {
                    let v = coeffs
                        .iter()
                        .rev()
                        .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c));
                    self.is_zero(&v)
                })
                .collect(),
        )
    }

    fn display(&self, a: &Self::Elem) -> String {
        match self.encode(a) {
            serde_json::Value::String(s) => s,
            v => v.to_string(),
        }
    }
}

/// Sort key for scalars: finite-field encodings are integers; rationals are
/// ordered by height first so small values come first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrderKey {
    Int(u64),
    Rational { height: u64, repr: String },
}

/// Serializable description of a base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldSpec {
    Prime { p: u64 },
    Extension { p: u64, k: u32, modulus: Vec<u64> },
    Rationals,
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime { p } | FieldSpec::Extension { p, .. } => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            FieldSpec::Prime { p } => Some(*p),
            FieldSpec::Extension { p, k, .. } => p.checked_pow(*k),
            FieldSpec::Rationals => None,
        }
    }

    pub fn build(&self) -> Result<AnyField> {
        Ok(match self {
            FieldSpec::Prime { p } => AnyField::Finite(FiniteField::prime(*p)?),
            FieldSpec::Extension { p, k, modulus } => {
                AnyField::Finite(FiniteField::with_modulus(*p, *k, modulus.clone())?)
            }
            FieldSpec::Rationals => AnyField::Rational(Rationals),
        })
    }

    /// Parses short names: `GF(5)`, `GF(9)`, `GF(3^2)`, `Q`.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .or_else(|| t.strip_prefix("gf("))
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidField(format!("cannot parse field `{t}`")))?;
        let bad = || Error::InvalidField(format!("cannot parse field `{t}`"));
        let (p, k) = if let Some((p, k)) = inner.split_once('^') {
            (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                k.trim().parse::<u32>().map_err(|_| bad())?,
            )
        } else {
            let q = inner.trim().parse::<u64>().map_err(|_| bad())?;
            prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?
        };
        if k == 1 {
            Ok(FieldSpec::Prime { p })
        } else {
            Ok(FiniteField::new(p, k)?.spec())
        }
    }

    pub fn short_name(&self) -> String {
        match self {
            FieldSpec::Prime { p } => format!("GF({p})"),
            FieldSpec::Extension { p, k, .. } => match p.checked_pow(*k) {
                Some(q) => format!("GF({q})"),
                None => format!("GF({p}^{k})"),
            },
            FieldSpec::Rationals => "Q".to_string(),
        }
    }
}

/// Runtime choice between the two concrete field families.
#[derive(Debug, Clone)]
pub enum AnyField {
    Finite(FiniteField),
    Rational(Rationals),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `q = p^k` with `p` prime, if it is one.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}
