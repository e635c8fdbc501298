use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::{Field, FieldSpec, OrderKey, Ring};
use crate::poly::Poly;
use crate::error::{Error, Result};

/// The rational numbers, as arbitrary-precision fractions in lowest terms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn cardinality(&self) -> Option<u64> {
        None
    }

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    /// Small-height rationals: numerator in -4..=4, denominator in 1..=3.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let n: i64 = rng.gen_range(-4..=4);
        let d: i64 = rng.gen_range(1..=3);
        rational(n, d)
    }

    fn frobenius_root(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }

    fn encode(&self, a: &BigRational) -> serde_json::Value {
        serde_json::Value::String(a.to_string())
    }

    fn decode(&self, v: &serde_json::Value) -> Result<BigRational> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Serde(format!("rational scalars are strings, got {v}")))?;
        let parsed = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| Error::Serde(format!("bad rational {s}")))?;
                let d: BigInt = d.parse().map_err(|_| Error::Serde(format!("bad rational {s}")))?;
                if d.is_zero() {
                    return Err(Error::Serde(format!("zero denominator in {s}")));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(
                s.parse().map_err(|_| Error::Serde(format!("bad rational {s}")))?,
            ),
        };
        // reject non-canonical spellings so the encoding stays bijective
        if parsed.to_string() != s {
            return Err(Error::Serde(format!("non-canonical rational {s}")));
        }
        Ok(parsed)
    }

    fn poly_roots(&self, coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut r = rational_roots(coeffs);
        r.sort_by_key(|a| self.order_key(a));
        Some(r)
    }

    fn order_key(&self, a: &BigRational) -> OrderKey {
        let h = a.numer().abs().max(a.denom().clone());
        let height = u64::try_from(h).unwrap_or(u64::MAX);
        let sign = if a.is_negative() { 1 } else { 0 };
        OrderKey::Rational {
            height,
            repr: format!("{sign}{}", a.abs()),
        }
    }
}

/// All rational roots, without multiplicity. Real roots of the squarefree
/// part are isolated with a Sturm sequence; an interval narrower than 1/aₙ²
/// holds at most one fraction with denominator dividing aₙ, which is then the
/// simplest fraction in it.
pub(crate) fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let q = Rationals;
    let mut p = Poly::new(&q, coeffs.to_vec());
    let mut roots = Vec::new();
    if p.is_zero() {
        return roots;
    }
    if let Some(low) = p.coeffs().iter().position(|c| !c.is_zero()).filter(|&l| l > 0) {
        roots.push(BigRational::zero());
        p = p.div_x_power(&q, low).expect("divisible by X^low");
    }
    let sf = p.divrem(&q, &p.gcd(&q, &p.derivative(&q))).expect("nonzero gcd").0.monic(&q);
    let n = match sf.degree() {
        Some(0) | None => return roots,
        Some(n) => n,
    };
    let denom_lcm = sf.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let an = BigRational::from_integer(denom_lcm);
    let eps = (&an * &an).recip();
    let mut sturm = vec![sf.clone(), sf.derivative(&q)];
    while let Some(last) = sturm.last().filter(|x| x.degree().is_some_and(|d| d > 0)) {
        let r = sturm[sturm.len() - 2].rem(&q, last).neg(&q);
        if r.is_zero() {
            break;
        }
        sturm.push(r);
    }
    let variations = |x: &BigRational| {
        let signs: Vec<bool> = sturm
            .iter()
            .map(|s| s.eval(&q, x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let bound = sf.coeffs()[..n].iter().map(|c| c.abs()).fold(BigRational::zero(), |m, c| m.max(c)) + BigRational::one();
    let mut stack = vec![(-bound.clone(), bound)];
    let two = BigRational::from_integer(BigInt::from(2));
    while let Some((mut lo, mut hi)) = stack.pop() {
        let mut v_lo = variations(&lo);
        let count = v_lo.saturating_sub(variations(&hi));
        if count > 1 {
            let mid = (&lo + &hi) / &two;
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
            continue;
        }
        if count == 0 {
            continue;
        }
        // one root in (lo, hi]: the simplest fraction is tried at every step
        loop {
            let s = simplest_between(&lo, &hi);
            if sf.eval(&q, &s).is_zero() {
                if !roots.contains(&s) {
                    roots.push(s);
                }
                break;
            }
            if &hi - &lo < eps {
                break;
            }
            let mid = (&lo + &hi) / &two;
            let v_mid = variations(&mid);
            if v_lo > v_mid {
                hi = mid;
            } else {
                lo = mid;
                v_lo = v_mid;
            }
        }
    }
    roots
}

/// The fraction with least denominator in [lo, hi].
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    if !lo.is_positive() && !hi.is_negative() {
        return BigRational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let fl = lo.floor();
    fl.clone() + simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip()).recip()
}
