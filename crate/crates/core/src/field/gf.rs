use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::{is_prime, moduli, prime_factors, Field, FieldSpec, OrderKey, Ring};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest field order for which log/antilog tables are built.
const TABLE_LIMIT: u64 = 1 << 20;
/// Largest field order accepted at all.
const ORDER_LIMIT: u64 = 1 << 40;

/// GF(p^k). Elements are encoded as integers `sum d_i p^i` where
/// `d_0 + d_1 t + ... + d_{k-1} t^{k-1}` is the residue modulo the stored
/// irreducible modulus. For k = 1 this is the usual residue in `0..p`.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

struct Inner {
    p: u64,
    k: u32,
    q: u64,
    /// little-endian, monic, degree k (for k = 1 this is `[0, 1]`)
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u64>,
    log: Vec<u64>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {p} too large")));
        }
        Ok(FiniteField {
            inner: Arc::new(Inner {
                p,
                k: 1,
                q: p,
                modulus: vec![0, 1],
                tables: None,
            }),
        })
    }

    /// GF(p^k) with the shipped modulus, or the smallest irreducible monic
    /// polynomial (in encoding order) when none is shipped.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if k == 1 {
            return Self::prime(p);
        }
        if let Some(m) = moduli::shipped(p, k) {
            return Self::with_modulus(p, k, m.to_vec());
        }
        let base = Self::prime(p)?;
        let q = checked_order(p, k)?;
        // monic degree-k candidates: the lower coefficients run over 0..q
        for low in 0..q {
            let mut m = base.digits(low, k as usize);
            m.push(1);
            if m[0] != 0 && is_irreducible(&base, &m) {
                return Self::with_modulus(p, k, m);
            }
        }
        Err(Error::InvalidField(format!("no irreducible polynomial of degree {k} over GF({p})")))
    }

    /// GF(p^k) with an explicit modulus (little-endian, monic, degree k),
    /// verified irreducible.
    pub fn with_modulus(p: u64, k: u32, modulus: Vec<u64>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let base = Self::prime(p)?;
        if k == 1 && modulus == [0, 1] {
            return Ok(base);
        }
        if modulus.len() != k as usize + 1 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField(format!(
                "modulus must be monic of degree {k}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus coefficient out of range".into()));
        }
        if !is_irreducible(&base, &modulus) {
            return Err(Error::ReducibleModulus);
        }
        if k == 1 {
            // X - r with r != 0 still describes GF(p), but keep one canonical form
            return Ok(base);
        }
        let q = checked_order(p, k)?;
        let mut field = FiniteField {
            inner: Arc::new(Inner {
                p,
                k,
                q,
                modulus,
                tables: None,
            }),
        };
        if q <= TABLE_LIMIT {
            let tables = field.build_tables();
            Arc::get_mut(&mut field.inner).unwrap().tables = Some(tables);
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.k
    }

    pub fn order(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn digits(&self, a: u64, k: usize) -> Vec<u64> {
        let p = self.inner.p;
        let mut out = Vec::with_capacity(k);
        let mut r = a;
        for _ in 0..k {
            out.push(r % p);
            r /= p;
        }
        out
    }

    fn from_digits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &x| acc * self.inner.p + x)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let p = self.inner.p;
        let k = self.inner.k as usize;
        if k == 1 {
            return ((a as u128 * b as u128) % p as u128) as u64;
        }
        let da = self.digits(a, k);
        let db = self.digits(b, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in da.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let m = &self.inner.modulus;
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            // subtract c * t^{top-k} * modulus
            for (i, mi) in m.iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (p - (c * mi) % p)) % p;
            }
        }
        self.from_digits(&prod[..k])
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let q = self.inner.q;
        let factors = prime_factors(q - 1);
        let gen = (2..q)
            .find(|&g| factors.iter().all(|l| self.pow_slow(g, (q - 1) / l) != 1))
            .unwrap_or(1);
        let mut exp = vec![0u64; (q - 1) as usize];
        let mut log = vec![0u64; q as usize];
        let mut x = 1u64;
        for i in 0..(q - 1) {
            exp[i as usize] = x;
            log[x as usize] = i;
            x = self.mul_slow(x, gen);
        }
        Tables { exp, log }
    }

    /// Embedding of `self` into GF(q^m), together with the target field.
    pub fn extension(&self, m: u32) -> Result<(FiniteField, FieldEmbedding)> {
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let target = FiniteField::new(self.inner.p, self.inner.k * m)?;
        let generator_image = if self.inner.k == 1 {
            None
        } else {
            // a root of our modulus inside the target
            let m = &self.inner.modulus;
            let root = (0..target.order())
                .find(|&r| {
                    let mut acc = target.zero();
                    for c in m.iter().rev() {
                        acc = target.add(&target.mul(&acc, &r), c);
                    }
                    acc == 0
                })
                .ok_or_else(|| Error::InvalidField("no embedding found".into()))?;
            Some(root)
        };
        let emb = FieldEmbedding {
            source: self.clone(),
            target: target.clone(),
            generator_image,
        };
        Ok((target, emb))
    }
}

/// A field homomorphism GF(p^k) -> GF(p^{km}).
#[derive(Debug, Clone)]
pub struct FieldEmbedding {
    source: FiniteField,
    target: FiniteField,
    generator_image: Option<u64>,
}

impl FieldEmbedding {
    pub fn map(&self, a: &u64) -> u64 {
        match self.generator_image {
            None => *a,
            Some(r) => {
                let d = self.source.digits(*a, self.source.degree() as usize);
                let mut acc = 0u64;
                for c in d.iter().rev() {
                    acc = self.target.add(&self.target.mul(&acc, &r), c);
                }
                acc
            }
        }
    }

    pub fn target(&self) -> &FiniteField {
        &self.target
    }
}

fn checked_order(p: u64, k: u32) -> Result<u64> {
    match p.checked_pow(k) {
        Some(q) if q <= ORDER_LIMIT => Ok(q),
        _ => Err(Error::InvalidField(format!("GF({p}^{k}) is too large"))),
    }
}

/// No factor of degree <= deg/2: gcd(X^{p^i} - X, f) = 1 for i <= deg/2.
fn is_irreducible(base: &FiniteField, coeffs: &[u64]) -> bool {
    let f = Poly::new(base, coeffs.to_vec());
    let deg = match f.degree() {
        Some(d) => d,
        None => return false,
    };
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    let x = Poly::x(base);
    let mut xp = x.clone();
    for _ in 0..deg / 2 {
        xp = xp.pow_mod(base, base.p(), &f);
        let g = xp.sub(base, &x).gcd(base, &f);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

impl Ring for FiniteField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let p = self.inner.p;
        if self.inner.k == 1 {
            return (a + b) % p;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut x, mut y, mut out, mut place) = (*a, *b, 0u64, 1u64);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        out
    }

    fn neg(&self, a: &u64) -> u64 {
        let p = self.inner.p;
        if p == 2 {
            return *a;
        }
        if self.inner.k == 1 {
            return (p - a) % p;
        }
        let (mut x, mut out, mut place) = (*a, 0u64, 1u64);
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        out
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        match &self.inner.tables {
            Some(t) => {
                let n = self.inner.q - 1;
                t.exp[((t.log[*a as usize] + t.log[*b as usize]) % n) as usize]
            }
            None => self.mul_slow(*a, *b),
        }
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.inner.p as i64) as u64
    }
}

impl Field for FiniteField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        match &self.inner.tables {
            Some(t) => {
                let n = self.inner.q - 1;
                Some(t.exp[((n - t.log[*a as usize]) % n) as usize])
            }
            None => Some(self.pow_slow(*a, self.inner.q - 2)),
        }
    }

    fn characteristic(&self) -> u64 {
        self.inner.p
    }

    fn cardinality(&self) -> Option<u64> {
        Some(self.inner.q)
    }

    fn spec(&self) -> FieldSpec {
        if self.inner.k == 1 {
            FieldSpec::Prime { p: self.inner.p }
        } else {
            FieldSpec::Extension {
                p: self.inner.p,
                k: self.inner.k,
                modulus: self.inner.modulus.clone(),
            }
        }
    }

    fn elements(&self) -> Option<Vec<u64>> {
        (self.inner.q <= 1 << 24).then(|| (0..self.inner.q).collect())
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.inner.q)
    }

    fn frobenius_root(&self, a: &u64) -> Option<u64> {
        if self.inner.k == 1 {
            return Some(*a);
        }
        Some(self.pow(a, self.inner.p.pow(self.inner.k - 1)))
    }

    fn encode(&self, a: &u64) -> serde_json::Value {
        serde_json::Value::from(*a)
    }

    fn decode(&self, v: &serde_json::Value) -> Result<u64> {
        match v.as_u64() {
            Some(a) if a < self.inner.q => Ok(a),
            _ => Err(Error::Serde(format!("bad scalar {v} for GF({})", self.inner.q))),
        }
    }

    fn order_key(&self, a: &u64) -> OrderKey {
        OrderKey::Int(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fields() -> Vec<FiniteField> {
        vec![
            FiniteField::prime(2).unwrap(),
            FiniteField::prime(3).unwrap(),
            FiniteField::prime(5).unwrap(),
            FiniteField::new(2, 2).unwrap(),
            FiniteField::new(3, 2).unwrap(),
            FiniteField::new(2, 8).unwrap(),
        ]
    }

    #[test]
    fn shipped_moduli_are_irreducible() {
        for (p, k, m) in moduli::SHIPPED {
            let base = FiniteField::prime(*p).unwrap();
            assert!(is_irreducible(&base, m), "GF({p}^{k}) modulus {m:?}");
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // X^2 + 1 = (X + 1)^2 over GF(2)
        assert_eq!(
            FiniteField::with_modulus(2, 2, vec![1, 0, 1]).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(FiniteField::prime(6).is_err());
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for f in fields() {
            for _ in 0..200 {
                let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
                assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
                assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
                assert_eq!(
                    f.mul(&a, &f.add(&b, &c)),
                    f.add(&f.mul(&a, &b), &f.mul(&a, &c))
                );
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
                assert_eq!(f.mul(&a, &b), f.mul_slow(a, b));
            }
        }
    }

    #[test]
    fn frobenius_root_inverts_pth_power() {
        for f in fields() {
            for a in f.elements().unwrap().into_iter().take(300) {
                let r = f.frobenius_root(&a).unwrap();
                assert_eq!(f.pow(&r, f.p()), a);
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let (f16, emb) = f4.extension(2).unwrap();
        assert_eq!(f16.order(), 16);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(emb.map(&f4.mul(&a, &b)), f16.mul(&emb.map(&a), &emb.map(&b)));
                assert_eq!(emb.map(&f4.add(&a, &b)), f16.add(&emb.map(&a), &emb.map(&b)));
            }
        }
    }
}
