//! Dense univariate polynomials with exact coefficients.

use crate::error::{Error, Result};
use crate::field::{Field, Ring};
use crate::matrix::Matrix;

/// Little-endian coefficient list with no trailing zeros; the zero
/// polynomial has no coefficients and degree `None` (−∞).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn new<R: Ring<Elem = E>>(r: &R, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| r.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant<R: Ring<Elem = E>>(r: &R, c: E) -> Self {
        Self::new(r, vec![c])
    }

    pub fn one<R: Ring<Elem = E>>(r: &R) -> Self {
        Poly { coeffs: vec![r.one()] }
    }

    pub fn x<R: Ring<Elem = E>>(r: &R) -> Self {
        Poly { coeffs: vec![r.zero(), r.one()] }
    }

    /// X − a
    pub fn linear<R: Ring<Elem = E>>(r: &R, a: &E) -> Self {
        Poly { coeffs: vec![r.neg(a), r.one()] }
    }

    pub fn monomial<R: Ring<Elem = E>>(r: &R, c: E, n: usize) -> Self {
        let mut coeffs = vec![r.zero(); n];
        coeffs.push(c);
        Self::new(r, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff<R: Ring<Elem = E>>(&self, r: &R, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| r.zero())
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn is_monic<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.lead().is_some_and(|c| r.is_one(c))
    }

    pub fn add<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| r.add(&self.coeff(r, i), &o.coeff(r, i))).collect();
        Self::new(r, c)
    }

    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|i| r.sub(&self.coeff(r, i), &o.coeff(r, i))).collect();
        Self::new(r, c)
    }

    pub fn neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| r.neg(c)).collect(),
        }
    }

    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, s: &E) -> Self {
        Self::new(r, self.coeffs.iter().map(|c| r.mul(c, s)).collect())
    }

    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![r.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = r.add(&c[i + j], &r.mul(a, b));
            }
        }
        Self::new(r, c)
    }

    pub fn pow<R: Ring<Elem = E>>(&self, r: &R, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(r);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(r, &base);
            }
            base = base.mul(r, &base);
            e >>= 1;
        }
        acc
    }

    pub fn eval<R: Ring<Elem = E>>(&self, r: &R, x: &E) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(r.zero(), |acc, c| r.add(&r.mul(&acc, x), c))
    }

    /// Substitutes a square matrix, Horner style.
    pub fn eval_matrix<R: Ring<Elem = E>>(&self, r: &R, m: &Matrix<E>) -> Matrix<E> {
        let n = m.rows();
        let mut acc = Matrix::zeros(r, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(r, m).add(r, &Matrix::scalar(r, n, c.clone()));
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| r.mul(&r.from_i64(i as i64), c))
            .collect();
        Self::new(r, c)
    }

    /// p(X) ↦ p(X²)
    pub fn compose_square<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        let mut c = Vec::with_capacity(2 * self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            c.push(a.clone());
            if i + 1 < self.coeffs.len() {
                c.push(r.zero());
            }
        }
        Self::new(r, c)
    }

    /// p(X − a), i.e. the polynomial of `x + a` when `p` is that of `x`.
    pub fn shift<R: Ring<Elem = E>>(&self, r: &R, a: &E) -> Self {
        let lin = Poly::linear(r, a);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(r, &lin).add(r, &Self::constant(r, c.clone())))
    }

    /// The `f` with `p(X) = f(X²)`, or `None` when an odd coefficient is
    /// nonzero.
    pub fn even_part<R: Ring<Elem = E>>(&self, r: &R) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !r.is_zero(c)) {
            return None;
        }
        Some(Self::new(r, self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// Divides by X^k exactly; `None` when a low coefficient is nonzero.
    pub fn div_x_power<R: Ring<Elem = E>>(&self, r: &R, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !r.is_zero(c)) {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    pub fn map<R2: Ring, G: Fn(&E) -> R2::Elem>(&self, r2: &R2, g: G) -> Poly<R2::Elem> {
        Poly::new(r2, self.coeffs.iter().map(g).collect())
    }

    pub fn display<F: Field<Elem = E>>(&self, f: &F) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.display(c);
            let t = match (i, f.is_one(c)) {
                (0, _) => cs,
                (1, true) => "X".into(),
                (1, false) => format!("{cs}*X"),
                (_, true) => format!("X^{i}"),
                (_, false) => format!("{cs}*X^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

impl<E: Clone + PartialEq> Poly<E> {
    pub fn divrem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = f.inv(d.lead().unwrap()).unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![f.zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(&rem[top], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            quo[top - dd] = c.clone();
            for (i, di) in d.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(&rem[idx], &f.mul(&c, di));
            }
        }
        Ok((Self::new(f, quo), Self::new(f, rem)))
    }

    pub fn rem<F: Field<Elem = E>>(&self, f: &F, d: &Self) -> Self {
        self.divrem(f, d).expect("division by zero polynomial").1
    }

    pub fn monic<F: Field<Elem = E>>(&self, f: &F) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let li = f.inv(l).unwrap();
                self.scale(f, &li)
            }
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// Returns (g, s, t) with s·self + t·o = g monic gcd.
    pub fn ext_gcd<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(f, &r1).unwrap();
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(f, &q.mul(f, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(f, &q.mul(f, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let li = f.inv(&l).unwrap();
                (r0.scale(f, &li), s0.scale(f, &li), t0.scale(f, &li))
            }
        }
    }

    pub fn pow_mod<F: Field<Elem = E>>(&self, f: &F, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(f, m);
        let mut acc = Self::one(f).rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// Roots in the base field (exhaustive over finite fields, rational root
    /// theorem over ℚ). `None` if the search cannot be completed.
    pub fn roots<F: Field<Elem = E>>(&self, f: &F) -> Option<Vec<E>> {
        if self.is_zero() {
            return None;
        }
        f.poly_roots(&self.coeffs)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity<F: Field<Elem = E>>(&self, f: &F, a: &E) -> usize {
        let lin = Self::linear(f, a);
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            let (q, r) = p.divrem(f, &lin).unwrap();
            if !r.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }
}

/// gcd(p, p′) is constant.
pub fn poly_separable<F: Field>(f: &F, p: &Poly<F::Elem>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = p.derivative(f);
    Ok(p.gcd(f, &dp).degree() == Some(0))
}

/// Monic square root of a monic polynomial of even degree.
pub fn poly_sqrt_monic<F: Field>(f: &F, p: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
    let half = f.inv(&f.from_i64(2));
    poly_sqrt_monic_with(f, p, f.characteristic() == 2, half.as_ref(), |c| f.frobenius_root(c))
}

/// Square root over a ring: `half` is 1/2 when 2 is invertible; in
/// characteristic 2 `root` inverts squaring on coefficients.
pub fn poly_sqrt_monic_with<R: Ring>(
    r: &R,
    p: &Poly<R::Elem>,
    char_two: bool,
    half: Option<&R::Elem>,
    root: impl Fn(&R::Elem) -> Option<R::Elem>,
) -> Result<Poly<R::Elem>> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if !p.is_monic(r) || n % 2 == 1 {
        return Err(Error::NotASquare);
    }
    let m = n / 2;
    let q = if char_two {
        if p.coeffs().iter().skip(1).step_by(2).any(|c| !r.is_zero(c)) {
            return Err(Error::NotASquare);
        }
        let c = p
            .coeffs()
            .iter()
            .step_by(2)
            .map(|c| root(c).ok_or(Error::NotASquare))
            .collect::<Result<Vec<_>>>()?;
        Poly::new(r, c)
    } else {
        // match coefficients of q² from the top: the X^{n-k} coefficient is
        // 2 q_{m-k} + Σ_{0<i<k} q_{m-i} q_{m-k+i}
        let half = half.ok_or(Error::CharacteristicTooSmall)?;
        let mut q = vec![r.zero(); m + 1];
        q[m] = r.one();
        for k in 1..=m {
            let mut s = r.zero();
            for i in 1..k {
                s = r.add(&s, &r.mul(&q[m - i], &q[m - (k - i)]));
            }
            q[m - k] = r.mul(&r.sub(&p.coeff(r, n - k), &s), half);
        }
        Poly::new(r, q)
    };
    if q.mul(r, &q) != *p {
        return Err(Error::NotASquare);
    }
    Ok(q)
}

/// Resultant via the Sylvester determinant, with `b` taken at formal degree
/// `db` (which may exceed its true degree).
pub fn resultant_formal<F: Field>(
    f: &F,
    a: &Poly<F::Elem>,
    b: &Poly<F::Elem>,
    db: usize,
) -> F::Elem {
    let da = a.degree().unwrap_or(0);
    let n = da + db;
    if n == 0 {
        return f.one();
    }
    let mut s = Matrix::zeros(f, n, n);
    for row in 0..db {
        for i in 0..=da {
            s.set(row, row + i, a.coeff(f, da - i));
        }
    }
    for row in 0..da {
        for i in 0..=db {
            s.set(db + row, row + i, b.coeff(f, db - i));
        }
    }
    s.det(f).expect("square")
}

/// disc(p) = (−1)^{n(n−1)/2} · lc⁻¹ · Res_{n,n−1}(p, p′). Valid in every
/// characteristic because p′ is taken at formal degree n − 1.
pub fn poly_discriminant<F: Field>(f: &F, p: &Poly<F::Elem>) -> Result<F::Elem> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let res = resultant_formal(f, p, &p.derivative(f), n - 1);
    let lc_inv = f.inv(p.lead().unwrap()).unwrap();
    let mut d = f.mul(&res, &lc_inv);
    if (n * (n - 1) / 2) % 2 == 1 {
        d = f.neg(&d);
    }
    Ok(d)
}

/// Elementary symmetric functions e₁..e_n from power sums p₁..p_n by
/// Newton's identities: k·e_k = Σ_{i=1..k} (−1)^{i−1} e_{k−i} p_i.
pub fn newton_coeffs_from_power_sums<F: Field>(
    f: &F,
    powers: &[F::Elem],
    n: usize,
) -> Result<Vec<F::Elem>> {
    let ch = f.characteristic();
    if ch != 0 && ch as usize <= n {
        return Err(Error::CharacteristicTooSmall);
    }
    if powers.len() < n {
        return Err(Error::Dimension(format!("need {n} power sums, got {}", powers.len())));
    }
    let mut e = vec![f.one()];
    for k in 1..=n {
        let mut s = f.zero();
        for i in 1..=k {
            let t = f.mul(&e[k - i], &powers[i - 1]);
            s = if i % 2 == 1 { f.add(&s, &t) } else { f.sub(&s, &t) };
        }
        let kinv = f.inv(&f.from_i64(k as i64)).unwrap();
        e.push(f.mul(&s, &kinv));
    }
    Ok(e.split_off(1))
}
