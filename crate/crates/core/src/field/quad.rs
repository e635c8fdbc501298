use super::{Field, Ring};

/// The quadratic étale algebra `F[θ]/(θ² − θ − c)`, elements `a + bθ` stored
/// as `(a, b)`. Requires `4c + 1 ≠ 0`. Used for the centre of unitary models
/// and for scalars of centralizers of quadratic subfields.
#[derive(Debug, Clone)]
pub struct QuadRing<F: Field> {
    base: F,
    c: F::Elem,
}

impl<F: Field> QuadRing<F> {
    pub fn new(base: F, c: F::Elem) -> Self {
        QuadRing { base, c }
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn c(&self) -> &F::Elem {
        &self.c
    }

    /// γ: θ ↦ 1 − θ.
    pub fn conj(&self, x: &(F::Elem, F::Elem)) -> (F::Elem, F::Elem) {
        let f = &self.base;
        (f.add(&x.0, &x.1), f.neg(&x.1))
    }

    pub fn norm(&self, x: &(F::Elem, F::Elem)) -> F::Elem {
        let p = self.mul(x, &self.conj(x));
        debug_assert!(self.base.is_zero(&p.1));
        p.0
    }

    pub fn embed(&self, a: &F::Elem) -> (F::Elem, F::Elem) {
        (a.clone(), self.base.zero())
    }

    /// `Some(a)` when `x = a + 0θ`.
    pub fn in_base(&self, x: &(F::Elem, F::Elem)) -> Option<F::Elem> {
        self.base.is_zero(&x.1).then(|| x.0.clone())
    }

    /// Whether θ² − θ − c has no root in F (finite fields only; `None` for
    /// infinite fields).
    pub fn is_field(&self) -> Option<bool> {
        let f = &self.base;
        let elems = f.elements()?;
        Some(!elems.iter().any(|x| {
            let v = f.sub(&f.sub(&f.mul(x, x), x), &self.c);
            f.is_zero(&v)
        }))
    }

    pub fn inv(&self, x: &(F::Elem, F::Elem)) -> Option<(F::Elem, F::Elem)> {
        let n = self.base.inv(&self.norm(x))?;
        let y = self.conj(x);
        Some((self.base.mul(&y.0, &n), self.base.mul(&y.1, &n)))
    }

    /// Square root in characteristic 2, where squaring is additive:
    /// (a + bθ)² = a² + b²c + b²θ.
    pub fn sqrt_char2(&self, x: &(F::Elem, F::Elem)) -> Option<(F::Elem, F::Elem)> {
        let f = &self.base;
        let b = f.frobenius_root(&x.1)?;
        let a = f.frobenius_root(&f.sub(&x.0, &f.mul(&f.mul(&b, &b), &self.c)))?;
        let r = (a, b);
        (self.mul(&r, &r) == *x).then_some(r)
    }

    /// The 2×2 regular representation of `a + bθ` on the basis (1, θ).
    pub fn regular_block(&self, x: &(F::Elem, F::Elem)) -> [[F::Elem; 2]; 2] {
        let f = &self.base;
        let (a, b) = x;
        [
            [a.clone(), f.mul(b, &self.c)],
            [b.clone(), f.add(a, b)],
        ]
    }
}

impl<F: Field> Ring for QuadRing<F> {
    type Elem = (F::Elem, F::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.base.zero())
    }

    fn one(&self) -> Self::Elem {
        (self.base.one(), self.base.zero())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.base.add(&a.1, &b.1))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.sub(&a.0, &b.0), self.base.sub(&a.1, &b.1))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.base.neg(&a.1))
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        // (a + bθ)(a' + b'θ) = aa' + bb'c + (ab' + ba' + bb')θ
        let f = &self.base;
        let bb = f.mul(&x.1, &y.1);
        (
            f.add(&f.mul(&x.0, &y.0), &f.mul(&bb, &self.c)),
            f.add(&f.add(&f.mul(&x.0, &y.1), &f.mul(&x.1, &y.0)), &bb),
        )
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        (self.base.from_i64(n), self.base.zero())
    }
}
