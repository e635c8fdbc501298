use rand::Rng;

use super::algebra::{random_in, AlgebraWithInvolution};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::span::{closure, flat, MatrixSpan};

/// A unital subalgebra of an algebra with involution. Flags are computed at
/// construction.
#[derive(Debug, Clone)]
pub struct Subalgebra<F: Field> {
    field: F,
    n: usize,
    span: MatrixSpan<F::Elem>,
    unit: Matrix<F::Elem>,
    commutative: bool,
    etale: bool,
    in_symm: bool,
}

impl<F: Field> Subalgebra<F> {
    /// The subalgebra spanned by `basis`, which must be multiplicatively
    /// closed and contain an identity for itself.
    pub fn new(a: &AlgebraWithInvolution<F>, basis: Vec<Matrix<F::Elem>>) -> Result<Self> {
        let f = a.field();
        let n = a.ambient_size();
        if basis.iter().any(|b| !a.contains(b)) {
            return Err(Error::NotSubalgebra("element outside the algebra".into()));
        }
        let span = MatrixSpan::new(f, n, basis);
        if span.dim() == 0 {
            return Err(Error::NotSubalgebra("zero space".into()));
        }
        let b = span.basis();
        for x in b {
            for y in b {
                if !span.contains(f, &x.mul(f, y)) {
                    return Err(Error::NotSubalgebra("not multiplicatively closed".into()));
                }
            }
        }
        let unit = if span.contains(f, a.unit()) {
            a.unit().clone()
        } else {
            find_unit(f, n, b).ok_or_else(|| Error::NotSubalgebra("no identity element".into()))?
        };
        Ok(Self::finish(a, span, unit))
    }

    /// The unital subalgebra generated by `gens` (with A's unit).
    pub fn generated(a: &AlgebraWithInvolution<F>, gens: &[Matrix<F::Elem>]) -> Result<Self> {
        if gens.iter().any(|g| !a.contains(g)) {
            return Err(Error::NotInAlgebra);
        }
        let n = a.ambient_size();
        let mut start = vec![a.unit().clone()];
        start.extend(gens.iter().cloned());
        let basis = closure(a.field(), n, start);
        let span = MatrixSpan::new(a.field(), n, basis);
        Ok(Self::finish(a, span, a.unit().clone()))
    }

    /// The subalgebra generated by `gens` together with an existing
    /// subalgebra (both commutative in typical use).
    pub fn adjoin(&self, a: &AlgebraWithInvolution<F>, gens: &[Matrix<F::Elem>]) -> Result<Self> {
        let mut g = self.basis().to_vec();
        g.extend(gens.iter().cloned());
        Self::generated(a, &g)
    }

    fn finish(a: &AlgebraWithInvolution<F>, span: MatrixSpan<F::Elem>, unit: Matrix<F::Elem>) -> Self {
        let f = a.field();
        let b = span.basis();
        let commutative = b
            .iter()
            .enumerate()
            .all(|(i, x)| b[..i].iter().all(|y| x.mul(f, y) == y.mul(f, x)));
        let in_symm = b.iter().all(|x| a.is_symmetric(x));
        let mut s = Subalgebra {
            field: f.clone(),
            n: a.ambient_size(),
            span,
            unit,
            commutative,
            etale: false,
            in_symm,
        };
        s.etale = commutative && s.trace_form().rank(f) == s.dim();
        s
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_size(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Matrix<F::Elem>] {
        self.span.basis()
    }

    pub fn span(&self) -> &MatrixSpan<F::Elem> {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn unit(&self) -> &Matrix<F::Elem> {
        &self.unit
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_etale(&self) -> bool {
        self.etale
    }

    pub fn in_symm(&self) -> bool {
        self.in_symm
    }

    pub fn contains(&self, x: &Matrix<F::Elem>) -> bool {
        self.span.contains(&self.field, x)
    }

    pub fn coords(&self, x: &Matrix<F::Elem>) -> Option<Vec<F::Elem>> {
        self.span.coords(&self.field, x)
    }

    pub fn element(&self, c: &[F::Elem]) -> Matrix<F::Elem> {
        self.span.element(&self.field, c)
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Matrix<F::Elem> {
        random_in(&self.field, &self.span, rng)
    }

    /// Matrix of left multiplication by `x` in the stored basis.
    pub fn regular_matrix(&self, x: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let f = &self.field;
        let k = self.dim();
        let mut m = Matrix::zeros(f, k, k);
        for (j, b) in self.basis().iter().enumerate() {
            let c = self.coords(&x.mul(f, b)).expect("closed under multiplication");
            for (i, v) in c.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Tr_{L/F}(x).
    pub fn trace(&self, x: &Matrix<F::Elem>) -> F::Elem {
        self.regular_matrix(x).trace(&self.field)
    }

    /// Gram matrix of (x, y) ↦ Tr(xy).
    pub fn trace_form(&self) -> Matrix<F::Elem> {
        let f = &self.field;
        let b = self.basis();
        Matrix::from_fn(b.len(), b.len(), |i, j| self.trace(&b[i].mul(f, &b[j])))
    }

    /// Minimal polynomial of `x` over F, relative to this subalgebra's unit.
    pub fn min_poly(&self, x: &Matrix<F::Elem>) -> Poly<F::Elem> {
        min_poly(&self.field, self.n, &self.unit, x)
    }

    /// Whether every element of `o` lies here.
    pub fn contains_sub(&self, o: &Subalgebra<F>) -> bool {
        self.span.contains_span(&self.field, &o.span)
    }

    /// The image of this subalgebra in `target` under `map` applied to the
    /// basis.
    pub fn map_into<G: Field>(
        &self,
        target: &AlgebraWithInvolution<G>,
        map: impl Fn(&Matrix<F::Elem>) -> Matrix<G::Elem>,
    ) -> Result<Subalgebra<G>> {
        Subalgebra::new(target, self.basis().iter().map(map).collect())
    }
}

/// Minimal polynomial of `x` relative to the unit `e` (x = e x e assumed).
pub(crate) fn min_poly<F: Field>(f: &F, n: usize, e: &Matrix<F::Elem>, x: &Matrix<F::Elem>) -> Poly<F::Elem> {
    let mut powers = vec![e.clone()];
    let mut space = crate::linalg::Subspace::zero(n * n);
    space.push(f, flat(e));
    loop {
        let next = powers.last().unwrap().mul(f, x);
        match space.coords(f, next.as_slice()) {
            Some(c) => {
                // x^k = Σ c_i x^i
                let mut coeffs: Vec<_> = c.iter().map(|v| f.neg(v)).collect();
                coeffs.push(f.one());
                return Poly::new(f, coeffs);
            }
            None => {
                space.push(f, flat(&next));
                powers.push(next);
            }
        }
    }
}

fn find_unit<F: Field>(f: &F, n: usize, b: &[Matrix<F::Elem>]) -> Option<Matrix<F::Elem>> {
    // Σ x_i b_i b_j = b_j and Σ x_i b_j b_i = b_j for all j
    let k = b.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for bj in b {
        let left: Vec<Vec<F::Elem>> = b.iter().map(|bi| flat(&bi.mul(f, bj))).collect();
        let right: Vec<Vec<F::Elem>> = b.iter().map(|bi| flat(&bj.mul(f, bi))).collect();
        for side in [left, right] {
            for r in 0..n * n {
                rows.push((0..k).map(|i| side[i][r].clone()).collect::<Vec<_>>());
                rhs.push(bj.as_slice()[r].clone());
            }
        }
    }
    let m = Matrix::from_rows(rows).ok()?;
    let x = m.solve(f, &rhs)?;
    Some(crate::span::combine(f, n, b, &x))
}
