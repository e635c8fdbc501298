//! Subspaces of F^n with membership and coordinate queries.

use crate::field::Field;
use crate::matrix::Matrix;

/// A subspace of F^n spanned by a fixed, linearly independent basis.
///
/// The basis is kept as given; a reduced echelon copy together with the
/// change-of-basis rows answers membership and coordinate queries.
#[derive(Debug, Clone)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    echelon: Vec<Vec<E>>,
    pivots: Vec<usize>,
    /// echelon[k] = Σ_j transform[k][j] · basis[j]
    transform: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            echelon: Vec::new(),
            pivots: Vec::new(),
            transform: Vec::new(),
        }
    }

    /// Span of `vectors`, keeping the independent ones in order.
    pub fn span<F: Field<Elem = E>>(f: &F, ambient: usize, vectors: impl IntoIterator<Item = Vec<E>>) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.push(f, v);
        }
        s
    }

    /// Adds `v` to the basis if it is independent; returns whether it was.
    pub fn push<F: Field<Elem = E>>(&mut self, f: &F, v: Vec<E>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let k = self.basis.len();
        let (mut r, mut t) = self.reduce(f, &v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        // r = v − Σ c_i echelon_i, so in basis coordinates t := e_k − Σ c_i transform_i
        for row in &mut self.transform {
            row.push(f.zero());
        }
        t.push(f.one());
        let inv = f.inv(&r[p]).unwrap();
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for x in t.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // clear column p in the existing echelon rows
        for (row, trow) in self.echelon.iter_mut().zip(self.transform.iter_mut()) {
            let c = row[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                *x = f.sub(x, &f.mul(&c, y));
            }
            for (x, y) in trow.iter_mut().zip(&t) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        self.echelon.push(r);
        self.transform.push(t);
        self.pivots.push(p);
        self.basis.push(v);
        debug_assert_eq!(self.basis.len(), k + 1);
        true
    }

    /// Residual of `v` modulo the span and the (negated) basis coordinates of
    /// the removed part, in terms of the current basis.
    fn reduce<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> (Vec<E>, Vec<E>) {
        let mut r = v.to_vec();
        let mut t = vec![f.zero(); self.basis.len()];
        for ((row, trow), &p) in self.echelon.iter().zip(&self.transform).zip(&self.pivots) {
            let c = r[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in r.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&c, y));
            }
            for (x, y) in t.iter_mut().zip(trow) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        (r, t)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v).0.iter().all(|x| f.is_zero(x))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coords<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        let (r, t) = self.reduce(f, v);
        if !r.iter().all(|x| f.is_zero(x)) {
            return None;
        }
        Some(t.iter().map(|x| f.neg(x)).collect())
    }

    pub fn combine<F: Field<Elem = E>>(&self, f: &F, coeffs: &[E]) -> Vec<E> {
        combine(f, self.ambient, &self.basis, coeffs)
    }

    pub fn contains_space<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> bool {
        o.basis.iter().all(|v| self.contains(f, v))
    }

    pub fn sum<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        Self::span(f, self.ambient, self.basis.iter().chain(&o.basis).cloned())
    }

    pub fn intersect<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        // solve Σ a_i u_i = Σ b_j w_j
        let (n, m) = (self.dim(), o.dim());
        if n == 0 || m == 0 {
            return Self::zero(self.ambient);
        }
        let mat = Matrix::from_fn(self.ambient, n + m, |r, c| {
            if c < n {
                self.basis[c][r].clone()
            } else {
                f.neg(&o.basis[c - n][r])
            }
        });
        let vs = mat
            .kernel(f)
            .into_iter()
            .map(|k| self.combine(f, &k[..n]));
        Self::span(f, self.ambient, vs)
    }

    /// Solutions of the homogeneous linear system `rows · x = 0` expressed
    /// back in the ambient space, restricted to this subspace: the subspace
    /// of elements Σ x_i basis_i with `map(x)` = 0, where `map` is given by
    /// the images of the basis vectors.
    pub fn kernel_of<F: Field<Elem = E>>(&self, f: &F, images: &[Vec<E>]) -> Self {
        assert_eq!(images.len(), self.dim());
        if images.is_empty() {
            return Self::zero(self.ambient);
        }
        let rows = images[0].len();
        let mat = Matrix::from_fn(rows, images.len(), |r, c| images[c][r].clone());
        Self::span(
            f,
            self.ambient,
            mat.kernel(f).into_iter().map(|k| self.combine(f, &k)),
        )
    }
}

pub fn combine<F: Field>(f: &F, n: usize, basis: &[Vec<F::Elem>], coeffs: &[F::Elem]) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); n];
    for (b, c) in basis.iter().zip(coeffs) {
        if f.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o = f.add(o, &f.mul(c, x));
        }
    }
    out
}
