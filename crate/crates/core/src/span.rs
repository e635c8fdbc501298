//! Linear algebra on spans of square matrices, shared by the algebra layers.

use crate::field::Field;
use crate::linalg::Subspace;
use crate::matrix::Matrix;

pub(crate) fn flat<E: Clone + PartialEq>(m: &Matrix<E>) -> Vec<E> {
    m.as_slice().to_vec()
}

pub(crate) fn unflat<E: Clone + PartialEq>(n: usize, v: Vec<E>) -> Matrix<E> {
    Matrix::from_flat(n, n, v).expect("length n²")
}

pub(crate) fn combine<F: Field>(f: &F, n: usize, mats: &[Matrix<F::Elem>], coeffs: &[F::Elem]) -> Matrix<F::Elem> {
    let mut out = Matrix::zeros(f, n, n);
    for (m, c) in mats.iter().zip(coeffs) {
        if f.is_zero(c) {
            continue;
        }
        out = out.add(f, &m.scale(f, c));
    }
    out
}

/// Keeps the linearly independent matrices, in order.
pub(crate) fn independent<F: Field>(
    f: &F,
    n: usize,
    mats: impl IntoIterator<Item = Matrix<F::Elem>>,
) -> (Vec<Matrix<F::Elem>>, Subspace<F::Elem>) {
    let mut s = Subspace::zero(n * n);
    let mut out = Vec::new();
    for m in mats {
        if s.push(f, flat(&m)) {
            out.push(m);
        }
    }
    (out, s)
}

/// Basis of `{x ∈ span(within) : map(x) = 0}` for a linear `map`.
pub(crate) fn kernel_within<F: Field>(
    f: &F,
    within: &[Matrix<F::Elem>],
    map: impl Fn(&Matrix<F::Elem>) -> Matrix<F::Elem>,
) -> Vec<Matrix<F::Elem>> {
    if within.is_empty() {
        return Vec::new();
    }
    let n = within[0].rows();
    let images: Vec<Vec<F::Elem>> = within.iter().map(|z| flat(&map(z))).collect();
    let rows = images[0].len();
    let mat = Matrix::from_fn(rows, within.len(), |r, c| images[c][r].clone());
    mat.kernel(f)
        .into_iter()
        .map(|k| combine(f, n, within, &k))
        .collect()
}

/// Basis of the elements of `span(within)` commuting with every element of
/// `with`, narrowing the candidate space one element at a time.
pub(crate) fn commutant<F: Field>(
    f: &F,
    within: &[Matrix<F::Elem>],
    with: impl IntoIterator<Item = Matrix<F::Elem>>,
) -> Vec<Matrix<F::Elem>> {
    let mut cand = within.to_vec();
    for s in with {
        if cand.is_empty() {
            break;
        }
        cand = kernel_within(f, &cand, |z| z.commutator(f, &s));
    }
    cand
}

/// Basis of the multiplicative closure of `span(start)`.
pub(crate) fn closure<F: Field>(f: &F, n: usize, start: Vec<Matrix<F::Elem>>) -> Vec<Matrix<F::Elem>> {
    let (mut basis, mut space) = independent(f, n, start);
    let mut i = 0;
    while i < basis.len() {
        let x = basis[i].clone();
        let mut j = 0;
        while j <= i {
            let y = basis[j].clone();
            for p in [x.mul(f, &y), y.mul(f, &x)] {
                if space.push(f, flat(&p)) {
                    basis.push(p);
                }
            }
            j += 1;
        }
        i += 1;
    }
    basis
}

/// A subspace of matrices with its basis kept alongside the echelon data.
#[derive(Debug, Clone)]
pub struct MatrixSpan<E> {
    basis: Vec<Matrix<E>>,
    space: Subspace<E>,
}

impl<E: Clone + PartialEq> MatrixSpan<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, n: usize, mats: impl IntoIterator<Item = Matrix<E>>) -> Self {
        let (basis, space) = independent(f, n, mats);
        MatrixSpan { basis, space }
    }

    pub fn basis(&self) -> &[Matrix<E>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, x: &Matrix<E>) -> bool {
        self.space.contains(f, x.as_slice())
    }

    pub fn coords<F: Field<Elem = E>>(&self, f: &F, x: &Matrix<E>) -> Option<Vec<E>> {
        self.space.coords(f, x.as_slice())
    }

    pub fn element<F: Field<Elem = E>>(&self, f: &F, coeffs: &[E]) -> Matrix<E> {
        let n = (self.space.ambient() as f64).sqrt() as usize;
        combine(f, n, &self.basis, coeffs)
    }

    pub fn contains_span<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> bool {
        o.basis.iter().all(|b| self.contains(f, b))
    }

    pub fn intersect<F: Field<Elem = E>>(&self, f: &F, o: &Self) -> Self {
        let n = (self.space.ambient() as f64).sqrt() as usize;
        let s = self.space.intersect(f, &o.space);
        MatrixSpan::new(f, n, s.basis().iter().map(|v| unflat(n, v.clone())))
    }
}

impl<E: Clone + PartialEq> MatrixSpan<E> {
    fn side(&self) -> usize {
        (self.space.ambient() as f64).sqrt() as usize
    }

    /// The same span with its reduced row echelon basis (entries read
    /// row-major). Coordinates in this basis are the entries at the pivot
    /// positions, so lexicographic order on coordinates is lexicographic
    /// order on matrix entries.
    pub fn echelon<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let n = self.side();
        if self.basis.is_empty() {
            return self.clone();
        }
        let mut m = Matrix::from_rows(self.basis.iter().map(flat).collect()).expect("rectangular");
        let pivots = m.rref(f);
        MatrixSpan::new(f, n, (0..pivots.len()).map(|i| unflat(n, m.row(i).to_vec())))
    }
}

/// Searches the elements of `span` in canonical order (see
/// [`MatrixSpan::echelon`]) until `test` accepts one.
pub(crate) fn search_span<F: Field, T>(
    f: &F,
    span: &MatrixSpan<F::Elem>,
    opts: &crate::search::SearchOptions,
    what: &str,
    mut test: impl FnMut(Matrix<F::Elem>) -> Option<T>,
) -> crate::error::Result<T> {
    let canon = span.echelon(f);
    let n = canon.side();
    crate::search::search(f, canon.dim(), opts, what, |c| test(combine(f, n, canon.basis(), c)))
}
