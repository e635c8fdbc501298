//! The quadratic form c₂ on symmetrized elements in capacity 2.

use super::algebra::AlgebraWithInvolution;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct QuadraticFormData<F: Field> {
    /// Basis of V = Syms(σ).
    pub space_basis: Vec<Matrix<F::Elem>>,
    /// q(v_i).
    pub values: Vec<F::Elem>,
    /// Gram matrix of b_q(v_i, v_j) = q(v_i + v_j) − q(v_i) − q(v_j).
    pub polar: Matrix<F::Elem>,
    /// rad(b_q), in coordinates.
    pub polar_radical: Vec<Vec<F::Elem>>,
    /// rad(q) = {x ∈ rad(b_q) | q(x) = 0}, in coordinates.
    pub radical: Vec<Vec<F::Elem>>,
    field: F,
}

impl<F: Field> QuadraticFormData<F> {
    /// q(Σ x_i v_i) = Σ x_i² q(v_i) + Σ_{i<j} x_i x_j b(v_i, v_j).
    pub fn evaluate(&self, x: &[F::Elem]) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..x.len() {
            acc = f.add(&acc, &f.mul(&f.mul(&x[i], &x[i]), &self.values[i]));
            for j in i + 1..x.len() {
                acc = f.add(&acc, &f.mul(&f.mul(&x[i], &x[j]), self.polar.get(i, j)));
            }
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.space_basis.len()
    }

    /// rad(q) = 0 and dim rad(b_q) ≤ 1.
    pub fn is_nondegenerate(&self) -> bool {
        self.radical.is_empty() && self.polar_radical.len() <= 1
    }
}

/// c₂ restricted to Syms(σ) for an algebra of capacity 2.
pub fn cap2_form<F: Field>(a: &AlgebraWithInvolution<F>) -> Result<QuadraticFormData<F>> {
    let f = a.field();
    if a.capacity() != 2 {
        return Err(Error::Precondition(format!("capacity {} ≠ 2", a.capacity())));
    }
    let basis = a.syms().basis().to_vec();
    let q = |x: &Matrix<F::Elem>| -> Result<F::Elem> { Ok(a.chi(x)?.c[1].clone()) };
    let values = basis.iter().map(&q).collect::<Result<Vec<_>>>()?;
    let k = basis.len();
    let mut polar = Matrix::zeros(f, k, k);
    for i in 0..k {
        for j in 0..k {
            let v = if i == j {
                f.mul(&f.from_i64(2), &values[i])
            } else {
                let s = q(&basis[i].add(f, &basis[j]))?;
                f.sub(&f.sub(&s, &values[i]), &values[j])
            };
            polar.set(i, j, v);
        }
    }
    // q(x) = x·x̄ with x̄ = c₁(x) − x
    for (x, v) in basis.iter().zip(&values) {
        let c1 = a.chi(x)?.c[0].clone();
        let bar = a.scalar(&c1).sub(f, x);
        if x.mul(f, &bar) != a.scalar(v) {
            return Err(Error::Verification("c₂(x) ≠ x·x̄".into()));
        }
    }
    let polar_radical = polar.kernel(f);
    let radical = if f.characteristic() == 2 {
        // on rad(b_q), q(Σ y_i r_i) = Σ y_i² q(r_i) = (Σ y_i √q(r_i))², a
        // linear condition after taking square roots
        let roots: Vec<F::Elem> = polar_radical
            .iter()
            .map(|r| {
                let qr = eval_coords(f, &values, &polar, r);
                f.frobenius_root(&qr).expect("perfect field")
            })
            .collect();
        let m = Matrix::from_fn(1, roots.len(), |_, j| roots[j].clone());
        if roots.is_empty() {
            Vec::new()
        } else {
            m.kernel(f)
                .into_iter()
                .map(|y| combine_vecs(f, k, &polar_radical, &y))
                .collect()
        }
    } else {
        polar_radical.clone()
    };
    let data = QuadraticFormData {
        space_basis: basis,
        values,
        polar,
        polar_radical,
        radical,
        field: f.clone(),
    };
    if !data.is_nondegenerate() {
        return Err(Error::Verification("c₂ is degenerate".into()));
    }
    Ok(data)
}

fn eval_coords<F: Field>(f: &F, values: &[F::Elem], polar: &Matrix<F::Elem>, x: &[F::Elem]) -> F::Elem {
    let mut acc = f.zero();
    for i in 0..x.len() {
        acc = f.add(&acc, &f.mul(&f.mul(&x[i], &x[i]), &values[i]));
        for j in i + 1..x.len() {
            acc = f.add(&acc, &f.mul(&f.mul(&x[i], &x[j]), polar.get(i, j)));
        }
    }
    acc
}

fn combine_vecs<F: Field>(f: &F, n: usize, vs: &[Vec<F::Elem>], c: &[F::Elem]) -> Vec<F::Elem> {
    crate::linalg::combine(f, n, vs, c)
}
