//! Quadratic étale subalgebras: Artin–Schreier generators and the splitting
//! A = C ⊕ C′.

use super::algebra::AlgebraWithInvolution;
use super::subalgebra::Subalgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::span::MatrixSpan;

/// A generator u of a quadratic étale K with u² − u = c·1, in every
/// characteristic.
///
/// For k ∈ K ∖ F with k² = s + t k, u = α + βk satisfies u² − u ∈ F exactly
/// when β(βt + 2α − 1) = 0; take β = 1, α = (1 − t)/2 when 2 is invertible
/// and β = 1/t, α = 0 otherwise (t ≠ 0 since K is étale).
pub fn artin_schreier<F: Field>(
    a: &AlgebraWithInvolution<F>,
    k: &Subalgebra<F>,
) -> Result<(Matrix<F::Elem>, F::Elem)> {
    let f = a.field();
    if k.dim() != 2 {
        return Err(Error::Precondition("K is not quadratic".into()));
    }
    let one = k.unit();
    let gen = k
        .basis()
        .iter()
        .find(|b| MatrixSpan::new(f, a.ambient_size(), [one.clone()]).coords(f, b).is_none())
        .ok_or_else(|| Error::Precondition("K has no element outside F".into()))?
        .clone();
    let sp = MatrixSpan::new(f, a.ambient_size(), [one.clone(), gen.clone()]);
    let sq = sp
        .coords(f, &gen.mul(f, &gen))
        .ok_or_else(|| Error::Precondition("K is not closed".into()))?;
    let t = sq[1].clone();
    let (alpha, beta) = match f.inv(&f.from_i64(2)) {
        Some(h) => (f.mul(&f.sub(&f.one(), &t), &h), f.one()),
        None => (
            f.zero(),
            f.inv(&t)
                .ok_or_else(|| Error::Precondition("K is not étale".into()))?,
        ),
    };
    let u = gen.scale(f, &beta).add(f, &one.scale(f, &alpha));
    let d = u.mul(f, &u).sub(f, &u);
    let c = MatrixSpan::new(f, a.ambient_size(), [one.clone()])
        .coords(f, &d)
        .ok_or_else(|| Error::Verification("u² − u is not a scalar".into()))?
        .remove(0);
    let disc = f.add(&f.mul(&f.from_i64(4), &c), &f.one());
    assert!(!f.is_zero(&disc), "4c + 1 vanishes for an étale K");
    Ok((u, c))
}

/// C = C_A(K), C′ = C′_A(K) and the projection φ onto C along C′.
#[derive(Debug, Clone)]
pub struct QuadraticSplit<F: Field> {
    pub u: Matrix<F::Elem>,
    pub c: F::Elem,
    pub centralizer: MatrixSpan<F::Elem>,
    pub twisted: MatrixSpan<F::Elem>,
    field: F,
}

impl<F: Field> QuadraticSplit<F> {
    /// φ(x) = (1/(4c+1))((2c+1)x − ux − xu + 2uxu).
    pub fn phi(&self, x: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let f = &self.field;
        let u = &self.u;
        let two = f.from_i64(2);
        let s = f.inv(&f.add(&f.mul(&f.from_i64(4), &self.c), &f.one())).unwrap();
        let ux = u.mul(f, x);
        x.scale(f, &f.add(&f.mul(&two, &self.c), &f.one()))
            .sub(f, &ux)
            .sub(f, &x.mul(f, u))
            .add(f, &ux.mul(f, u).scale(f, &two))
            .scale(f, &s)
    }
}

pub fn quadratic_split<F: Field>(a: &AlgebraWithInvolution<F>, k: &Subalgebra<F>) -> Result<QuadraticSplit<F>> {
    if !k.is_etale() || !k.in_symm() {
        return Err(Error::Precondition("K must be étale and symmetric".into()));
    }
    let (u, c) = artin_schreier(a, k)?;
    Ok(QuadraticSplit {
        centralizer: a.centralizer_of(std::slice::from_ref(&u)),
        twisted: a.twisted_centralizer(&u),
        u,
        c,
        field: a.field().clone(),
    })
}
