//! Extension of scalars GF(q) → GF(q^m).

use super::algebra::{from_model, AlgebraWithInvolution};
use super::model::Model;
use super::subalgebra::Subalgebra;
use crate::error::Result;
use crate::field::{FieldEmbedding, FiniteField};
use crate::matrix::Matrix;

fn map_matrix(e: &FieldEmbedding, m: &Matrix<u64>) -> Matrix<u64> {
    Matrix::from_fn(m.rows(), m.cols(), |i, j| e.map(m.get(i, j)))
}

fn map_model(e: &FieldEmbedding, m: &Model<u64>) -> Model<u64> {
    match m {
        Model::Matrix { d, g } => Model::Matrix {
            d: *d,
            g: map_matrix(e, g),
        },
        Model::Switch { d } => Model::Switch { d: *d },
        Model::Unitary { d, c, h } => Model::Unitary {
            d: *d,
            c: e.map(c),
            h: h.iter().map(|x| e.map(x)).collect(),
        },
        Model::Corner { parent, e: idem } => Model::Corner {
            parent: Box::new(map_model(e, parent)),
            e: map_matrix(e, idem),
        },
        Model::Centralizer { parent, of, scalar } => Model::Centralizer {
            parent: Box::new(map_model(e, parent)),
            of: of.iter().map(|x| map_matrix(e, x)).collect(),
            scalar: scalar.as_ref().map(|(t, c)| (map_matrix(e, t), e.map(c))),
        },
    }
}

impl AlgebraWithInvolution<FiniteField> {
    /// A ⊗_F GF(q^m): the same model read over the larger field.
    pub fn extend_scalars(&self, m: u32) -> Result<(AlgebraWithInvolution<FiniteField>, FieldEmbedding)> {
        let (target, emb) = self.field().extension(m)?;
        let a = from_model(&target, map_model(&emb, self.model()))?;
        Ok((a, emb))
    }
}

impl Subalgebra<FiniteField> {
    /// L ⊗_F GF(q^m) inside the extended algebra.
    pub fn extend_scalars(
        &self,
        target: &AlgebraWithInvolution<FiniteField>,
        emb: &FieldEmbedding,
    ) -> Result<Subalgebra<FiniteField>> {
        self.map_into(target, |b| map_matrix(emb, b))
    }
}
