//! Canonical JSON documents for algebras and subalgebras.
//!
//! Scalars use the field's canonical encoding (integers for finite fields,
//! "n/d" strings for ℚ). Decoding rebuilds the algebra from its model and
//! rejects documents whose basis, unit or involution images disagree, so a
//! decode/encode round trip is byte-identical.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::algebra::{from_model, AlgebraWithInvolution};
use super::model::Model;
use super::subalgebra::Subalgebra;
use crate::error::{Error, Result};
use crate::field::{AnyField, Field, FieldSpec, FiniteField, Rationals};
use crate::matrix::Matrix;

pub const ALGEBRA_SCHEMA: &str = "neatalg/algebra/v1";
pub const SUBALGEBRA_SCHEMA: &str = "neatalg/subalgebra/v1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub schema: String,
    pub field: FieldSpec,
    pub ambient_size: usize,
    pub model: Value,
    pub unit: Value,
    pub basis: Vec<Value>,
    pub involution: Vec<Value>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubalgebraFlags {
    pub commutative: bool,
    pub etale: bool,
    pub in_symm: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubalgebraDoc {
    pub schema: String,
    pub field: FieldSpec,
    pub ambient_size: usize,
    pub parent: AlgebraDoc,
    pub basis: Vec<Value>,
    pub unit: Value,
    pub flags: SubalgebraFlags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

pub fn encode_matrix<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| f.encode(x)).collect()))
            .collect(),
    )
}

pub fn decode_matrix<F: Field>(f: &F, v: &Value) -> Result<Matrix<F::Elem>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Serde("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Serde("matrix row must be an array".into()))?
                .iter()
                .map(|x| f.decode(x))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(|e| Error::Serde(e.to_string()))
}

fn encode_model<F: Field>(f: &F, m: &Model<F::Elem>) -> Value {
    match m {
        Model::Matrix { d, g } => json!({"kind": "matrix", "d": d, "g": encode_matrix(f, g)}),
        Model::Switch { d } => json!({"kind": "switch", "d": d}),
        Model::Unitary { d, c, h } => json!({
            "kind": "unitary",
            "d": d,
            "c": f.encode(c),
            "h": h.iter().map(|x| f.encode(x)).collect::<Vec<_>>(),
        }),
        Model::Corner { parent, e } => json!({
            "kind": "corner",
            "parent": encode_model(f, parent),
            "e": encode_matrix(f, e),
        }),
        Model::Centralizer { parent, of, scalar } => json!({
            "kind": "centralizer",
            "parent": encode_model(f, parent),
            "of": of.iter().map(|x| encode_matrix(f, x)).collect::<Vec<_>>(),
            "scalar": scalar.as_ref().map(|(t, c)| json!({"theta": encode_matrix(f, t), "c": f.encode(c)})),
        }),
    }
}

fn decode_model<F: Field>(f: &F, v: &Value) -> Result<Model<F::Elem>> {
    let bad = |what: &str| Error::Serde(format!("model: {what}"));
    let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| bad("missing kind"))?;
    let usize_field = |k: &str| -> Result<usize> {
        v.get(k)
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .ok_or_else(|| bad(k))
    };
    let sub = |k: &str| v.get(k).ok_or_else(|| bad(k));
    Ok(match kind {
        "matrix" => Model::Matrix {
            d: usize_field("d")?,
            g: decode_matrix(f, sub("g")?)?,
        },
        "switch" => Model::Switch { d: usize_field("d")? },
        "unitary" => Model::Unitary {
            d: usize_field("d")?,
            c: f.decode(sub("c")?)?,
            h: sub("h")?
                .as_array()
                .ok_or_else(|| bad("h"))?
                .iter()
                .map(|x| f.decode(x))
                .collect::<Result<_>>()?,
        },
        "corner" => Model::Corner {
            parent: Box::new(decode_model(f, sub("parent")?)?),
            e: decode_matrix(f, sub("e")?)?,
        },
        "centralizer" => Model::Centralizer {
            parent: Box::new(decode_model(f, sub("parent")?)?),
            of: sub("of")?
                .as_array()
                .ok_or_else(|| bad("of"))?
                .iter()
                .map(|x| decode_matrix(f, x))
                .collect::<Result<_>>()?,
            scalar: match sub("scalar")? {
                Value::Null => None,
                s => Some((
                    decode_matrix(f, s.get("theta").ok_or_else(|| bad("theta"))?)?,
                    f.decode(s.get("c").ok_or_else(|| bad("c"))?)?,
                )),
            },
        },
        other => return Err(bad(&format!("unknown kind {other}"))),
    })
}

impl<F: Field> AlgebraWithInvolution<F> {
    pub fn to_doc(&self) -> AlgebraDoc {
        let f = self.field();
        AlgebraDoc {
            schema: ALGEBRA_SCHEMA.into(),
            field: f.spec(),
            ambient_size: self.ambient_size(),
            model: encode_model(f, self.model()),
            unit: encode_matrix(f, self.unit()),
            basis: self.basis().iter().map(|b| encode_matrix(f, b)).collect(),
            involution: self.involution_images().iter().map(|b| encode_matrix(f, b)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("documents serialize")
    }

    pub fn from_doc(f: &F, doc: &AlgebraDoc) -> Result<Self> {
        if doc.schema != ALGEBRA_SCHEMA {
            return Err(Error::Serde(format!("unknown schema {}", doc.schema)));
        }
        if doc.field != f.spec() {
            return Err(Error::Serde("field does not match the document".into()));
        }
        let a = from_model(f, decode_model(f, &doc.model)?)?;
        if a.to_doc() != *doc {
            return Err(Error::Serde(
                "basis, unit or involution images disagree with the model".into(),
            ));
        }
        Ok(a)
    }

    pub fn from_json(f: &F, s: &str) -> Result<Self> {
        Self::from_doc(f, &serde_json::from_str(s)?)
    }
}

impl<F: Field> Subalgebra<F> {
    pub fn to_doc(&self, parent: &AlgebraWithInvolution<F>) -> SubalgebraDoc {
        let f = self.field();
        SubalgebraDoc {
            schema: SUBALGEBRA_SCHEMA.into(),
            field: f.spec(),
            ambient_size: self.ambient_size(),
            parent: parent.to_doc(),
            basis: self.basis().iter().map(|b| encode_matrix(f, b)).collect(),
            unit: encode_matrix(f, self.unit()),
            flags: SubalgebraFlags {
                commutative: self.is_commutative(),
                etale: self.is_etale(),
                in_symm: self.in_symm(),
            },
            certificate: None,
        }
    }

    /// Rebuilds parent and subalgebra; flags are recomputed.
    pub fn from_doc(f: &F, doc: &SubalgebraDoc) -> Result<(AlgebraWithInvolution<F>, Self)> {
        if doc.schema != SUBALGEBRA_SCHEMA {
            return Err(Error::Serde(format!("unknown schema {}", doc.schema)));
        }
        let parent = AlgebraWithInvolution::from_doc(f, &doc.parent)?;
        let basis = doc
            .basis
            .iter()
            .map(|b| decode_matrix(f, b))
            .collect::<Result<Vec<_>>>()?;
        let sub = Subalgebra::new(&parent, basis)?;
        if encode_matrix(f, sub.unit()) != doc.unit {
            return Err(Error::Serde("unit disagrees with the basis".into()));
        }
        Ok((parent, sub))
    }
}

/// An algebra over a field chosen at runtime.
#[derive(Debug, Clone)]
pub enum AnyAlgebra {
    Finite(AlgebraWithInvolution<FiniteField>),
    Rational(AlgebraWithInvolution<Rationals>),
}

impl AnyAlgebra {
    pub fn from_doc(doc: &AlgebraDoc) -> Result<Self> {
        Ok(match doc.field.build()? {
            AnyField::Finite(f) => AnyAlgebra::Finite(AlgebraWithInvolution::from_doc(&f, doc)?),
            AnyField::Rational(q) => AnyAlgebra::Rational(AlgebraWithInvolution::from_doc(&q, doc)?),
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_doc(&serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyAlgebra::Finite(a) => a.to_json(),
            AnyAlgebra::Rational(a) => a.to_json(),
        }
    }
}
