//! Certificates for constructed subalgebras: explicit generators and a
//! transcript of the checks that were re-run on them.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::verdict::is_neat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::involutions::{decode_matrix, encode_matrix, AlgebraWithInvolution, Subalgebra, SubalgebraDoc};
use crate::matrix::Matrix;
use crate::span::{closure, MatrixSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Generators: the primitive idempotents.
    Split,
    /// Generators: bases of two commuting quadratic étale subalgebras.
    Biquadratic,
    /// Generators: bases of three commuting quadratic étale subalgebras.
    Triquadratic,
    /// Generators: a basis of K and the single element x.
    Quaternion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate<E> {
    pub kind: CertificateKind,
    pub generators: Vec<Vec<Matrix<E>>>,
    pub transcript: Vec<String>,
}

/// A subalgebra together with a certificate that has been verified.
#[derive(Debug, Clone)]
pub struct Certified<F: Field> {
    pub subalgebra: Subalgebra<F>,
    pub certificate: Certificate<F::Elem>,
}

impl<F: Field> Certified<F> {
    /// Verifies `cert` against `l` and records the transcript.
    pub fn new(a: &AlgebraWithInvolution<F>, l: Subalgebra<F>, mut cert: Certificate<F::Elem>) -> Result<Self> {
        cert.transcript = verify(a, &l, &cert)?;
        Ok(Certified {
            subalgebra: l,
            certificate: cert,
        })
    }

    /// Re-runs every check of the certificate.
    pub fn verify(&self, a: &AlgebraWithInvolution<F>) -> Result<Vec<String>> {
        verify(a, &self.subalgebra, &self.certificate)
    }

    pub fn to_doc(&self, a: &AlgebraWithInvolution<F>) -> SubalgebraDoc {
        let f = a.field();
        let mut doc = self.subalgebra.to_doc(a);
        let c = &self.certificate;
        doc.certificate = Some(json!({
            "kind": c.kind,
            "generators": c.generators.iter()
                .map(|g| g.iter().map(|m| encode_matrix(f, m)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "transcript": c.transcript,
        }));
        doc
    }

    /// Rebuilds and re-verifies a certified subalgebra from its document.
    pub fn from_doc(f: &F, doc: &SubalgebraDoc) -> Result<(AlgebraWithInvolution<F>, Self)> {
        let (a, l) = Subalgebra::from_doc(f, doc)?;
        let v = doc
            .certificate
            .as_ref()
            .ok_or_else(|| Error::Serde("missing certificate".into()))?;
        let kind: CertificateKind = serde_json::from_value(v.get("kind").cloned().unwrap_or(Value::Null))?;
        let generators = v
            .get("generators")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Serde("certificate generators".into()))?
            .iter()
            .map(|g| {
                g.as_array()
                    .ok_or_else(|| Error::Serde("generator list".into()))?
                    .iter()
                    .map(|m| decode_matrix(f, m))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let cert = Certificate {
            kind,
            generators,
            transcript: Vec::new(),
        };
        let c = Certified::new(&a, l, cert)?;
        Ok((a, c))
    }
}

fn verify<F: Field>(a: &AlgebraWithInvolution<F>, l: &Subalgebra<F>, cert: &Certificate<F::Elem>) -> Result<Vec<String>> {
    let f = a.field();
    let n = a.ambient_size();
    let mut log = Vec::new();
    let mut check = |ok: bool, what: String| -> Result<()> {
        if ok {
            log.push(what);
            Ok(())
        } else {
            Err(Error::Verification(what))
        }
    };
    let gens = &cert.generators;
    let flat: Vec<Matrix<F::Elem>> = gens.iter().flatten().cloned().collect();
    let commuting = flat
        .iter()
        .all(|x| flat.iter().all(|y| x.mul(f, y) == y.mul(f, x)));
    let sigma_stable = l.basis().iter().all(|b| l.contains(&a.sigma(b)));
    match cert.kind {
        CertificateKind::Split => {
            let sum = flat.iter().fold(Matrix::zeros(f, n, n), |acc, e| acc.add(f, e));
            let orthogonal = flat.iter().enumerate().all(|(i, x)| {
                flat.iter()
                    .enumerate()
                    .all(|(j, y)| x.mul(f, y) == if i == j { x.clone() } else { Matrix::zeros(f, n, n) })
            });
            check(orthogonal, format!("{} orthogonal idempotents", flat.len()))?;
            check(sum == *l.unit(), "idempotents sum to the unit".into())?;
            check(
                MatrixSpan::new(f, n, flat.iter().cloned()).dim() == l.dim(),
                "idempotents span L".into(),
            )?;
        }
        CertificateKind::Biquadratic | CertificateKind::Triquadratic => {
            let want = if cert.kind == CertificateKind::Biquadratic { 2 } else { 3 };
            check(gens.len() == want, format!("{want} quadratic generators"))?;
            for (i, g) in gens.iter().enumerate() {
                let k = Subalgebra::new(a, g.clone())?;
                check(
                    k.dim() == 2 && k.is_etale() && k.contains(a.unit()),
                    format!("generator {i} is quadratic étale"),
                )?;
            }
            check(commuting, "generators commute pairwise".into())?;
            let mut start = vec![a.unit().clone()];
            start.extend(flat.iter().cloned());
            let gen = MatrixSpan::new(f, n, closure(f, n, start));
            check(
                gen.dim() == l.dim() && gen.contains_span(f, l.span()),
                format!("generators generate L of dimension {}", l.dim()),
            )?;
            check(l.dim() == 1 << want, format!("[L:F] = {}", 1 << want))?;
        }
        CertificateKind::Quaternion => {
            check(gens.len() == 2 && gens[1].len() == 1, "generators K and x".into())?;
            let k = Subalgebra::new(a, gens[0].clone())?;
            check(k.dim() == 2 && k.is_etale(), "K is quadratic étale".into())?;
            let x = &gens[1][0];
            let line = MatrixSpan::new(f, n, [a.unit().clone()]);
            let sq = line.coords(f, &x.mul(f, x));
            check(
                sq.is_some_and(|c| !f.is_zero(&c[0])),
                "x² is an invertible scalar".into(),
            )?;
            let (u, _) = crate::involutions::artin_schreier(a, &k)?;
            check(a.twisted_centralizer(&u).contains(f, x), "x ∈ C′_A(K)".into())?;
            check(a.is_symmetric(x), "x ∈ Symm(σ)".into())?;
            check(l.dim() == 4 && l.contains(a.unit()), "Q is unital of dimension 4".into())?;
            check(sigma_stable, "σ(Q) = Q".into())?;
        }
    }
    match cert.kind {
        CertificateKind::Split | CertificateKind::Biquadratic => {
            let v = is_neat(a, l);
            check(v.neat, format!("L is neat ({:?})", v.failed_condition))?;
        }
        CertificateKind::Triquadratic => {
            check(l.is_etale(), "L is étale (trace form nondegenerate)".into())?;
            check(sigma_stable, "σ(L) = L".into())?;
        }
        CertificateKind::Quaternion => {}
    }
    Ok(log)
}
