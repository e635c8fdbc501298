use std::time::Instant;

use super::*;
use crate::field::{rational::rational, Field, FiniteField, Rationals, Ring};
use crate::matrix::Matrix;
use crate::poly::Poly;

fn gf(q: u64) -> FiniteField {
    let (p, k) = crate::field::prime_power(q).unwrap();
    FiniteField::new(p, k).unwrap()
}

fn m<F: Field>(f: &F, rows: &[&[i64]]) -> Matrix<F::Elem> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()).unwrap()
}

/// Γ(a,b,c,d,e,f) = [[a,b,0,e],[c,d,−e,0],[0,f,a,c],[−f,0,b,d]].
fn gamma<F: Field>(f: &F, v: &[F::Elem; 6]) -> Matrix<F::Elem> {
    let z = f.zero();
    let [a, b, c, d, e, g] = v.clone();
    Matrix::from_rows(vec![
        vec![a.clone(), b.clone(), z.clone(), e.clone()],
        vec![c.clone(), d.clone(), f.neg(&e), z.clone()],
        vec![z.clone(), g.clone(), a, c],
        vec![f.neg(&g), z, b, d],
    ])
    .unwrap()
}

#[test]
fn classification_of_basic_models() {
    let f2 = gf(2);
    let s = build_algebra(&f2, &ModelSpec::Symplectic { m: 2 }).unwrap();
    assert_eq!(s.involution_type(), InvolutionType::Symplectic);
    assert_eq!(s.capacity(), 2);
    assert_eq!(s.symd().dim(), 6);

    let t = build_algebra(&gf(5), &ModelSpec::Transpose { d: 3 }).unwrap();
    assert_eq!(t.involution_type(), InvolutionType::Orthogonal);
    assert_eq!(t.capacity(), 3);
    assert_eq!(t.symd().dim(), 6);
    assert_eq!(t.skew().dim(), 3);

    let sw = build_algebra(&gf(3), &ModelSpec::Switch { d: 2 }).unwrap();
    assert_eq!(sw.kind(), Kind::Second);
    assert_eq!(sw.involution_type(), InvolutionType::Unitary);
    assert_eq!(sw.centre().dim(), 2);
    assert_eq!(sw.capacity(), 2);

    let q = build_algebra(&Rationals, &ModelSpec::Transpose { d: 3 }).unwrap();
    assert_eq!(q.symm().dim(), 6);
    assert_eq!(q.capacity(), 3);
}

#[test]
fn unitary_models_over_small_fields() {
    for q in [2, 3, 4, 5] {
        let f = gf(q);
        let u = build_algebra(&f, &ModelSpec::Unitary { d: 2, c: None, h: None }).unwrap();
        assert_eq!(u.kind(), Kind::Second);
        assert_eq!(u.capacity(), 2);
        assert_eq!(u.symm().dim(), 4);
        let p = u.reduced_char_poly(u.unit()).unwrap().normalized(&f);
        let x1 = Poly::linear(&f, &f.one());
        assert_eq!(p, ScalarPoly::Base(x1.mul(&f, &x1)));
    }
}

#[test]
fn orthogonal_form_restricts_to_symplectic_corner_in_char_two() {
    let rows: &[&[i64]] = &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]];
    let e_rows: &[&[i64]] = &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]];
    for (q, want) in [(2, InvolutionType::Symplectic), (3, InvolutionType::Orthogonal)] {
        let f = gf(q);
        let a = build_algebra(&f, &ModelSpec::Orthogonal { g: m(&f, rows) }).unwrap();
        assert_eq!(a.involution_type(), InvolutionType::Orthogonal);
        let c = a.corner(&m(&f, e_rows)).unwrap();
        assert_eq!(c.involution_type(), want, "GF({q})");
        assert_eq!(c.degree(), 2);
    }
}

#[test]
fn corners() {
    let f = gf(3);
    let a = build_algebra(&f, &ModelSpec::Transpose { d: 2 }).unwrap();
    let same = a.corner(a.unit()).unwrap();
    assert_eq!(same.classification(), a.classification());
    let c = a.corner(&Matrix::unit(&f, 2, 0, 0)).unwrap();
    assert_eq!(c.dim(), 1);
    assert_eq!(c.involution_type(), InvolutionType::Orthogonal);
    assert!(a.corner(&Matrix::unit(&f, 2, 0, 1)).is_err());
}

#[test]
fn reduced_char_poly_examples() {
    let f = gf(2);
    let a = build_algebra(&f, &ModelSpec::Transpose { d: 2 }).unwrap();
    let x = m(&f, &[&[0, 1], &[1, 1]]);
    let p = a.reduced_char_poly(&x).unwrap();
    assert_eq!(p, ScalarPoly::Base(Poly::new(&f, vec![1, 1, 1])));
    assert!(a.reduced_char_poly(&Matrix::zeros(&f, 3, 3)).is_err());
}

#[test]
fn chi_of_gamma_is_the_pfaffian_polynomial() {
    for q in [2, 3, 5] {
        let f = gf(q);
        let a = build_algebra(&f, &ModelSpec::Symplectic { m: 2 }).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(q);
        for _ in 0..20 {
            let v: [u64; 6] = std::array::from_fn(|_| f.random(&mut rng));
            let g = gamma(&f, &v);
            assert!(a.symd().contains(&f, &g));
            let chi = a.chi(&g).unwrap();
            let [aa, b, c, d, e, ff] = v;
            let c2 = f.add(&f.sub(&f.mul(&aa, &d), &f.mul(&b, &c)), &f.mul(&e, &ff));
            assert_eq!(chi.c, vec![f.add(&aa, &d), c2]);
            assert_eq!(g.det(&f).unwrap(), f.mul(&c2, &c2));
        }
    }
}

#[test]
fn split_involution_element_has_even_chi() {
    let f = gf(3);
    let a = build_algebra(&f, &ModelSpec::Transpose { d: 4 }).unwrap();
    let x = m(&f, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -1]]);
    let chi = a.chi(&x).unwrap();
    assert_eq!(chi.chi, Poly::new(&f, vec![1, 0, f.from_i64(-2), 0, 1]));
    assert_eq!((chi.c[0], chi.c[2]), (0, 0));
}

#[test]
fn cap2_dimension_table() {
    fn check<F: Field>(f: &F) {
        let cases = [
            (ModelSpec::Transpose { d: 2 }, 3),
            (ModelSpec::Switch { d: 2 }, 4),
            (ModelSpec::Unitary { d: 2, c: None, h: None }, 4),
            (ModelSpec::Symplectic { m: 2 }, 6),
        ];
        for (spec, dim) in cases {
            let a = build_algebra(f, &spec).unwrap();
            let q = cap2_form(&a).unwrap();
            assert_eq!(q.dim(), dim, "{spec:?}");
            assert!(q.is_nondegenerate());
        }
    }
    for q in [2, 3, 5] {
        check(&gf(q));
    }
    check(&Rationals);
}

#[test]
fn cap2_form_in_gamma_coordinates() {
    let f = Rationals;
    let a = build_algebra(&f, &ModelSpec::Symplectic { m: 2 }).unwrap();
    let q = cap2_form(&a).unwrap();
    let x: [_; 6] = std::array::from_fn(|i| rational(i as i64 + 2, 3));
    let g = gamma(&f, &x);
    let coords = a.syms().coords(&f, &g).unwrap();
    let want = &(&x[0] * &x[3] - &x[1] * &x[2]) + &(&x[4] * &x[5]);
    assert_eq!(q.evaluate(&coords), want);
}

#[test]
fn quadratic_split_of_diagonals() {
    let f = Rationals;
    let a = build_algebra(&f, &ModelSpec::Transpose { d: 2 }).unwrap();
    let k = Subalgebra::new(&a, vec![Matrix::unit(&f, 2, 0, 0), Matrix::unit(&f, 2, 1, 1)]).unwrap();
    let s = quadratic_split(&a, &k).unwrap();
    assert_eq!(s.c, rational(0, 1));
    assert_eq!(s.u, Matrix::unit(&f, 2, 0, 0));
    assert!(s.phi(&Matrix::unit(&f, 2, 0, 1)).is_zero(&f));
    assert_eq!(s.phi(&Matrix::unit(&f, 2, 0, 0)), Matrix::unit(&f, 2, 0, 0));
    assert_eq!(s.twisted.dim(), 2);
    assert_eq!(s.centralizer.dim(), 2);
}

#[test]
fn large_models_build_in_reasonable_time() {
    let f = gf(5);
    let t0 = Instant::now();
    let u = build_algebra(&f, &ModelSpec::Unitary { d: 8, c: None, h: None }).unwrap();
    assert_eq!(u.capacity(), 8);
    let s = build_algebra(&f, &ModelSpec::Symplectic { m: 4 }).unwrap();
    assert_eq!(s.capacity(), 4);
    eprintln!("built in {:?}", t0.elapsed());
}

use rand::SeedableRng;

#[test]
fn json_round_trip_is_byte_identical() {
    let f = gf(4);
    let a = build_algebra(&f, &ModelSpec::Unitary { d: 2, c: None, h: None }).unwrap();
    let e = a.basis()[0].clone();
    let corner = a.corner(&e).unwrap();
    for alg in [&a, &corner] {
        let s = alg.to_json();
        let back = AlgebraWithInvolution::from_json(&f, &s).unwrap();
        assert_eq!(back.to_json(), s);
    }
    let q = build_algebra(&Rationals, &ModelSpec::Orthogonal { g: m(&Rationals, &[&[2, 1], &[1, 3]]) }).unwrap();
    let s = q.to_json();
    assert!(s.contains("\"1/3\"") || s.contains("\"-1/5\"") || s.contains("\"2\""));
    assert_eq!(AnyAlgebra::from_json(&s).unwrap().to_json(), s);
    // a tampered involution image is rejected
    let mut doc = a.to_doc();
    doc.involution.swap(0, 1);
    assert!(AlgebraWithInvolution::from_doc(&f, &doc).is_err());
}

#[test]
fn extension_of_scalars_keeps_the_model() {
    let f = gf(2);
    let a = build_algebra(&f, &ModelSpec::Transpose { d: 2 }).unwrap();
    let (b, emb) = a.extend_scalars(2).unwrap();
    assert_eq!(b.field().order(), 4);
    assert_eq!(b.classification(), a.classification());
    let k = Subalgebra::generated(&a, &[m(&f, &[&[0, 1], &[1, 1]])]).unwrap();
    assert!(k.is_etale());
    let kb = k.extend_scalars(&b, &emb).unwrap();
    assert_eq!(kb.dim(), 2);
    assert!(kb.is_etale());
}
