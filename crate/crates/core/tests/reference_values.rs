//! Frozen reference values for small dihedral and quaternion algebras.

mod common;

use common::*;
use groupcodes::algebra::{BlockKind, Value};
use groupcodes::duality;
use groupcodes::ideals::{code_to_ideal, ideal_to_code, IdealSpec};
use groupcodes::linalg::{antidiag, diag};
use groupcodes::oracle;
use groupcodes::poly::{ClassTag, FactorMode, FactorSystem};
use groupcodes::weights::{css_hermitian, min_distance_exhaustive, min_distance_isd, DistanceStatus, IsdConfig};
use groupcodes::{dihedral, quaternion, Decomposition, Elem, Metric};

fn d16() -> Decomposition {
    dihedral::build(16, 9, Metric::Hermitian).unwrap()
}

#[test]
fn x16_minus_1_classes_over_f9() {
    let fs = FactorSystem::new(16, 9, FactorMode::Hermitian).unwrap();
    let by_tag = |t: ClassTag| fs.classes.iter().filter(|c| c.tag == t).map(|c| c.degree).collect::<Vec<_>>();
    assert_eq!(by_tag(ClassTag::J0), vec![1, 1]);
    assert!(by_tag(ClassTag::J1).is_empty());
    assert!(by_tag(ClassTag::J2).is_empty());
    assert_eq!(by_tag(ClassTag::J3), vec![1]);
    assert_eq!(by_tag(ClassTag::J4), vec![1, 2]);
}

#[test]
fn rho_images_f9_d16() {
    let d = d16();
    let f = &d.field;
    let w = |k| d.coeff.gen_pow(k);
    let xi = |k| f.from_log(k);
    let m1 = f.neg(Elem::ONE);
    let s = Value::Scalar;
    let m = Value::Matrix;
    let swap = m(antidiag(Elem::ONE, Elem::ONE));
    assert_eq!(
        d.rho_a(),
        vec![
            s(Elem::ONE),
            s(Elem::ONE),
            s(m1),
            s(m1),
            m(diag(w(5), w(3))),
            m(diag(w(7), w(1))),
            m(diag(w(6), w(2))),
            m(diag(xi(25), xi(55))),
            m(diag(xi(75), xi(5))),
        ]
    );
    assert_eq!(d.rho_b(), vec![s(Elem::ONE), s(m1), s(Elem::ONE), s(m1), swap, swap, swap, swap, swap]);
}

#[test]
fn psi_images_f11_q7() {
    let d = quaternion::build(7, 11).unwrap();
    let f = &d.field;
    let kinds: Vec<BlockKind> = d.blocks.iter().map(|b| b.kind).collect();
    assert_eq!(kinds, vec![BlockKind::FieldPair, BlockKind::MatRecipPair, BlockKind::BField, BlockKind::BPaired]);
    let eta = |k| d.summands[2].field.gen_pow(k);
    assert_eq!(d.summands[4].field, d.summands[2].field);
    let m1 = f.neg(Elem::ONE);
    let i = d.summands[3].field.gen_pow(30);
    assert_eq!(f.mul(i, i), m1);
    assert_eq!(
        d.rho_a(),
        vec![
            Value::Scalar(Elem::ONE),
            Value::Scalar(Elem::ONE),
            Value::Matrix(diag(eta(570), eta(760))),
            Value::Scalar(m1),
            Value::Matrix(diag(eta(95), eta(1235))),
        ]
    );
    assert_eq!(
        d.rho_b(),
        vec![
            Value::Scalar(Elem::ONE),
            Value::Scalar(m1),
            Value::Matrix(antidiag(Elem::ONE, Elem::ONE)),
            Value::Scalar(i),
            Value::Matrix(antidiag(m1, Elem::ONE)),
        ]
    );
}

#[test]
fn census_f4_d7() {
    let d = dihedral::build(7, 4, Metric::Hermitian).unwrap();
    let all: Vec<IdealSpec> = groupcodes::ideals::Enumerator::all(&d, 1 << 20).unwrap().collect();
    assert_eq!(all.len(), 201);
    let so = all.iter().filter(|s| duality::is_hermitian_selforth(&d, s).unwrap().0).count();
    assert_eq!(so, 20);
    assert_eq!(duality::count_hermitian_selforth(&d.factors).unwrap(), 20);
}

#[test]
fn quaternion_count_f11_q7() {
    let d = quaternion::build(7, 11).unwrap();
    assert_eq!(duality::count_euclid_selforth_quaternion(&d.factors).unwrap(), 3999);
    assert_eq!(duality::count_by_blocks(&d, Metric::Euclidean, 1 << 30).unwrap(), 3999);
}

#[test]
fn first_d16_code() {
    let d = d16();
    let spec = IdealSpec::parse(&d, &d16_spec(&[(5, 0), (6, 7), (7, 14), (8, 2)])).unwrap();
    let code = ideal_to_code(&d, &spec).unwrap();
    assert_eq!(code.dimension(), 12);
    let dist = min_distance_isd(&d.coeff, &code.generator, None, &IsdConfig::default()).unwrap();
    assert_eq!((dist.value, dist.status), (Some(12), DistanceStatus::Exact));
    let r = css_hermitian(&d, &spec, &IsdConfig::default()).unwrap();
    assert_eq!((r.n, r.k_q, r.q), (32, 8, 3));
    assert_eq!((r.d_q.value, r.d_q.status), (Some(8), DistanceStatus::Exact));
    // d_Q sits below d(C) here
    assert_eq!(r.floor_consistent, Some(false));
}

// The generator printed alongside this code is a Frobenius twist of the
// listed block rows (λ ↦ 9λ on the F_81 blocks); both give [32, 12, 12].
#[test]
fn first_d16_generator_element() {
    let d = d16();
    let g = ideal_of(&d, &parse_elem(&d, D16_FIRST));
    assert_eq!(g.rows(), 12);
    let spec = code_to_ideal(&d, &g).unwrap();
    assert_eq!(spec, IdealSpec::parse(&d, &d16_spec(&[(5, 0), (6, 7), (7, 46), (8, 18)])).unwrap());
    let dist = min_distance_isd(&d.coeff, &g, None, &IsdConfig::default()).unwrap();
    assert_eq!((dist.value, dist.status), (Some(12), DistanceStatus::Exact));
}

// Published as [32, 8, 19]; three independent routes give 16.
#[test]
fn second_d16_code() {
    let d = d16();
    let spec = IdealSpec::parse(&d, &d16_spec(&[(4, 4), (6, 7), (8, 23)])).unwrap();
    let code = ideal_to_code(&d, &spec).unwrap();
    assert_eq!(code.dimension(), 8);
    let isd = min_distance_isd(&d.coeff, &code.generator, None, &IsdConfig::default()).unwrap();
    assert_eq!((isd.value, isd.status), (Some(16), DistanceStatus::Exact));
    let w = isd.witness.unwrap();
    assert!(oracle::contained(&d.field, &[w], &code.generator.row_vecs()));
    assert_eq!(min_distance_exhaustive(&d.coeff, &code.generator, 1 << 26).unwrap(), Some(16));
    let r = css_hermitian(&d, &spec, &IsdConfig::default()).unwrap();
    assert_eq!((r.n, r.k_q, r.d_q.value, r.d_q.status), (32, 16, Some(6), DistanceStatus::Exact));
}

#[test]
fn second_d16_generator_element() {
    let d = d16();
    let g = ideal_of(&d, &parse_elem(&d, D16_SECOND));
    assert_eq!(g.rows(), 8);
    let spec = code_to_ideal(&d, &g).unwrap();
    assert_eq!(spec, IdealSpec::parse(&d, &d16_spec(&[(4, 4), (6, 7), (8, 47)])).unwrap());
    assert_eq!(min_distance_exhaustive(&d.coeff, &g, 1 << 26).unwrap(), Some(16));
}

#[test]
fn d10_quantum_code() {
    let d = dihedral::build(10, 9, Metric::Hermitian).unwrap();
    let g = ideal_of(&d, &parse_elem(&d, D10_ELEM));
    assert_eq!(g.rows(), 4);
    let spec = code_to_ideal(&d, &g).unwrap();
    assert_eq!(spec, IdealSpec::parse(&d, D10_SPEC).unwrap());
    assert!(duality::is_hermitian_selforth(&d, &spec).unwrap().0);
    assert_eq!(min_distance_exhaustive(&d.coeff, &g, 1 << 20).unwrap(), Some(15));
    let r = css_hermitian(&d, &spec, &IsdConfig::default()).unwrap();
    assert_eq!((r.n, r.k_q, r.d_q.value, r.d_q.status), (20, 12, Some(4), DistanceStatus::Exact));
}

#[test]
fn dihedral_n1_has_two_field_summands() {
    for q in [9, 25] {
        let d = dihedral::build(1, q, Metric::Hermitian).unwrap();
        assert_eq!(d.summands.len(), 2);
        assert!(d.summands.iter().all(|s| s.dim() == 1));
    }
    // characteristic 2: F_4[C_2] is local, not split
    let d = dihedral::build(1, 4, Metric::Hermitian).unwrap();
    assert_eq!(d.blocks.iter().map(|b| b.kind).collect::<Vec<_>>(), vec![BlockKind::C2Algebra]);
}
