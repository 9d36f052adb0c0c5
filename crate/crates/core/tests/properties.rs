use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use groupcodes::duality;
use groupcodes::ideals::{code_to_ideal, ideal_to_code, random_spec};
use groupcodes::oracle::{self, Convolution, OracleMetric};
use groupcodes::verify::oracle_group;
use groupcodes::{dihedral, quaternion, Decomposition, Elem, Field, Metric};

const FIELDS: [(u64, u32); 7] = [(2, 1), (2, 4), (3, 2), (3, 4), (5, 2), (7, 1), (11, 3)];

fn fields() -> &'static [Field] {
    static F: OnceLock<Vec<Field>> = OnceLock::new();
    F.get_or_init(|| FIELDS.iter().map(|&(p, m)| Field::new(p, m).unwrap()).collect())
}

fn algebras() -> &'static [Decomposition] {
    static A: OnceLock<Vec<Decomposition>> = OnceLock::new();
    A.get_or_init(|| {
        vec![
            dihedral::build(7, 4, Metric::Hermitian).unwrap(),
            dihedral::build(5, 9, Metric::Hermitian).unwrap(),
            dihedral::build(3, 25, Metric::Hermitian).unwrap(),
            dihedral::build(4, 3, Metric::Euclidean).unwrap(),
            dihedral::build(6, 5, Metric::Euclidean).unwrap(),
            dihedral::build(7, 2, Metric::Euclidean).unwrap(),
            quaternion::build(3, 11).unwrap(),
            quaternion::build(5, 3).unwrap(),
            quaternion::build(5, 7).unwrap(),
        ]
    })
}

fn elem(f: &Field, i: u64) -> Elem {
    f.from_repr((i % f.size()) as u32)
}

fn vector(d: &Decomposition, raw: &[u64]) -> Vec<Elem> {
    let q = d.coeff.size();
    raw.iter().take(d.length()).map(|&i| d.coeff.element((i % q) as usize)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn field_axioms(which in 0..FIELDS.len(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = &fields()[which];
        let (a, b, c) = (elem(f, a), elem(f, b), elem(f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        }
        prop_assert_eq!(f.from_repr(f.repr(a)), a);
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative(which in 0..FIELDS.len(), a in any::<u64>(), b in any::<u64>()) {
        let f = &fields()[which];
        let p = f.characteristic();
        let (a, b) = (elem(f, a), elem(f, b));
        let fr = |x| f.frobenius(x, p).unwrap();
        prop_assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
        prop_assert_eq!(fr(f.mul(a, b)), f.mul(fr(a), fr(b)));
        prop_assert_eq!(f.pow_u(a, f.size()), a);
    }

    #[test]
    fn rho_is_an_algebra_isomorphism(which in 0..9usize, u in prop::collection::vec(any::<u64>(), 24), v in prop::collection::vec(any::<u64>(), 24)) {
        let d = &algebras()[which];
        let f = &d.field;
        let (u, v) = (vector(d, &u), vector(d, &v));
        let uv = Convolution::new(oracle_group(d.group)).mul(f, &u, &v);
        prop_assert_eq!(d.rho(&uv), d.value_mul(&d.rho(&u), &d.rho(&v)));
        let sum: Vec<Elem> = u.iter().zip(&v).map(|(&x, &y)| f.add(x, y)).collect();
        let lhs = d.flatten(&d.rho(&sum));
        let rhs: Vec<Elem> = d.flatten(&d.rho(&u)).into_iter().zip(d.flatten(&d.rho(&v))).map(|(x, y)| f.add(x, y)).collect();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(d.rho_inv(&d.rho(&u)).unwrap(), u);
    }

    #[test]
    fn duals_are_involutive_and_complementary(which in 0..9usize, seed in any::<u64>()) {
        let d = &algebras()[which];
        let spec = random_spec(d, &mut ChaCha8Rng::seed_from_u64(seed));
        let mut metrics = vec![Metric::Euclidean];
        if d.conj_q().is_some() {
            metrics.push(Metric::Hermitian);
        }
        for m in metrics {
            let dual = duality::dual(d, &spec, m).unwrap();
            prop_assert_eq!(dual.dimension(d) + spec.dimension(d), d.length());
            prop_assert_eq!(duality::dual(d, &dual, m).unwrap(), spec.clone());
        }
    }

    #[test]
    fn specs_round_trip_through_codes(which in 0..9usize, seed in any::<u64>()) {
        let d = &algebras()[which];
        let spec = random_spec(d, &mut ChaCha8Rng::seed_from_u64(seed));
        let code = ideal_to_code(d, &spec).unwrap();
        prop_assert_eq!(code.dimension(), spec.dimension(d));
        prop_assert_eq!(code_to_ideal(d, &code.generator).unwrap(), spec.clone());
        prop_assert_eq!(groupcodes::ideals::IdealSpec::parse(d, &spec.to_text(d)).unwrap(), spec.clone());
        prop_assert_eq!(groupcodes::ideals::IdealSpec::parse(d, &spec.to_inline(d)).unwrap(), spec);
    }

    #[test]
    fn self_orthogonality_matches_oracle(which in 0..9usize, seed in any::<u64>()) {
        let d = &algebras()[which];
        let spec = random_spec(d, &mut ChaCha8Rng::seed_from_u64(seed));
        let rows = ideal_to_code(d, &spec).unwrap().generator.row_vecs();
        prop_assert!(oracle::is_left_ideal(&d.field, oracle_group(d.group), &rows));
        let so = duality::is_euclid_selforth(d, &spec).unwrap().0;
        prop_assert_eq!(so, oracle::is_self_orthogonal(&d.field, &rows, OracleMetric::Euclidean));
        if let Some(q) = d.conj_q() {
            let so = duality::is_hermitian_selforth(d, &spec).unwrap().0;
            prop_assert_eq!(so, oracle::is_self_orthogonal(&d.field, &rows, OracleMetric::Hermitian(q)));
        }
    }
}
