//! Cross-checks of a decomposition against the brute-force oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Decomposition, Metric, Value};
use crate::duality;
use crate::fields::Elem;
use crate::group::Group;
use crate::ideals::{code_to_ideal, ideal_to_code, random_spec};
use crate::oracle::{self, Convolution, OracleGroup, OracleMetric};

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub algebra: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, pass: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !pass {
            self.failures.push(what());
        }
    }
}

pub fn oracle_group(g: Group) -> OracleGroup {
    match g {
        Group::Dihedral(n) => OracleGroup::Dihedral(n),
        Group::Quaternion(n) => OracleGroup::Quaternion(n),
    }
}

pub fn random_element<R: Rng>(dec: &Decomposition, rng: &mut R) -> Vec<Elem> {
    let q = dec.coeff.size() as usize;
    (0..dec.length()).map(|_| dec.coeff.element(rng.random_range(0..q))).collect()
}

/// Generator relations of the group hold for the images of a and b.
pub fn relations_hold(dec: &Decomposition) -> bool {
    let a = dec.rho_a();
    let b = dec.rho_b();
    let one = dec.value_one();
    let m = dec.group.rotations() as u64;
    let a_inv = dec.value_pow(&a, m - 1);
    match dec.group {
        Group::Dihedral(_) => {
            dec.value_pow(&a, m) == one
                && dec.value_pow(&b, 2) == one
                && dec.value_mul(&dec.value_mul(&b, &a), &b) == a_inv
        }
        Group::Quaternion(n) => {
            let b_inv = dec.value_pow(&b, 3);
            dec.value_pow(&a, m) == one
                && dec.value_pow(&b, 2) == dec.value_pow(&a, n as u64)
                && dec.value_mul(&dec.value_mul(&b_inv, &a), &b) == a_inv
        }
    }
}

/// Multiplicativity, additivity and invertibility of ρ on random pairs.
pub fn check_isomorphism(dec: &Decomposition, samples: usize, seed: u64, report: &mut VerifyReport) {
    let f = &dec.field;
    let conv = Convolution::new(oracle_group(dec.group));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    report.check(relations_hold(dec), || "generator relations".into());
    for i in 0..samples {
        let u = random_element(dec, &mut rng);
        let v = random_element(dec, &mut rng);
        let (ru, rv) = (dec.rho(&u), dec.rho(&v));
        let prod = conv.mul(f, &u, &v);
        report.check(dec.rho(&prod) == dec.value_mul(&ru, &rv), || format!("ρ(uv) ≠ ρ(u)ρ(v), sample {i}"));
        let sum: Vec<Elem> = u.iter().zip(&v).map(|(&x, &y)| f.add(x, y)).collect();
        let fsum: Vec<Elem> = dec.flatten(&ru).iter().zip(dec.flatten(&rv)).map(|(&x, y)| f.add(x, y)).collect();
        report.check(dec.flatten(&dec.rho(&sum)) == fsum, || format!("ρ(u+v) ≠ ρ(u)+ρ(v), sample {i}"));
        report.check(dec.rho_inv(&ru).as_deref() == Ok(&u[..]), || format!("ρ⁻¹ρ(u) ≠ u, sample {i}"));
        let x: Vec<Value> = dec.unflatten(&random_element(dec, &mut rng));
        let back = dec.rho_inv(&x).map(|y| dec.rho(&y));
        report.check(back.as_ref() == Ok(&x), || format!("ρρ⁻¹(x) ≠ x, sample {i}"));
    }
}

/// Closed-form duals, ideal closure and round trips on random specs.
pub fn check_duality(dec: &Decomposition, samples: usize, seed: u64, report: &mut VerifyReport) {
    let f = &dec.field;
    let n = dec.length();
    let og = oracle_group(dec.group);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut metrics = vec![(Metric::Euclidean, OracleMetric::Euclidean)];
    if let Some(q) = dec.conj_q() {
        metrics.push((Metric::Hermitian, OracleMetric::Hermitian(q)));
    }
    for i in 0..samples {
        let spec = random_spec(dec, &mut rng);
        let code = match ideal_to_code(dec, &spec) {
            Ok(c) => c,
            Err(e) => {
                report.check(false, || format!("ideal_to_code failed on sample {i}: {e}"));
                continue;
            }
        };
        let rows = code.generator.row_vecs();
        report.check(code.dimension() == spec.dimension(dec), || format!("dimension mismatch, sample {i}"));
        report.check(oracle::is_left_ideal(f, og, &rows), || format!("not a left ideal, sample {i}"));
        report.check(code_to_ideal(dec, &code.generator).as_ref() == Ok(&spec), || format!("code_to_ideal round trip, sample {i}"));
        for &(metric, om) in &metrics {
            let Ok(d) = duality::dual(dec, &spec, metric) else {
                report.check(false, || format!("{metric:?} dual failed, sample {i}"));
                continue;
            };
            let closed = ideal_to_code(dec, &d).map(|c| c.generator.row_vecs()).unwrap_or_default();
            let brute = oracle::dual_nullspace(f, &rows, n, om);
            report.check(oracle::same_space(f, &closed, &brute), || format!("{metric:?} dual ≠ nullspace, sample {i}"));
            report.check(d.dimension(dec) + spec.dimension(dec) == n, || format!("{metric:?} dimension sum, sample {i}"));
            let dd = duality::dual(dec, &d, metric);
            report.check(dd.as_ref() == Ok(&spec), || format!("{metric:?} dual is not an involution, sample {i}"));
            let (so, _) = match metric {
                Metric::Euclidean => duality::is_euclid_selforth(dec, &spec).unwrap_or((false, None)),
                Metric::Hermitian => duality::is_hermitian_selforth(dec, &spec).unwrap_or((false, None)),
            };
            report.check(so == oracle::is_self_orthogonal(f, &rows, om), || format!("{metric:?} self-orthogonality, sample {i}"));
        }
    }
}

pub fn verify_algebra(dec: &Decomposition, samples: usize, seed: u64) -> VerifyReport {
    let mut report = VerifyReport { algebra: format!("F_{}[{}]", dec.q(), dec.group.name()), ..Default::default() };
    check_isomorphism(dec, samples, seed, &mut report);
    check_duality(dec, samples, seed, &mut report);
    report
}
