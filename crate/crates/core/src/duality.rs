//! Closed-form duals of group codes, self-orthogonality and counting.
//!
//! Duals are computed block by block from the canonical generators; no linear
//! algebra over the whole code is involved.

use crate::algebra::{Decomposition, EuclidRule, Metric};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field, Subfield};
use crate::group::Group;
use crate::ideals::{BlockIdeal, Enumerator, IdealSpec};
use crate::poly::{prime_power, ClassTag, FactorSystem, Side};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub spec: IdealSpec,
    pub dual: IdealSpec,
    pub metric: Metric,
    pub self_orthogonal: bool,
    pub self_dual: bool,
    /// first block (by index) where the inclusion C ⊆ C^⊥ fails
    pub witness: Option<usize>,
}

fn complement(b: BlockIdeal) -> BlockIdeal {
    match b {
        BlockIdeal::Zero => BlockIdeal::Full,
        BlockIdeal::Full => BlockIdeal::Zero,
        other => other,
    }
}

/// Rank-one ideal with generator row [x y].
fn row(f: &Field, x: Elem, y: Elem) -> BlockIdeal {
    BlockIdeal::from_row(f, x, y)
}

/// Euclidean dual of one summand's ideal.
fn euclid_part(f: &Field, rule: EuclidRule, b: BlockIdeal) -> BlockIdeal {
    if matches!(b, BlockIdeal::Zero | BlockIdeal::Full) {
        return complement(b);
    }
    let two = f.from_int(2);
    match (rule, b) {
        (EuclidRule::SelfRecip(alpha), BlockIdeal::E01) => {
            let s = f.add(alpha, f.recip(alpha));
            row(f, two, f.neg(s))
        }
        (EuclidRule::SelfRecip(alpha), BlockIdeal::Row(l)) => {
            let s = f.add(alpha, f.recip(alpha));
            row(f, f.add(s, f.mul(two, l)), f.sub(f.neg(two), f.mul(s, l)))
        }
        (EuclidRule::Negate, BlockIdeal::Row(l)) => BlockIdeal::Row(f.neg(l)),
        (_, other) => other,
    }
}

/// Closed-form euclidean dual, valid for every decomposition.
pub fn euclid_dual(dec: &Decomposition, spec: &IdealSpec) -> Result<IdealSpec> {
    spec.validate(dec)?;
    let f = &dec.field;
    Ok(IdealSpec(dec.summands.iter().zip(&spec.0).map(|(s, &b)| euclid_part(f, s.euclid, b)).collect()))
}

pub fn euclid_dual_dihedral(dec: &Decomposition, spec: &IdealSpec) -> Result<IdealSpec> {
    if !matches!(dec.group, Group::Dihedral(_)) {
        return Err(Error::WrongMode("euclidean dihedral dual needs a dihedral algebra".into()));
    }
    euclid_dual(dec, spec)
}

pub fn euclid_dual_quaternion(dec: &Decomposition, spec: &IdealSpec) -> Result<IdealSpec> {
    if !matches!(dec.group, Group::Quaternion(_)) {
        return Err(Error::WrongMode("quaternion dual needs a quaternion algebra".into()));
    }
    euclid_dual(dec, spec)
}

/// Closed-form hermitian dual over F_{q²}[D_n].
pub fn hermitian_dual(dec: &Decomposition, spec: &IdealSpec) -> Result<IdealSpec> {
    if dec.metric != Metric::Hermitian || !matches!(dec.group, Group::Dihedral(_)) {
        return Err(Error::WrongMode("hermitian duals need a hermitian dihedral decomposition".into()));
    }
    spec.validate(dec)?;
    let f = &dec.field;
    let q = dec.conj_q().expect("hermitian mode");
    let frob = |x: Elem, k: u64| f.pow_u(x, q.pow(k as u32));
    let two = f.from_int(2);
    let mut out = spec.0.clone();
    for block in &dec.blocks {
        let ids = &block.summands;
        let r = block.degree as u64;
        match block.tag {
            ClassTag::J0 => {
                for &i in ids {
                    out[i] = complement(spec.0[i]);
                }
            }
            ClassTag::J1 => {
                let s = f.add(block.root, f.recip(block.root));
                let (x, y) = (spec.0[ids[0]], spec.0[ids[1]]);
                let x1 = match x {
                    BlockIdeal::E01 => row(f, two, f.neg(frob(s, 1))),
                    BlockIdeal::Row(l) => row(
                        f,
                        frob(f.add(f.mul(two, l), s), 1),
                        frob(f.sub(f.neg(two), f.mul(s, l)), 1),
                    ),
                    other => complement(other),
                };
                let y1 = match y {
                    BlockIdeal::E01 => row(f, two, f.neg(s)),
                    BlockIdeal::Row(l) => {
                        let l = frob(l, r - 1);
                        row(f, f.add(f.mul(two, l), s), f.sub(f.neg(two), f.mul(s, l)))
                    }
                    other => complement(other),
                };
                out[ids[0]] = y1;
                out[ids[1]] = x1;
            }
            ClassTag::J2 => {
                out[ids[0]] = match spec.0[ids[0]] {
                    BlockIdeal::Row(l) => BlockIdeal::Row(f.neg(frob(l, r))),
                    other => complement(other),
                };
            }
            ClassTag::J3 => {
                out[ids[0]] = match spec.0[ids[0]] {
                    BlockIdeal::E01 => BlockIdeal::Row(Elem::ZERO),
                    BlockIdeal::Row(l) => row(f, f.neg(frob(l, r)), Elem::ONE),
                    other => complement(other),
                };
            }
            ClassTag::J4 => {
                let (x, y) = (spec.0[ids[0]], spec.0[ids[1]]);
                let x1 = match x {
                    BlockIdeal::Row(l) => BlockIdeal::Row(f.neg(frob(l, 1))),
                    other => complement(other),
                };
                let y1 = match y {
                    BlockIdeal::Row(l) => BlockIdeal::Row(f.neg(frob(l, 2 * r - 1))),
                    other => complement(other),
                };
                out[ids[0]] = y1;
                out[ids[1]] = x1;
            }
            ClassTag::SelfRecip | ClassTag::RecipPair => unreachable!("base-field tag in hermitian mode"),
        }
    }
    Ok(IdealSpec(out))
}

pub fn dual(dec: &Decomposition, spec: &IdealSpec, metric: Metric) -> Result<IdealSpec> {
    match metric {
        Metric::Euclidean => euclid_dual(dec, spec),
        Metric::Hermitian => hermitian_dual(dec, spec),
    }
}

/// Dual plus self-orthogonality and self-duality flags.
pub fn report(dec: &Decomposition, spec: &IdealSpec, metric: Metric) -> Result<DualityReport> {
    let d = dual(dec, spec, metric)?;
    let witness = first_failure(dec, spec, &d);
    Ok(DualityReport {
        spec: spec.clone(),
        self_orthogonal: witness.is_none(),
        self_dual: &d == spec,
        dual: d,
        metric,
        witness,
    })
}

fn first_failure(dec: &Decomposition, spec: &IdealSpec, dual: &IdealSpec) -> Option<usize> {
    dec.blocks
        .iter()
        .position(|b| b.summands.iter().any(|&i| !spec.0[i].le(&dual.0[i])))
}

/// C ⊆ C^⊥H, with the first failing block as witness.
pub fn is_hermitian_selforth(dec: &Decomposition, spec: &IdealSpec) -> Result<(bool, Option<usize>)> {
    let d = hermitian_dual(dec, spec)?;
    let w = first_failure(dec, spec, &d);
    Ok((w.is_none(), w))
}

pub fn is_euclid_selforth(dec: &Decomposition, spec: &IdealSpec) -> Result<(bool, Option<usize>)> {
    let d = euclid_dual(dec, spec)?;
    let w = first_failure(dec, spec, &d);
    Ok((w.is_none(), w))
}

/// ∏_{J1}(3q^r+6) ∏_{J2∪J3}(q^r+2) ∏_{J4}(3q^{2r}+6), doubled for q even,
/// where F_{q²} is the coefficient field.
pub fn count_hermitian_selforth(fs: &FactorSystem) -> Result<u128> {
    let q = fs.conj_q().ok_or_else(|| Error::WrongMode("hermitian count needs a hermitian factor system".into()))? as u128;
    let mut total: u128 = if q.is_multiple_of(2) { 2 } else { 1 };
    for c in &fs.classes {
        let r = c.degree as u32;
        total *= match c.tag {
            ClassTag::J0 => 1,
            ClassTag::J1 => 3 * q.pow(r) + 6,
            ClassTag::J2 | ClassTag::J3 => q.pow(r) + 2,
            ClassTag::J4 => 3 * q.pow(2 * r) + 6,
            _ => unreachable!(),
        };
    }
    Ok(total)
}

/// 3^s ∏_{self-reciprocal g ≠ x+1}(q^{deg g/2}+2) ∏_{paired g}(q^{deg g}+2).
pub fn count_euclid_selforth_quaternion(fs: &FactorSystem) -> Result<u128> {
    if fs.plus_classes.is_empty() {
        return Err(Error::WrongMode("quaternion count needs a quaternion factor system".into()));
    }
    let q = fs.q as u128;
    let s = fs.count(Side::A, ClassTag::RecipPair) as u32;
    let mut total = 3u128.pow(s);
    for c in &fs.plus_classes {
        total *= match c.tag {
            ClassTag::SelfRecip => q.pow(c.degree as u32 / 2) + 2,
            ClassTag::RecipPair => q.pow(c.degree as u32) + 2,
            _ => 1,
        };
    }
    Ok(total)
}

/// For each block, the admissible block ideals (one entry per summand) of a
/// self-orthogonal code, found by enumerating the block's ideals.
pub fn admissible_blocks(dec: &Decomposition, metric: Metric, budget: u128) -> Result<Vec<Vec<Vec<BlockIdeal>>>> {
    let mut out = Vec::new();
    for block in &dec.blocks {
        // enumerate this block with every other summand held at zero
        let ids = &block.summands;
        let e = Enumerator::filtered(dec, budget, |i, b| ids.contains(&i) || *b == BlockIdeal::Zero)?;
        let mut ok = Vec::new();
        for spec in e {
            let d = dual(dec, &spec, metric)?;
            if ids.iter().all(|&i| spec.0[i].le(&d.0[i])) {
                ok.push(ids.iter().map(|&i| spec.0[i]).collect());
            }
        }
        out.push(ok);
    }
    Ok(out)
}

/// Product of per-block admissible counts.
pub fn count_by_blocks(dec: &Decomposition, metric: Metric, budget: u128) -> Result<u128> {
    Ok(admissible_blocks(dec, metric, budget)?.iter().map(|v| v.len() as u128).product())
}

/// Every self-orthogonal spec, first block most significant.
pub fn selforth_specs(dec: &Decomposition, metric: Metric, budget: u128) -> Result<Vec<IdealSpec>> {
    let blocks = admissible_blocks(dec, metric, budget)?;
    let total: u128 = blocks.iter().map(|v| v.len() as u128).product();
    if total > budget {
        return Err(Error::BudgetExceeded(format!("{total} self-orthogonal codes exceed the budget {budget}")));
    }
    let mut out = vec![IdealSpec(vec![BlockIdeal::Zero; dec.summands.len()])];
    for (block, choices) in dec.blocks.iter().zip(&blocks) {
        out = out
            .iter()
            .flat_map(|spec| {
                choices.iter().map(move |choice| {
                    let mut s = spec.clone();
                    for (&i, &b) in block.summands.iter().zip(choice) {
                        s.0[i] = b;
                    }
                    s
                })
            })
            .collect();
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LambdaKind {
    /// x = −x^{q^r}, q odd
    A,
    /// x = −x^{−q^r}, q odd
    B,
    /// x = x^{−q^r}, q even
    C,
}

/// Solutions in F_{q^{2r}} in closed form:
/// (a) {0} ∪ {ξ^{(2k+1)(q^r+1)/2}}, (b) {ξ^{(2k+1)(q^r−1)/2}}, (c) {ξ^{k(q^r−1)}}.
pub fn lambda_solution_set(kind: LambdaKind, r: u32, q: u64) -> Result<(Subfield, Vec<Elem>)> {
    let (p, e) = prime_power(q)?;
    let odd = p != 2;
    if odd != matches!(kind, LambdaKind::A | LambdaKind::B) {
        return Err(Error::InvalidParameter(format!("case {kind:?} does not apply to q = {q}")));
    }
    let field = Field::new(p, 2 * r * e)?;
    let sub = field.subfield_of_degree(2 * r * e)?;
    let qr = q.pow(r);
    let mut v = Vec::new();
    match kind {
        LambdaKind::A => {
            v.push(Elem::ZERO);
            v.extend((0..qr - 1).map(|k| sub.gen_pow((2 * k + 1) * (qr + 1) / 2)));
        }
        LambdaKind::B => v.extend((0..=qr).map(|k| sub.gen_pow((2 * k + 1) * (qr - 1) / 2))),
        LambdaKind::C => v.extend((0..=qr).map(|k| sub.gen_pow(k * (qr - 1)))),
    }
    v.sort();
    v.dedup();
    Ok((sub, v))
}
