//! Factorisation of x^n − 1 (and x^n + 1) through cyclotomic cosets, and the
//! classification of factors by reciprocal and conjugate behaviour.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::fields::{gcd, Elem, Field, Subfield};

/// Polynomial over the master field, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly(Vec<Elem>);

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Elem::ZERO);
        }
        Poly(coeffs)
    }

    pub fn one() -> Poly {
        Poly(vec![Elem::ONE])
    }

    /// x − root
    pub fn linear(f: &Field, root: Elem) -> Poly {
        Poly(vec![f.neg(root), Elem::ONE])
    }

    /// x^n + c
    pub fn binomial(n: usize, c: Elem) -> Poly {
        let mut v = vec![Elem::ZERO; n + 1];
        v[n] = Elem::ONE;
        v[0] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        let mut out = vec![Elem::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.0.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    fn monic(&self, f: &Field) -> Poly {
        let lead = f.recip(*self.0.last().unwrap());
        Poly(self.0.iter().map(|&c| f.mul(c, lead)).collect())
    }

    /// f* = f(0)^{-1} x^{deg f} f(1/x)
    pub fn reciprocal(&self, f: &Field) -> Result<Poly> {
        if self.0[0].is_zero() {
            return Err(Error::InvalidParameter("reciprocal of a polynomial with f(0) = 0".into()));
        }
        let rev: Vec<Elem> = self.0.iter().rev().copied().collect();
        Ok(Poly::new(rev).monic(f))
    }

    /// Coefficientwise x ↦ x^q.
    pub fn conjugate(&self, f: &Field, q: u64) -> Poly {
        Poly(self.0.iter().map(|&c| f.pow_u(c, q)).collect())
    }

    /// f† = conjugate of the reciprocal.
    pub fn dagger(&self, f: &Field, q: u64) -> Result<Poly> {
        Ok(self.reciprocal(f)?.conjugate(f, q))
    }

    /// Canonical ordering key: coefficients from x^{deg−1} down to the
    /// constant term, compared by discrete log with zero first.
    pub fn key(&self) -> Vec<Elem> {
        self.0[..self.degree()].iter().rev().copied().collect()
    }

    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.key().cmp(&other.key()))
    }

    /// Human-readable form; prime-field coefficients as integers, others as
    /// powers of `name`, the generator of `sub`.
    pub fn format(&self, f: &Field, sub: &Subfield, name: &str) -> String {
        let mut s = String::new();
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = match f.to_int(c) {
                Some(v) => v.to_string(),
                None => match sub.log_of(c) {
                    Some(k) => format!("{name}^{k}"),
                    None => format!("{c:?}"),
                },
            };
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                s.push_str(&coeff);
            } else if coeff == "1" {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{coeff}{mono}");
            }
        }
        s
    }
}

/// q-cyclotomic cosets modulo n, each listed as s, sq, sq², … and ordered by
/// their least element.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if gcd(q, n as u64) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut t = s;
        while !seen[t] {
            seen[t] = true;
            coset.push(t);
            t = ((t as u128 * q as u128) % n as u128) as usize;
        }
        out.push(coset);
    }
    Ok(out)
}

/// Multiplicative order of q modulo m (1 when m = 1).
pub fn mult_order(q: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut t = q % m;
    let mut k = 1;
    while t != 1 {
        t = (t as u128 * q as u128 % m as u128) as u64;
        k += 1;
    }
    k
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Splits a prime power q = p^e.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut e = 0;
    let mut t = q;
    while t.is_multiple_of(p) {
        t /= p;
        e += 1;
    }
    if t != 1 {
        return Err(Error::InvalidParameter(format!("{q} is not a prime power")));
    }
    Ok((p, e))
}

fn coset_poly(f: &Field, gamma: Elem, coset: &[usize]) -> Poly {
    coset
        .iter()
        .fold(Poly::one(), |acc, &s| acc.mul(f, &Poly::linear(f, f.pow_u(gamma, s as u64))))
}

/// Monic irreducible factors of x^n − 1 over F_q inside `field`, one per
/// q-cyclotomic coset, built as ∏(x − α^s) for a fixed primitive n-th root α.
pub fn factor_cyclic(field: &Field, n: usize, q: u64) -> Result<Vec<Poly>> {
    let cosets = cyclotomic_cosets(n, q)?;
    let order = field.order() as usize;
    if !order.is_multiple_of(n) {
        return Err(Error::InvalidParameter(format!("{field:?} has no primitive {n}-th root of unity")));
    }
    let alpha = field.from_log((order / n) as i64);
    Ok(cosets.iter().map(|c| coset_poly(field, alpha, c)).collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ClassTag {
    /// x − 1 or x + 1
    J0,
    /// f = f*, f ≠ f̄
    J1,
    /// f = f̄, f ≠ f*
    J2,
    /// f̄ = f*, f ≠ f*
    J3,
    /// f, f*, f̄, f† pairwise distinct
    J4,
    SelfRecip,
    RecipPair,
}

/// Which binomial a quaternion factor divides: x^n − 1 (A) or x^n + 1 (B).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FactorMode {
    /// x^n − 1 over F_q, classes J0 / SelfRecip / RecipPair
    Euclidean,
    /// x^n − 1 over F_{q²}, classes J0..J4
    Hermitian,
    /// x^n − 1 and x^n + 1 over F_q
    Quaternion,
}

#[derive(Clone, Debug)]
pub struct FactorClass {
    pub tag: ClassTag,
    pub side: Side,
    pub rep: Poly,
    /// The class members other than `rep`: [f̄] for J1, [f*] for J2, J3 and
    /// reciprocal pairs, [f*, f̄, f†] for J4.
    pub companions: Vec<Poly>,
    pub degree: usize,
    /// Root of `rep` with the smallest discrete log.
    pub root: Elem,
    /// Exponents s with root = γ^s for the fixed primitive root γ.
    pub coset: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FactorSystem {
    pub field: Field,
    pub n: usize,
    /// Order of the coefficient field.
    pub q: u64,
    pub mode: FactorMode,
    /// Factors of x^n − 1.
    pub classes: Vec<FactorClass>,
    /// Factors of x^n + 1 (quaternion mode only).
    pub plus_classes: Vec<FactorClass>,
}

/// Degree M of the master field needed for a factor system.
pub fn master_degree(n: usize, q: u64, mode: FactorMode) -> Result<u32> {
    let (_, e) = prime_power(q)?;
    let m = match mode {
        FactorMode::Quaternion => lcm(mult_order(q, 2 * n as u64), 2),
        _ => mult_order(q, n as u64),
    };
    Ok(e * m as u32)
}

impl FactorSystem {
    /// Factors and classifies over the coefficient field F_q. In hermitian
    /// mode q must be a square and conjugation is x ↦ x^{√q}.
    pub fn new(n: usize, q: u64, mode: FactorMode) -> Result<FactorSystem> {
        let (p, e) = prime_power(q)?;
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if gcd(p, n as u64) != 1 {
            return Err(Error::NotCoprime { q, n });
        }
        if mode == FactorMode::Hermitian && e % 2 != 0 {
            return Err(Error::InvalidParameter(format!("hermitian mode needs a square field order, got {q}")));
        }
        if mode == FactorMode::Quaternion && n.is_multiple_of(2) {
            return Err(Error::InvalidParameter("quaternion factor systems need n odd".into()));
        }
        let field = Field::new(p, master_degree(n, q, mode)?)?;
        let modulus = if mode == FactorMode::Quaternion { 2 * n } else { n };
        let gamma = field.from_log((field.order() as usize / modulus) as i64);
        let cosets = cyclotomic_cosets(modulus, q)?;
        let conj_q = if mode == FactorMode::Hermitian { p.pow(e / 2) } else { 0 };

        let mut index = vec![usize::MAX; modulus];
        for (i, c) in cosets.iter().enumerate() {
            for &s in c {
                index[s] = i;
            }
        }
        let neg = |i: usize| index[(modulus - cosets[i][0]) % modulus];
        let conj = |i: usize| index[(cosets[i][0] as u128 * conj_q as u128 % modulus as u128) as usize];

        let mut assigned = vec![false; cosets.len()];
        let mut classes = Vec::new();
        let mut plus_classes = Vec::new();
        for i in 0..cosets.len() {
            if assigned[i] {
                continue;
            }
            let s0 = cosets[i][0];
            let side = if mode == FactorMode::Quaternion && s0 % 2 == 1 { Side::B } else { Side::A };
            let trivial = s0 == 0 || 2 * s0 == modulus;
            // member cosets in companion order: rep first, then [f*], [f̄], [f†]
            let (tag, members): (ClassTag, Vec<usize>) = if trivial {
                (ClassTag::J0, vec![i])
            } else if mode == FactorMode::Hermitian {
                let (ni, ci) = (neg(i), conj(i));
                if ni == i && ci == i {
                    return Err(Error::InvalidParameter(format!(
                        "factor for coset {s0} is self-reciprocal and self-conjugate"
                    )));
                } else if ni == i {
                    (ClassTag::J1, vec![i, ci])
                } else if ci == i {
                    (ClassTag::J2, vec![i, ni])
                } else if ci == ni {
                    (ClassTag::J3, vec![i, ni])
                } else {
                    (ClassTag::J4, vec![i, ni, ci, neg(ci)])
                }
            } else if neg(i) == i {
                (ClassTag::SelfRecip, vec![i])
            } else {
                (ClassTag::RecipPair, vec![i, neg(i)])
            };
            for &m in &members {
                assigned[m] = true;
            }
            let class = orient(&field, gamma, &cosets, tag, side, &members, conj_q)?;
            match side {
                Side::A => classes.push(class),
                Side::B => plus_classes.push(class),
            }
        }
        let order = |a: &FactorClass, b: &FactorClass| {
            let ta = a.tag != ClassTag::J0;
            let tb = b.tag != ClassTag::J0;
            ta.cmp(&tb)
                .then_with(|| {
                    if !ta && !tb {
                        a.coset[0].cmp(&b.coset[0])
                    } else {
                        a.rep.cmp_canonical(&b.rep)
                    }
                })
        };
        classes.sort_by(order);
        plus_classes.sort_by(order);
        Ok(FactorSystem { field, n, q, mode, classes, plus_classes })
    }

    /// The q of F_{q²} in hermitian mode.
    pub fn conj_q(&self) -> Option<u64> {
        if self.mode != FactorMode::Hermitian {
            return None;
        }
        let (p, e) = prime_power(self.q).ok()?;
        Some(p.pow(e / 2))
    }

    pub fn coefficient_field(&self) -> Subfield {
        self.field.subfield(self.q).expect("coefficient field is a subfield")
    }

    pub fn count(&self, side: Side, tag: ClassTag) -> usize {
        let list = match side {
            Side::A => &self.classes,
            Side::B => &self.plus_classes,
        };
        list.iter().filter(|c| c.tag == tag).count()
    }

    /// Product of every factor (representatives and companions) on a side.
    pub fn product(&self, side: Side) -> Poly {
        let list = match side {
            Side::A => &self.classes,
            Side::B => &self.plus_classes,
        };
        list.iter()
            .flat_map(|c| std::iter::once(&c.rep).chain(c.companions.iter()))
            .fold(Poly::one(), |acc, g| acc.mul(&self.field, g))
    }
}

fn orient(
    f: &Field,
    gamma: Elem,
    cosets: &[Vec<usize>],
    tag: ClassTag,
    side: Side,
    members: &[usize],
    conj_q: u64,
) -> Result<FactorClass> {
    let polys: Vec<Poly> = members.iter().map(|&m| coset_poly(f, gamma, &cosets[m])).collect();
    // choose the canonical representative and recompute companions relative to it
    let best = (0..polys.len()).min_by(|&a, &b| polys[a].key().cmp(&polys[b].key())).unwrap();
    let rep = polys[best].clone();
    let rep_coset = cosets[members[best]].clone();
    let companions = match tag {
        ClassTag::J0 | ClassTag::SelfRecip => vec![],
        ClassTag::J1 => vec![rep.conjugate(f, conj_q)],
        ClassTag::J2 | ClassTag::J3 | ClassTag::RecipPair => vec![rep.reciprocal(f)?],
        ClassTag::J4 => vec![rep.reciprocal(f)?, rep.conjugate(f, conj_q), rep.dagger(f, conj_q)?],
    };
    let root = rep_coset.iter().map(|&s| f.pow_u(gamma, s as u64)).min().unwrap();
    Ok(FactorClass { tag, side, degree: rep.degree(), rep, companions, root, coset: rep_coset })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_7_over_4() {
        let c = cyclotomic_cosets(7, 4).unwrap();
        assert_eq!(c, vec![vec![0], vec![1, 4, 2], vec![3, 5, 6]]);
        assert_eq!(cyclotomic_cosets(1, 5).unwrap(), vec![vec![0]]);
        assert!(cyclotomic_cosets(6, 3).is_err());
    }

    #[test]
    fn cosets_mod_16_over_9() {
        let c = cyclotomic_cosets(16, 9).unwrap();
        assert_eq!(c.iter().filter(|c| c.len() == 1).count(), 8);
        assert_eq!(c.iter().filter(|c| c.len() == 2).count(), 4);
    }

    #[test]
    fn x7_minus_1_over_f4() {
        let fs = FactorSystem::new(7, 4, FactorMode::Hermitian).unwrap();
        let f = &fs.field;
        let f2 = fs.coefficient_field();
        let names: Vec<String> = fs
            .classes
            .iter()
            .flat_map(|c| std::iter::once(&c.rep).chain(&c.companions))
            .map(|g| g.format(f, &f2, "w"))
            .collect();
        assert_eq!(names, vec!["x + 1", "x^3 + x + 1", "x^3 + x^2 + 1"]);
        assert_eq!(fs.classes[1].tag, ClassTag::J2);
    }

    #[test]
    fn reciprocal_and_conjugate_are_involutions() {
        let fs = FactorSystem::new(16, 9, FactorMode::Hermitian).unwrap();
        let f = &fs.field;
        for c in &fs.classes {
            let g = &c.rep;
            assert_eq!(&g.reciprocal(f).unwrap().reciprocal(f).unwrap(), g);
            assert_eq!(&g.conjugate(f, 3).conjugate(f, 3), g);
        }
        let one = Poly::linear(f, Elem::ONE);
        assert_eq!(one.reciprocal(f).unwrap(), one);
    }
}
