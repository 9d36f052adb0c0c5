//! Left ideals of a decomposed group algebra and the codes they define.
//!
//! An ideal is a direct sum of one canonical ideal per summand. In a matrix
//! summand M₂(K) every left ideal is generated by a matrix in reduced row
//! echelon form: 0, I, [0 1; 0 0] or [1 λ; 0 0].

use std::fmt;

use rand::Rng;

use crate::algebra::{Decomposition, Shape, Summand, Value};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field};
use crate::linalg::{Matrix, MAT2_ZERO};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockIdeal {
    Zero,
    Full,
    /// ⟨[0 1; 0 0]⟩
    E01,
    /// ⟨[1 λ; 0 0]⟩
    Row(Elem),
    /// ⟨I + S⟩ in F[C₂]
    Mid,
}

impl BlockIdeal {
    /// Generator row of a rank-one ideal.
    pub fn row(&self) -> Option<[Elem; 2]> {
        match *self {
            BlockIdeal::E01 => Some([Elem::ZERO, Elem::ONE]),
            BlockIdeal::Row(l) => Some([Elem::ONE, l]),
            _ => None,
        }
    }

    /// Canonical rank-one ideal with generator row [x y] ≠ 0.
    pub fn from_row(f: &Field, x: Elem, y: Elem) -> BlockIdeal {
        if x.is_zero() {
            assert!(!y.is_zero(), "zero generator row");
            BlockIdeal::E01
        } else {
            BlockIdeal::Row(f.div(y, x).expect("nonzero pivot"))
        }
    }

    /// Ideal inclusion inside one summand.
    pub fn le(&self, other: &BlockIdeal) -> bool {
        matches!((self, other), (BlockIdeal::Zero, _) | (_, BlockIdeal::Full)) || self == other
    }

    /// Is this a valid ideal of summand `s`?
    pub fn fits(&self, s: &Summand) -> bool {
        match (s.shape, self) {
            (_, BlockIdeal::Zero | BlockIdeal::Full) => true,
            (Shape::C2, BlockIdeal::Mid) => true,
            (Shape::Matrix, BlockIdeal::E01) => true,
            (Shape::Matrix, BlockIdeal::Row(l)) => s.field.contains(*l),
            _ => false,
        }
    }
}

/// One ideal per summand of a decomposition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IdealSpec(pub Vec<BlockIdeal>);

impl IdealSpec {
    pub fn zero(dec: &Decomposition) -> IdealSpec {
        IdealSpec(vec![BlockIdeal::Zero; dec.summands.len()])
    }

    pub fn full(dec: &Decomposition) -> IdealSpec {
        IdealSpec(vec![BlockIdeal::Full; dec.summands.len()])
    }

    pub fn parts(&self) -> &[BlockIdeal] {
        &self.0
    }

    pub fn validate(&self, dec: &Decomposition) -> Result<()> {
        if self.0.len() != dec.summands.len() {
            return Err(Error::Shape(format!("spec has {} parts, algebra has {} summands", self.0.len(), dec.summands.len())));
        }
        for (i, (b, s)) in self.0.iter().zip(&dec.summands).enumerate() {
            if !b.fits(s) {
                return Err(Error::Shape(format!("block#{i}: {b:?} is not an ideal of this summand")));
            }
        }
        Ok(())
    }

    /// Summand-wise inclusion.
    pub fn le(&self, other: &IdealSpec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a.le(b))
    }

    /// Dimension over the coefficient field: Σ n_i r_i rank(M_i).
    pub fn dimension(&self, dec: &Decomposition) -> usize {
        self.0.iter().zip(&dec.summands).map(|(b, s)| part_dimension(s, b)).sum()
    }

    /// Canonical text, one line per summand: `block#i: zero|full|e01|row(λ=k)|row(λ=zero)|mid`,
    /// with λ = g^k for the canonical generator g of the summand's field.
    pub fn to_text(&self, dec: &Decomposition) -> String {
        self.lines(dec).join("\n")
    }

    pub fn lines(&self, dec: &Decomposition) -> Vec<String> {
        self.0
            .iter()
            .zip(&dec.summands)
            .enumerate()
            .map(|(i, (b, s))| {
                let t = match b {
                    BlockIdeal::Zero => "zero".to_string(),
                    BlockIdeal::Full => "full".to_string(),
                    BlockIdeal::E01 => "e01".to_string(),
                    BlockIdeal::Mid => "mid".to_string(),
                    BlockIdeal::Row(l) => match s.field.log_of(*l) {
                        Some(k) => format!("row(λ={k})"),
                        None => "row(λ=zero)".to_string(),
                    },
                };
                format!("block#{i}: {t}")
            })
            .collect()
    }

    /// Single-line form with `; ` separators.
    pub fn to_inline(&self, dec: &Decomposition) -> String {
        self.lines(dec).join("; ")
    }

    /// Parses the canonical text; `;` also separates entries. Blank lines and
    /// `#` comments are skipped.
    pub fn parse(dec: &Decomposition, text: &str) -> Result<IdealSpec> {
        let mut parts = vec![None; dec.summands.len()];
        for line in text.split(['\n', ';']).map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let bad = || Error::Parse(format!("malformed line {line:?}"));
            let rest = line.strip_prefix("block#").ok_or_else(bad)?;
            let (idx, tok) = rest.split_once(':').ok_or_else(bad)?;
            let i: usize = idx.trim().parse().map_err(|_| bad())?;
            if i >= parts.len() {
                return Err(Error::Parse(format!("block#{i} out of range")));
            }
            let s = &dec.summands[i];
            let tok = tok.trim();
            let b = match tok {
                "zero" => BlockIdeal::Zero,
                "full" => BlockIdeal::Full,
                "e01" => BlockIdeal::E01,
                "mid" => BlockIdeal::Mid,
                _ => {
                    let inner = tok
                        .strip_prefix("row(λ=")
                        .or_else(|| tok.strip_prefix("row(lambda="))
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(bad)?;
                    if inner == "zero" {
                        BlockIdeal::Row(Elem::ZERO)
                    } else {
                        let k: u64 = inner.parse().map_err(|_| bad())?;
                        BlockIdeal::Row(s.field.gen_pow(k))
                    }
                }
            };
            if parts[i].replace(b).is_some() {
                return Err(Error::Parse(format!("block#{i} given twice")));
            }
        }
        let parts: Option<Vec<BlockIdeal>> = parts.into_iter().collect();
        let spec = IdealSpec(parts.ok_or_else(|| Error::Parse("some blocks are missing".into()))?);
        spec.validate(dec)?;
        Ok(spec)
    }
}

pub fn part_dimension(s: &Summand, b: &BlockIdeal) -> usize {
    let d = s.basis.dim();
    match (s.shape, b) {
        (_, BlockIdeal::Zero) => 0,
        (Shape::Scalar, _) => d,
        (Shape::C2, BlockIdeal::Mid) => 1,
        (Shape::C2, _) => 2,
        (Shape::Matrix, BlockIdeal::Full) => 4 * d,
        (Shape::Matrix, _) => 2 * d,
    }
}

/// A linear code given by a generator matrix whose rows are a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeRecord {
    pub generator: Matrix,
}

impl CodeRecord {
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Same row space?
    pub fn same_code(&self, f: &Field, other: &CodeRecord) -> bool {
        self.length() == other.length() && self.generator.same_row_space(f, &other.generator)
    }
}

impl fmt::Display for CodeRecord {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[{}, {}]", self.length(), self.dimension())
    }
}

/// Values spanning the summand ideal over the coefficient field.
fn part_basis(dec: &Decomposition, s: &Summand, b: &BlockIdeal) -> Vec<Value> {
    let f = &dec.field;
    let d = s.basis.dim();
    let taus = (0..d).map(|t| s.basis.tau_pow(t));
    match (s.shape, b) {
        (_, BlockIdeal::Zero) => vec![],
        (Shape::Scalar, _) => taus.map(Value::Scalar).collect(),
        (Shape::C2, BlockIdeal::Mid) => vec![Value::C2([Elem::ONE, Elem::ONE])],
        (Shape::C2, _) => vec![Value::C2([Elem::ONE, Elem::ZERO]), Value::C2([Elem::ZERO, Elem::ONE])],
        (Shape::Matrix, BlockIdeal::Full) => taus
            .flat_map(|t| {
                (0..4).map(move |k| {
                    let mut m = MAT2_ZERO;
                    m[k / 2][k % 2] = t;
                    Value::Matrix(m)
                })
            })
            .collect(),
        (Shape::Matrix, _) => {
            let [x, y] = b.row().expect("rank-one ideal");
            // τ^t e11 M and τ^t e21 M
            taus.flat_map(|t| {
                let row = [f.mul(t, x), f.mul(t, y)];
                let z = [Elem::ZERO; 2];
                [Value::Matrix([row, z]), Value::Matrix([z, row])]
            })
            .collect()
        }
    }
}

/// The code ρ⁻¹(spec) with a basis generator matrix (rank = dimension).
pub fn ideal_to_code(dec: &Decomposition, spec: &IdealSpec) -> Result<CodeRecord> {
    spec.validate(dec)?;
    let zero = dec.value_zero();
    let mut g = Matrix::zeros(0, dec.length());
    for (i, (b, s)) in spec.0.iter().zip(&dec.summands).enumerate() {
        for v in part_basis(dec, s, b) {
            let mut vals = zero.clone();
            vals[i] = v;
            g.push_row(&dec.rho_inv(&vals)?);
        }
    }
    Ok(CodeRecord { generator: g })
}

/// Is the row space closed under left multiplication by a and b?
pub fn is_closed(dec: &Decomposition, g: &Matrix) -> bool {
    let f = &dec.field;
    let basis = g.row_basis(f);
    let group = dec.group;
    [group.a(), group.b()].iter().all(|&x| {
        (0..basis.rows()).all(|r| basis.contains_vec(f, &group.left_mul(x, basis.row(r))))
    })
}

/// Recovers the canonical spec of a left ideal given by any spanning set.
pub fn code_to_ideal(dec: &Decomposition, g: &Matrix) -> Result<IdealSpec> {
    if g.cols() != dec.length() {
        return Err(Error::Shape(format!("code length {} for an algebra of dimension {}", g.cols(), dec.length())));
    }
    if !g.all_in(&dec.coeff) {
        return Err(Error::Shape("generator entries outside the coefficient field".into()));
    }
    if !is_closed(dec, g) {
        return Err(Error::NotAnIdeal);
    }
    let f = &dec.field;
    let images: Vec<Vec<Value>> = (0..g.rows()).map(|r| dec.rho(g.row(r))).collect();
    let parts = dec
        .summands
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let vals = images.iter().map(|v| v[i]);
            match s.shape {
                Shape::Scalar => {
                    let any = vals.into_iter().any(|v| v != Value::Scalar(Elem::ZERO));
                    Ok(if any { BlockIdeal::Full } else { BlockIdeal::Zero })
                }
                Shape::C2 => {
                    let rows: Vec<Vec<Elem>> = vals
                        .map(|v| match v {
                            Value::C2(c) => c.to_vec(),
                            _ => unreachable!(),
                        })
                        .collect();
                    let m = Matrix::from_rows(2, &rows).row_basis(f);
                    match m.rows() {
                        0 => Ok(BlockIdeal::Zero),
                        2 => Ok(BlockIdeal::Full),
                        _ if m.row(0) == [Elem::ONE, Elem::ONE] => Ok(BlockIdeal::Mid),
                        _ => Err(Error::NotAnIdeal),
                    }
                }
                Shape::Matrix => {
                    let rows: Vec<Vec<Elem>> = vals
                        .flat_map(|v| match v {
                            Value::Matrix(m) => [m[0].to_vec(), m[1].to_vec()],
                            _ => unreachable!(),
                        })
                        .collect();
                    let m = Matrix::from_rows(2, &rows).row_basis(f);
                    Ok(match m.rows() {
                        0 => BlockIdeal::Zero,
                        2 => BlockIdeal::Full,
                        _ => BlockIdeal::from_row(f, m.get(0, 0), m.get(0, 1)),
                    })
                }
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IdealSpec(parts))
}

/// All ideals of one summand: zero, e01, row(λ) by λ (zero first, then by
/// discrete log), full; F[C₂] gives zero, mid, full.
pub fn part_options(s: &Summand) -> Vec<BlockIdeal> {
    match s.shape {
        Shape::Scalar => vec![BlockIdeal::Zero, BlockIdeal::Full],
        Shape::C2 => vec![BlockIdeal::Zero, BlockIdeal::Mid, BlockIdeal::Full],
        Shape::Matrix => {
            let mut v = vec![BlockIdeal::Zero, BlockIdeal::E01];
            v.extend(s.field.elements().map(BlockIdeal::Row));
            v.push(BlockIdeal::Full);
            v
        }
    }
}

/// Number of ideals of a summand without listing them.
pub fn part_option_count(s: &Summand) -> u128 {
    match s.shape {
        Shape::Scalar => 2,
        Shape::C2 => 3,
        Shape::Matrix => s.field.size() as u128 + 3,
    }
}

/// Deterministic enumeration of specs, first summand most significant.
#[derive(Clone, Debug)]
pub struct Enumerator {
    options: Vec<Vec<BlockIdeal>>,
    next: Option<Vec<usize>>,
}

impl Enumerator {
    /// Every ideal of the algebra; fails if there are more than `budget`.
    pub fn all(dec: &Decomposition, budget: u128) -> Result<Enumerator> {
        let total: u128 = dec.summands.iter().map(part_option_count).product();
        if total > budget {
            return Err(Error::BudgetExceeded(format!("{total} ideals exceed the enumeration budget {budget}")));
        }
        Ok(Enumerator::with_options(dec.summands.iter().map(part_options).collect()))
    }

    /// Enumerates the product of per-summand option lists.
    pub fn with_options(options: Vec<Vec<BlockIdeal>>) -> Enumerator {
        let next = if options.iter().any(Vec::is_empty) { None } else { Some(vec![0; options.len()]) };
        Enumerator { options, next }
    }

    /// Keeps only the options accepted by `keep(summand index, option)`.
    pub fn filtered(
        dec: &Decomposition,
        budget: u128,
        keep: impl Fn(usize, &BlockIdeal) -> bool,
    ) -> Result<Enumerator> {
        let options: Vec<Vec<BlockIdeal>> = dec
            .summands
            .iter()
            .enumerate()
            .map(|(i, s)| part_options(s).into_iter().filter(|b| keep(i, b)).collect())
            .collect();
        let e = Enumerator::with_options(options);
        if e.count_total() > budget {
            return Err(Error::BudgetExceeded(format!("{} ideals exceed the enumeration budget {budget}", e.count_total())));
        }
        Ok(e)
    }

    pub fn count_total(&self) -> u128 {
        self.options.iter().map(|o| o.len() as u128).product()
    }
}

impl Iterator for Enumerator {
    type Item = IdealSpec;

    fn next(&mut self) -> Option<IdealSpec> {
        let idx = self.next.as_mut()?;
        let spec = IdealSpec(idx.iter().zip(&self.options).map(|(&i, o)| o[i]).collect());
        let mut k = idx.len();
        loop {
            if k == 0 {
                self.next = None;
                break;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < self.options[k].len() {
                break;
            }
            idx[k] = 0;
        }
        Some(spec)
    }
}

/// A uniformly random ideal of each summand.
pub fn random_spec<R: Rng>(dec: &Decomposition, rng: &mut R) -> IdealSpec {
    IdealSpec(
        dec.summands
            .iter()
            .map(|s| {
                let n = part_option_count(s) as u64;
                match (s.shape, rng.random_range(0..n)) {
                    (_, 0) => BlockIdeal::Zero,
                    (Shape::Scalar, _) => BlockIdeal::Full,
                    (Shape::C2, 1) => BlockIdeal::Mid,
                    (Shape::C2, _) => BlockIdeal::Full,
                    (Shape::Matrix, 1) => BlockIdeal::E01,
                    (Shape::Matrix, k) if k == n - 1 => BlockIdeal::Full,
                    (Shape::Matrix, k) => BlockIdeal::Row(s.field.element(k as usize - 2)),
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Metric;
    use crate::dihedral;

    #[test]
    fn census_f4_d7() {
        let dec = dihedral::build(7, 4, Metric::Hermitian).unwrap();
        let specs: Vec<IdealSpec> = Enumerator::all(&dec, 1000).unwrap().collect();
        assert_eq!(specs.len(), 201);
        assert_eq!(specs[0], IdealSpec::zero(&dec));
        assert_eq!(specs[200], IdealSpec::full(&dec));
        assert!(Enumerator::all(&dec, 200).is_err());
    }

    #[test]
    fn text_round_trip() {
        let dec = dihedral::build(7, 4, Metric::Hermitian).unwrap();
        let spec = IdealSpec(vec![BlockIdeal::Mid, BlockIdeal::Row(dec.summands[1].field.gen_pow(5))]);
        let text = spec.to_text(&dec);
        assert_eq!(text, "block#0: mid\nblock#1: row(λ=5)");
        assert_eq!(IdealSpec::parse(&dec, &text).unwrap(), spec);
        let z = IdealSpec(vec![BlockIdeal::Zero, BlockIdeal::Row(Elem::ZERO)]);
        assert_eq!(IdealSpec::parse(&dec, &z.to_text(&dec)).unwrap(), z);
        assert!(IdealSpec::parse(&dec, "block#0: mid").is_err());
        assert!(IdealSpec::parse(&dec, "block#0: e01\nblock#1: zero").is_err());
    }

    #[test]
    fn full_and_zero_codes() {
        let dec = dihedral::build(5, 3, Metric::Euclidean).unwrap();
        let full = ideal_to_code(&dec, &IdealSpec::full(&dec)).unwrap();
        assert_eq!(full.dimension(), 10);
        assert_eq!(code_to_ideal(&dec, &Matrix::identity(10)).unwrap(), IdealSpec::full(&dec));
        assert_eq!(ideal_to_code(&dec, &IdealSpec::zero(&dec)).unwrap().dimension(), 0);
    }
}
