//! Explicit isomorphisms F[G] → ⊕ blocks for G = D_n and G = Q_n.
//!
//! Every block is a sum of one or two summands. A summand is one of
//! * a scalar representation a ↦ s_a, b ↦ s_b into a field K,
//! * the two-dimensional algebra F[C₂] (characteristic 2, a ↦ I, b ↦ S),
//! * a matrix representation a ↦ diag(β, β⁻¹), b ↦ B₀, followed by a ring
//!   isomorphism (conjugation by Z or the quaternion map θ) that moves the
//!   entries into the block field K.
//!
//! The inverse map uses the coordinate matrix of the forward map, each block
//! entry expanded on the power basis of its block field.

use crate::error::{Error, Result};
use crate::fields::{Elem, Field, Subfield};
use crate::group::Group;
use crate::linalg::{
    diag, mat2_add, mat2_inv, mat2_mul, ExtBasis, Mat2, Matrix,
};
use crate::poly::{ClassTag, FactorSystem, Side};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Metric {
    Euclidean,
    Hermitian,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockKind {
    /// K ⊕ K for x ∓ 1 in odd characteristic (also A₁ of Q_n)
    FieldPair,
    /// F[C₂] for x + 1 in characteristic 2
    C2Algebra,
    /// M₂(F(α+α⁻¹)) for a self-reciprocal factor over the base field
    MatSelfRecip,
    /// M₂(F(α)) for a reciprocal pair over the base field
    MatRecipPair,
    /// J₁: M₂(F_{q^r}) ⊕ M₂(F_{q^r})
    MatPairSelfRecip,
    /// J₂ or J₃: M₂(F_{q^{2r}})
    MatSingle,
    /// J₄: M₂(F_{q^{2r}}) ⊕ M₂(F_{q^{2r}})
    MatPair,
    /// B₁ = F_q(√−1)
    BField,
    /// self-reciprocal g_j with 4 | deg g_j
    BGamma,
    /// self-reciprocal g_j with 4 ∤ deg g_j
    BTheta,
    /// g_j ≠ g_j*: M₂(F_q(β))
    BPaired,
}

impl BlockKind {
    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::FieldPair => "FIELD_PAIR",
            BlockKind::C2Algebra => "C2_ALGEBRA",
            BlockKind::MatSelfRecip => "MAT_SELFRECIP",
            BlockKind::MatRecipPair => "MAT_RECIP_PAIR",
            BlockKind::MatPairSelfRecip => "MAT_PAIR_SELFRECIP",
            BlockKind::MatSingle => "MAT_SINGLE",
            BlockKind::MatPair => "MAT_PAIR",
            BlockKind::BField => "B_FIELD",
            BlockKind::BGamma => "B_GAMMA",
            BlockKind::BTheta => "B_THETA",
            BlockKind::BPaired => "B_PAIRED",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Shape {
    Scalar,
    C2,
    Matrix,
}

/// How the euclidean dual acts on a summand's ideal lattice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EuclidRule {
    /// 0 ↔ K
    Complement,
    /// 0 ↔ full, ⟨I+S⟩ fixed
    C2,
    /// self-reciprocal table with the summand's root α
    SelfRecip(Elem),
    /// E01 fixed, [1 λ] ↦ [1 −λ]
    Negate,
    /// 0 ↔ full, proper ideals fixed
    Fixed,
}

/// The quaternion map θ from S ⊂ M₂(F(β)) onto M₂(F(β+β⁻¹)).
#[derive(Clone, Debug)]
pub struct Theta {
    pub u: Elem,
    pub v: Elem,
    pub i: Elem,
    /// order of K = F(β+β⁻¹); y ↦ y^{|K|} is the conjugation of F(β) over K
    pub k_order: u64,
    /// inverse of the 4×4 matrix whose rows are the flattened image basis
    image_coords_inv: Matrix,
}

#[derive(Clone, Debug)]
pub enum BlockMap {
    Identity,
    /// X ↦ Z⁻¹ X Z
    Conjugate { z: Mat2, z_inv: Mat2 },
    Theta(Box<Theta>),
}

#[derive(Clone, Debug)]
pub enum Rep {
    Scalar { a: Elem, b: Elem },
    C2,
    Matrix { beta: Elem, b0: Mat2, map: BlockMap },
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub block: usize,
    pub shape: Shape,
    /// K: the field holding the summand's scalars or matrix entries
    pub field: Subfield,
    pub basis: ExtBasis,
    pub rep: Rep,
    pub euclid: EuclidRule,
}

impl Summand {
    /// Dimension over the coefficient field.
    pub fn dim(&self) -> usize {
        match self.shape {
            Shape::Scalar => self.basis.dim(),
            Shape::C2 => 2,
            Shape::Matrix => 4 * self.basis.dim(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Block {
    pub kind: BlockKind,
    pub tag: ClassTag,
    pub side: Side,
    /// index into the factor system's class list for `side`
    pub class: usize,
    pub degree: usize,
    pub root: Elem,
    pub summands: Vec<usize>,
}

/// Value of one summand.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(Elem),
    C2([Elem; 2]),
    Matrix(Mat2),
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub group: Group,
    pub metric: Metric,
    pub factors: FactorSystem,
    pub field: Field,
    pub coeff: Subfield,
    pub blocks: Vec<Block>,
    pub summands: Vec<Summand>,
    coord: Matrix,
    coord_inv: Matrix,
}

impl Decomposition {
    pub(crate) fn assemble(
        group: Group,
        metric: Metric,
        factors: FactorSystem,
        blocks: Vec<Block>,
        summands: Vec<Summand>,
    ) -> Result<Decomposition> {
        let field = factors.field.clone();
        let coeff = factors.coefficient_field();
        let mut dec = Decomposition {
            group,
            metric,
            factors,
            field,
            coeff,
            blocks,
            summands,
            coord: Matrix::zeros(0, 0),
            coord_inv: Matrix::zeros(0, 0),
        };
        let total: usize = dec.summands.iter().map(Summand::dim).sum();
        if total != group.order() {
            return Err(Error::Shape(format!("block dimensions sum to {total}, expected {}", group.order())));
        }
        let rows: Vec<Vec<Elem>> =
            (0..group.order()).map(|g| dec.flatten(&dec.rho(&group.unit(g)))).collect();
        dec.coord = Matrix::from_rows(total, &rows);
        dec.coord_inv = dec.coord.inverse(&dec.field)?;
        Ok(dec)
    }

    /// Order of the coefficient field.
    pub fn q(&self) -> u64 {
        self.coeff.size()
    }

    /// Code length |G|.
    pub fn length(&self) -> usize {
        self.group.order()
    }

    /// The q with coefficient field F_{q²} (hermitian decompositions).
    pub fn conj_q(&self) -> Option<u64> {
        self.factors.conj_q()
    }

    pub fn coordinate_matrix(&self) -> &Matrix {
        &self.coord
    }

    pub fn coordinate_matrix_inv(&self) -> &Matrix {
        &self.coord_inv
    }

    /// Evaluate a polynomial given by `coeffs` (low degree first).
    fn eval(&self, coeffs: &[Elem], x: Elem) -> Elem {
        let f = &self.field;
        coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Image of an algebra element, one value per summand.
    pub fn rho(&self, u: &[Elem]) -> Vec<Value> {
        assert_eq!(u.len(), self.length(), "element length");
        let m = self.group.rotations();
        let (p, q) = u.split_at(m);
        let f = &self.field;
        self.summands
            .iter()
            .map(|s| match &s.rep {
                Rep::Scalar { a, b } => Value::Scalar(f.add(self.eval(p, *a), f.mul(self.eval(q, *a), *b))),
                Rep::C2 => Value::C2([self.eval(p, Elem::ONE), self.eval(q, Elem::ONE)]),
                Rep::Matrix { beta, b0, map } => {
                    let bi = f.recip(*beta);
                    let pd = diag(self.eval(p, *beta), self.eval(p, bi));
                    let qd = diag(self.eval(q, *beta), self.eval(q, bi));
                    let x = mat2_add(f, &pd, &mat2_mul(f, &qd, b0));
                    Value::Matrix(map.apply(f, &x))
                }
            })
            .collect()
    }

    /// Image of the generator a.
    pub fn rho_a(&self) -> Vec<Value> {
        self.rho(&self.group.unit(self.group.a()))
    }

    pub fn rho_b(&self) -> Vec<Value> {
        self.rho(&self.group.unit(self.group.b()))
    }

    /// Coefficient-field coordinates of a tuple of summand values.
    pub fn flatten(&self, values: &[Value]) -> Vec<Elem> {
        let mut out = Vec::with_capacity(self.length());
        for (s, v) in self.summands.iter().zip(values) {
            match v {
                Value::Scalar(x) => out.extend(s.basis.coords(*x)),
                Value::C2(c) => out.extend_from_slice(c),
                Value::Matrix(m) => {
                    for e in [m[0][0], m[0][1], m[1][0], m[1][1]] {
                        out.extend(s.basis.coords(e));
                    }
                }
            }
        }
        out
    }

    pub fn unflatten(&self, coords: &[Elem]) -> Vec<Value> {
        let mut pos = 0;
        let mut take = |d: usize| {
            let slice = &coords[pos..pos + d];
            pos += d;
            slice
        };
        self.summands
            .iter()
            .map(|s| match s.shape {
                Shape::Scalar => Value::Scalar(s.basis.from_coords(take(s.basis.dim()))),
                Shape::C2 => {
                    let c = take(2);
                    Value::C2([c[0], c[1]])
                }
                Shape::Matrix => {
                    let mut e = [Elem::ZERO; 4];
                    for x in e.iter_mut() {
                        *x = s.basis.from_coords(take(s.basis.dim()));
                    }
                    Value::Matrix([[e[0], e[1]], [e[2], e[3]]])
                }
            })
            .collect()
    }

    pub fn rho_inv(&self, values: &[Value]) -> Result<Vec<Elem>> {
        self.check_values(values)?;
        Ok(self.coord_inv.vec_mul(&self.field, &self.flatten(values)))
    }

    fn check_values(&self, values: &[Value]) -> Result<()> {
        if values.len() != self.summands.len() {
            return Err(Error::Shape(format!("{} values for {} summands", values.len(), self.summands.len())));
        }
        for (i, (s, v)) in self.summands.iter().zip(values).enumerate() {
            let ok = match (s.shape, v) {
                (Shape::Scalar, Value::Scalar(x)) => s.field.contains(*x),
                (Shape::C2, Value::C2(c)) => c.iter().all(|&x| self.coeff.contains(x)),
                (Shape::Matrix, Value::Matrix(m)) => m.iter().flatten().all(|&x| s.field.contains(x)),
                _ => false,
            };
            if !ok {
                return Err(Error::Shape(format!("value for summand {i} has the wrong shape or field")));
            }
        }
        Ok(())
    }

    pub fn value_mul(&self, x: &[Value], y: &[Value]) -> Vec<Value> {
        let f = &self.field;
        x.iter()
            .zip(y)
            .map(|(a, b)| match (a, b) {
                (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(f.mul(*a, *b)),
                // (a0 + a1 S)(b0 + b1 S) with S² = 1
                (Value::C2(a), Value::C2(b)) => Value::C2([
                    f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])),
                    f.add(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
                ]),
                (Value::Matrix(a), Value::Matrix(b)) => Value::Matrix(mat2_mul(f, a, b)),
                _ => panic!("mismatched summand values"),
            })
            .collect()
    }

    pub fn value_one(&self) -> Vec<Value> {
        self.summands
            .iter()
            .map(|s| match s.shape {
                Shape::Scalar => Value::Scalar(Elem::ONE),
                Shape::C2 => Value::C2([Elem::ONE, Elem::ZERO]),
                Shape::Matrix => Value::Matrix(crate::linalg::MAT2_ONE),
            })
            .collect()
    }

    pub fn value_zero(&self) -> Vec<Value> {
        self.summands
            .iter()
            .map(|s| match s.shape {
                Shape::Scalar => Value::Scalar(Elem::ZERO),
                Shape::C2 => Value::C2([Elem::ZERO; 2]),
                Shape::Matrix => Value::Matrix(crate::linalg::MAT2_ZERO),
            })
            .collect()
    }

    pub fn value_pow(&self, x: &[Value], e: u64) -> Vec<Value> {
        let mut result = self.value_one();
        for _ in 0..e {
            result = self.value_mul(&result, x);
        }
        result
    }

    /// Short description of a block field, e.g. `F_81`.
    pub fn field_name(&self, s: &Subfield) -> String {
        format!("F_{}", s.size())
    }

    /// One-line description per block.
    pub fn describe_block(&self, b: &Block) -> String {
        let parts: Vec<String> = b
            .summands
            .iter()
            .map(|&i| {
                let s = &self.summands[i];
                match s.shape {
                    Shape::Scalar => self.field_name(&s.field),
                    Shape::C2 => format!("{}[C2]", self.field_name(&self.coeff)),
                    Shape::Matrix => format!("M2({})", self.field_name(&s.field)),
                }
            })
            .collect();
        parts.join(" ⊕ ")
    }
}

impl BlockMap {
    pub fn apply(&self, f: &Field, x: &Mat2) -> Mat2 {
        match self {
            BlockMap::Identity => *x,
            BlockMap::Conjugate { z, z_inv } => mat2_mul(f, &mat2_mul(f, z_inv, x), z),
            BlockMap::Theta(t) => t.apply(f, x),
        }
    }

    pub fn apply_inv(&self, f: &Field, y: &Mat2) -> Mat2 {
        match self {
            BlockMap::Identity => *y,
            BlockMap::Conjugate { z, z_inv } => mat2_mul(f, &mat2_mul(f, z, y), z_inv),
            BlockMap::Theta(t) => t.apply_inv(f, y),
        }
    }

    /// Conjugation X ↦ Z⁻¹ X Z.
    pub fn conjugate(f: &Field, z: Mat2) -> Result<BlockMap> {
        let z_inv = mat2_inv(f, &z)?;
        Ok(BlockMap::Conjugate { z, z_inv })
    }
}

impl Theta {
    pub fn new(f: &Field, u: Elem, v: Elem, i: Elem, k_order: u64) -> Result<Theta> {
        let partial = Theta { u, v, i, k_order, image_coords_inv: Matrix::identity(4) };
        let rows: Vec<Vec<Elem>> =
            partial.image_basis(f).iter().map(|y| vec![y[0][0], y[0][1], y[1][0], y[1][1]]).collect();
        let m = Matrix::from_rows(4, &rows);
        Ok(Theta { image_coords_inv: m.inverse(f)?, ..partial })
    }

    /// Domain basis {I, [0 1; −1 0], diag(i, −i), [0 i; i 0]}.
    pub fn domain_basis(&self, f: &Field) -> [Mat2; 4] {
        let (o, z, i) = (Elem::ONE, Elem::ZERO, self.i);
        [
            [[o, z], [z, o]],
            [[z, o], [f.neg(o), z]],
            [[i, z], [z, f.neg(i)]],
            [[z, i], [i, z]],
        ]
    }

    /// Image basis {I, [0 1; −1 0], [u v; v −u], [−v u; u v]}.
    pub fn image_basis(&self, f: &Field) -> [Mat2; 4] {
        let (o, z, u, v) = (Elem::ONE, Elem::ZERO, self.u, self.v);
        [
            [[o, z], [z, o]],
            [[z, o], [f.neg(o), z]],
            [[u, v], [v, f.neg(u)]],
            [[f.neg(v), u], [u, v]],
        ]
    }

    /// θ([[x1 + x2 i, x3 + x4 i], [−(x3 − x4 i), x1 − x2 i]])
    ///   = [[x1 + x2 u − x4 v, x3 + x2 v + x4 u], [−x3 + x2 v + x4 u, x1 − x2 u + x4 v]]
    pub fn apply(&self, f: &Field, x: &Mat2) -> Mat2 {
        let two_inv = f.recip(f.from_int(2));
        let two_i_inv = f.recip(f.mul(f.from_int(2), self.i));
        let split = |w: Elem| {
            let wc = f.pow_u(w, self.k_order);
            (f.mul(f.add(w, wc), two_inv), f.mul(f.sub(w, wc), two_i_inv))
        };
        let (x1, x2) = split(x[0][0]);
        let (x3, x4) = split(x[0][1]);
        let (u, v) = (self.u, self.v);
        let x2u = f.mul(x2, u);
        let x2v = f.mul(x2, v);
        let x4u = f.mul(x4, u);
        let x4v = f.mul(x4, v);
        [
            [f.sub(f.add(x1, x2u), x4v), f.add(f.add(x3, x2v), x4u)],
            [f.add(f.add(f.neg(x3), x2v), x4u), f.add(f.sub(x1, x2u), x4v)],
        ]
    }

    pub fn apply_inv(&self, f: &Field, y: &Mat2) -> Mat2 {
        // coordinates of y on the image basis, reused on the domain basis
        let c = self.image_coords_inv.vec_mul(f, &[y[0][0], y[0][1], y[1][0], y[1][1]]);
        let mut out = crate::linalg::MAT2_ZERO;
        for (k, b) in self.domain_basis(f).iter().enumerate() {
            for r in 0..2 {
                for s in 0..2 {
                    out[r][s] = f.add(out[r][s], f.mul(c[k], b[r][s]));
                }
            }
        }
        out
    }
}
