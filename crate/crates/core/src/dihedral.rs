//! F[D_n] as a direct sum of fields and 2×2 matrix rings.
//!
//! Euclidean mode works over F_q with blocks for x ∓ 1, self-reciprocal
//! factors and reciprocal pairs. Hermitian mode works over F_{q²} and groups
//! factors into the classes J0..J4.

use crate::algebra::{Block, BlockKind, BlockMap, Decomposition, EuclidRule, Metric, Rep, Shape, Summand};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field, Subfield};
use crate::group::Group;
use crate::linalg::{antidiag, mat2_mul, ExtBasis, Mat2};
use crate::poly::{ClassTag, FactorClass, FactorMode, FactorSystem, Side};

/// Builds the decomposition of F_q[D_n]; in hermitian mode q is the order of
/// the coefficient field F_{q₀²}.
pub fn build(n: usize, q: u64, metric: Metric) -> Result<Decomposition> {
    let mode = match metric {
        Metric::Euclidean => FactorMode::Euclidean,
        Metric::Hermitian => FactorMode::Hermitian,
    };
    let fs = FactorSystem::new(n, q, mode)?;
    let mut b = Builder::new(&fs);
    for (idx, class) in fs.classes.iter().enumerate() {
        b.dihedral_block(class, idx, fs.conj_q())?;
    }
    let (blocks, summands) = b.finish();
    Decomposition::assemble(Group::Dihedral(n), metric, fs, blocks, summands)
}

/// Z = [[1, −α], [1, −α⁻¹]]
pub fn sigma_matrix(f: &Field, alpha: Elem) -> Mat2 {
    let one = Elem::ONE;
    [[one, f.neg(alpha)], [one, f.neg(f.recip(alpha))]]
}

/// σ(X) = Z⁻¹ X Z and its inverse for a self-reciprocal factor with root α.
pub fn sigma_maps(f: &Field, alpha: Elem) -> Result<BlockMap> {
    if f.mul(alpha, alpha) == Elem::ONE {
        return Err(Error::InvalidParameter("σ needs a root other than ±1".into()));
    }
    BlockMap::conjugate(f, sigma_matrix(f, alpha))
}

pub(crate) struct Builder {
    pub field: Field,
    pub coeff: Subfield,
    pub blocks: Vec<Block>,
    pub summands: Vec<Summand>,
}

impl Builder {
    pub fn new(fs: &FactorSystem) -> Builder {
        Builder { field: fs.field.clone(), coeff: fs.coefficient_field(), blocks: vec![], summands: vec![] }
    }

    pub fn finish(self) -> (Vec<Block>, Vec<Summand>) {
        (self.blocks, self.summands)
    }

    pub fn summand(&self, field: Subfield, shape: Shape, rep: Rep, euclid: EuclidRule) -> Result<Summand> {
        let basis = ExtBasis::new(&field, &self.coeff)?;
        Ok(Summand { block: self.blocks.len(), shape, field, basis, rep, euclid })
    }

    pub fn push(&mut self, kind: BlockKind, class: &FactorClass, idx: usize, summands: Vec<Summand>) {
        let first = self.summands.len();
        let ids = (first..first + summands.len()).collect();
        self.summands.extend(summands);
        self.blocks.push(Block {
            kind,
            tag: class.tag,
            side: class.side,
            class: idx,
            degree: class.degree,
            root: class.root,
            summands: ids,
        });
    }

    /// Matrix summand a ↦ map(diag(β, β⁻¹)), b ↦ map(b0) over the field K.
    pub fn matrix(&self, k: Subfield, beta: Elem, b0: Mat2, map: BlockMap, euclid: EuclidRule) -> Result<Summand> {
        self.summand(k, Shape::Matrix, Rep::Matrix { beta, b0, map }, euclid)
    }

    fn sigma_summand(&self, alpha: Elem) -> Result<Summand> {
        let f = &self.field;
        let k = f.generated(&self.coeff, f.add(alpha, f.recip(alpha)));
        self.matrix(k, alpha, swap(), sigma_maps(f, alpha)?, EuclidRule::SelfRecip(alpha))
    }

    fn plain_summand(&self, alpha: Elem) -> Result<Summand> {
        let k = self.field.generated(&self.coeff, alpha);
        self.matrix(k, alpha, swap(), BlockMap::Identity, EuclidRule::Negate)
    }

    /// Blocks for x ∓ 1: F ⊕ F in odd characteristic, F[C₂] otherwise.
    pub fn trivial_block(&mut self, class: &FactorClass, idx: usize) -> Result<()> {
        let f = self.field.clone();
        let a = class.root;
        if f.characteristic() == 2 {
            let s = self.summand(self.coeff.clone(), Shape::C2, Rep::C2, EuclidRule::C2)?;
            self.push(BlockKind::C2Algebra, class, idx, vec![s]);
        } else {
            let mk = |b: Elem| self.summand(self.coeff.clone(), Shape::Scalar, Rep::Scalar { a, b }, EuclidRule::Complement);
            let s = vec![mk(Elem::ONE)?, mk(f.neg(Elem::ONE))?];
            self.push(BlockKind::FieldPair, class, idx, s);
        }
        Ok(())
    }

    pub fn dihedral_block(&mut self, class: &FactorClass, idx: usize, conj_q: Option<u64>) -> Result<()> {
        let f = self.field.clone();
        let alpha = class.root;
        let conj = |x: Elem| f.pow_u(x, conj_q.expect("hermitian class"));
        match class.tag {
            ClassTag::J0 => self.trivial_block(class, idx)?,
            ClassTag::SelfRecip => {
                let s = self.sigma_summand(alpha)?;
                self.push(BlockKind::MatSelfRecip, class, idx, vec![s]);
            }
            ClassTag::RecipPair => {
                let s = self.plain_summand(alpha)?;
                self.push(BlockKind::MatRecipPair, class, idx, vec![s]);
            }
            ClassTag::J1 => {
                let s = vec![self.sigma_summand(alpha)?, self.sigma_summand(conj(alpha))?];
                self.push(BlockKind::MatPairSelfRecip, class, idx, s);
            }
            ClassTag::J2 | ClassTag::J3 => {
                let s = self.plain_summand(alpha)?;
                self.push(BlockKind::MatSingle, class, idx, vec![s]);
            }
            ClassTag::J4 => {
                let s = vec![self.plain_summand(alpha)?, self.plain_summand(conj(alpha))?];
                self.push(BlockKind::MatPair, class, idx, s);
            }
        }
        debug_assert!(class.side == Side::A);
        Ok(())
    }
}

fn swap() -> Mat2 {
    antidiag(Elem::ONE, Elem::ONE)
}

/// σ(diag(α, α⁻¹)) and σ(antidiag(1, 1)) in closed form.
pub fn sigma_images(f: &Field, alpha: Elem) -> Result<(Mat2, Mat2)> {
    let z = sigma_matrix(f, alpha);
    let zi = crate::linalg::mat2_inv(f, &z)?;
    let conj = |x: &Mat2| mat2_mul(f, &mat2_mul(f, &zi, x), &z);
    Ok((conj(&crate::linalg::diag(alpha, f.recip(alpha))), conj(&swap())))
}
