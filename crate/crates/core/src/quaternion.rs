//! F_q[Q_n] for q ≡ 3 (mod 4) and n odd.
//!
//! Factors of x^n − 1 give the same blocks as in the dihedral case. Factors
//! g of x^n + 1 give B-blocks: F_q(√−1) for g = x + 1, M₂(F_q(β+β⁻¹)) for
//! self-reciprocal g (through γ when 4 | deg g, through θ otherwise) and
//! M₂(F_q(β)) for reciprocal pairs.

use crate::algebra::{BlockKind, BlockMap, Decomposition, EuclidRule, Metric, Rep, Shape, Theta};
use crate::dihedral::Builder;
use crate::error::{Error, Result};
use crate::fields::{Elem, Field};
use crate::group::Group;
use crate::linalg::{antidiag, Mat2};
use crate::poly::{prime_power, ClassTag, FactorMode, FactorSystem};

/// Can F_q[Q_n] be handled natively? Otherwise it is isomorphic to F_q[D_{2n}].
pub fn native(n: usize, q: u64) -> bool {
    q % 4 == 3 && n % 2 == 1
}

pub fn build(n: usize, q: u64) -> Result<Decomposition> {
    let (p, _) = prime_power(q)?;
    if p == 2 || n == 0 || (n as u64).is_multiple_of(p) {
        return Err(Error::NotCoprime { q, n: 4 * n });
    }
    if !native(n, q) {
        return Err(Error::DelegateToDihedral { q, n });
    }
    let fs = FactorSystem::new(n, q, FactorMode::Quaternion)?;
    let f = fs.field.clone();
    let i = f.sqrt_minus_one(q * q)?.expect("q² ≡ 1 (mod 4)");
    let mut b = Builder::new(&fs);
    for (idx, class) in fs.classes.iter().enumerate() {
        b.dihedral_block(class, idx, None)?;
    }
    for (idx, class) in fs.plus_classes.iter().enumerate() {
        let beta = class.root;
        match class.tag {
            ClassTag::J0 => {
                let k = f.generated(&b.coeff, i);
                let rep = Rep::Scalar { a: f.neg(Elem::ONE), b: i };
                let s = b.summand(k, Shape::Scalar, rep, EuclidRule::Complement)?;
                b.push(BlockKind::BField, class, idx, vec![s]);
            }
            ClassTag::SelfRecip => {
                let k = f.generated(&b.coeff, f.add(beta, f.recip(beta)));
                let (kind, map) = if class.degree % 4 == 0 {
                    (BlockKind::BGamma, BlockMap::conjugate(&f, gamma_matrix(&f, beta, i))?)
                } else {
                    (BlockKind::BTheta, BlockMap::Theta(Box::new(theta_map(&f, i, k.size())?)))
                };
                let s = b.matrix(k, beta, antidiag(i, i), map, EuclidRule::Fixed)?;
                b.push(kind, class, idx, vec![s]);
            }
            ClassTag::RecipPair => {
                let k = f.generated(&b.coeff, beta);
                let m = f.neg(Elem::ONE);
                let s = b.matrix(k, beta, [[Elem::ZERO, m], [Elem::ONE, Elem::ZERO]], BlockMap::Identity, EuclidRule::Fixed)?;
                b.push(BlockKind::BPaired, class, idx, vec![s]);
            }
            _ => unreachable!("quaternion factor systems use base-field tags"),
        }
    }
    let (blocks, summands) = b.finish();
    Decomposition::assemble(Group::Quaternion(n), Metric::Euclidean, fs, blocks, summands)
}

/// Z = [[√−1, −β], [√−1, −β⁻¹]]
pub fn gamma_matrix(f: &Field, beta: Elem, i: Elem) -> Mat2 {
    [[i, f.neg(beta)], [i, f.neg(f.recip(beta))]]
}

/// θ for a block field K of order `k_order`, with u² + v² = −1 in K.
pub fn theta_map(f: &Field, i: Elem, k_order: u64) -> Result<Theta> {
    let (u, v) = f.solve_sum_of_squares(f.neg(Elem::ONE), k_order)?;
    Theta::new(f, u, v, i, k_order)
}
