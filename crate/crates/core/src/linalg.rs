//! Dense linear algebra over subfields of a master field.

use crate::error::{Error, Result};
use crate::fields::{Elem, Field, Subfield};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Elem>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[Elem]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.recip(self.get(r, c));
            for j in c..self.cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Canonical basis of the row space: RREF with zero rows dropped.
    pub fn row_basis(&self, f: &Field) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref_in_place(f).len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref_in_place(f).len()
    }

    /// Basis of the right kernel {y : M yᵀ = 0}, one vector per row.
    pub fn nullspace(&self, f: &Field) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(0, self.cols);
        for &fc in &free {
            let mut v = vec![Elem::ZERO; self.cols];
            v[fc] = Elem::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, fc));
            }
            out.push_row(&v);
        }
        out
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!("{}x{} matrix has no inverse", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, Elem::ONE);
        }
        let pivots = aug.rref_in_place(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::RankDeficient);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, f: &Field, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Elem::ZERO; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(k, j)));
            }
        }
        out
    }

    pub fn map(&self, g: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| g(x)).collect() }
    }

    pub fn same_row_space(&self, f: &Field, other: &Matrix) -> bool {
        self.cols == other.cols && self.row_basis(f) == other.row_basis(f)
    }

    /// Is every row of `other` in the row space of `self`?
    pub fn contains_rows(&self, f: &Field, other: &Matrix) -> bool {
        let r = self.rank(f);
        let mut both = self.clone();
        for i in 0..other.rows {
            both.push_row(other.row(i));
        }
        both.rank(f) == r
    }

    pub fn contains_vec(&self, f: &Field, v: &[Elem]) -> bool {
        let mut m = Matrix::zeros(0, self.cols);
        m.push_row(v);
        self.contains_rows(f, &m)
    }

    pub fn all_in(&self, sub: &Subfield) -> bool {
        self.data.iter().all(|&x| sub.contains(x))
    }
}

/// 2×2 matrices over the master field.
pub type Mat2 = [[Elem; 2]; 2];

pub const MAT2_ZERO: Mat2 = [[Elem::ZERO; 2]; 2];
pub const MAT2_ONE: Mat2 = [[Elem::ONE, Elem::ZERO], [Elem::ZERO, Elem::ONE]];

pub fn mat2_mul(f: &Field, a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = MAT2_ZERO;
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = f.add(f.mul(a[i][0], b[0][j]), f.mul(a[i][1], b[1][j]));
        }
    }
    out
}

pub fn mat2_add(f: &Field, a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = MAT2_ZERO;
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = f.add(a[i][j], b[i][j]);
        }
    }
    out
}

pub fn mat2_scale(f: &Field, c: Elem, a: &Mat2) -> Mat2 {
    a.map(|r| r.map(|x| f.mul(c, x)))
}

pub fn mat2_det(f: &Field, a: &Mat2) -> Elem {
    f.sub(f.mul(a[0][0], a[1][1]), f.mul(a[0][1], a[1][0]))
}

pub fn mat2_inv(f: &Field, a: &Mat2) -> Result<Mat2> {
    let d = f.inv(mat2_det(f, a))?;
    Ok([
        [f.mul(d, a[1][1]), f.neg(f.mul(d, a[0][1]))],
        [f.neg(f.mul(d, a[1][0])), f.mul(d, a[0][0])],
    ])
}

pub fn mat2_pow(f: &Field, a: &Mat2, mut e: u64) -> Mat2 {
    let mut result = MAT2_ONE;
    let mut base = *a;
    while e > 0 {
        if e & 1 == 1 {
            result = mat2_mul(f, &result, &base);
        }
        base = mat2_mul(f, &base, &base);
        e >>= 1;
    }
    result
}

pub fn diag(a: Elem, b: Elem) -> Mat2 {
    [[a, Elem::ZERO], [Elem::ZERO, b]]
}

pub fn antidiag(a: Elem, b: Elem) -> Mat2 {
    [[Elem::ZERO, a], [b, Elem::ZERO]]
}

/// Coordinates of an extension F_{Q^d} on the power basis {1, τ, …, τ^{d−1}}
/// of its canonical generator τ, over the coefficient field F_Q.
///
/// Coordinates are read off through the trace form: if x = Σ c_j τ^j then
/// Tr(x τ^i) = Σ_j c_j Tr(τ^{i+j}), and the Gram matrix is invertible because
/// the extension is separable.
#[derive(Clone, Debug)]
pub struct ExtBasis {
    big: Subfield,
    small: Subfield,
    powers: Vec<Elem>,
    gram_inv: Matrix,
}

impl ExtBasis {
    pub fn new(big: &Subfield, small: &Subfield) -> Result<ExtBasis> {
        if !small.is_subfield_of(big) {
            return Err(Error::NotSubfield(small.size()));
        }
        let f = big.field();
        let d = (big.degree() / small.degree()) as usize;
        let tau = big.gen();
        let powers: Vec<Elem> = (0..d).map(|i| f.pow_u(tau, i as u64)).collect();
        let mut gram = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, trace(f, f.mul(powers[i], powers[j]), small.size(), d));
            }
        }
        let gram_inv = gram.inverse(f)?;
        Ok(ExtBasis { big: big.clone(), small: small.clone(), powers, gram_inv })
    }

    pub fn dim(&self) -> usize {
        self.powers.len()
    }

    pub fn big(&self) -> &Subfield {
        &self.big
    }

    pub fn small(&self) -> &Subfield {
        &self.small
    }

    pub fn tau_pow(&self, t: usize) -> Elem {
        self.powers[t]
    }

    pub fn coords(&self, x: Elem) -> Vec<Elem> {
        let f = self.big.field();
        let d = self.dim();
        let t: Vec<Elem> = self
            .powers
            .iter()
            .map(|&p| trace(f, f.mul(x, p), self.small.size(), d))
            .collect();
        // gram is symmetric, so row-vector product equals column product
        self.gram_inv.vec_mul(f, &t)
    }

    pub fn from_coords(&self, c: &[Elem]) -> Elem {
        let f = self.big.field();
        c.iter().zip(&self.powers).fold(Elem::ZERO, |acc, (&a, &p)| f.add(acc, f.mul(a, p)))
    }
}

/// Relative trace Σ_{l<d} y^{Q^l}.
pub fn trace(f: &Field, y: Elem, q: u64, d: usize) -> Elem {
    let mut acc = Elem::ZERO;
    let mut z = y;
    for _ in 0..d {
        acc = f.add(acc, z);
        z = f.pow_u(z, q);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let f = Field::new(3, 2).unwrap();
        let w = f.gen();
        let m = Matrix::from_rows(2, &[vec![Elem::ONE, w], vec![w, Elem::ZERO]]);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(2));
        let singular = Matrix::from_rows(2, &[vec![Elem::ONE, w], vec![w, f.mul(w, w)]]);
        assert_eq!(singular.inverse(&f), Err(Error::RankDeficient));
    }

    #[test]
    fn nullspace_is_orthogonal_and_complementary() {
        let f = Field::new(2, 2).unwrap();
        let w = f.gen();
        let m = Matrix::from_rows(4, &[vec![Elem::ONE, w, Elem::ZERO, Elem::ONE]]);
        let ns = m.nullspace(&f);
        assert_eq!(ns.rows(), 3);
        for i in 0..3 {
            let dot = (0..4).fold(Elem::ZERO, |acc, j| f.add(acc, f.mul(m.get(0, j), ns.get(i, j))));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn power_basis_coordinates_round_trip() {
        let f = Field::new(3, 4).unwrap();
        let big = f.subfield(81).unwrap();
        let small = f.subfield(9).unwrap();
        let b = ExtBasis::new(&big, &small).unwrap();
        assert_eq!(b.dim(), 2);
        for x in big.elements() {
            let c = b.coords(x);
            assert!(c.iter().all(|&e| small.contains(e)));
            assert_eq!(b.from_coords(&c), x);
        }
    }
}
