//! Brute-force reference implementations used to validate everything else.
//!
//! Nothing here calls into the decomposition, ideal or duality code; the only
//! shared piece is field arithmetic.

use crate::fields::{Elem, Field};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleGroup {
    /// ⟨a, b | aⁿ = b² = 1, bab = a⁻¹⟩
    Dihedral(usize),
    /// ⟨a, b | a^{2n} = 1, b² = aⁿ, b⁻¹ab = a⁻¹⟩
    Quaternion(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleMetric {
    Euclidean,
    /// Σ x_i y_i^q
    Hermitian(u64),
}

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub seed: u64,
    pub samples: usize,
    pub exhaustive_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { seed: 0x5eed, samples: 200, exhaustive_budget: 1 << 24 }
    }
}

/// Words are pairs (i, e) meaning a^i b^e.
impl OracleGroup {
    fn m(&self) -> usize {
        match *self {
            OracleGroup::Dihedral(n) => n,
            OracleGroup::Quaternion(n) => 2 * n,
        }
    }

    pub fn order(&self) -> usize {
        2 * self.m()
    }

    /// Normal form of a word in a, a⁻¹, b written left to right.
    fn reduce(&self, word: &[char]) -> (usize, usize) {
        let m = self.m() as i64;
        // a^i b^e with e ∈ {0,1}
        let (mut i, mut e) = (0i64, 0usize);
        for &c in word {
            match (c, e) {
                ('a', 0) => i += 1,
                ('A', 0) => i -= 1,
                // b a = a⁻¹ b in both groups
                ('a', _) => i -= 1,
                ('A', _) => i += 1,
                ('b', 0) => e = 1,
                ('b', _) => {
                    e = 0;
                    if let OracleGroup::Quaternion(n) = *self {
                        i += n as i64;
                    }
                }
                _ => unreachable!(),
            }
        }
        (i.rem_euclid(m) as usize, e)
    }

    fn word(&self, g: usize) -> Vec<char> {
        let m = self.m();
        let (i, e) = (g % m, g / m);
        let mut w = vec!['a'; i];
        if e == 1 {
            w.push('b');
        }
        w
    }

    fn index(&self, (i, e): (usize, usize)) -> usize {
        e * self.m() + i
    }

    /// Multiplication table via word concatenation and normal forms.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n)
            .map(|g| {
                (0..n)
                    .map(|h| {
                        let mut w = self.word(g);
                        w.extend(self.word(h));
                        self.index(self.reduce(&w))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Precomputed multiplication table and inverses for repeated products.
#[derive(Clone, Debug)]
pub struct Convolution {
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Convolution {
    pub fn new(group: OracleGroup) -> Convolution {
        let table = group.table();
        let n = group.order();
        let inv = (0..n).map(|h| (0..n).find(|&x| table[h][x] == 0).unwrap()).collect();
        Convolution { table, inv }
    }

    /// (uv)_g = Σ_h u_h v_{h⁻¹g}
    pub fn mul(&self, f: &Field, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        let n = self.inv.len();
        (0..n)
            .map(|g| {
                (0..n).fold(Elem::ZERO, |acc, h| {
                    let k = self.table[self.inv[h]][g];
                    f.add(acc, f.mul(u[h], v[k]))
                })
            })
            .collect()
    }
}

pub fn group_mul(f: &Field, group: OracleGroup, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
    Convolution::new(group).mul(f, u, v)
}

/// Gaussian elimination on a list of rows; returns the nonzero reduced rows
/// and their pivot columns.
pub fn echelon(f: &Field, rows: &[Vec<Elem>]) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = f.inv(m[r][c]).unwrap();
        m[r] = m[r].iter().map(|&x| f.mul(x, inv)).collect();
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.sub(*x, f.mul(k, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(f: &Field, rows: &[Vec<Elem>]) -> usize {
    echelon(f, rows).0.len()
}

/// {y : Σ x_i y_i = 0 for every row x}
pub fn nullspace(f: &Field, rows: &[Vec<Elem>], n: usize) -> Vec<Vec<Elem>> {
    if rows.is_empty() {
        return (0..n).map(|i| (0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }).collect()).collect();
    }
    let (m, pivots) = echelon(f, rows);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut y = vec![Elem::ZERO; n];
            y[free] = Elem::ONE;
            for (row, &p) in m.iter().zip(&pivots) {
                y[p] = f.neg(row[free]);
            }
            y
        })
        .collect()
}

/// Dual code; the hermitian dual is the euclidean one with every entry
/// raised to the q-th power.
pub fn dual_nullspace(f: &Field, rows: &[Vec<Elem>], n: usize, metric: OracleMetric) -> Vec<Vec<Elem>> {
    let ns = nullspace(f, rows, n);
    match metric {
        OracleMetric::Euclidean => ns,
        OracleMetric::Hermitian(q) => ns.into_iter().map(|y| y.into_iter().map(|x| f.pow_u(x, q)).collect()).collect(),
    }
}

/// Is span(rows) ⊆ span(space)?
pub fn contained(f: &Field, rows: &[Vec<Elem>], space: &[Vec<Elem>]) -> bool {
    let base = rank(f, space);
    let mut all = space.to_vec();
    all.extend(rows.iter().cloned());
    rank(f, &all) == base
}

pub fn same_space(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> bool {
    contained(f, a, b) && contained(f, b, a)
}

fn unit(group: OracleGroup, g: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; group.order()];
    v[g] = Elem::ONE;
    v
}

/// Closure of the row space under left multiplication by a and b.
pub fn is_left_ideal(f: &Field, group: OracleGroup, rows: &[Vec<Elem>]) -> bool {
    let m = group.order() / 2;
    let conv = Convolution::new(group);
    let products: Vec<Vec<Elem>> = [1, m]
        .iter()
        .flat_map(|&g| rows.iter().map(move |r| (g, r)))
        .map(|(g, r)| conv.mul(f, &unit(group, g), r))
        .collect();
    contained(f, &products, rows)
}

/// C ⊆ C^⊥ under the metric.
pub fn is_self_orthogonal(f: &Field, rows: &[Vec<Elem>], metric: OracleMetric) -> bool {
    let conj = |x: Elem| match metric {
        OracleMetric::Euclidean => x,
        OracleMetric::Hermitian(q) => f.pow_u(x, q),
    };
    rows.iter().all(|x| {
        rows.iter().all(|y| x.iter().zip(y).fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, conj(b)))).is_zero())
    })
}

/// Exhaustive minimum distance over all q^k nonzero combinations, scanning
/// the coefficient field given by its elements.
pub fn min_distance_brute(f: &Field, rows: &[Vec<Elem>], scalars: &[Elem]) -> Option<usize> {
    let k = rows.len();
    if k == 0 {
        return None;
    }
    let n = rows[0].len();
    let q = scalars.len();
    let mut digits = vec![0usize; k];
    let mut best = usize::MAX;
    loop {
        let mut i = 0;
        while i < k {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
        let mut w = vec![Elem::ZERO; n];
        for (r, &d) in rows.iter().zip(&digits) {
            let c = scalars[d];
            if !c.is_zero() {
                for (x, &y) in w.iter_mut().zip(r) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        best = best.min(w.iter().filter(|x| !x.is_zero()).count());
    }
    Some(best)
}

/// Exhaustive scan of the solutions of a λ equation in F_{q^{2r}}: `kind`
/// 0: x = −x^{q^r}; 1: x = −x^{−q^r} (x ≠ 0); 2: x = x^{−q^r} (x ≠ 0).
pub fn lambda_scan(f: &Field, elements: &[Elem], qr: u64, kind: u8) -> Vec<Elem> {
    elements
        .iter()
        .copied()
        .filter(|&x| {
            let y = f.pow_u(x, qr);
            match kind {
                0 => x == f.neg(y),
                1 => !x.is_zero() && f.mul(x, y) == f.neg(Elem::ONE),
                _ => !x.is_zero() && f.mul(x, y) == Elem::ONE,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_and_inverse() {
        let f = Field::new(3, 1).unwrap();
        for g in [OracleGroup::Dihedral(5), OracleGroup::Quaternion(3)] {
            let n = g.order();
            let m = n / 2;
            let v: Vec<Elem> = (0..n).map(|i| f.from_int(i as i64)).collect();
            assert_eq!(group_mul(&f, g, &unit(g, 0), &v), v);
            assert_eq!(group_mul(&f, g, &unit(g, 1), &unit(g, m - 1)), unit(g, 0));
        }
    }

    #[test]
    fn repetition_code_distance() {
        let f = Field::new(2, 1).unwrap();
        let rows = vec![vec![Elem::ONE; 6]];
        assert_eq!(min_distance_brute(&f, &rows, &[Elem::ZERO, Elem::ONE]), Some(6));
        assert_eq!(min_distance_brute(&f, &[], &[Elem::ZERO, Elem::ONE]), None);
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let f = Field::new(5, 1).unwrap();
        let id: Vec<Vec<Elem>> = nullspace(&f, &[], 4);
        assert_eq!(id.len(), 4);
        assert!(nullspace(&f, &id, 4).is_empty());
    }
}
