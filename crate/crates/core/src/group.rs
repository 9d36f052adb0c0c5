//! The groups D_n and Q_n with basis order {1, a, …, a^{m−1}, b, ab, …, a^{m−1}b}
//! (m = n for D_n, m = 2n for Q_n), and group-algebra products on that basis.

use crate::fields::{Elem, Field};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Group {
    /// ⟨a, b | aⁿ = b² = 1, bab = a⁻¹⟩, order 2n
    Dihedral(usize),
    /// ⟨a, b | a^{2n} = 1, b² = aⁿ, b⁻¹ab = a⁻¹⟩, order 4n
    Quaternion(usize),
}

impl Group {
    pub fn n(&self) -> usize {
        match *self {
            Group::Dihedral(n) | Group::Quaternion(n) => n,
        }
    }

    pub fn order(&self) -> usize {
        2 * self.rotations()
    }

    /// Order of a.
    pub fn rotations(&self) -> usize {
        match *self {
            Group::Dihedral(n) => n,
            Group::Quaternion(n) => 2 * n,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Group::Dihedral(n) => format!("D_{n}"),
            Group::Quaternion(n) => format!("Q_{n}"),
        }
    }

    /// Index of a^i b^e.
    pub fn index(&self, i: usize, e: usize) -> usize {
        let m = self.rotations();
        e * m + i % m
    }

    /// (i, e) with g = a^i b^e.
    pub fn decode(&self, g: usize) -> (usize, usize) {
        let m = self.rotations();
        (g % m, g / m)
    }

    pub fn a(&self) -> usize {
        self.index(1, 0)
    }

    pub fn b(&self) -> usize {
        self.index(0, 1)
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        let m = self.rotations();
        let (i, e) = self.decode(g);
        let (j, f) = self.decode(h);
        // b^e a^j = a^{±j} b^e
        let j = if e == 1 { (m - j) % m } else { j };
        let extra = match *self {
            Group::Quaternion(n) if e == 1 && f == 1 => n,
            _ => 0,
        };
        self.index(i + j + extra, (e + f) % 2)
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.mul(g, h) == 0).unwrap()
    }

    pub fn label(&self, g: usize) -> String {
        let (i, e) = self.decode(g);
        let a = match i {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{i}"),
        };
        match (a.is_empty(), e) {
            (true, 0) => "1".to_string(),
            (_, 0) => a,
            _ => format!("{a}b"),
        }
    }

    /// Coordinates of g·u, a permutation of the coordinates of u.
    pub fn left_mul(&self, g: usize, u: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; u.len()];
        for (h, &c) in u.iter().enumerate() {
            out[self.mul(g, h)] = c;
        }
        out
    }

    /// Product in the group algebra.
    pub fn algebra_mul(&self, f: &Field, u: &[Elem], v: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; self.order()];
        for (g, &x) in u.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (h, &y) in v.iter().enumerate() {
                if !y.is_zero() {
                    let k = self.mul(g, h);
                    out[k] = f.add(out[k], f.mul(x, y));
                }
            }
        }
        out
    }

    pub fn unit(&self, g: usize) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; self.order()];
        v[g] = Elem::ONE;
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        for g in [Group::Dihedral(5), Group::Quaternion(3)] {
            let m = g.rotations();
            let (a, b) = (g.a(), g.b());
            let mut x = 0;
            for _ in 0..m {
                x = g.mul(x, a);
            }
            assert_eq!(x, 0);
            let bb = g.mul(b, b);
            match g {
                Group::Dihedral(_) => assert_eq!(bb, 0),
                Group::Quaternion(n) => assert_eq!(bb, g.index(n, 0)),
            }
            let binv = g.inverse(b);
            assert_eq!(g.mul(g.mul(binv, a), b), g.inverse(a));
        }
    }

    #[test]
    fn labels() {
        let g = Group::Dihedral(4);
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(5), "ab");
        assert_eq!(g.label(3), "a^3");
        assert_eq!(g.label(4), "b");
    }
}
