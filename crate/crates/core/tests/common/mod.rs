#![allow(dead_code)]

use groupcodes::linalg::Matrix;
use groupcodes::{Decomposition, Elem, Group};

fn exponent(s: &str) -> (u64, &str) {
    match s.strip_prefix('^') {
        Some(r) => {
            let digits: String = r.chars().take_while(char::is_ascii_digit).collect();
            (digits.parse().expect("exponent"), &r[digits.len()..])
        }
        None => (1, s),
    }
}

/// Parses sums like `ω^3 a^2 - a^5b + 1` into group algebra coordinates,
/// with ω the generator of the coefficient field.
pub fn parse_elem(d: &Decomposition, s: &str) -> Vec<Elem> {
    let f = &d.field;
    let n = match d.group {
        Group::Dihedral(n) => n,
        Group::Quaternion(n) => 2 * n,
    };
    let mut v = vec![Elem::ZERO; 2 * n];
    let s = s.replace(' ', "").replace('−', "-");
    let mut terms = vec![];
    let mut cur = String::new();
    for c in s.chars() {
        if (c == '+' || c == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    terms.push(cur);
    for t in terms {
        let (neg, t) = match t.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, t.trim_start_matches('+')),
        };
        let mut c = Elem::ONE;
        let mut rest = t;
        if let Some(r) = rest.strip_prefix('ω') {
            let (e, r) = exponent(r);
            c = d.coeff.gen_pow(e);
            rest = r;
        }
        if neg {
            c = f.neg(c);
        }
        let mut i = 0;
        if let Some(r) = rest.strip_prefix('a') {
            let (k, r) = exponent(r);
            i = k as usize;
            rest = r;
        }
        let e = match rest {
            "b" => 1,
            "" | "1" => 0,
            other => panic!("bad term {other}"),
        };
        v[e * n + i] = f.add(v[e * n + i], c);
    }
    v
}

/// Basis of the left ideal generated by `u`.
pub fn ideal_of(d: &Decomposition, u: &[Elem]) -> Matrix {
    let f = &d.field;
    let rows: Vec<Vec<Elem>> = (0..d.length()).map(|g| d.group.algebra_mul(f, &d.group.unit(g), u)).collect();
    Matrix::from_rows(d.length(), &rows).row_basis(f)
}

/// All 9 summands of F_9[D_16] zero except the listed rows.
pub fn d16_spec(rows: &[(usize, u32)]) -> String {
    (0..9)
        .map(|i| match rows.iter().find(|r| r.0 == i) {
            Some((_, l)) => format!("block#{i}: row(λ={l})"),
            None => format!("block#{i}: zero"),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub const D16_FIRST: &str = "ω^3 a + ω^7 a^2 + ω a^3 + a^5 + ω^5 a^6 + a^7 + a^8 + ω^3 a^9 + ω^2 a^10 + ω a^11 + a^13 + ω^6 a^14 + a^15 + ω b + ab + ω a^2b + ω^2 a^3b + ω^6 a^4b + ω^2 a^5b - a^6b + ω a^7b + ω a^8b + ω^7 a^9b + ω^3 a^10b + ω^2 a^11b + ω^6 a^13b + ω^3 a^14b + ω^3 a^15b";
pub const D16_SECOND: &str = "1 - a + ω^2 a^2 - a^3 + ω^6 a^4 + ω^5 a^5 + ω^6 a^6 + ω^7 a^7 - a^9 + a^10 - a^11 + ω^2 a^12 + ω^5 a^13 + a^14 + ω^7 a^15 - b - ab + a^2b + ω^3 a^3b + ω^6 a^5b - a^6b - a^7b + ω^5 a^8b + ω^7 a^9b - a^11b + ω^5 a^12b + ω a^13b + ω^3 a^14b + a^15b";
pub const D10_ELEM: &str = "1 + ω^2 a + ω a^2 + a^5 + ω^7 a^6 + ω^5 a^7 + ω a^8 + a^9 + b + a b + ω a^2 b + ω^5 a^3 b + ω^7 a^4 b + a^5 b + ω a^8 b + ω^2 a^9 b";

pub const D10_SPEC: &str =
    "block#0: zero; block#1: zero; block#2: zero; block#3: zero; block#4: zero; block#5: row(λ=0); block#6: e01; block#7: zero";
