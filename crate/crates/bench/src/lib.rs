//! Shared fixtures for the criterion benches.

use groupcodes::ideals::IdealSpec;
use groupcodes::{dihedral, Decomposition, Metric};

pub fn f9_d16() -> Decomposition {
    dihedral::build(16, 9, Metric::Hermitian).expect("F_9[D_16] decomposes")
}

/// A 12-dimensional hermitian self-orthogonal code of F_9[D_16].
pub fn f9_d16_code(dec: &Decomposition) -> IdealSpec {
    let text = "block#0: zero; block#1: zero; block#2: zero; block#3: zero; block#4: zero; \
                block#5: row(λ=0); block#6: row(λ=7); block#7: row(λ=14); block#8: row(λ=2)";
    IdealSpec::parse(dec, text).expect("valid spec")
}
