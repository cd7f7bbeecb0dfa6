use super::blade::{BasisBlade, Quat};
use super::multivector::Multivector;
use super::oracle::matrix_rep;
use crate::rational::q;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mapping {
    #[serde(rename = "mapping-1")]
    One,
    #[serde(rename = "mapping-2")]
    Two,
}

impl FromStr for Mapping {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "mapping-1" | "1" => Ok(Mapping::One),
            "mapping-2" | "2" => Ok(Mapping::Two),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

impl fmt::Display for Mapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mapping::One => "mapping-1",
            Mapping::Two => "mapping-2",
        })
    }
}

/// γ⁰, γ¹, γ², γ³, γ⁵ as algebra elements.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaPentad {
    pub tag: Mapping,
    pub gammas: [Multivector; 5],
}

/// Expected squares of (γ⁰, γ¹, γ², γ³, γ⁵).
pub const SIGNATURE: [i64; 5] = [1, -1, -1, -1, 1];

/// Mapping-1: γ⁰ = −i·qi, γᵃ = qk·**a**, γ⁵ = i·qj.
/// Mapping-2: γ⁰ = i·qk, γᵃ = qi·**a**, γ⁵ = i·qj.
/// Bold **a** is the vector unit `i·va`.
pub fn gamma_pentad(tag: Mapping) -> GammaPentad {
    let spatial_q1 = match tag {
        Mapping::One => Quat::K,
        Mapping::Two => Quat::I,
    };
    let g0 = match tag {
        Mapping::One => Multivector::term(q(-1), BasisBlade::new(1, Quat::I, Quat::One)),
        Mapping::Two => Multivector::blade(BasisBlade::new(1, Quat::K, Quat::One)),
    };
    let sp = |u| Multivector::blade(BasisBlade::new(1, spatial_q1, u));
    let g5 = Multivector::blade(BasisBlade::new(1, Quat::J, Quat::One));
    GammaPentad { tag, gammas: [g0, sp(Quat::I), sp(Quat::J), sp(Quat::K), g5] }
}

/// Result of checking squares and pairwise anticommutators, both by direct
/// multiplication and through the matrix oracle.
#[derive(Debug, Clone, Serialize)]
pub struct PentadCheck {
    pub tag: Mapping,
    pub squares_ok: bool,
    pub anticommute_ok: bool,
    pub oracle_ok: bool,
    pub checks: usize,
}

impl PentadCheck {
    pub fn passed(&self) -> bool {
        self.squares_ok && self.anticommute_ok && self.oracle_ok
    }
}

pub fn check_pentad(p: &GammaPentad) -> PentadCheck {
    let mut squares_ok = true;
    let mut anticommute_ok = true;
    let mut oracle_ok = true;
    let mut checks = 0;
    for a in 0..5 {
        let ga = &p.gammas[a];
        let sq = ga.mul(ga);
        squares_ok &= sq == Multivector::scalar(q(SIGNATURE[a]));
        checks += 1;
        for b in a + 1..5 {
            let gb = &p.gammas[b];
            let ac = ga.anticommutator(gb);
            anticommute_ok &= ac.is_zero();
            let ma = matrix_rep(ga);
            let mb = matrix_rep(gb);
            oracle_ok &= ma.matmul(&mb).add(&mb.matmul(&ma)) == matrix_rep(&ac);
            checks += 1;
        }
        oracle_ok &= matrix_rep(ga).matmul(&matrix_rep(ga)) == matrix_rep(&sq);
    }
    PentadCheck { tag: p.tag, squares_ok, anticommute_ok, oracle_ok, checks }
}
