use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One of the four units of a quaternion copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Quat {
    One,
    I,
    J,
    K,
}

impl Quat {
    pub const ALL: [Quat; 4] = [Quat::One, Quat::I, Quat::J, Quat::K];

    fn index(self) -> usize {
        self as usize
    }

    fn letter(self) -> &'static str {
        match self {
            Quat::One => "1",
            Quat::I => "i",
            Quat::J => "j",
            Quat::K => "k",
        }
    }

    fn from_letter(c: char) -> Option<Quat> {
        match c {
            'i' => Some(Quat::I),
            'j' => Some(Quat::J),
            'k' => Some(Quat::K),
            _ => None,
        }
    }
}

/// Hamilton product of two units: `(sign, unit)`.
pub fn quat_mul(a: Quat, b: Quat) -> (i8, Quat) {
    use Quat::*;
    match (a, b) {
        (One, x) | (x, One) => (1, x),
        (I, I) | (J, J) | (K, K) => (-1, One),
        (I, J) => (1, K),
        (J, I) => (-1, K),
        (J, K) => (1, I),
        (K, J) => (-1, I),
        (K, I) => (1, J),
        (I, K) => (-1, J),
    }
}

/// A basis element `i^p · q1 · q2` of C ⊗ H ⊗ H.
///
/// The central complex unit is `i`; `q1` is the first quaternion copy and
/// `q2` the second. The multivariate vector unit **v** is `i · q2:v`, which
/// squares to +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisBlade {
    pub i_power: u8,
    pub q1: Quat,
    pub q2: Quat,
}

impl BasisBlade {
    pub const ONE: BasisBlade = BasisBlade { i_power: 0, q1: Quat::One, q2: Quat::One };

    pub const fn new(i_power: u8, q1: Quat, q2: Quat) -> Self {
        BasisBlade { i_power, q1, q2 }
    }

    /// The central imaginary unit.
    pub const fn central_i() -> Self {
        BasisBlade::new(1, Quat::One, Quat::One)
    }

    /// A unit of the first quaternion copy.
    pub const fn q1(u: Quat) -> Self {
        BasisBlade::new(0, u, Quat::One)
    }

    /// A unit of the second quaternion copy (squares to −1).
    pub const fn q2(u: Quat) -> Self {
        BasisBlade::new(0, Quat::One, u)
    }

    /// The multivariate vector unit `i · q2:u` (squares to +1).
    pub const fn vector(u: Quat) -> Self {
        BasisBlade::new(1, Quat::One, u)
    }

    /// All 32 blades in index order.
    pub fn all() -> Vec<BasisBlade> {
        (0..32).map(BasisBlade::from_index).collect()
    }

    pub fn index(self) -> usize {
        self.i_power as usize * 16 + self.q1.index() * 4 + self.q2.index()
    }

    pub fn from_index(n: usize) -> Self {
        assert!(n < 32, "blade index out of range");
        BasisBlade::new((n / 16) as u8, Quat::ALL[(n / 4) % 4], Quat::ALL[n % 4])
    }

    /// Dot-separated factor name in the fixed order iPower, q1, q2, e.g.
    /// `"1"`, `"i"`, `"qi"`, `"vk"`, `"i.qj.vk"`. The `v` factor names the
    /// second quaternion copy, so the vector unit **k** is `"i.vk"`.
    pub fn name(self) -> String {
        let mut parts = Vec::new();
        if self.i_power == 1 {
            parts.push("i".to_string());
        }
        if self.q1 != Quat::One {
            parts.push(format!("q{}", self.q1.letter()));
        }
        if self.q2 != Quat::One {
            parts.push(format!("v{}", self.q2.letter()));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(".")
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(BasisBlade::ONE);
        }
        let mut b = BasisBlade::ONE;
        let mut stage = 0u8;
        for part in s.split('.') {
            let bad = || Error::Parse(format!("bad blade name `{s}`"));
            let mut chars = part.chars();
            match (chars.next(), chars.next(), chars.next()) {
                (Some('i'), None, None) if stage == 0 => {
                    b.i_power = 1;
                    stage = 1;
                }
                (Some('q'), Some(c), None) if stage <= 1 => {
                    b.q1 = Quat::from_letter(c).ok_or_else(bad)?;
                    stage = 2;
                }
                (Some('v'), Some(c), None) if stage <= 2 => {
                    b.q2 = Quat::from_letter(c).ok_or_else(bad)?;
                    stage = 3;
                }
                _ => return Err(bad()),
            }
        }
        Ok(b)
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Product of two blades: the central `i` squares to −1, the two quaternion
/// copies multiply independently and commute with each other.
pub fn blade_mul(a: BasisBlade, b: BasisBlade) -> (i8, BasisBlade) {
    let (s1, q1) = quat_mul(a.q1, b.q1);
    let (s2, q2) = quat_mul(a.q2, b.q2);
    let p = a.i_power + b.i_power;
    let (si, i_power) = if p == 2 { (-1, 0) } else { (1, p) };
    (s1 * s2 * si, BasisBlade { i_power, q1, q2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_rules() {
        assert_eq!(quat_mul(Quat::I, Quat::J), (1, Quat::K));
        assert_eq!(quat_mul(Quat::J, Quat::I), (-1, Quat::K));
        let (s, u) = quat_mul(Quat::I, Quat::J);
        let (s2, u2) = quat_mul(u, Quat::K);
        assert_eq!((s * s2, u2), (-1, Quat::One));
    }

    #[test]
    fn vector_units_square_to_one() {
        for u in [Quat::I, Quat::J, Quat::K] {
            let v = BasisBlade::vector(u);
            assert_eq!(blade_mul(v, v), (1, BasisBlade::ONE));
        }
    }

    #[test]
    fn derived_vector_rule() {
        // ij = i·k: the central unit times the vector unit k, which is −q2:k
        let (s, b) = blade_mul(BasisBlade::vector(Quat::I), BasisBlade::vector(Quat::J));
        let ik = blade_mul(BasisBlade::central_i(), BasisBlade::vector(Quat::K));
        assert_eq!((s, b), ik);
        assert_eq!((s, b), (-1, BasisBlade::q2(Quat::K)));
        let (s2, b2) = blade_mul(BasisBlade::vector(Quat::J), BasisBlade::vector(Quat::I));
        assert_eq!((s2, b2), (-s, b));
    }

    #[test]
    fn names_round_trip() {
        for b in BasisBlade::all() {
            assert_eq!(BasisBlade::parse(&b.name()).unwrap(), b);
        }
        assert_eq!(BasisBlade::parse("i.qj.vk").unwrap(), BasisBlade::new(1, Quat::J, Quat::K));
        assert!(BasisBlade::parse("qj.i").is_err());
        assert!(BasisBlade::parse("qx").is_err());
    }

    #[test]
    fn index_is_bijective() {
        let all = BasisBlade::all();
        for (n, b) in all.iter().enumerate() {
            assert_eq!(b.index(), n);
        }
    }
}
