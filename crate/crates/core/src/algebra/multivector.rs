use super::blade::{blade_mul, BasisBlade, Quat};
use crate::rational::{fmt_q, parse_q, q, Q};
use crate::{Error, Result};
use num::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational combination of basis blades. Zero coefficients are never
/// stored, so structural equality is algebraic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multivector {
    terms: BTreeMap<BasisBlade, Q>,
}

impl Multivector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::blade(BasisBlade::ONE)
    }

    pub fn scalar(c: Q) -> Self {
        Self::term(c, BasisBlade::ONE)
    }

    pub fn blade(b: BasisBlade) -> Self {
        Self::term(q(1), b)
    }

    pub fn term(c: Q, b: BasisBlade) -> Self {
        let mut m = Self::zero();
        m.add_term(b, c);
        m
    }

    pub fn central_i() -> Self {
        Self::blade(BasisBlade::central_i())
    }

    pub fn q1(u: Quat) -> Self {
        Self::blade(BasisBlade::q1(u))
    }

    pub fn vector(u: Quat) -> Self {
        Self::blade(BasisBlade::vector(u))
    }

    pub fn add_term(&mut self, b: BasisBlade, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(b).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn coeff(&self, b: BasisBlade) -> Q {
        self.terms.get(&b).cloned().unwrap_or_else(Q::zero)
    }

    pub fn scalar_part(&self) -> Q {
        self.coeff(BasisBlade::ONE)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the only nonzero coefficient (if any) is on the scalar blade.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| *b == BasisBlade::ONE)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisBlade, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Multivector { terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect() }
    }

    /// Bilinear extension of [`blade_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (s, c) = blade_mul(*a, *b);
                let v = x * y;
                out.add_term(c, if s < 0 { -v } else { v });
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.mul(other) - &other.mul(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.mul(other) + &other.mul(self)
    }

    /// `u · self · u` for a blade `u`.
    pub fn sandwich(&self, u: &Multivector) -> Self {
        u.mul(self).mul(u)
    }

    /// Parses sums such as `"qi"`, `"-i.qk"`, `"2*qi + 3/2*vk - 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty multivector".into()));
        }
        let mut out = Self::zero();
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for n in 1..bytes.len() {
            let c = bytes[n];
            let prev = bytes[n - 1];
            if (c == b'+' || c == b'-') && prev != b'e' && prev != b'E' && prev != b'*' && prev != b'/' {
                pieces.push(&compact[start..n]);
                start = n;
            }
        }
        pieces.push(&compact[start..]);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(piece)),
            };
            let (coef, blade) = match body.split_once('*') {
                Some((c, b)) => (parse_q(c)?, BasisBlade::parse(b)?),
                None => match BasisBlade::parse(body) {
                    Ok(b) => (q(1), b),
                    Err(_) => (parse_q(body)?, BasisBlade::ONE),
                },
            };
            out.add_term(blade, if sign < 0 { -coef } else { coef });
        }
        Ok(out)
    }

    /// JSON-friendly map `{blade-name: "p/q"}`.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.terms.iter().map(|(b, c)| (b.name(), fmt_q(c))).collect()
    }

    pub fn from_map(map: &BTreeMap<String, String>) -> Result<Self> {
        let mut out = Self::zero();
        for (k, v) in map {
            out.add_term(BasisBlade::parse(k)?, parse_q(v)?);
        }
        Ok(out)
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (b, c) in &self.terms {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if *b == BasisBlade::ONE {
                f.write_str(&fmt_q(&mag))?;
            } else if mag.is_one() {
                f.write_str(&b.name())?;
            } else {
                write!(f, "{}*{}", fmt_q(&mag), b.name())?;
            }
        }
        Ok(())
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(d)?;
        Multivector::from_map(&map).map_err(serde::de::Error::custom)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: Self) -> Multivector {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Self) -> Multivector {
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, -c.clone());
        }
        out
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Self) -> Multivector {
        Multivector::mul(self, rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&q(-1))
    }
}

/// Free-function form of [`Multivector::mul`].
pub fn mv_mul(a: &Multivector, b: &Multivector) -> Multivector {
    a.mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    #[test]
    fn zero_terms_are_pruned() {
        let a = Multivector::q1(Quat::I);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn ik_squares_to_one() {
        let ik = Multivector::central_i().mul(&Multivector::q1(Quat::K));
        assert_eq!(ik.mul(&ik), Multivector::one());
    }

    #[test]
    fn scaling() {
        let a = Multivector::parse("2*qi - 1/3*vk").unwrap();
        let b = a.scale(&qr(3, 2));
        assert_eq!(b, Multivector::parse("3*qi - 1/2*vk").unwrap());
    }

    #[test]
    fn parse_and_display() {
        let a = Multivector::parse("-i.qk + 2 - 3/4*vj").unwrap();
        assert_eq!(a.coeff(BasisBlade::new(1, Quat::K, Quat::One)), q(-1));
        assert_eq!(a.scalar_part(), q(2));
        assert_eq!(Multivector::parse(&a.to_string()).unwrap(), a);
        assert!(Multivector::parse("").is_err());
        assert!(Multivector::parse("2*zz").is_err());
    }

    #[test]
    fn json_map_round_trip() {
        let a = Multivector::parse("i.qj.vk - 5/7*qi").unwrap();
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"i.qj.vk":"1","qi":"-5/7"}"#);
        let back: Multivector = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
    }
}
