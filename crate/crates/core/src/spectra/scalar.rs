//! Complex scalars that stay exact (Gaussian rationals) until an irrational
//! square root forces a floating fallback.

use crate::rational::{fmt_q, parse_q, q, sqrt_exact, to_f64, Q};
use crate::{Error, Result};
use num::{Complex, One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq)]
pub enum Num {
    Exact(Complex<Q>),
    Float(Complex<f64>),
}

impl Num {
    pub fn zero() -> Self {
        Num::Exact(Complex::new(Q::zero(), Q::zero()))
    }

    pub fn one() -> Self {
        Num::real(q(1))
    }

    pub fn i() -> Self {
        Num::Exact(Complex::new(Q::zero(), Q::one()))
    }

    pub fn real(x: Q) -> Self {
        Num::Exact(Complex::new(x, Q::zero()))
    }

    pub fn int(n: i64) -> Self {
        Num::real(q(n))
    }

    pub fn complex(re: Q, im: Q) -> Self {
        Num::Exact(Complex::new(re, im))
    }

    pub fn float(x: f64) -> Self {
        Num::Float(Complex::new(x, 0.0))
    }

    pub fn to_c64(&self) -> Complex<f64> {
        match self {
            Num::Exact(z) => Complex::new(to_f64(&z.re), to_f64(&z.im)),
            Num::Float(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Num::Exact(_))
    }

    /// Exact zero for exact values, `|z| ≤ 1e-12` otherwise.
    pub fn is_zero(&self) -> bool {
        match self {
            Num::Exact(z) => z.re.is_zero() && z.im.is_zero(),
            Num::Float(z) => z.norm() <= 1e-12,
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_c64().norm()
    }

    pub fn re(&self) -> f64 {
        self.to_c64().re
    }

    pub fn im(&self) -> f64 {
        self.to_c64().im
    }

    pub fn as_real(&self) -> Option<Q> {
        match self {
            Num::Exact(z) if z.im.is_zero() => Some(z.re.clone()),
            _ => None,
        }
    }

    pub fn square(&self) -> Num {
        self * self
    }

    /// Principal square root, exact when the root is a Gaussian rational.
    pub fn sqrt(&self) -> Num {
        if let Num::Exact(z) = self {
            if let Some(r) = exact_sqrt(z) {
                return Num::Exact(r);
            }
        }
        Num::Float(self.to_c64().sqrt())
    }

    pub fn recip(&self) -> Num {
        &Num::one() / self
    }
}

fn exact_sqrt(z: &Complex<Q>) -> Option<Complex<Q>> {
    if z.im.is_zero() {
        return if z.re.is_negative() {
            sqrt_exact(&-z.re.clone()).map(|s| Complex::new(Q::zero(), s))
        } else {
            sqrt_exact(&z.re).map(|s| Complex::new(s, Q::zero()))
        };
    }
    let modulus = sqrt_exact(&(&z.re * &z.re + &z.im * &z.im))?;
    let two = q(2);
    let re = sqrt_exact(&((&modulus + &z.re) / &two))?;
    let im = sqrt_exact(&((&modulus - &z.re) / &two))?;
    Some(Complex::new(re, if z.im.is_negative() { -im } else { im }))
}

macro_rules! binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for &Num {
            type Output = Num;
            fn $f(self, o: &Num) -> Num {
                match (self, o) {
                    (Num::Exact(a), Num::Exact(b)) => Num::Exact(a $op b),
                    _ => Num::Float(self.to_c64() $op o.to_c64()),
                }
            }
        }
        impl $tr for Num {
            type Output = Num;
            fn $f(self, o: Num) -> Num {
                &self $op &o
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for &Num {
    type Output = Num;
    fn div(self, o: &Num) -> Num {
        match (self, o) {
            (Num::Exact(a), Num::Exact(b)) if !(b.re.is_zero() && b.im.is_zero()) => Num::Exact(a / b),
            _ => Num::Float(self.to_c64() / o.to_c64()),
        }
    }
}

impl Div for Num {
    type Output = Num;
    fn div(self, o: Num) -> Num {
        &self / &o
    }
}

impl Neg for &Num {
    type Output = Num;
    fn neg(self) -> Num {
        match self {
            Num::Exact(a) => Num::Exact(-a.clone()),
            Num::Float(a) => Num::Float(-a),
        }
    }
}

impl Neg for Num {
    type Output = Num;
    fn neg(self) -> Num {
        -&self
    }
}

impl From<Q> for Num {
    fn from(x: Q) -> Self {
        Num::real(x)
    }
}

impl From<i64> for Num {
    fn from(x: i64) -> Self {
        Num::int(x)
    }
}

fn fmt_f(x: f64) -> String {
    format!("{x}")
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im, re_zero, im_zero, im_neg) = match self {
            Num::Exact(z) => (
                fmt_q(&z.re),
                fmt_q(&z.im.abs()),
                z.re.is_zero(),
                z.im.is_zero(),
                z.im.is_negative(),
            ),
            Num::Float(z) => (fmt_f(z.re), fmt_f(z.im.abs()), z.re == 0.0, z.im == 0.0, z.im < 0.0),
        };
        let im = if im == "1" { String::new() } else { im };
        match (re_zero, im_zero) {
            (_, true) => f.write_str(&re),
            (true, false) => write!(f, "{}{}i", if im_neg { "-" } else { "" }, im),
            (false, false) => write!(f, "{}{}{}i", re, if im_neg { "-" } else { "+" }, im),
        }
    }
}

impl std::str::FromStr for Num {
    type Err = Error;

    /// Accepts `"3/2"`, `"0.4"`, `"i"`, `"-1/2i"`, `"1+2i"`, `"0.5-0.25i"`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty number".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Num::real(parse_q(&t)?));
        };
        // split at the last sign that is not the leading one or part of an exponent
        let bytes = body.as_bytes();
        let mut cut = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                cut = Some(k);
                break;
            }
        }
        let (re, im) = match cut {
            Some(k) => (parse_q(&body[..k])?, &body[k..]),
            None => (Q::zero(), body),
        };
        let im = match im {
            "" | "+" => q(1),
            "-" => q(-1),
            other => parse_q(other)?,
        };
        Ok(Num::complex(re, im))
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        num_from_json(&v).map_err(de::Error::custom)
    }
}

/// JSON numbers keep their decimal text, so `0.4` reads as exactly 2/5.
pub fn num_from_json(v: &serde_json::Value) -> Result<Num> {
    match v {
        serde_json::Value::Number(n) => Ok(Num::real(parse_q(&n.to_string())?)),
        serde_json::Value::String(s) => s.parse(),
        serde_json::Value::Array(a) if a.len() == 2 => {
            let re = num_from_json(&a[0])?;
            let im = num_from_json(&a[1])?;
            Ok(&re + &(&Num::i() * &im))
        }
        other => Err(Error::Parse(format!("not a number: {other}"))),
    }
}
