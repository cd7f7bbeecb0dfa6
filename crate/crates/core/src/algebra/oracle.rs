//! Independent 4×4 complex matrix image of the algebra.
//!
//! Each quaternion copy is sent to the 2×2 images `i ↦ −iσx`, `j ↦ −iσy`,
//! `k ↦ −iσz`; the first copy acts on the left tensor factor, the second on
//! the right, and the central `i` is the complex scalar. Nothing here calls
//! the blade multiplication table.

use super::blade::{BasisBlade, Quat};
use super::multivector::Multivector;
use crate::rational::{q, Q};
use num::{Complex, One, Zero};
use std::ops::Mul;

pub type CQ = Complex<Q>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat4(pub [[CQ; 4]; 4]);

type Mat2 = [[CQ; 2]; 2];

fn c(re: i64, im: i64) -> CQ {
    Complex::new(q(re), q(im))
}

fn quat_image(u: Quat) -> Mat2 {
    let z = || c(0, 0);
    match u {
        Quat::One => [[c(1, 0), z()], [z(), c(1, 0)]],
        // −iσx
        Quat::I => [[z(), c(0, -1)], [c(0, -1), z()]],
        // −iσy
        Quat::J => [[z(), c(-1, 0)], [c(1, 0), z()]],
        // −iσz
        Quat::K => [[c(0, -1), z()], [z(), c(0, 1)]],
    }
}

fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut m = Mat4::zero();
    for r1 in 0..2 {
        for c1 in 0..2 {
            for r2 in 0..2 {
                for c2 in 0..2 {
                    m.0[2 * r1 + r2][2 * c1 + c2] = &a[r1][c1] * &b[r2][c2];
                }
            }
        }
    }
    m
}

impl Mat4 {
    pub fn zero() -> Self {
        Mat4(std::array::from_fn(|_| std::array::from_fn(|_| CQ::zero())))
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for n in 0..4 {
            m.0[n][n] = CQ::one();
        }
        m
    }

    pub fn scale(&self, s: &CQ) -> Self {
        Mat4(std::array::from_fn(|r| std::array::from_fn(|k| &self.0[r][k] * s)))
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat4(std::array::from_fn(|r| std::array::from_fn(|k| &self.0[r][k] + &o.0[r][k])))
    }

    pub fn matmul(&self, o: &Self) -> Self {
        let mut m = Self::zero();
        for r in 0..4 {
            for k in 0..4 {
                let mut acc = CQ::zero();
                for n in 0..4 {
                    acc += &self.0[r][n] * &o.0[n][k];
                }
                m.0[r][k] = acc;
            }
        }
        m
    }
}

impl Mul for &Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Self) -> Mat4 {
        self.matmul(rhs)
    }
}

/// Matrix of a single blade.
pub fn blade_matrix(b: BasisBlade) -> Mat4 {
    let m = kron(&quat_image(b.q1), &quat_image(b.q2));
    if b.i_power == 1 {
        m.scale(&c(0, 1))
    } else {
        m
    }
}

/// Ring homomorphism from the algebra to 4×4 complex matrices.
pub fn matrix_rep(x: &Multivector) -> Mat4 {
    let mut out = Mat4::zero();
    for (b, coef) in x.terms() {
        out = out.add(&blade_matrix(*b).scale(&Complex::new(coef.clone(), q(0))));
    }
    out
}
