//! Nilpotent state vectors and the products built from them.
//!
//! Every state is realized in the mapping-2 pentad:
//! `X = sE·E·(i·qk) + sP·qi·(p_x·i + p_y·j + p_z·k) + qj·m`, where bold
//! vectors are the units `i·va`. Then `X² = E² − p² − m²` exactly.

use crate::algebra::{blade_mul, BasisBlade, Multivector, Quat};
use crate::rational::{fmt_q, q, serde_q, serde_q3, sqrt_exact, Q};
use crate::{Error, Result};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

const AXES: [Quat; 3] = [Quat::I, Quat::J, Quat::K];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentVector {
    #[serde(rename = "E", with = "serde_q")]
    pub e: Q,
    #[serde(with = "serde_q3")]
    pub p: [Q; 3],
    #[serde(with = "serde_q")]
    pub m: Q,
    #[serde(rename = "signE")]
    pub sign_e: i8,
    #[serde(rename = "signP")]
    pub sign_p: i8,
}

pub fn make_nilpotent(e: Q, p: [Q; 3], m: Q, sign_e: i8, sign_p: i8) -> NilpotentVector {
    NilpotentVector { e, p, m, sign_e: sign_of(sign_e), sign_p: sign_of(sign_p) }
}

fn sign_of(s: i8) -> i8 {
    if s < 0 {
        -1
    } else {
        1
    }
}

fn signed(s: i8, x: &Q) -> Q {
    if s < 0 {
        -x.clone()
    } else {
        x.clone()
    }
}

impl NilpotentVector {
    pub fn p2(&self) -> Q {
        self.p.iter().map(|x| x * x).sum()
    }

    /// `E² − p² − m²`.
    pub fn mass_shell(&self) -> Q {
        &self.e * &self.e - self.p2() - &self.m * &self.m
    }

    pub fn on_shell(&self) -> bool {
        self.mass_shell().is_zero()
    }

    pub fn realized(&self) -> Multivector {
        let mut x = Multivector::term(signed(self.sign_e, &self.e), BasisBlade::new(1, Quat::K, Quat::One));
        for (a, pa) in AXES.iter().zip(&self.p) {
            x.add_term(BasisBlade::new(1, Quat::I, *a), signed(self.sign_p, pa));
        }
        x.add_term(BasisBlade::q1(Quat::J), self.m.clone());
        x
    }

    pub fn with_signs(&self, sign_e: i8, sign_p: i8) -> Self {
        make_nilpotent(self.e.clone(), self.p.clone(), self.m.clone(), sign_e, sign_p)
    }

    pub fn massless(&self) -> Self {
        let mut x = self.clone();
        x.m = Q::zero();
        x
    }
}

impl fmt::Display for NilpotentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x < 0 { '-' } else { '+' };
        write!(
            f,
            "({}kE {}ip + ijm; E={}, p=({}, {}, {}), m={})",
            s(self.sign_e),
            s(self.sign_p),
            fmt_q(&self.e),
            fmt_q(&self.p[0]),
            fmt_q(&self.p[1]),
            fmt_q(&self.p[2]),
            fmt_q(&self.m)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conjugation {
    P,
    T,
    C,
}

impl FromStr for Conjugation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "P" | "p" => Ok(Conjugation::P),
            "T" | "t" => Ok(Conjugation::T),
            "C" | "c" => Ok(Conjugation::C),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

/// Sign-pattern form of P, T, C.
pub fn conjugate(x: &NilpotentVector, op: Conjugation) -> NilpotentVector {
    match op {
        Conjugation::P => x.with_signs(x.sign_e, -x.sign_p),
        Conjugation::T => x.with_signs(-x.sign_e, x.sign_p),
        Conjugation::C => x.with_signs(-x.sign_e, -x.sign_p),
    }
}

/// Sandwich form: P is `qi·X·qi`, T is `qk·X·qk`, C is `−qj·X·qj`.
pub fn conjugate_sandwich(x: &Multivector, op: Conjugation) -> Multivector {
    match op {
        Conjugation::P => x.sandwich(&Multivector::q1(Quat::I)),
        Conjugation::T => x.sandwich(&Multivector::q1(Quat::K)),
        Conjugation::C => -&x.sandwich(&Multivector::q1(Quat::J)),
    }
}

/// Parses a word such as `"TCP"` into operators in application order, so the
/// rightmost letter acts first.
pub fn parse_word(word: &str) -> Result<Vec<Conjugation>> {
    let ops = word
        .chars()
        .filter(|c| !matches!(c, '∘' | '.' | ' '))
        .rev()
        .map(|c| c.to_string().parse())
        .collect::<Result<Vec<_>>>()?;
    if ops.is_empty() {
        return Err(Error::Parse("empty conjugation word".into()));
    }
    Ok(ops)
}

/// Applies a word by nested sandwiches, rightmost first.
pub fn conjugate_word(x: &Multivector, word: &str) -> Result<Multivector> {
    Ok(parse_word(word)?.into_iter().fold(x.clone(), |acc, op| conjugate_sandwich(&acc, op)))
}

/// Whether the sandwich product agrees with the sign-pattern rule on `x`.
pub fn check_conjugation(x: &NilpotentVector, op: Conjugation) -> bool {
    conjugate_sandwich(&x.realized(), op) == conjugate(x, op).realized()
}

/// Left-to-right exact product of the realized factors.
pub fn chain_product(factors: &[NilpotentVector]) -> Result<Multivector> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidInput("chain needs at least one factor".into()))?;
    Ok(rest.iter().fold(first.realized(), |acc, f| acc.mul(&f.realized())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinorKind {
    Fermion,
    Antifermion,
}

/// Sign patterns in listing order.
pub const FERMION_ORDER: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
pub const ANTIFERMION_ORDER: [(i8, i8); 4] = [(-1, 1), (-1, -1), (1, 1), (1, -1)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spinor4 {
    pub kind: SpinorKind,
    pub components: [NilpotentVector; 4],
}

impl Spinor4 {
    pub fn new(kind: SpinorKind, e: Q, p: [Q; 3], m: Q) -> Self {
        let order = match kind {
            SpinorKind::Fermion => FERMION_ORDER,
            SpinorKind::Antifermion => ANTIFERMION_ORDER,
        };
        let base = make_nilpotent(e, p, m, 1, 1);
        Spinor4 { kind, components: order.map(|(se, sp)| base.with_signs(se, sp)) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingKind {
    #[serde(rename = "spin1")]
    Spin1,
    #[serde(rename = "spin0")]
    Spin0,
    #[serde(rename = "pauli")]
    Pauli,
    #[serde(rename = "vacuum-k")]
    VacuumK,
    #[serde(rename = "vacuum-j")]
    VacuumJ,
    #[serde(rename = "vacuum-i")]
    VacuumI,
}

impl FromStr for PairingKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "spin1" => Ok(PairingKind::Spin1),
            "spin0" => Ok(PairingKind::Spin0),
            "pauli" => Ok(PairingKind::Pauli),
            "vacuum-k" => Ok(PairingKind::VacuumK),
            "vacuum-j" => Ok(PairingKind::VacuumJ),
            "vacuum-i" => Ok(PairingKind::VacuumI),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

/// Sum of the four componentwise products `A_k · B'_k`.
///
/// spin1 pairs opposite E with the same p; spin0 reverses the p of `B`
/// first so the pair has opposite E and opposite p; pauli and the vacuum
/// pairings need identical components, the vacuum ones inserting the named
/// unit between the factors. E and p must agree; masses may differ.
pub fn spinor_pair_sum(a: &Spinor4, b: &Spinor4, pairing: PairingKind) -> Result<Multivector> {
    let mut sum = Multivector::zero();
    for (k, (x, y)) in a.components.iter().zip(&b.components).enumerate() {
        if x.e != y.e || x.p != y.p {
            return Err(Error::MismatchedKinematics(format!("component {k}: E or p differ")));
        }
        let y = match pairing {
            PairingKind::Spin0 => conjugate(y, Conjugation::P),
            _ => y.clone(),
        };
        let wanted = match pairing {
            PairingKind::Spin1 => (-x.sign_e, x.sign_p),
            PairingKind::Spin0 => (-x.sign_e, -x.sign_p),
            _ => (x.sign_e, x.sign_p),
        };
        if (y.sign_e, y.sign_p) != wanted {
            return Err(Error::MismatchedKinematics(format!(
                "component {k}: sign pattern ({}, {}) does not fit the pairing",
                y.sign_e, y.sign_p
            )));
        }
        let middle = match pairing {
            PairingKind::VacuumK => Some(Quat::K),
            PairingKind::VacuumJ => Some(Quat::J),
            PairingKind::VacuumI => Some(Quat::I),
            _ => None,
        };
        let lhs = match middle {
            Some(u) => x.realized().mul(&Multivector::q1(u)),
            None => x.realized(),
        };
        sum = &sum + &lhs.mul(&y.realized());
    }
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaryonPhase {
    #[serde(rename = "BGR")]
    Bgr,
    #[serde(rename = "-BRG")]
    Brg,
    #[serde(rename = "GRB")]
    Grb,
    #[serde(rename = "-GBR")]
    Gbr,
    #[serde(rename = "RBG")]
    Rbg,
    #[serde(rename = "-RGB")]
    Rgb,
}

impl BaryonPhase {
    pub const ALL: [BaryonPhase; 6] = [
        BaryonPhase::Bgr,
        BaryonPhase::Brg,
        BaryonPhase::Grb,
        BaryonPhase::Gbr,
        BaryonPhase::Rbg,
        BaryonPhase::Rgb,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BaryonPhase::Bgr => "BGR",
            BaryonPhase::Brg => "-BRG",
            BaryonPhase::Grb => "GRB",
            BaryonPhase::Gbr => "-GBR",
            BaryonPhase::Rbg => "RBG",
            BaryonPhase::Rgb => "-RGB",
        }
    }

    /// Factor position carrying the momentum (0-based, also the axis) and
    /// the sign of its momentum term.
    pub fn slot(self) -> (usize, i8) {
        match self {
            BaryonPhase::Bgr => (2, 1),
            BaryonPhase::Brg => (1, -1),
            BaryonPhase::Grb => (1, 1),
            BaryonPhase::Gbr => (2, -1),
            BaryonPhase::Rbg => (0, 1),
            BaryonPhase::Rgb => (0, -1),
        }
    }

    /// The momentum sign of the surviving nilpotent.
    pub fn expected_sign(self) -> i8 {
        match self {
            BaryonPhase::Bgr | BaryonPhase::Brg | BaryonPhase::Rbg => 1,
            _ => -1,
        }
    }
}

impl FromStr for BaryonPhase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('−', "-");
        BaryonPhase::ALL
            .into_iter()
            .find(|p| p.label() == t || p.label().trim_start_matches('-') == t)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BaryonProduct {
    pub phase: BaryonPhase,
    #[serde(with = "serde_q")]
    pub factor: Q,
    pub nilpotent: NilpotentVector,
    pub product: Multivector,
}

/// `|p|` as an exact rational.
fn momentum_magnitude(p: &[Q; 3]) -> Result<Q> {
    let p2: Q = p.iter().map(|x| x * x).sum();
    sqrt_exact(&p2).ok_or_else(|| Error::InvalidInput(format!("|p|² = {} has no rational root", fmt_q(&p2))))
}

/// Finds `c` with `x = c·n`, if any.
fn proportion(x: &Multivector, n: &Multivector) -> Option<Q> {
    if x.is_zero() {
        return Some(Q::zero());
    }
    let (b, c) = n.terms().next()?;
    let f = x.coeff(*b) / c;
    (n.scale(&f) == *x).then_some(f)
}

/// Triple product for one colour phase: two factors `kE + ijm` and one
/// carrying `±i·p` along the axis of its position.
pub fn baryon_product(phase: BaryonPhase, e: Q, p: [Q; 3], m: Q) -> Result<BaryonProduct> {
    let probe = make_nilpotent(e.clone(), p.clone(), m.clone(), 1, 1);
    if !probe.on_shell() {
        return Err(Error::OffShell {
            e2: fmt_q(&(&e * &e)),
            pm2: fmt_q(&(probe.p2() + &m * &m)),
        });
    }
    let mag = momentum_magnitude(&p)?;
    let (pos, sign) = phase.slot();
    let zero = [Q::zero(), Q::zero(), Q::zero()];
    let mut along = zero.clone();
    along[pos] = mag;
    let y = make_nilpotent(e.clone(), zero, m.clone(), 1, 1);
    let z = make_nilpotent(e.clone(), along.clone(), m.clone(), 1, sign);
    let mut factors = vec![y.clone(), y];
    factors.insert(pos, z);
    let product = chain_product(&factors)?;
    for s in [phase.expected_sign(), -phase.expected_sign()] {
        let n = make_nilpotent(e.clone(), along.clone(), m.clone(), 1, s);
        if let Some(factor) = proportion(&product, &n.realized()) {
            return Ok(BaryonProduct { phase, factor, nilpotent: n, product });
        }
    }
    Err(Error::NoSolution(format!("{} product is not a single nilpotent", phase.label())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VacuumCharge {
    K,
    J,
    I,
}

impl VacuumCharge {
    pub fn unit(self) -> Quat {
        match self {
            VacuumCharge::K => Quat::K,
            VacuumCharge::J => Quat::J,
            VacuumCharge::I => Quat::I,
        }
    }

    /// Conjugation equal to the reflection, and the overall sign of the
    /// raw sandwich relative to it.
    pub fn as_conjugation(self) -> (Conjugation, i8) {
        match self {
            VacuumCharge::K => (Conjugation::T, 1),
            VacuumCharge::J => (Conjugation::C, -1),
            VacuumCharge::I => (Conjugation::P, 1),
        }
    }
}

impl FromStr for VacuumCharge {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "k" => Ok(VacuumCharge::K),
            "j" => Ok(VacuumCharge::J),
            "i" => Ok(VacuumCharge::I),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

/// `u·X·u` as a nilpotent, dropping the overall −1 for `j`.
pub fn vacuum_reflect(x: &NilpotentVector, charge: VacuumCharge) -> NilpotentVector {
    conjugate(x, charge.as_conjugation().0)
}

pub fn vacuum_reflect_raw(x: &NilpotentVector, charge: VacuumCharge) -> Multivector {
    x.realized().sandwich(&Multivector::q1(charge.unit()))
}

#[derive(Debug, Clone, Serialize)]
pub struct VacuumChain {
    pub steps: u32,
    pub product: Multivector,
    #[serde(with = "serde_q")]
    pub lambda_re: Q,
    #[serde(with = "serde_q")]
    pub lambda_im: Q,
}

/// Solves `X·qk·X = λ·X` for `λ = re + im·i` and iterates
/// `X·(qk·X)·(qk·X)…` with `n` reflections.
pub fn vacuum_chain(x: &NilpotentVector, n: u32) -> Result<VacuumChain> {
    if n == 0 {
        return Err(Error::InvalidInput("chain needs at least one reflection".into()));
    }
    let xr = x.realized();
    let kx = Multivector::q1(Quat::K).mul(&xr);
    let once = xr.mul(&kx);
    let ix = Multivector::central_i().mul(&xr);
    // X and i·X share no blades, so one blade of each fixes λ.
    let (re, im) = match xr.terms().next() {
        None => (Q::zero(), Q::zero()),
        Some((b, c)) => {
            let (s, ib) = blade_mul(BasisBlade::central_i(), *b);
            let ic = if s < 0 { -c.clone() } else { c.clone() };
            (once.coeff(*b) / c, once.coeff(ib) / ic)
        }
    };
    if &xr.scale(&re) + &ix.scale(&im) != once {
        return Err(Error::NoSolution("X·k·X is not proportional to X".into()));
    }
    let mut product = xr.clone();
    for _ in 0..n {
        product = product.mul(&kx);
    }
    Ok(VacuumChain { steps: n, product, lambda_re: re, lambda_im: im })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Vertex {
    A,
    B,
    C,
    D,
}

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex::A, Vertex::B, Vertex::C, Vertex::D];

    /// Whether each leg carries the mass term.
    pub fn massive_legs(self) -> (bool, bool) {
        match self {
            Vertex::A => (true, false),
            Vertex::B => (true, true),
            Vertex::C => (false, true),
            Vertex::D => (false, false),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "a" | "A" => Ok(Vertex::A),
            "b" | "B" => Ok(Vertex::B),
            "c" | "C" => Ok(Vertex::C),
            "d" | "D" => Ok(Vertex::D),
            other => Err(Error::UnknownTag(other.to_string())),
        }
    }
}

/// Leg listings: the first leg runs (+E,−p), (+E,+p), (−E,+p), (−E,−p);
/// the second applies the same flips starting from (−E,+p).
pub const LEG1_ORDER: [(i8, i8); 4] = [(1, -1), (1, 1), (-1, 1), (-1, -1)];
pub const LEG2_ORDER: [(i8, i8); 4] = [(-1, 1), (-1, -1), (1, -1), (1, 1)];

#[derive(Debug, Clone, Serialize)]
pub struct VertexSum {
    pub vertex: Vertex,
    pub sum: Multivector,
    #[serde(with = "serde_q")]
    pub scalar: Q,
    /// Scalar part over E², absent when E = 0.
    pub ratio: Option<String>,
}

pub fn vertex_sum(vertex: Vertex, e: Q, p: [Q; 3], m: Q) -> VertexSum {
    let (m1, m2) = vertex.massive_legs();
    let base = make_nilpotent(e.clone(), p, m, 1, 1);
    let leg = |massive: bool, (se, sp): (i8, i8)| {
        let x = base.with_signs(se, sp);
        if massive {
            x
        } else {
            x.massless()
        }
    };
    let mut sum = Multivector::zero();
    for (a, b) in LEG1_ORDER.iter().zip(LEG2_ORDER.iter()) {
        sum = &sum + &leg(m1, *a).realized().mul(&leg(m2, *b).realized());
    }
    let scalar = sum.scalar_part();
    let ratio = (!e.is_zero()).then(|| fmt_q(&(&scalar / (&e * &e))));
    VertexSum { vertex, sum, scalar, ratio }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Glueball {
    Spin0,
    Spin2,
}

/// Four-factor glueball chain: spin 2 alternates X with its T image, spin 0
/// with its C image.
pub fn glueball_chain(x: &NilpotentVector, kind: Glueball) -> Multivector {
    let partner = match kind {
        Glueball::Spin2 => conjugate(x, Conjugation::T),
        Glueball::Spin0 => conjugate(x, Conjugation::C),
    };
    let factors = [x.clone(), partner.clone(), x.clone(), partner];
    chain_product(&factors).expect("four factors")
}

pub fn q3(x: i64, y: i64, z: i64) -> [Q; 3] {
    [q(x), q(y), q(z)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qr;

    fn x534(se: i8, sp: i8) -> NilpotentVector {
        make_nilpotent(q(5), q3(0, 0, 4), q(3), se, sp)
    }

    #[test]
    fn squares() {
        assert!(x534(1, 1).realized().mul(&x534(1, 1).realized()).is_zero());
        let x = make_nilpotent(q(2), q3(1, 0, 0), q(0), 1, 1);
        assert_eq!(x.realized().mul(&x.realized()), Multivector::scalar(q(3)));
        let x = make_nilpotent(q(1), q3(0, 0, 0), q(0), 1, 1);
        assert_eq!(x.realized().mul(&x.realized()), Multivector::one());
    }

    #[test]
    fn cpt_sandwiches() {
        for (se, sp) in FERMION_ORDER {
            let x = x534(se, sp);
            for op in [Conjugation::P, Conjugation::T, Conjugation::C] {
                assert!(check_conjugation(&x, op), "{op:?} on {x}");
            }
            let xr = x.realized();
            let tcp = conjugate_sandwich(
                &conjugate_sandwich(&conjugate_sandwich(&xr, Conjugation::P), Conjugation::C),
                Conjugation::T,
            );
            assert_eq!(tcp, xr);
        }
        let x = x534(1, 1);
        assert_eq!(conjugate(&x, Conjugation::P), x534(1, -1));
        assert_eq!(
            conjugate(&conjugate(&x, Conjugation::P), Conjugation::C),
            conjugate(&x, Conjugation::T)
        );
    }

    #[test]
    fn pauli_and_goldstone() {
        let x = x534(1, 1);
        assert!(chain_product(&[x.clone(), x]).unwrap().is_zero());
        let a = make_nilpotent(q(4), q3(0, 0, 4), q(0), 1, 1);
        assert!(chain_product(&[a.clone(), a.with_signs(-1, -1)]).unwrap().is_zero());
        let s1 = chain_product(&[a.clone(), a.with_signs(-1, 1)]).unwrap();
        assert_eq!(s1.scalar_part(), q(-32));
        assert!(!s1.is_scalar());
        assert!(chain_product(&[]).is_err());
    }

    #[test]
    fn pair_sums() {
        let f = Spinor4::new(SpinorKind::Fermion, q(4), q3(0, 0, 4), q(0));
        let a = Spinor4::new(SpinorKind::Antifermion, q(4), q3(0, 0, 4), q(0));
        let s1 = spinor_pair_sum(&f, &a, PairingKind::Spin1).unwrap();
        assert_eq!(s1, Multivector::scalar(q(-128)));
        assert!(spinor_pair_sum(&f, &a, PairingKind::Spin0).unwrap().is_zero());
        assert!(spinor_pair_sum(&f, &f, PairingKind::Pauli).unwrap().is_zero());
        let fm = Spinor4::new(SpinorKind::Fermion, q(5), q3(0, 0, 4), q(3));
        let am = Spinor4::new(SpinorKind::Antifermion, q(5), q3(0, 0, 4), q(3));
        assert_eq!(spinor_pair_sum(&fm, &am, PairingKind::Spin0).unwrap(), Multivector::scalar(q(-72)));
        assert!(matches!(
            spinor_pair_sum(&f, &f, PairingKind::Spin1),
            Err(Error::MismatchedKinematics(_))
        ));
        assert!(matches!(
            spinor_pair_sum(&f, &fm, PairingKind::Pauli),
            Err(Error::MismatchedKinematics(_))
        ));
    }

    #[test]
    fn baryon_phases() {
        for ph in BaryonPhase::ALL {
            let r = baryon_product(ph, q(5), q3(0, 0, 4), q(3)).unwrap();
            assert_eq!(r.factor, q(16), "{}", ph.label());
            assert_eq!(r.nilpotent.sign_p, ph.expected_sign(), "{}", ph.label());
        }
        let r = baryon_product(BaryonPhase::Bgr, q(3), q3(0, 0, 0), q(3)).unwrap();
        assert!(r.factor.is_zero());
        assert!(matches!(
            baryon_product(BaryonPhase::Bgr, q(5), q3(0, 0, 4), q(2)),
            Err(Error::OffShell { .. })
        ));
        assert_eq!("−BRG".parse::<BaryonPhase>().unwrap(), BaryonPhase::Brg);
    }

    #[test]
    fn vacuum() {
        let x = x534(1, 1);
        assert_eq!(vacuum_reflect(&x, VacuumCharge::K), x534(-1, 1));
        assert_eq!(vacuum_reflect(&vacuum_reflect(&x, VacuumCharge::K), VacuumCharge::K), x);
        assert_eq!(vacuum_reflect(&x, VacuumCharge::J), x534(-1, -1));
        assert_eq!(vacuum_reflect_raw(&x, VacuumCharge::J), -&x534(-1, -1).realized());
        assert_eq!(vacuum_reflect_raw(&x, VacuumCharge::K), x534(-1, 1).realized());
        let c = vacuum_chain(&x, 1).unwrap();
        assert_eq!((c.lambda_re.clone(), c.lambda_im.clone()), (q(0), q(-10)));
        let c2 = vacuum_chain(&x, 2).unwrap();
        // λ² = −100
        assert_eq!(c2.product, x.realized().scale(&q(-100)));
        let z = make_nilpotent(q(0), q3(0, 0, 0), q(0), 1, 1);
        let c0 = vacuum_chain(&z, 1).unwrap();
        assert!(c0.lambda_im.is_zero() && c0.product.is_zero());
        assert!(vacuum_chain(&x534(1, 1).with_signs(-1, 1), 1).unwrap().lambda_im == q(10));
    }

    #[test]
    fn vertices() {
        let p = q3(0, 0, 4);
        let v = |x, m| vertex_sum(x, q(5), p.clone(), q(m));
        assert_eq!(v(Vertex::A, 3).sum, Multivector::scalar(q(-36)));
        assert_eq!(v(Vertex::B, 3).sum, Multivector::scalar(q(-72)));
        assert_eq!(v(Vertex::C, 3).sum, Multivector::scalar(q(-36)));
        assert_eq!(v(Vertex::D, 3).sum, Multivector::scalar(q(-36)));
        assert_eq!(v(Vertex::B, 3).ratio.as_deref(), Some("-72/25"));
        let massless = vertex_sum(Vertex::B, q(4), p.clone(), q(0));
        assert!(massless.sum.is_zero());
        assert_eq!(
            vertex_sum(Vertex::B, q(10), q3(0, 0, 8), q(6)).scalar,
            v(Vertex::B, 3).scalar * q(4)
        );
        assert_eq!(qr(-72, 25), v(Vertex::B, 3).scalar / q(25));
    }

    #[test]
    fn glueballs() {
        let a = make_nilpotent(q(4), q3(0, 0, 4), q(0), 1, 1);
        assert!(glueball_chain(&a, Glueball::Spin0).is_zero());
        assert!(!glueball_chain(&a, Glueball::Spin2).is_zero());
        assert!(!glueball_chain(&x534(1, 1), Glueball::Spin0).is_zero());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&x534(1, -1)).unwrap();
        assert_eq!(s, r#"{"E":"5","p":["0","0","4"],"m":"3","signE":1,"signP":-1}"#);
        let back: NilpotentVector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x534(1, -1));
    }
}
