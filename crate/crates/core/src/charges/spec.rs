use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavour {
    U,
    D,
    C,
    S,
    T,
    B,
    NuE,
    E,
    NuMu,
    Mu,
    NuTau,
    Tau,
}

impl Flavour {
    pub const QUARKS: [Flavour; 6] = [Flavour::U, Flavour::D, Flavour::C, Flavour::S, Flavour::T, Flavour::B];
    pub const LEPTONS: [Flavour; 6] =
        [Flavour::NuE, Flavour::E, Flavour::NuMu, Flavour::Mu, Flavour::NuTau, Flavour::Tau];

    pub fn name(self) -> &'static str {
        match self {
            Flavour::U => "u",
            Flavour::D => "d",
            Flavour::C => "c",
            Flavour::S => "s",
            Flavour::T => "t",
            Flavour::B => "b",
            Flavour::NuE => "nu_e",
            Flavour::E => "e",
            Flavour::NuMu => "nu_mu",
            Flavour::Mu => "mu",
            Flavour::NuTau => "nu_tau",
            Flavour::Tau => "tau",
        }
    }

    pub fn is_quark(self) -> bool {
        Flavour::QUARKS.contains(&self)
    }

    /// Up-type quarks and the neutrinos.
    pub fn isospin_up(self) -> bool {
        matches!(self, Flavour::U | Flavour::C | Flavour::T | Flavour::NuE | Flavour::NuMu | Flavour::NuTau)
    }

    pub fn violation(self) -> Violation {
        match self {
            Flavour::U | Flavour::D | Flavour::NuE | Flavour::E => Violation::None,
            Flavour::C | Flavour::S | Flavour::NuMu | Flavour::Mu => Violation::P,
            _ => Violation::T,
        }
    }

    pub fn generation(self) -> u8 {
        self.violation().generation()
    }

    fn from_name(s: &str) -> Option<Flavour> {
        Some(match s {
            "u" | "up" => Flavour::U,
            "d" | "down" => Flavour::D,
            "c" | "charm" | "charmed" => Flavour::C,
            "s" | "strange" => Flavour::S,
            "t" | "top" => Flavour::T,
            "b" | "bottom" => Flavour::B,
            "nu_e" | "ν_e" | "νe" | "e-neutrino" => Flavour::NuE,
            "e" | "electron" => Flavour::E,
            "nu_mu" | "ν_μ" | "νμ" | "mu-neutrino" => Flavour::NuMu,
            "mu" | "μ" | "muon" => Flavour::Mu,
            "nu_tau" | "ν_τ" | "ντ" | "tau-neutrino" => Flavour::NuTau,
            "tau" | "τ" => Flavour::Tau,
            _ => return None,
        })
    }
}

impl fmt::Display for Flavour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavour {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Flavour::from_name(s.trim()).ok_or_else(|| Error::UnknownFlavour(s.to_string()))
    }
}

/// A fermion or its antistate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Particle {
    pub flavour: Flavour,
    pub anti: bool,
}

impl Particle {
    pub fn new(flavour: Flavour) -> Self {
        Particle { flavour, anti: false }
    }

    pub fn anti(flavour: Flavour) -> Self {
        Particle { flavour, anti: true }
    }
}

impl fmt::Display for Particle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.anti {
            write!(f, "anti-{}", self.flavour)
        } else {
            write!(f, "{}", self.flavour)
        }
    }
}

impl FromStr for Particle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "positron" | "e+" => return Ok(Particle::anti(Flavour::E)),
            "e-" => return Ok(Particle::new(Flavour::E)),
            _ => {}
        }
        for prefix in ["anti-", "anti"] {
            if let Some(rest) = t.strip_prefix(prefix) {
                if let Some(f) = Flavour::from_name(rest) {
                    return Ok(Particle::anti(f));
                }
            }
        }
        for suffix in ["bar", "~"] {
            if let Some(rest) = t.strip_suffix(suffix) {
                if let Some(f) = Flavour::from_name(rest) {
                    return Ok(Particle::anti(f));
                }
            }
        }
        Flavour::from_name(t).map(Particle::new).ok_or_else(|| Error::UnknownFlavour(s.to_string()))
    }
}

/// Which conjugation bookkeeping symbol marks the weak charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Violation {
    #[serde(rename = "none")]
    None,
    P,
    T,
}

impl Violation {
    pub fn generation(self) -> u8 {
        match self {
            Violation::None => 1,
            Violation::P => 2,
            Violation::T => 3,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Violation::None => "1",
            Violation::P => "z_P",
            Violation::T => "z_T",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Colour columns of the tables. For the lepton table they are plain phase
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    B,
    G,
    R,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::B, Colour::G, Colour::R];

    pub fn axis(self) -> Axis {
        match self {
            Colour::B => Axis::X,
            Colour::G => Axis::Y,
            Colour::R => Axis::Z,
        }
    }

    pub fn from_axis(a: Axis) -> Colour {
        match a {
            Axis::X => Colour::B,
            Axis::Y => Colour::G,
            Axis::Z => Colour::R,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for Colour {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" => Ok(Colour::B),
            "G" => Ok(Colour::G),
            "R" => Ok(Colour::R),
            o => Err(Error::UnknownTag(o.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Representation {
    A,
    B,
    C,
    L,
}

impl Representation {
    pub const ALL: [Representation; 4] = [Representation::A, Representation::B, Representation::C, Representation::L];
    pub const QUARK: [Representation; 3] = [Representation::A, Representation::B, Representation::C];

    /// `(a, b, c)` axes for the strong, electric and weak units.
    pub fn axes(self) -> (Axis, Axis, Axis) {
        match self {
            Representation::A => (Axis::X, Axis::Z, Axis::X),
            Representation::B => (Axis::Z, Axis::Z, Axis::X),
            Representation::C => (Axis::Y, Axis::Z, Axis::X),
            Representation::L => (Axis::Z, Axis::Z, Axis::Z),
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Representation::A),
            "B" | "b" => Ok(Representation::B),
            "C" | "c" => Ok(Representation::C),
            "L" | "l" => Ok(Representation::L),
            o => Err(Error::UnknownTag(o.to_string())),
        }
    }
}

/// Settings of the unified charge formula
/// `σ_z·(i p̂_a(δ_bc − 1) + j(p̂_b − 1δ_0m) + k p̂_c(−1)^δ_1g g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FermionChargeSpec {
    pub sigma_z: i8,
    pub a_idx: Axis,
    pub b_idx: Axis,
    pub c_idx: Axis,
    /// 0 switches the filled-vacuum term on (δ_0m = 1).
    pub isospin_m: u8,
    pub g: i8,
    pub violation_tag: Violation,
}

impl FermionChargeSpec {
    pub fn is_lepton(&self) -> bool {
        self.b_idx == self.c_idx
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidInput(m.to_string()));
        if self.sigma_z.abs() != 1 || self.g.abs() != 1 {
            return bad("σ_z and g must be ±1");
        }
        if self.isospin_m > 1 {
            return bad("m must be 0 or 1");
        }
        if self.is_lepton() && self.a_idx != self.b_idx {
            return bad("a lepton carries a single phase: a = b = c");
        }
        match (self.g, self.violation_tag) {
            (-1, Violation::None) | (1, Violation::P) | (1, Violation::T) => Ok(()),
            _ => bad("g = −1 needs no violation tag, g = +1 needs P or T"),
        }
    }

    pub fn generation(&self) -> u8 {
        self.violation_tag.generation()
    }

    pub fn filled_vacuum(&self) -> bool {
        self.isospin_m == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FermionState {
    pub particle: Particle,
    pub representation: Representation,
    pub spec: FermionChargeSpec,
    pub expression: String,
}

/// Charge structure of one fermion under a colour-assignment convention.
/// Leptons always take the single-phase lepton axes.
pub fn fermion_spec(particle: Particle, rep: Representation) -> Result<FermionState> {
    let f = particle.flavour;
    let rep = match (f.is_quark(), rep) {
        (true, Representation::L) => {
            return Err(Error::InvalidInput(format!("{f} is a quark; use table A, B or C")));
        }
        (false, _) => Representation::L,
        (true, r) => r,
    };
    let (a, b, c) = rep.axes();
    let v = f.violation();
    let spec = FermionChargeSpec {
        sigma_z: if particle.anti { 1 } else { -1 },
        a_idx: a,
        b_idx: b,
        c_idx: c,
        isospin_m: if f.isospin_up() { 0 } else { 1 },
        g: if v == Violation::None { -1 } else { 1 },
        violation_tag: v,
    };
    spec.validate()?;
    Ok(FermionState { particle, representation: rep, spec, expression: expression(particle) })
}

/// Separate-formula form, with the electric unit on `p̂_a`, strong on `p̂_b`
/// and weak on `p̂_c`.
pub fn expression(particle: Particle) -> String {
    let f = particle.flavour;
    let (s_idx, w_idx) = if f.is_quark() { ("b", "c") } else { ("a", "a") };
    let mut body = if f.isospin_up() { "−j(p̂_a − 1)".to_string() } else { "−j p̂_a".to_string() };
    if f.is_quark() {
        body.push_str(&format!(" + i p̂_{s_idx}"));
    }
    match f.violation() {
        Violation::None => body.push_str(&format!(" + k p̂_{w_idx}")),
        v => body.push_str(&format!(" − {} k p̂_{w_idx}", v.symbol())),
    }
    let lead = if particle.anti { "σ" } else { "−σ" };
    format!("{lead}.({body})")
}
