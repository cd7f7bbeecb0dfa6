use super::spec::{Colour, Flavour, Particle, Representation, Violation};
use super::tables::TableSet;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Three quarks, three antiquarks, or a quark-antiquark pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Composite {
    pub constituents: Vec<Particle>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositeKind {
    Baryon,
    Meson,
}

impl Composite {
    pub fn new(constituents: Vec<Particle>) -> Result<Self> {
        let c = Composite { constituents };
        c.kind()?;
        Ok(c)
    }

    pub fn kind(&self) -> Result<CompositeKind> {
        let bad = || Error::InvalidInput(format!("`{self}` is not a baryon or meson"));
        if self.constituents.iter().any(|p| !p.flavour.is_quark()) {
            return Err(bad());
        }
        let anti = self.constituents.iter().filter(|p| p.anti).count();
        match (self.constituents.len(), anti) {
            (3, 0) | (3, 3) => Ok(CompositeKind::Baryon),
            (2, 1) => Ok(CompositeKind::Meson),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Composite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.constituents {
            write!(f, "{}{}", p.flavour, if p.anti { "~" } else { "" })?;
        }
        Ok(())
    }
}

/// Quark letters, each optionally followed by `~` or `bar`: `uud`, `ud~`,
/// `u dbar`.
impl FromStr for Composite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let f: Flavour = chars[i].to_string().parse()?;
            if !f.is_quark() {
                return Err(Error::UnknownFlavour(chars[i].to_string()));
            }
            i += 1;
            let rest: String = chars[i..].iter().collect();
            let anti = if rest.starts_with('~') || rest.starts_with('\u{304}') {
                i += 1;
                true
            } else if rest.starts_with("bar") {
                i += 3;
                true
            } else {
                false
            };
            out.push(Particle { flavour: f, anti });
        }
        Composite::new(out)
    }
}

fn colourings(kind: CompositeKind) -> Vec<Vec<Colour>> {
    use Colour::*;
    match kind {
        CompositeKind::Baryon => {
            vec![vec![B, G, R], vec![B, R, G], vec![G, B, R], vec![G, R, B], vec![R, B, G], vec![R, G, B]]
        }
        CompositeKind::Meson => Colour::ALL.iter().map(|c| vec![*c, *c]).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateZeros {
    pub state: String,
    pub candidates: BTreeSet<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroCount {
    pub per_state: Vec<StateZeros>,
    pub candidates: BTreeSet<u32>,
    pub ground: u32,
}

/// Candidate zero counts for a multiplet.
///
/// Each member picks one table and one colour assignment (a permutation for
/// baryons, colour with matching anticolour for mesons) and counts zero
/// cells at its constituents' columns. The multiplet candidates are all sums
/// over members.
pub fn count_zeros(tables: &TableSet, states: &[Composite], reps: &[Representation]) -> Result<ZeroCount> {
    let reps: Vec<Representation> = reps.iter().copied().filter(|r| *r != Representation::L).collect();
    if reps.is_empty() && !states.is_empty() {
        return Err(Error::InvalidInput("zero counting needs at least one of tables A, B, C".into()));
    }
    let mut per_state = Vec::new();
    let mut total: BTreeSet<u32> = BTreeSet::from([0]);
    for st in states {
        let kind = st.kind()?;
        let mut cands = BTreeSet::new();
        for rep in &reps {
            let t = tables.get(*rep);
            for cols in colourings(kind) {
                let mut n = 0;
                for (p, c) in st.constituents.iter().zip(&cols) {
                    n += t.zeros_at(p.flavour, *c)?;
                }
                cands.insert(n);
            }
        }
        total = total.iter().flat_map(|a| cands.iter().map(move |b| a + b)).collect();
        per_state.push(StateZeros { state: st.to_string(), candidates: cands });
    }
    let ground = *total.iter().next().unwrap_or(&0);
    Ok(ZeroCount { per_state, candidates: total, ground })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "structure", content = "z", rename_all = "lowercase")]
pub enum WeakStructure {
    W,
    Zero,
    /// `0` or `±(1 + z)w`.
    Alternative(Vec<Violation>),
}

impl fmt::Display for WeakStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeakStructure::W => f.write_str("w"),
            WeakStructure::Zero => f.write_str("0"),
            WeakStructure::Alternative(z) => {
                let z: Vec<&str> = z.iter().map(|v| v.symbol()).collect();
                write!(f, "0 or ±(1 + {})w", z.join(""))
            }
        }
    }
}

pub fn composite_weak_charge(combo: &Composite) -> Result<WeakStructure> {
    match combo.kind()? {
        CompositeKind::Baryon => Ok(WeakStructure::W),
        CompositeKind::Meson => {
            let (a, b) = (combo.constituents[0].flavour.violation(), combo.constituents[1].flavour.violation());
            if a == b {
                return Ok(WeakStructure::Zero);
            }
            let z: Vec<Violation> = [a, b].into_iter().filter(|v| *v != Violation::None).collect();
            Ok(WeakStructure::Alternative(z))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charges::tables::build_tables;

    fn states(s: &[&str]) -> Vec<Composite> {
        s.iter().map(|x| x.parse().unwrap()).collect()
    }

    #[test]
    fn decuplet_counts() {
        let t = build_tables();
        let q = Representation::QUARK;
        assert_eq!(count_zeros(&t, &states(&["sss"]), &q).unwrap().ground, 6);
        let sigma = count_zeros(&t, &states(&["dds", "uds", "uus"]), &q).unwrap();
        assert_eq!(sigma.candidates, BTreeSet::from([15, 17, 19]));
        let delta = count_zeros(&t, &states(&["uuu", "uud", "udd", "ddd"]), &q).unwrap();
        assert_eq!(delta.ground, 20);
        assert_eq!(count_zeros(&t, &states(&["uss", "dss"]), &q).unwrap().ground, 11);
    }

    #[test]
    fn meson_counts() {
        let t = build_tables();
        let q = Representation::QUARK;
        let pi = count_zeros(&t, &states(&["ud~", "du~", "uu~"]), &q).unwrap();
        assert_eq!(pi.ground, 2);
        assert!(pi.candidates.is_superset(&BTreeSet::from([2, 6, 8, 10, 12, 14, 16])));
        let k = count_zeros(&t, &states(&["us~", "ds~"]), &q).unwrap();
        assert_eq!(k.candidates, BTreeSet::from([3, 5, 7, 9, 11]));
    }

    #[test]
    fn edge_cases() {
        let t = build_tables();
        let empty = count_zeros(&t, &[], &Representation::QUARK).unwrap();
        assert_eq!((empty.ground, empty.candidates.len()), (0, 1));
        assert!(count_zeros(&t, &states(&["uud"]), &[Representation::L]).is_err());
        assert!("ud".parse::<Composite>().is_err());
        assert!("uu~d".parse::<Composite>().is_err());
        assert!("x".parse::<Composite>().is_err());
        assert_eq!("u dbar".parse::<Composite>().unwrap(), "ud~".parse().unwrap());
    }

    #[test]
    fn weak_structures() {
        let w = |s: &str| composite_weak_charge(&s.parse().unwrap()).unwrap();
        assert_eq!(w("uud"), WeakStructure::W);
        assert_eq!(w("u~u~d~"), WeakStructure::W);
        assert_eq!(w("uu~"), WeakStructure::Zero);
        assert_eq!(w("cs~"), WeakStructure::Zero);
        assert_eq!(w("us~"), WeakStructure::Alternative(vec![Violation::P]));
        assert_eq!(w("us~").to_string(), "0 or ±(1 + z_P)w");
        assert_eq!(w("bd~"), WeakStructure::Alternative(vec![Violation::T]));
        assert_eq!(w("sb~"), WeakStructure::Alternative(vec![Violation::P, Violation::T]));
    }
}
