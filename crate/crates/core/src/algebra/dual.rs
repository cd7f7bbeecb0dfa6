//! Iterated dualling: conjugation, then alternating complexification and
//! dimensionalization, doubling the element count at each step.

use super::blade::{BasisBlade, Quat};
use super::group::{generate_group, order_census, GroupElement};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Conjugation,
    Complexification,
    Dimensionalization,
}

/// Generators in order of introduction after the initial conjugation.
pub const GENERATORS: [&str; 5] = ["i1", "j1", "i2", "j2", "i3"];

const STEPS: [Step; 6] = [
    Step::Conjugation,
    Step::Complexification,
    Step::Dimensionalization,
    Step::Complexification,
    Step::Dimensionalization,
    Step::Complexification,
];

/// Dimensionalization pairs a new unit with the preceding complex one into
/// a closed quaternion system; every other pair commutes.
fn anticommute(a: usize, b: usize) -> bool {
    matches!((a.min(b), a.max(b)), (0, 1) | (2, 3))
}

/// A signed monomial; bit n of `mask` marks generator `GENERATORS[n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualElement {
    pub negative: bool,
    pub mask: u8,
}

impl DualElement {
    pub const IDENTITY: DualElement = DualElement { negative: false, mask: 0 };

    pub fn generator(n: usize) -> Self {
        DualElement { negative: false, mask: 1 << n }
    }

    pub fn mul(self, o: DualElement) -> DualElement {
        let mut neg = self.negative ^ o.negative;
        for g in 0..5 {
            if o.mask & (1 << g) == 0 {
                continue;
            }
            for h in g + 1..5 {
                if self.mask & (1 << h) != 0 && anticommute(g, h) {
                    neg = !neg;
                }
            }
            if self.mask & (1 << g) != 0 {
                // every generator squares to −1
                neg = !neg;
            }
        }
        DualElement { negative: neg, mask: self.mask ^ o.mask }
    }

    pub fn square_sign(self) -> Option<i8> {
        let s = self.mul(self);
        if s.mask != 0 {
            None
        } else if s.negative {
            Some(-1)
        } else {
            Some(1)
        }
    }

    /// Symbol in the printed style, highest generator first, `ij1` for i1j1.
    pub fn symbol(self) -> String {
        let mut s = String::new();
        for n in (2..5).rev() {
            if self.mask & (1 << n) != 0 {
                s.push_str(GENERATORS[n]);
            }
        }
        match self.mask & 0b11 {
            0b01 => s.push_str("i1"),
            0b10 => s.push_str("j1"),
            0b11 => s.push_str("ij1"),
            _ => {}
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.negative { "-" } else { "+" }, self.symbol())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DualAlgebra {
    pub order: u32,
    pub history: Vec<Step>,
    #[serde(serialize_with = "ser_elements")]
    pub elements: Vec<DualElement>,
}

fn ser_elements<S: serde::Serializer>(e: &[DualElement], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(e.iter().map(|x| x.to_string()))
}

impl DualAlgebra {
    pub fn is_closed(&self) -> bool {
        let set: BTreeSet<_> = self.elements.iter().copied().collect();
        self.elements.iter().all(|a| self.elements.iter().all(|b| set.contains(&a.mul(*b))))
    }

    pub fn order_census(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for x in &self.elements {
            let mut acc = *x;
            let mut n = 1;
            while acc != DualElement::IDENTITY {
                acc = acc.mul(*x);
                n += 1;
            }
            *m.entry(n).or_insert(0) += 1;
        }
        m
    }
}

pub fn dual_generate(target_order: u32) -> Result<DualAlgebra> {
    let steps = match target_order {
        2 => 1,
        4 => 2,
        8 => 3,
        16 => 4,
        32 => 5,
        64 => 6,
        other => return Err(Error::InvalidOrder(other)),
    };
    let mut elements = vec![DualElement::IDENTITY];
    let mut history = Vec::new();
    for (n, step) in STEPS.iter().take(steps).enumerate() {
        let unit = if n == 0 {
            DualElement { negative: true, mask: 0 }
        } else {
            DualElement::generator(n - 1)
        };
        let doubled: Vec<_> = elements.iter().map(|x| unit.mul(*x)).collect();
        elements.extend(doubled);
        history.push(*step);
    }
    elements.sort_by_key(|e| (e.mask, e.negative));
    Ok(DualAlgebra { order: target_order, history, elements })
}

/// Images of the five generators in the blade group.
pub fn generator_map() -> [GroupElement; 5] {
    [
        GroupElement::new(1, BasisBlade::q1(Quat::I)),
        GroupElement::new(1, BasisBlade::q1(Quat::J)),
        GroupElement::new(1, BasisBlade::q2(Quat::I)),
        GroupElement::new(1, BasisBlade::q2(Quat::J)),
        GroupElement::new(1, BasisBlade::central_i()),
    ]
}

pub fn image(x: DualElement) -> GroupElement {
    let gens = generator_map();
    let mut acc = GroupElement::IDENTITY;
    for (n, g) in gens.iter().enumerate() {
        if x.mask & (1 << n) != 0 {
            acc = acc.mul(*g);
        }
    }
    if x.negative {
        acc.neg()
    } else {
        acc
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsomorphismReport {
    pub census_match: bool,
    pub bijective: bool,
    pub homomorphism: bool,
}

impl IsomorphismReport {
    pub fn passed(&self) -> bool {
        self.census_match && self.bijective && self.homomorphism
    }
}

/// Compares order-64 dualling output with the directly generated group.
pub fn check_isomorphism(d: &DualAlgebra) -> IsomorphismReport {
    let g = generate_group();
    let census_match = d.order_census() == order_census(&g);
    let images: BTreeSet<_> = d.elements.iter().map(|x| image(*x)).collect();
    let bijective = images.len() == d.elements.len() && images == g;
    let homomorphism = d
        .elements
        .iter()
        .all(|a| d.elements.iter().all(|b| image(a.mul(*b)) == image(*a).mul(image(*b))));
    IsomorphismReport { census_match, bijective, homomorphism }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn doubling() {
        for (k, n) in [2u32, 4, 8, 16, 32, 64].iter().enumerate() {
            let d = dual_generate(*n).unwrap();
            assert_eq!(d.elements.len(), *n as usize);
            assert_eq!(d.history.len(), k + 1);
            assert!(d.is_closed());
        }
    }

    #[test]
    fn order_two_is_plus_minus_one() {
        let d = dual_generate(2).unwrap();
        let s: Vec<_> = d.elements.iter().map(|e| e.to_string()).collect();
        assert_eq!(s, ["+1", "-1"]);
    }

    #[test]
    fn order_eight_is_quaternion() {
        let d = dual_generate(8).unwrap();
        let i = DualElement::generator(0);
        let j = DualElement::generator(1);
        let k = i.mul(j);
        assert_eq!(k.symbol(), "ij1");
        for u in [i, j, k] {
            assert_eq!(u.square_sign(), Some(-1));
        }
        assert_eq!(i.mul(j).mul(k), DualElement { negative: true, mask: 0 });
        assert!(d.is_closed());
    }

    #[test]
    fn squares_are_signs() {
        let d = dual_generate(64).unwrap();
        assert!(d.elements.iter().all(|e| e.square_sign().is_some()));
    }

    #[test]
    fn order_64_isomorphic() {
        let r = check_isomorphism(&dual_generate(64).unwrap());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn rejects_bad_order() {
        assert_eq!(dual_generate(12).unwrap_err(), Error::InvalidOrder(12));
    }

    #[test]
    fn printed_symbols() {
        let d = dual_generate(32).unwrap();
        let names: BTreeSet<_> = d.elements.iter().map(|e| e.symbol()).collect();
        assert!(names.contains("j2i2ij1"));
        assert!(names.contains("i2j1"));
    }
}
