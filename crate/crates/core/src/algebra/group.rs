use super::blade::{blade_mul, BasisBlade, Quat};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// A signed basis blade: one of the 64 elements of the Dirac group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub negative: bool,
    pub blade: BasisBlade,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { negative: false, blade: BasisBlade::ONE };

    pub fn new(sign: i8, blade: BasisBlade) -> Self {
        GroupElement { negative: sign < 0, blade }
    }

    pub fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn mul(self, o: GroupElement) -> GroupElement {
        let (s, b) = blade_mul(self.blade, o.blade);
        GroupElement::new(s * self.sign() * o.sign(), b)
    }

    pub fn neg(self) -> GroupElement {
        GroupElement { negative: !self.negative, blade: self.blade }
    }

    /// Smallest n ≥ 1 with x^n = identity.
    pub fn order(self) -> u32 {
        let mut acc = self;
        let mut n = 1;
        while acc != GroupElement::IDENTITY {
            acc = acc.mul(self);
            n += 1;
        }
        n
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.negative { "-" } else { "+" }, self.blade)
    }
}

/// Closure of a generator set under multiplication (always contains the identity).
pub fn closure(gens: &[GroupElement]) -> BTreeSet<GroupElement> {
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(GroupElement::IDENTITY);
    queue.push_back(GroupElement::IDENTITY);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(*g);
            if seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Generators: −1, the central i, the first-copy quaternion units and the
/// multivariate vector units.
pub fn standard_generators() -> Vec<GroupElement> {
    let mut g = vec![
        GroupElement::new(-1, BasisBlade::ONE),
        GroupElement::new(1, BasisBlade::central_i()),
    ];
    for u in [Quat::I, Quat::J, Quat::K] {
        g.push(GroupElement::new(1, BasisBlade::q1(u)));
    }
    for u in [Quat::I, Quat::J, Quat::K] {
        g.push(GroupElement::new(1, BasisBlade::vector(u)));
    }
    g
}

/// The full group of order 64.
pub fn generate_group() -> BTreeSet<GroupElement> {
    closure(&standard_generators())
}

/// Elements commuting with every element of `group`.
pub fn center(group: &BTreeSet<GroupElement>) -> BTreeSet<GroupElement> {
    group
        .iter()
        .copied()
        .filter(|x| group.iter().all(|y| x.mul(*y) == y.mul(*x)))
        .collect()
}

/// Number of elements of each order.
pub fn order_census(group: &BTreeSet<GroupElement>) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for x in group {
        *m.entry(x.order()).or_insert(0) += 1;
    }
    m
}
