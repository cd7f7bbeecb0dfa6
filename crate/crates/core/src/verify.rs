//! Fixed identity suite over the algebra and the nilpotent products.

use crate::algebra::{
    check_pentad, dual::check_isomorphism, dual_generate, gamma_pentad, generate_group, matrix_rep, BasisBlade,
    Mapping, Multivector,
};
use crate::nilpotent::{
    baryon_product, conjugate_sandwich, conjugate_word, make_nilpotent, q3, spinor_pair_sum, vertex_sum, BaryonPhase,
    Conjugation, NilpotentVector, PairingKind, Spinor4, SpinorKind, Vertex,
};
use crate::rational::{q, sqrt_exact};
use num::Zero;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub group_order: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn identities(&self) -> usize {
        self.checks.iter().map(|c| c.total).sum()
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.total - c.passed).sum()
    }

    pub fn passed(&self) -> bool {
        self.group_order == 64 && self.failures() == 0
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{} group elements, {} identities OK", self.group_order, self.identities())
        } else {
            format!(
                "{} group elements, {} of {} identities FAILED",
                self.group_order,
                self.failures(),
                self.identities()
            )
        }
    }
}

fn tally(name: &'static str, results: impl IntoIterator<Item = bool>) -> Check {
    let (mut passed, mut total) = (0, 0);
    for r in results {
        total += 1;
        passed += r as usize;
    }
    Check { name, passed, total }
}

/// On-shell states with integer E, p, m.
pub fn sample_states() -> Vec<NilpotentVector> {
    [(5, q3(0, 0, 4), 3), (13, q3(0, 3, 4), 12), (13, q3(3, 4, 12), 0), (3, q3(1, 2, 2), 0), (9, q3(4, 4, 7), 0)]
        .into_iter()
        .map(|(e, p, m)| make_nilpotent(q(e), p, q(m), 1, 1))
        .filter(|x| x.on_shell())
        .collect()
}

pub fn identity_suite() -> SuiteReport {
    let group = generate_group();
    let blades = BasisBlade::all();
    let mut checks = Vec::new();

    checks.push(tally(
        "blade product matches matrix oracle",
        blades.iter().flat_map(|a| {
            blades.iter().map(move |b| {
                let (ma, mb) = (Multivector::blade(*a), Multivector::blade(*b));
                matrix_rep(&ma.mul(&mb)) == matrix_rep(&ma).matmul(&matrix_rep(&mb))
            })
        }),
    ));

    for mapping in [Mapping::One, Mapping::Two] {
        let c = check_pentad(&gamma_pentad(mapping));
        checks.push(Check {
            name: if mapping == Mapping::One { "pentad mapping-1" } else { "pentad mapping-2" },
            passed: if c.passed() { c.checks } else { 0 },
            total: c.checks,
        });
    }

    let dual = dual_generate(64).expect("64 is a dualling order");
    let iso = check_isomorphism(&dual);
    checks.push(tally("dualling isomorphic to the blade group", [iso.census_match, iso.bijective, iso.homomorphism]));

    let states = sample_states();
    let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
    checks.push(tally(
        "nilpotent squares vanish",
        states.iter().flat_map(|x| signs.map(|(a, b)| x.with_signs(a, b).realized())).map(|r| r.mul(&r).is_zero()),
    ));

    let table = [("PP", ""), ("TT", ""), ("CC", ""), ("CP", "T"), ("PT", "C"), ("TC", "P"), ("TCP", "")];
    checks.push(tally(
        "CPT composition table",
        states.iter().flat_map(|x| {
            let r = x.realized();
            table.map(|(word, same)| {
                let lhs = conjugate_word(&r, word).expect("valid word");
                let rhs = if same.is_empty() { r.clone() } else { conjugate_word(&r, same).expect("valid word") };
                lhs == rhs
            })
        }),
    ));
    checks.push(tally(
        "conjugations agree with sign patterns",
        states.iter().flat_map(|x| {
            [Conjugation::P, Conjugation::T, Conjugation::C]
                .map(|op| conjugate_sandwich(&x.realized(), op) == crate::nilpotent::conjugate(x, op).realized())
        }),
    ));

    checks.push(tally(
        "massless spin-0 products vanish, spin-1 do not",
        states.iter().filter(|x| x.m.is_zero()).flat_map(|x| {
            let f = Spinor4::new(SpinorKind::Fermion, x.e.clone(), x.p.clone(), q(0));
            let a = Spinor4::new(SpinorKind::Antifermion, x.e.clone(), x.p.clone(), q(0));
            [
                spinor_pair_sum(&f, &a, PairingKind::Spin0).map(|s| s.is_zero()).unwrap_or(false),
                spinor_pair_sum(&f, &a, PairingKind::Spin1).map(|s| !s.is_zero()).unwrap_or(false),
            ]
        }),
    ));

    checks.push(tally(
        "baryon phase products scale as p²",
        states.iter().flat_map(|x| {
            BaryonPhase::ALL.map(|ph| match baryon_product(ph, x.e.clone(), x.p.clone(), x.m.clone()) {
                Ok(b) => {
                    let p2 = x.p2();
                    b.factor == p2 || b.factor == -p2
                }
                Err(_) => false,
            })
        }),
    ));

    checks.push(tally(
        "vertex sums vanish iff massless and scale as m²",
        states.iter().filter(|x| !x.m.is_zero()).flat_map(|x| {
            let mag = sqrt_exact(&x.p2()).expect("sample momenta have rational length");
            let twice = x.p.clone().map(|c| c * q(2));
            Vertex::ALL.map(|v| {
                let s1 = vertex_sum(v, x.e.clone(), x.p.clone(), x.m.clone()).scalar;
                let s2 = vertex_sum(v, &x.e * q(2), twice.clone(), &x.m * q(2)).scalar;
                let massless = vertex_sum(v, mag.clone(), x.p.clone(), q(0)).sum.is_zero();
                massless && !s1.is_zero() && s2 == s1 * q(4)
            })
        }),
    ));

    SuiteReport { group_order: group.len(), checks }
}
