//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Criterion 13 is known to fail; it is reported but does not fail the run.

use nilpotent_core::algebra::dual::check_isomorphism;
use nilpotent_core::algebra::{
    check_pentad, dual_generate, gamma_pentad, generate_group, matrix_rep, BasisBlade, Mapping, Multivector,
};
use nilpotent_core::charges::{
    build_tables, build_tables_from, charge_dirac, generate_table, su5_grid, tables_from_csv, tables_to_csv,
};
use nilpotent_core::masses::{
    boson_model, ckm_apply, coupling_sum_squared, decuplet_table, gmo_meson_k, gmo_octet_residual, higgs_zero_count,
    mb_over_mtau, meson_table, z_zero_count, Dataset, MassUnit,
};
use nilpotent_core::nilpotent::{
    baryon_product, conjugate_word, make_nilpotent, spinor_pair_sum, vacuum_chain, vertex_sum, BaryonPhase,
    NilpotentVector, PairingKind, Spinor4, SpinorKind, Vertex,
};
use nilpotent_core::rational::{q, qr, Q};
use nilpotent_core::spectra::{
    coulomb_levels, infrared_radius, lennard_jones_solution, match_coefficients, oscillator_levels, Num,
    PotentialSpec, QuantumNumbers,
};
use nilpotent_core::unification::{
    b1_coefficient, gut_report, sin2_from_content, ChargeContent, GutInputs, Hypercharges,
};
use num::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use std::cell::RefCell;

const CASES: u32 = 1000;
const EXPECTED_RED: &[u32] = &[13];

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

/// Runs `f` on `CASES` generated values and counts how many return true.
fn sweep<S: Strategy>(s: S, f: impl Fn(S::Value) -> bool) -> (usize, usize) {
    let tally = RefCell::new((0, 0));
    runner()
        .run(&s, |v| {
            let ok = f(v);
            let mut t = tally.borrow_mut();
            t.0 += ok as usize;
            t.1 += 1;
            Ok(())
        })
        .expect("cases never fail inside the sweep");
    tally.into_inner()
}

fn rel(x: f64, target: f64) -> f64 {
    ((x - target) / target).abs()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn c1() -> Outcome {
    let r = gut_report(&GutInputs::default(), &[]).unwrap();
    let ratio = r.solved.mx / 2.8e19;
    outcome((1.0 / 1.5..=1.5).contains(&ratio), format!("M_X = {:.4e} GeV", r.solved.mx))
}

fn c2() -> Outcome {
    let r = gut_report(&GutInputs { planck: 1.22e19, ..GutInputs::default() }, &[]).unwrap();
    let ok = (r.inv_alpha_g - 52.4).abs() <= 0.5
        && (r.inv_alpha2_mu - 31.5).abs() <= 0.3
        && (r.inv_alpha_em_mu - 128.0).abs() <= 1.0
        && (r.inv_alpha_em_14tev - 118.0).abs() <= 1.0
        && rel(r.mu_alpha3_one, 0.112) <= 0.15;
    outcome(
        ok,
        format!(
            "1/α_G = {:.3}, 1/α₂ = {:.3}, 1/α = {:.3}, 1/α(14 TeV) = {:.3}, μ(α₃=1) = {:.4} GeV",
            r.inv_alpha_g, r.inv_alpha2_mu, r.inv_alpha_em_mu, r.inv_alpha_em_14tev, r.mu_alpha3_one
        ),
    )
}

fn c3() -> Outcome {
    let p = sin2_from_content(&ChargeContent::phenomenological()).unwrap();
    let l = sin2_from_content(&ChargeContent::lepton_like()).unwrap();
    outcome(p == qr(3, 8) && l == qr(1, 4), format!("{p} and {l}"))
}

fn c4() -> Outcome {
    let c = b1_coefficient(&Hypercharges::conventional()).unwrap();
    let l = b1_coefficient(&Hypercharges::lepton_like()).unwrap();
    outcome(c == qr(5, 3) && l == q(3), format!("({c})/π and ({l})/π"))
}

fn c5() -> Outcome {
    let d = Dataset::bundled();
    let u = MassUnit::from_dataset(&d).unwrap();
    let dec = decuplet_table(&d, &u).unwrap();
    let units: Vec<f64> = dec.iter().map(|r| r.predicted_units).collect();
    let pi = meson_table(&d, &u).unwrap().into_iter().find(|r| r.name == "π").unwrap();
    let sigma = dec.iter().find(|r| r.name == "Σ").unwrap().predicted_gev;
    let ok = units == [20.0, 20.0, 22.0, 24.0]
        && pi.predicted_units == 2.0
        && rel(pi.predicted_gev, 0.140) <= 0.005
        && rel(sigma, 1.385) <= 0.015;
    outcome(ok, format!("decuplet {units:?}, π = {:.5} GeV, Σ = {:.5} GeV", pi.predicted_gev, sigma))
}

fn c6() -> Outcome {
    let r = gmo_octet_residual(13.5, 15.9, 17.0, 18.9);
    let k = gmo_meson_k(2.0, 7.8);
    outcome(r.abs() <= 0.1 && rel(k, 7.1) <= 0.05, format!("octet residual {r:.4}, m_K = {k:.4} units"))
}

fn c7() -> Outcome {
    let d = Dataset::bundled();
    let u = MassUnit::from_dataset(&d).unwrap();
    let c = &d.constants;
    let b = boson_model(&u, c.mz, c.sin2, c.mw_measured, c.f_empirical).unwrap();
    let sum2 = coupling_sum_squared(&qr(1, 4)).unwrap();
    let ok = higgs_zero_count() == 2592
        && z_zero_count() == 1296
        && (b.m_h - 181.5).abs() <= 1.0
        && (b.m_z_from_zeros - 90.8).abs() <= 1.0
        && (b.f - 241.35).abs() < 1e-9
        && (b.m_top - 173.9).abs() <= 0.5
        && sum2 == qr(8, 3);
    outcome(
        ok,
        format!(
            "zeros 2592/1296, m_H = {:.3}, M_Z = {:.3}, f = {:.2}, m_t = {:.3} GeV, (Σg_f/g)² = {sum2}",
            b.m_h, b.m_z_from_zeros, b.f, b.m_top
        ),
    )
}

fn c8() -> Outcome {
    let d = Dataset::bundled();
    let k = ckm_apply(d.constants.leptons, d.constants.lambda_ckm).unwrap();
    let ok = [0.0269, 0.216, 1.763].iter().zip(k.rotated).all(|(t, x)| rel(x, *t) <= 0.01)
        && rel(k.mu_over_e, 8.0) <= 0.01
        && rel(k.tau_over_mu, 8.1) <= 0.01;
    outcome(
        ok,
        format!(
            "({:.5}, {:.5}, {:.5}) GeV, ratios {:.3}, {:.3}",
            k.rotated[0], k.rotated[1], k.rotated[2], k.mu_over_e, k.tau_over_mu
        ),
    )
}

fn c9() -> Outcome {
    let c = Dataset::bundled().constants;
    let (b, s) = (&c.mb_over_mtau, &c.ms_over_mmu);
    let rb = mb_over_mtau(b.alpha3_mu, b.alpha3_heavy, b.alpha3_mx, b.alpha_ratio_term).unwrap();
    let rs = mb_over_mtau(s.alpha3_mu, s.alpha3_heavy, s.alpha3_mx, s.alpha_ratio_term).unwrap();
    let (mb, ms) = (rb * b.lepton, rs * s.lepton);
    let ok = (rb - 2.705).abs() <= 0.005
        && (mb - 4.79).abs() <= 0.01
        && (rs - 2.832).abs() <= 0.005
        && (ms - 0.299).abs() <= 0.002;
    outcome(ok, format!("m_b/m_τ = {rb:.4} (m_b = {mb:.4}), m_s/m_μ = {rs:.4} (m_s = {ms:.4})"))
}

fn c10() -> Outcome {
    let r = infrared_radius(0.75, 0.4, 1.0).unwrap();
    outcome((r - 3.75).abs() < 1e-12, format!("r = {r} fm"))
}

fn random_mv() -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0usize..32, -6i64..=6, 1i64..=4), 1..=5).prop_map(|terms| {
        let mut x = Multivector::zero();
        for (b, n, d) in terms {
            x.add_term(BasisBlade::from_index(b), qr(n, d));
        }
        x
    })
}

fn c11() -> Outcome {
    let order = generate_group().len();
    let (ok, n) = sweep((random_mv(), random_mv()), |(a, b)| {
        matrix_rep(&a.mul(&b)) == matrix_rep(&a).matmul(&matrix_rep(&b))
    });
    let pentads = [Mapping::One, Mapping::Two].iter().all(|m| check_pentad(&gamma_pentad(*m)).passed());
    let iso = check_isomorphism(&dual_generate(64).unwrap()).passed();
    outcome(
        order == 64 && ok == n && pentads && iso,
        format!("order {order}, oracle {ok}/{n}, pentads {pentads}, dual isomorphism {iso}"),
    )
}

/// On-shell state from a Pythagorean quadruple for p and a rational
/// parameter u for m/|p|, so every component stays rational.
fn on_shell() -> impl Strategy<Value = NilpotentVector> {
    (
        (-4i64..=4, -4i64..=4, -4i64..=4, -4i64..=4),
        1i64..=3,
        prop_oneof![Just(None), (1i64..=6, 1i64..=6).prop_map(Some)],
        prop::sample::select(vec![(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)]),
    )
        .prop_filter("p ≠ 0", |((a, b, c, d), ..)| a * a + b * b + c * c + d * d > 0)
        .prop_map(|((a, b, c, d), k, u, (se, sp))| {
            let n = a * a + b * b + c * c + d * d;
            let p = [a * a + b * b - c * c - d * d, 2 * (a * d + b * c), 2 * (b * d - a * c)].map(|x| qr(x, k));
            let mag = qr(n, k);
            let (e, m) = match u {
                None => (mag.clone(), q(0)),
                Some((s, t)) => {
                    let u = qr(s, t) + q(1);
                    let two_u = &u * q(2);
                    (&mag * (&u * &u + q(1)) / &two_u, &mag * (&u * &u - q(1)) / &two_u)
                }
            };
            make_nilpotent(e, p, m, se, sp)
        })
}

fn nilpotent_identities(x: &NilpotentVector) -> bool {
    let r = x.realized();
    if !x.on_shell() || !r.mul(&r).is_zero() {
        return false;
    }
    let Ok(ch) = vacuum_chain(x, 1) else { return false };
    let lam2 = &ch.lambda_re * &ch.lambda_re + &ch.lambda_im * &ch.lambda_im;
    if lam2 != &x.e * &x.e * q(4) {
        return false;
    }
    let table = [("PP", ""), ("TT", ""), ("CC", ""), ("CP", "T"), ("PT", "C"), ("TC", "P"), ("TCP", "")];
    for (word, same) in table {
        let rhs = if same.is_empty() { r.clone() } else { conjugate_word(&r, same).unwrap() };
        if conjugate_word(&r, word).unwrap() != rhs {
            return false;
        }
    }
    let (e, p, m) = (x.e.abs(), x.p.clone(), x.m.abs());
    if m.is_zero() {
        let f = Spinor4::new(SpinorKind::Fermion, e.clone(), p.clone(), q(0));
        let a = Spinor4::new(SpinorKind::Antifermion, e.clone(), p.clone(), q(0));
        let spin0 = spinor_pair_sum(&f, &a, PairingKind::Spin0).map(|s| s.is_zero()).unwrap_or(false);
        let spin1 = spinor_pair_sum(&f, &a, PairingKind::Spin1).map(|s| !s.is_zero()).unwrap_or(false);
        if !(spin0 && spin1) {
            return false;
        }
    }
    let p2 = x.p2();
    for ph in BaryonPhase::ALL {
        match baryon_product(ph, e.clone(), p.clone(), m.clone()) {
            Ok(b) if b.factor.abs() == p2 => {}
            _ => return false,
        }
    }
    // |p| for the massless partner: E² − m² is a square by construction
    let mag = nilpotent_core::rational::sqrt_exact(&p2).unwrap();
    let twice = p.clone().map(|c| c * q(2));
    Vertex::ALL.iter().all(|v| {
        let massless = vertex_sum(*v, mag.clone(), p.clone(), q(0)).sum.is_zero();
        if m.is_zero() {
            return massless && vertex_sum(*v, e.clone(), p.clone(), m.clone()).sum.is_zero();
        }
        let s1 = vertex_sum(*v, e.clone(), p.clone(), m.clone()).scalar;
        let s2 = vertex_sum(*v, &e * q(2), twice.clone(), &m * q(2)).scalar;
        massless && !s1.is_zero() && s2 == s1 * q(4)
    })
}

fn c12() -> Outcome {
    let (ok, n) = sweep(on_shell(), |x| nilpotent_identities(&x));
    outcome(ok == n, format!("{ok}/{n} random on-shell states satisfy every identity"))
}

fn rat() -> impl Strategy<Value = Q> {
    (1i64..=9, 1i64..=9).prop_map(|(n, d)| qr(n, d))
}

fn half_integer() -> impl Strategy<Value = QuantumNumbers> {
    (0i64..=3, 0u32..=3).prop_map(|(k, np)| QuantumNumbers::new(qr(2 * k + 1, 2), np).unwrap())
}

fn c13() -> Outcome {
    let n = |x: Q| Num::real(x);
    let im = |x: Q| Num::complex(q(0), x);
    let zero = |v: &PotentialSpec, qn: &QuantumNumbers, m: &Num, e: Option<&Num>| {
        match_coefficients(v, qn, m, e).map(|mt| mt.consistent()).unwrap_or(false)
    };
    // qA = J·2t/(1+t²) keeps √(J² − q²A²) rational at n' = 0
    let (coulomb, total) = sweep((0i64..=3, 1i64..=8, 1i64..=9, rat()), |(k, a, b, m)| {
        let t = qr(a.min(b), a.max(b) + 1);
        let j = qr(2 * k + 1, 2);
        let qa = (&j + qr(1, 2)) * q(2) * &t / (&t * &t + q(1));
        let qn = QuantumNumbers::new(j, 0).unwrap();
        zero(&PotentialSpec::coulomb(Num::one(), n(qa)), &qn, &n(m), None)
    });
    let (strong, _) = sweep((rat(), rat(), rat(), rat(), rat(), half_integer()), |(qq, s, a, e, m, qn)| {
        zero(&PotentialSpec::strong(n(qq), n(s), n(a)), &qn, &n(m), Some(&n(e)))
    });
    let (osc, _) = sweep((rat(), rat(), rat(), half_integer()), |(c, a, m, qn)| {
        zero(&PotentialSpec::oscillator(n(c), im(a)), &qn, &n(m), None)
    });
    let (lj, _) = sweep((rat(), rat(), rat(), rat(), half_integer()), |(a, b, c, m, qn)| {
        zero(&PotentialSpec::lennard_jones(im(a), n(b), n(c)), &qn, &n(m), None)
    });
    let (lj_levels, _) = sweep((rat(), rat(), rat(), half_integer()), |(b, c, m, qn)| {
        let Ok((mt, _)) = lennard_jones_solution(im(qr(1, 2)), n(b), n(c), &qn, &n(m.clone())) else { return false };
        let osc = oscillator_levels(&n(m), &qn);
        mt.branches.iter().any(|br| br.solution.energy == osc)
    });
    let (closed, _) = sweep((1i64..=99, 0i64..=3, 0u32..=4), |(x, k, np)| {
        let qa = x as f64 / 100.0;
        let qn = QuantumNumbers::new(qr(2 * k + 1, 2), np).unwrap();
        let v = PotentialSpec::coulomb(Num::one(), Num::real(qr(x, 100)));
        let Ok(mt) = match_coefficients(&v, &qn, &Num::one(), None) else { return false };
        let e = mt.branch(1).unwrap().solution.energy.re();
        (e - coulomb_levels(qa, &qn).unwrap()).abs() <= 1e-12
    });
    let ok = [coulomb, strong, osc, lj, lj_levels, closed].iter().all(|c| *c == total);
    outcome(
        ok,
        format!(
            "exact-zero residual: coulomb {coulomb}/{total}, strong {strong}/{total}, oscillator {osc}/{total}, \
             lennard-jones {lj}/{total}; LJ = oscillator levels {lj_levels}/{total}; \
             Coulomb closed form {closed}/{total}"
        ),
    )
}

fn c14() -> Outcome {
    let units = [-1i64, 0, 1];
    let mut dirac = true;
    for w in units {
        for s in units {
            for e in [q(-1), q(0), q(1), qr(7, 3)] {
                for m in [Mapping::One, Mapping::Two] {
                    let d = charge_dirac(q(w), q(s), e.clone(), m);
                    let want = q(s * s - w * w);
                    dirac &= d.scalar && d.rows.iter().all(|r| *r == want);
                }
            }
        }
    }
    let t = build_tables();
    let again = build_tables_from(&t.tables).unwrap();
    let csv = tables_to_csv(&t.tables).unwrap();
    let round = tables_from_csv(&csv).unwrap();
    let regen = t.tables.iter().all(|x| generate_table(x.representation, Some(x)).unwrap() == *x);
    let idempotent = again.tables == t.tables && round == t.tables && regen;
    let (g, gx) = (su5_grid(false).count(), su5_grid(true).count());
    outcome(
        dirac && idempotent && g == 24 && gx == 25,
        format!("rows = s² − w²: {dirac}; regeneration idempotent: {idempotent}; generators {g}/{gx}"),
    )
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 14] = [
        (1, "unification scale", c1),
        (2, "couplings at the Planck mass", c2),
        (3, "sin²θ_W from charge content", c3),
        (4, "vacuum-polarization coefficients", c4),
        (5, "decuplet and pion masses", c5),
        (6, "GMO checks", c6),
        (7, "boson block", c7),
        (8, "CKM rotation", c8),
        (9, "quark-lepton ratios", c9),
        (10, "infrared radius", c10),
        (11, "algebra suite", c11),
        (12, "nilpotent suite", c12),
        (13, "solver suite", c13),
        (14, "charge suite", c14),
    ];
    let mut unexpected = 0;
    for (k, name, f) in criteria {
        let o = f();
        let tag = if o.passed { "PASS" } else { "FAIL" };
        let note = match (o.passed, EXPECTED_RED.contains(&k)) {
            (false, true) => " (known)",
            (false, false) => {
                unexpected += 1;
                ""
            }
            _ => "",
        };
        println!("{tag} {k:>2} {name}: {}{note}", o.detail);
    }
    if unexpected > 0 {
        eprintln!("{unexpected} unexpected failure(s)");
        std::process::exit(1);
    }
}
