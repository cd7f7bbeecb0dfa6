use crate::input::{rational, StateArgs};
use crate::report::{kv, Report, Table};
use crate::{CliError, CmdResult};
use nilpotent_core::algebra::dual::check_isomorphism;
use nilpotent_core::algebra::{dual_generate, matrix_rep, BasisBlade, Multivector};
use nilpotent_core::nilpotent::{
    baryon_product, conjugate_word, parse_word, spinor_pair_sum, vacuum_chain, vacuum_reflect, vacuum_reflect_raw,
    vertex_sum, BaryonPhase, NilpotentVector, PairingKind, Spinor4, SpinorKind, VacuumCharge, Vertex,
};
use nilpotent_core::rational::{fmt_q, q, qr};
use nilpotent_core::verify::identity_suite;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::fmt::Write;

#[derive(Debug, clap::Subcommand)]
pub enum Action {
    /// Run the fixed identity suite plus seeded random oracle products.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Multiply two multivectors, e.g. `--a qi --b qj`.
    Multiply {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Apply a P/T/C word (rightmost first) to a state by sandwiches.
    Cpt {
        #[arg(long)]
        op: String,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Fermion or antifermion 4-spinor, optionally paired.
    Spinor {
        #[arg(long, default_value = "fermion")]
        kind: String,
        /// spin1, spin0, pauli, vacuum-k, vacuum-j or vacuum-i.
        #[arg(long)]
        pairing: Option<String>,
        /// Mass of the second spinor.
        #[arg(long)]
        m2: Option<String>,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Colour-phase triple products.
    Baryon {
        /// One of BGR, -BRG, GRB, -GBR, RBG, -RGB, or all.
        #[arg(long, default_value = "all", allow_hyphen_values = true)]
        phase: String,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Vacuum reflection by k, j or i, and optional k-chains.
    Vacuum {
        #[arg(long, default_value = "k")]
        charge: String,
        #[arg(long)]
        chain: Option<u32>,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Electroweak vertex sums.
    Vertex {
        /// a, b, c, d or all.
        #[arg(long, default_value = "all")]
        vertex: String,
        #[command(flatten)]
        state: StateArgs,
    },
    /// Iterative dualling up to the given order.
    Dual {
        #[arg(long, default_value_t = 64)]
        order: u32,
    },
}

pub fn run(a: &Action, seed: u64) -> CmdResult {
    match a {
        Action::Verify { samples } => verify(*samples, seed),
        Action::Multiply { a, b } => {
            let x = Multivector::parse(a)?;
            let y = Multivector::parse(b)?;
            let p = x.mul(&y);
            Ok(Report::new(&json!({"a": x, "b": y, "product": p}), p.to_string()))
        }
        Action::Cpt { op, state } => cpt(op, state),
        Action::Spinor { kind, pairing, m2, state } => spinor(kind, pairing.as_deref(), m2.as_deref(), state),
        Action::Baryon { phase, state } => baryon(phase, state),
        Action::Vacuum { charge, chain, state } => vacuum(charge, *chain, state),
        Action::Vertex { vertex: v, state } => vertex(v, state),
        Action::Dual { order } => dual(*order),
    }
}

fn random_mv(rng: &mut ChaCha8Rng) -> Multivector {
    let mut x = Multivector::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let b = BasisBlade::from_index(rng.gen_range(0..32));
        x.add_term(b, qr(rng.gen_range(-6..=6), rng.gen_range(1..=4)));
    }
    x
}

fn verify(samples: usize, seed: u64) -> CmdResult {
    let suite = identity_suite();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut oracle_ok = 0;
    for _ in 0..samples {
        let (x, y) = (random_mv(&mut rng), random_mv(&mut rng));
        oracle_ok += (matrix_rep(&x.mul(&y)) == matrix_rep(&x).matmul(&matrix_rep(&y))) as usize;
    }
    let passed = suite.passed() && oracle_ok == samples;
    let mut text = suite.summary();
    let _ = write!(text, "\n{oracle_ok}/{samples} random oracle products agree (seed {seed})");
    for c in &suite.checks {
        let _ = write!(text, "\n  {:>5}/{:<5} {}", c.passed, c.total, c.name);
    }
    let mut r = Report::new(
        &json!({
            "summary": suite.summary(),
            "suite": suite,
            "randomOracle": {"seed": seed, "samples": samples, "passed": oracle_ok},
            "passed": passed,
        }),
        text,
    );
    r.failed = !passed;
    Ok(r)
}

/// Names `x` as `±` a sign pattern of `base`, if it is one.
fn identify(x: &Multivector, base: &NilpotentVector) -> Option<(i64, i8, i8)> {
    for (se, sp) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let r = base.with_signs(se, sp).realized();
        for s in [1, -1] {
            if r.scale(&q(s)) == *x {
                return Some((s, se, sp));
            }
        }
    }
    None
}

fn cpt(op: &str, state: &StateArgs) -> CmdResult {
    parse_word(op).map_err(|e| CliError::usage(format!("--op: {e}")))?;
    let x = state.state()?;
    let r = x.realized();
    let out = conjugate_word(&r, op)?;
    let identity = out == r;
    let named = identify(&out, &x);
    let mut text = format!("{op}(X) = {out}");
    if identity {
        text.push_str("\n= X (identity)");
    } else if let Some((s, se, sp)) = named {
        let sign = |v: i8| if v < 0 { '-' } else { '+' };
        let _ = write!(text, "\n= {}({}kE {}ip + ijm)", if s < 0 { "-" } else { "" }, sign(se), sign(sp));
    }
    let named = named.map(|(s, se, sp)| json!({"overall": s, "signE": se, "signP": sp}));
    Ok(Report::new(&json!({"op": op, "input": x, "realized": r, "result": out, "identity": identity, "pattern": named}), text))
}

fn spinor(kind: &str, pairing: Option<&str>, m2: Option<&str>, state: &StateArgs) -> CmdResult {
    let kind = match kind {
        "fermion" => SpinorKind::Fermion,
        "antifermion" => SpinorKind::Antifermion,
        o => return Err(CliError::usage(format!("--kind `{o}`: expected fermion or antifermion"))),
    };
    let (e, p, m) = state.parts()?;
    let a = Spinor4::new(kind, e.clone(), p.clone(), m.clone());
    let mut text = String::new();
    for (k, c) in a.components.iter().enumerate() {
        let _ = writeln!(text, "ψ{k}: {}", c.realized());
    }
    let Some(pairing) = pairing else {
        return Ok(Report::new(&json!({"spinor": a}), text));
    };
    let pk: PairingKind = pairing.parse().map_err(|e: nilpotent_core::Error| CliError::usage(e.to_string()))?;
    let m2 = m2.map(rational).transpose()?.unwrap_or(m);
    let partner = match (pk, kind) {
        (PairingKind::Spin1 | PairingKind::Spin0, SpinorKind::Fermion) => SpinorKind::Antifermion,
        (PairingKind::Spin1 | PairingKind::Spin0, SpinorKind::Antifermion) => SpinorKind::Fermion,
        _ => kind,
    };
    let b = Spinor4::new(partner, e, p, m2);
    let sum = spinor_pair_sum(&a, &b, pk)?;
    let _ = write!(text, "{pairing} sum: {sum}");
    Ok(Report::new(&json!({"spinor": a, "partner": b, "pairing": pk, "sum": sum, "zero": sum.is_zero()}), text))
}

fn baryon(phase: &str, state: &StateArgs) -> CmdResult {
    let (e, p, m) = state.parts()?;
    let phases = if phase == "all" {
        BaryonPhase::ALL.to_vec()
    } else {
        vec![phase.parse().map_err(|e: nilpotent_core::Error| CliError::usage(e.to_string()))?]
    };
    let mut t = Table::new(&["phase", "factor", "nilpotent"]);
    let mut rows = Vec::new();
    for ph in phases {
        let b = baryon_product(ph, e.clone(), p.clone(), m.clone())?;
        t.push(vec![ph.label().into(), fmt_q(&b.factor), b.nilpotent.realized().to_string()]);
        rows.push(b);
    }
    Ok(Report::new(&rows, t.render()).with_table(t))
}

fn vacuum(charge: &str, chain: Option<u32>, state: &StateArgs) -> CmdResult {
    let c: VacuumCharge = charge.parse().map_err(|e: nilpotent_core::Error| CliError::usage(e.to_string()))?;
    let x = state.state()?;
    let reflected = vacuum_reflect(&x, c);
    let raw = vacuum_reflect_raw(&x, c);
    let mut lines = vec![("X", x.realized().to_string()), ("reflected", reflected.realized().to_string()), ("raw", raw.to_string())];
    let chain = chain.map(|n| vacuum_chain(&x, n)).transpose()?;
    if let Some(ch) = &chain {
        lines.push(("chain", ch.product.to_string()));
        lines.push(("λ", format!("{} + {}i", fmt_q(&ch.lambda_re), fmt_q(&ch.lambda_im))));
    }
    Ok(Report::new(&json!({"input": x, "charge": c, "reflected": reflected, "raw": raw, "chain": chain}), kv(&lines)))
}

fn vertex(which: &str, state: &StateArgs) -> CmdResult {
    let (e, p, m) = state.parts()?;
    let vs = if which == "all" {
        Vertex::ALL.to_vec()
    } else {
        vec![which.parse().map_err(|e: nilpotent_core::Error| CliError::usage(e.to_string()))?]
    };
    let mut t = Table::new(&["vertex", "scalar", "scalar/E²", "sum"]);
    let mut rows = Vec::new();
    for v in vs {
        let s = vertex_sum(v, e.clone(), p.clone(), m.clone());
        t.push(vec![format!("{v:?}").to_lowercase(), fmt_q(&s.scalar), s.ratio.clone().unwrap_or_default(), s.sum.to_string()]);
        rows.push(s);
    }
    Ok(Report::new(&rows, t.render()).with_table(t))
}

fn dual(order: u32) -> CmdResult {
    let d = dual_generate(order)?;
    let census = d.order_census();
    let iso = (order == 64).then(|| check_isomorphism(&d));
    let mut text = format!("order {} in {} steps, closed: {}", d.elements.len(), d.history.len(), d.is_closed());
    let _ = write!(
        text,
        "\nelement orders: {}",
        census.iter().map(|(o, n)| format!("{n}×{o}")).collect::<Vec<_>>().join(", ")
    );
    if let Some(i) = &iso {
        let _ = write!(text, "\nisomorphic to the blade group: {}", i.passed());
    }
    let failed = !d.is_closed() || iso.as_ref().is_some_and(|i| !i.passed());
    let mut r = Report::new(&json!({"algebra": d, "census": census, "closed": d.is_closed(), "isomorphism": iso}), text);
    r.failed = failed;
    Ok(r)
}
