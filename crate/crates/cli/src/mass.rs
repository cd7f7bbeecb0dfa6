use crate::input::{dataset, float};
use crate::report::{g, kv, Report, Table};
use crate::{Cli, CmdResult};
use nilpotent_core::masses::{
    boson_model, ckm_apply, decuplet_table, extension_table, generation_partition, mb_over_mtau, meson_table,
    octet_table, regge, HadronRow, MassUnit, RatioInputs,
};
use serde_json::{json, Map, Value};
use std::fmt::Write;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    pub decuplet: bool,
    #[arg(long)]
    pub octet: bool,
    #[arg(long)]
    pub mesons: bool,
    /// ccc, bbb, ttt rows.
    #[arg(long)]
    pub extensions: bool,
    #[arg(long)]
    pub bosons: bool,
    #[arg(long)]
    pub generations: bool,
    #[arg(long)]
    pub ckm: bool,
    /// m_b/m_τ and m_s/m_μ.
    #[arg(long)]
    pub ratios: bool,
    /// Regge mass for angular momentum J.
    #[arg(long, value_name = "J", value_parser = float)]
    pub regge: Option<f64>,
    #[arg(long, value_parser = float)]
    pub me: Option<f64>,
    #[arg(long, value_parser = float)]
    pub alpha_inverse: Option<f64>,
    #[arg(long, value_parser = float)]
    pub mz: Option<f64>,
    #[arg(long, value_parser = float)]
    pub sin2: Option<f64>,
    #[arg(long, value_parser = float)]
    pub lambda: Option<f64>,
    #[arg(long, value_parser = float)]
    pub two_pi_kappa: Option<f64>,
    /// Total fermion mass for the generation partition, GeV.
    #[arg(long, value_parser = float)]
    pub total: Option<f64>,
}

fn hadron_table(rows: &[HadronRow]) -> Table {
    let mut t = Table::new(&["name", "content", "n0", "M", "M0", "range", "selection", "predicted", "GeV", "measured"]);
    for r in rows {
        let range = if r.range.0 == r.range.1 { g(r.range.0) } else { format!("{}-{}", g(r.range.0), g(r.range.1)) };
        let measured = match r.measured_units {
            Some((a, b)) if a == b => g(a),
            Some((a, b)) => format!("{}-{}", g(a), g(b)),
            None => String::new(),
        };
        t.push(vec![
            r.name.clone(),
            r.content.join(" "),
            r.n0.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
            r.big_m.to_string(),
            r.big_m0.to_string(),
            range,
            format!("{:?}", r.selection).to_lowercase(),
            g(r.predicted_units),
            g(r.predicted_gev),
            measured,
        ]);
    }
    t
}

pub fn run(a: &Args, cli: &Cli) -> CmdResult {
    let mut d = dataset(cli)?;
    let c = &mut d.constants;
    if let Some(x) = a.me {
        c.me = x;
    }
    if let Some(x) = a.alpha_inverse {
        c.alpha_inverse = x;
    }
    if let Some(x) = a.mz {
        c.mz = x;
    }
    if let Some(x) = a.sin2 {
        c.sin2 = x;
    }
    if let Some(x) = a.lambda {
        c.lambda_ckm = x;
    }
    if let Some(x) = a.two_pi_kappa {
        c.two_pi_kappa = x;
    }
    if let Some(x) = a.total {
        c.fermion_total = x;
    }
    let c = d.constants.clone();
    let u = MassUnit::from_dataset(&d)?;
    let any = a.decuplet || a.octet || a.mesons || a.extensions || a.bosons || a.generations || a.ckm || a.ratios
        || a.regge.is_some();
    let on = |flag: bool| flag || !any;

    let mut json = Map::new();
    json.insert("unit".into(), serde_json::to_value(u).expect("json"));
    let mut text = format!("unit m_e/α = {} GeV\n", g(u.unit));
    let mut tables = Vec::new();
    let mut section = |name: &str, title: &str, rows: Vec<HadronRow>, json: &mut Map<String, Value>| {
        let t = hadron_table(&rows);
        let _ = write!(text, "\n{title}\n{}\n", t.render());
        json.insert(name.into(), serde_json::to_value(&rows).expect("json"));
        tables.push(t);
    };
    if on(a.decuplet) {
        section("decuplet", "spin 3/2 decuplet (units of m_e/α)", decuplet_table(&d, &u)?, &mut json);
    }
    if on(a.octet) {
        section("octet", "spin 1/2 octet", octet_table(&d, &u)?, &mut json);
    }
    if on(a.mesons) {
        section("mesons", "pseudoscalar mesons", meson_table(&d, &u)?, &mut json);
    }
    if on(a.extensions) {
        section("extensions", "heavy extensions", extension_table(&d, &u)?, &mut json);
    }
    let mut kvs: Vec<(&str, String)> = Vec::new();
    if on(a.bosons) {
        let b = boson_model(&u, c.mz, c.sin2, c.mw_measured, c.f_empirical)?;
        kvs.extend([
            ("Higgs zeros", b.higgs_zeros.to_string()),
            ("m_H", format!("{} GeV", g(b.m_h))),
            ("Z zeros", b.z_zeros.to_string()),
            ("M_Z from zeros", format!("{} GeV", g(b.m_z_from_zeros))),
            ("M_W = M_Z cos θ_W", format!("{} GeV", g(b.mw))),
            ("f = 3 M_W (measured)", format!("{} GeV", g(b.f))),
            ("m_t = f/√2", format!("{} GeV", g(b.m_top))),
            ("(Σg_f/g)²", b.coupling_sum_squared.clone()),
        ]);
        json.insert("bosons".into(), serde_json::to_value(&b).expect("json"));
    }
    if on(a.generations) {
        let gp = generation_partition(c.fermion_total, u.alpha)?;
        kvs.push(("generations", format!("{}, {}, {} GeV", g(gp.g1), g(gp.g2), g(gp.g3))));
        json.insert("generations".into(), serde_json::to_value(gp).expect("json"));
    }
    if on(a.ckm) {
        let k = ckm_apply(c.leptons, c.lambda_ckm)?;
        kvs.push(("e′, μ′, τ′", format!("{}, {}, {} GeV", g(k.rotated[0]), g(k.rotated[1]), g(k.rotated[2]))));
        kvs.push(("μ′/e′, τ′/μ′", format!("{}, {}", g(k.mu_over_e), g(k.tau_over_mu))));
        json.insert("ckm".into(), serde_json::to_value(k).expect("json"));
    }
    if on(a.ratios) {
        let ratio = |r: &RatioInputs| {
            mb_over_mtau(r.alpha3_mu, r.alpha3_heavy, r.alpha3_mx, r.alpha_ratio_term).map(|x| (x, x * r.lepton))
        };
        let (b, mb) = ratio(&c.mb_over_mtau)?;
        let (s, ms) = ratio(&c.ms_over_mmu)?;
        kvs.push(("m_b/m_τ", format!("{} (m_b = {} GeV)", g(b), g(mb))));
        kvs.push(("m_s/m_μ", format!("{} (m_s = {} GeV)", g(s), g(ms))));
        json.insert(
            "ratios".into(),
            json!({"mbOverMtau": b, "mb": mb, "msOverMmu": s, "ms": ms}),
        );
    }
    if a.regge.is_some() || !any {
        let p = regge(a.regge.unwrap_or(1.0), c.two_pi_kappa)?;
        kvs.push(("Regge m² = J·2πκ", format!("J = {}: m² = {} GeV², m = {} GeV", g(p.j), g(p.m2), g(p.m))));
        json.insert("regge".into(), serde_json::to_value(p).expect("json"));
    }
    if !kvs.is_empty() {
        text.push('\n');
        text.push_str(&kv(&kvs));
    }
    let mut r = Report::new(&Value::Object(json), text);
    if tables.len() == 1 && kvs.is_empty() {
        r = r.with_table(tables.remove(0));
    }
    Ok(r)
}
