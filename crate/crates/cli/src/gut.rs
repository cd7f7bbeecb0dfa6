use crate::input::{dataset, float, list};
use crate::report::{g, kv, Report, Table};
use crate::{Cli, CliError, CmdResult};
use nilpotent_core::unification::{
    alpha_g_at, couplings_at, gut_report, legacy_su5, legacy_su5_solve, CouplingSet, GutInputs, GutReport,
};
use serde_json::json;
use std::fmt::Write;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// α at the reference scale.
    #[arg(long, default_value = "1/128", value_parser = float)]
    pub alpha: f64,
    /// α₃ at the reference scale.
    #[arg(long, default_value = "0.118", value_parser = float)]
    pub alpha3: f64,
    #[arg(long, default_value = "0.25", value_parser = float)]
    pub sin2: f64,
    /// Reference scale in GeV; defaults to M_Z from the dataset.
    #[arg(long, value_parser = float)]
    pub mz: Option<f64>,
    /// Unification mass for the coupling predictions; defaults to the Planck mass.
    #[arg(long, value_parser = float)]
    pub planck: Option<f64>,
    /// Only report couplings at these scales (GeV, comma separated).
    #[arg(long)]
    pub mu: Option<String>,
    /// Scales for the coupling table.
    #[arg(long, default_value = "91.1867,1000,14000,1e6,1e10,1e15,1e19")]
    pub grid: String,
    /// Minimal SU(5) comparison only.
    #[arg(long)]
    pub legacy_su5: bool,
}

fn scales(s: &str) -> Result<Vec<f64>, CliError> {
    list(s, |x| float(x).map_err(CliError::usage))
}

fn coupling_table(rows: &[CouplingSet]) -> Table {
    let mut t = Table::new(&["mu", "1/alpha", "1/alpha2", "1/alpha3", "alpha3", "sin2"]);
    for c in rows {
        t.push(vec![g(c.mu), g(1.0 / c.alpha), g(1.0 / c.alpha2), g(1.0 / c.alpha3), g(c.alpha3), g(c.sin2_theta_w)]);
    }
    t
}

pub fn run(a: &Args, cli: &Cli) -> CmdResult {
    let d = dataset(cli)?;
    let inputs = GutInputs {
        alpha: a.alpha,
        alpha3: a.alpha3,
        sin2: a.sin2,
        mu: a.mz.unwrap_or(d.constants.mz),
        planck: a.planck.unwrap_or(d.constants.planck),
    };
    if a.legacy_su5 {
        let u = legacy_su5_solve(inputs.alpha, inputs.alpha3, inputs.mu)?;
        let at_mu = legacy_su5(inputs.mu, u.alpha_g, u.mx)?;
        let at_15 = legacy_su5(1e15_f64.min(u.mx), u.alpha_g, u.mx)?;
        let text = kv(&[
            ("M_X", format!("{} GeV", g(u.mx))),
            ("1/α_G", g(1.0 / u.alpha_g)),
            ("sin²θ_W at μ (mixed)", g(at_mu.sin2_mixed)),
            ("sin²θ_W at 1e15 (mixed)", g(at_15.sin2_mixed)),
            ("sin²θ_W at 1e15 (hypercharge)", g(at_15.sin2_hypercharge)),
        ]);
        return Ok(Report::new(&json!({"unification": u, "atMu": at_mu, "at1e15": at_15}), text));
    }
    if let Some(mu) = &a.mu {
        let alpha_g = alpha_g_at(inputs.alpha3, inputs.planck, inputs.mu)?;
        let rows = scales(mu)?
            .into_iter()
            .map(|m| couplings_at(alpha_g, inputs.planck, m))
            .collect::<Result<Vec<_>, _>>()?;
        let t = coupling_table(&rows);
        let text = format!("1/α_G = {} with M_X = {} GeV\n{}", g(1.0 / alpha_g), g(inputs.planck), t.render());
        return Ok(Report::new(&json!({"alphaG": alpha_g, "MX": inputs.planck, "couplings": rows}), text).with_table(t));
    }
    let r = gut_report(&inputs, &scales(&a.grid)?)?;
    let mut v = serde_json::to_value(&r).expect("json");
    v["MX"] = json!(r.solved.mx);
    v["alphaG"] = json!(r.solved.alpha_g);
    Ok(Report::new(&v, render(&r)).with_table(coupling_table(&r.grid)))
}

fn render(r: &GutReport) -> String {
    let mut s = kv(&[
        ("M_X (solved)", format!("{} GeV", g(r.solved.mx))),
        ("M_X (Planck)", format!("{} GeV", g(r.planck.mx))),
        ("1/α_G", g(r.inv_alpha_g)),
        ("1/α₂(μ)", g(r.inv_alpha2_mu)),
        ("1/α₃(μ)", g(r.inv_alpha3_mu)),
        ("1/α(μ)", g(r.inv_alpha_em_mu)),
        ("1/α(14 TeV)", g(r.inv_alpha_em_14tev)),
        ("μ where α₃ = 1", format!("{} GeV", g(r.mu_alpha3_one))),
        ("sin²θ_W (phenomenological)", r.sin2_phenomenological.clone()),
        ("sin²θ_W (lepton-like)", r.sin2_lepton_like.clone()),
        ("b₁ conventional", format!("({})/π", r.b1_conventional_over_pi)),
        ("b₁ lepton-like", format!("({})/π", r.b1_lepton_like_over_pi)),
        ("legacy SU(5) M_X", format!("{} GeV", g(r.legacy.unification.mx))),
        ("legacy sin²θ_W at 1e15", g(r.legacy.at_1e15.sin2_hypercharge)),
    ]);
    let _ = write!(s, "\n{}", coupling_table(&r.grid).render());
    s
}
