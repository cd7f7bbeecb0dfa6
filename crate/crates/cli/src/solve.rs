use crate::input::{float, rational};
use crate::report::{g, kv, Report, Table};
use crate::{CliError, CmdResult};
use nilpotent_core::spectra::{
    coulomb_levels, infrared_radius, lennard_jones_solution, lmin, match_coefficients, oscillator_levels, Matching,
    Num, PotentialSpec, QuantumNumbers,
};
use serde_json::json;
use std::fmt::Write;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FamilyArg {
    Coulomb,
    Strong,
    Oscillator,
    LennardJones,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// JSON potential `{"terms": {"1": "-1"}, "coulombPhase": "1/2", "q": "2/5"}`.
    #[arg(long, conflicts_with = "family")]
    pub potential: Option<PathBuf>,
    /// Coulomb coupling product qA for the level formula.
    #[arg(long = "qA", allow_hyphen_values = true)]
    pub qa: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: Option<String>,
    /// Coulomb phase A.
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long = "C", allow_hyphen_values = true)]
    pub c: Option<String>,
    /// Oscillator strength in `W = ½cr²`.
    #[arg(long, allow_hyphen_values = true)]
    pub strength: Option<String>,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub m: String,
    #[arg(long = "E", allow_hyphen_values = true)]
    pub e: Option<String>,
    #[arg(long, default_value = "1/2")]
    pub j: String,
    #[arg(long, default_value_t = 0)]
    pub nprime: u32,
    /// Report the infrared radius 2E/(qσ) instead of matching.
    #[arg(long)]
    pub radius: bool,
    /// Minimal flux-tube length for triangle sides a,b,c.
    #[arg(long)]
    pub lmin: Option<String>,
}

fn num(s: &Option<String>, default: &str) -> Result<Num, CliError> {
    s.as_deref().unwrap_or(default).parse::<Num>().map_err(|e| CliError::usage(e.to_string()))
}

fn need<'a>(s: &'a Option<String>, name: &str) -> Result<&'a str, CliError> {
    s.as_deref().ok_or_else(|| CliError::usage(format!("--{name} is required here")))
}

fn f(s: &str) -> Result<f64, CliError> {
    float(s).map_err(CliError::usage)
}

pub fn run(a: &Args) -> CmdResult {
    if let Some(sides) = &a.lmin {
        let v = sides.split(',').map(f).collect::<Result<Vec<_>, _>>()?;
        let [x, y, z] = v[..] else { return Err(CliError::usage("--lmin needs three sides")) };
        let l = lmin(x, y, z)?;
        return Ok(Report::new(&json!({"sides": [x, y, z], "lmin": l}), format!("L_min = {}", g(l))));
    }
    if a.radius {
        let (e, q, s) = (f(need(&a.e, "E")?)?, f(need(&a.q, "q")?)?, f(need(&a.sigma, "sigma")?)?);
        let r = infrared_radius(e, q, s)?;
        return Ok(Report::new(&json!({"E": e, "q": q, "sigma": s, "radius": r}), format!("r = 2E/(qσ) = {} fm", g(r))));
    }
    let qn = QuantumNumbers::new(rational(&a.j)?, a.nprime)?;
    let m = num(&Some(a.m.clone()), "1")?;
    let e = a.e.as_deref().map(|s| s.parse::<Num>()).transpose()?;
    let mut extra = Vec::new();
    let (v, lj) = match (a.family, &a.potential) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError { code: 3, message: format!("{}: {e}", path.display()) })?;
            let v: PotentialSpec = serde_json::from_str(&text).map_err(|e| CliError::usage(e.to_string()))?;
            (v, None)
        }
        (Some(FamilyArg::Coulomb), None) => {
            let (q, phase) = match &a.qa {
                Some(qa) => (Num::one(), qa.parse::<Num>()?),
                None => (num(&a.q, "1")?, num(&a.a, "0")?),
            };
            let qa = (&q * &phase).re();
            let ratio = coulomb_levels(qa, &qn)?;
            extra.push(("E/m (level formula)", g(ratio)));
            (PotentialSpec::coulomb(q, phase), Some(json!({"EOverM": ratio})))
        }
        (Some(FamilyArg::Strong), None) => (PotentialSpec::strong(num(&a.q, "1")?, num(&a.sigma, "1")?, num(&a.a, "0")?), None),
        (Some(FamilyArg::Oscillator), None) => {
            let level = oscillator_levels(&m, &qn);
            extra.push(("E (level formula)", level.to_string()));
            (PotentialSpec::oscillator(num(&a.strength, "1")?, num(&a.a, "0")?), Some(json!({"E": level})))
        }
        (Some(FamilyArg::LennardJones), None) => {
            let (matching, series) = lennard_jones_solution(num(&a.a, "0")?, num(&a.b, "1")?, num(&a.c, "1")?, &qn, &m)?;
            let level = series.energy(&qn)?;
            extra.push(("E (oscillator levels)", level.to_string()));
            return Ok(matching_report(&matching, &extra, Some(json!({"E": level}))));
        }
        (None, None) => return Err(CliError::usage("give --family, --potential, --radius or --lmin")),
    };
    let matching = match_coefficients(&v, &qn, &m, e.as_ref())?;
    Ok(matching_report(&matching, &extra, lj))
}

fn matching_report(mt: &Matching, extra: &[(&str, String)], levels: Option<serde_json::Value>) -> Report {
    let mut text = kv(&[("family", format!("{:?}", mt.family)), ("W", mt.potential.w().to_string())]);
    text.push_str(&kv(extra));
    for n in &mt.notes {
        let _ = writeln!(text, "note: {n}");
    }
    let mut t = Table::new(&["branch", "E", "γ", "a", "normalizable", "max residual", "worst power"]);
    for b in &mt.branches {
        let s = &b.solution;
        t.push(vec![
            format!("{:+}", s.branch),
            s.energy.to_string(),
            s.gamma.to_string(),
            s.a.to_string(),
            s.normalizable.map_or("-".into(), |x| x.to_string()),
            g(b.residual.max_abs),
            b.residual.worst_power.map_or("-".into(), |p| p.to_string()),
        ]);
    }
    text.push_str(&t.render());
    let _ = write!(text, "\nconsistent: {}", mt.consistent());
    Report::new(&json!({"matching": mt, "levels": levels, "consistent": mt.consistent()}), text).with_table(t)
}
