use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const MULTIPLETS_CSV: &str = include_str!("../../data/multiplets.csv");
pub const CONSTANTS_JSON: &str = include_str!("../../data/constants.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Decuplet,
    Octet,
    Meson,
    Extension,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Multiplet {
    pub family: Family,
    pub name: String,
    #[serde(rename = "quarkContent")]
    pub content: Vec<String>,
    #[serde(rename = "n0Ground")]
    pub n0_ground: u32,
    #[serde(rename = "n0Candidates")]
    pub n0: Vec<u32>,
    #[serde(rename = "M")]
    pub big_m: u32,
    #[serde(rename = "M0")]
    pub big_m0: u32,
    /// In units of m_e/α; a range when two values differ.
    pub measured: Option<(f64, f64)>,
}

impl Multiplet {
    fn validate(&self) -> Result<()> {
        if self.n0.is_empty() {
            return Err(Error::Data(format!("{}: no n0 values", self.name)));
        }
        if self.n0.iter().min() != Some(&self.n0_ground) {
            return Err(Error::Data(format!("{}: ground is not the smallest n0", self.name)));
        }
        if self.big_m == 0 || self.big_m > self.big_m0 {
            return Err(Error::Data(format!("{}: need 1 <= M <= M0", self.name)));
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize)]
struct Record {
    family: Family,
    name: String,
    content: String,
    n0: String,
    #[serde(rename = "M")]
    m: u32,
    #[serde(rename = "M0")]
    m0: u32,
    measured_low: Option<f64>,
    measured_high: Option<f64>,
}

pub fn parse_multiplets(text: &str) -> Result<Vec<Multiplet>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in rdr.deserialize::<Record>() {
        let r = rec.map_err(|e| Error::Data(e.to_string()))?;
        let n0 = r
            .n0
            .split(';')
            .map(|x| x.trim().parse::<u32>().map_err(|e| Error::Data(format!("{}: n0 `{x}`: {e}", r.name))))
            .collect::<Result<Vec<_>>>()?;
        let measured = match (r.measured_low, r.measured_high) {
            (Some(a), Some(b)) => Some((a, b)),
            (Some(a), None) | (None, Some(a)) => Some((a, a)),
            (None, None) => None,
        };
        let m = Multiplet {
            family: r.family,
            n0_ground: n0.iter().copied().min().unwrap_or(0),
            name: r.name,
            content: r.content.split(';').map(str::to_string).collect(),
            n0,
            big_m: r.m,
            big_m0: r.m0,
            measured,
        };
        m.validate()?;
        out.push(m);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RatioInputs {
    pub alpha3_mu: f64,
    /// α₃ at the heavy partner scale: m_t for b/τ, m_c for s/μ.
    pub alpha3_heavy: f64,
    #[serde(rename = "alpha3MX")]
    pub alpha3_mx: f64,
    /// `(α(μ)/α(M_W))^(10/41)`.
    pub alpha_ratio_term: f64,
    /// Lepton mass that the ratio multiplies, GeV.
    pub lepton: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub me: f64,
    #[serde(rename = "alphaInverse")]
    pub alpha_inverse: f64,
    #[serde(rename = "MZ")]
    pub mz: f64,
    pub planck: f64,
    #[serde(rename = "MWMeasured")]
    pub mw_measured: f64,
    #[serde(rename = "fEmpirical")]
    pub f_empirical: f64,
    #[serde(rename = "sin2ThetaW")]
    pub sin2: f64,
    pub leptons: [f64; 3],
    #[serde(rename = "lambdaCKM")]
    pub lambda_ckm: f64,
    #[serde(rename = "twoPiKappa")]
    pub two_pi_kappa: f64,
    #[serde(rename = "fermionTotal")]
    pub fermion_total: f64,
    #[serde(rename = "mbOverMtau")]
    pub mb_over_mtau: RatioInputs,
    #[serde(rename = "msOverMmu")]
    pub ms_over_mmu: RatioInputs,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    pub multiplets: Vec<Multiplet>,
    pub constants: Constants,
}

impl Dataset {
    pub fn bundled() -> Self {
        Dataset::parse(MULTIPLETS_CSV, CONSTANTS_JSON).expect("bundled dataset parses")
    }

    pub fn parse(multiplets: &str, constants: &str) -> Result<Self> {
        Ok(Dataset {
            multiplets: parse_multiplets(multiplets)?,
            constants: serde_json::from_str(constants).map_err(|e| Error::Data(e.to_string()))?,
        })
    }

    /// Reads `multiplets.csv` and `constants.json` from a directory.
    pub fn from_dir(dir: &Path) -> Result<Self> {
        let read = |name: &str| {
            std::fs::read_to_string(dir.join(name)).map_err(|e| Error::Data(format!("{}: {e}", dir.join(name).display())))
        };
        Dataset::parse(&read("multiplets.csv")?, &read("constants.json")?)
    }

    pub fn family(&self, f: Family) -> Vec<&Multiplet> {
        self.multiplets.iter().filter(|m| m.family == f).collect()
    }

    pub fn get(&self, f: Family, name: &str) -> Result<&Multiplet> {
        self.multiplets
            .iter()
            .find(|m| m.family == f && m.name == name)
            .ok_or_else(|| Error::Data(format!("no {f:?} multiplet `{name}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_loads() {
        let d = Dataset::bundled();
        assert_eq!(d.family(Family::Decuplet).len(), 4);
        assert_eq!(d.family(Family::Octet).len(), 4);
        assert_eq!(d.family(Family::Meson).len(), 3);
        assert_eq!(d.get(Family::Decuplet, "Σ").unwrap().n0_ground, 15);
        assert_eq!(d.get(Family::Meson, "π").unwrap().n0_ground, 2);
        assert_eq!(d.get(Family::Decuplet, "Δ").unwrap().measured, Some((17.6, 19.6)));
        assert!(d.get(Family::Extension, "ccc").unwrap().measured.is_none());
        assert_eq!(d.constants.leptons[2], 1.770);
    }

    #[test]
    fn bad_rows() {
        let head = "family,name,content,n0,M,M0,measured_low,measured_high\n";
        assert!(parse_multiplets(&format!("{head}octet,N,udd,9,4,3,1,1\n")).is_err());
        assert!(parse_multiplets(&format!("{head}octet,N,udd,x,2,3,1,1\n")).is_err());
        assert!(parse_multiplets(&format!("{head}octet,N,udd,9,0,3,1,1\n")).is_err());
        assert!(Dataset::from_dir(Path::new("/nonexistent")).is_err());
    }
}
