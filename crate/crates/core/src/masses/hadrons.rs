use super::data::{Dataset, Family, Multiplet};
use crate::rational::{fmt_q, q, to_f64, Q};
use crate::{Error, Result};
use serde::Serialize;

/// `m_f = m_e/α`, the mass carried by one zero charge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MassUnit {
    pub me: f64,
    pub alpha: f64,
    pub unit: f64,
}

impl MassUnit {
    pub fn new(me: f64, alpha: f64) -> Result<Self> {
        if !(me > 0.0 && alpha > 0.0) {
            return Err(Error::InvalidInput("m_e and α must be positive".into()));
        }
        Ok(MassUnit { me, alpha, unit: me / alpha })
    }

    pub fn from_dataset(d: &Dataset) -> Result<Self> {
        MassUnit::new(d.constants.me, 1.0 / d.constants.alpha_inverse)
    }

    pub fn gev(&self, units: f64) -> f64 {
        units * self.unit
    }
}

impl Default for MassUnit {
    fn default() -> Self {
        MassUnit::new(0.511e-3, 1.0 / 137.036).expect("positive")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MassValue {
    /// Exact n₀M₀/M.
    pub units: String,
    pub gev: f64,
}

/// `n₀M₀/M` units of m_e/α.
pub fn multiplet_units(n0: u32, m: u32, m0: u32) -> Result<Q> {
    if m == 0 || m0 == 0 {
        return Err(Error::InvalidInput("multiplicity must be at least 1".into()));
    }
    Ok(q(n0 as i64) * q(m0 as i64) / q(m as i64))
}

pub fn multiplet_mass(n0: u32, m: u32, m0: u32, u: &MassUnit) -> Result<MassValue> {
    let units = multiplet_units(n0, m, m0)?;
    Ok(MassValue { gev: u.gev(to_f64(&units)), units: fmt_q(&units) })
}

/// `½(m_N + m_Ξ) − ¾m_Λ − ¼m_Σ`.
pub fn gmo_octet_residual(m_n: f64, m_lambda: f64, m_sigma: f64, m_xi: f64) -> f64 {
    0.5 * (m_n + m_xi) - 0.75 * m_lambda - 0.25 * m_sigma
}

/// m_Λ that zeroes the octet residual.
pub fn gmo_octet_lambda(m_n: f64, m_sigma: f64, m_xi: f64) -> f64 {
    (0.5 * (m_n + m_xi) - 0.25 * m_sigma) / 0.75
}

/// `m_K = √(¼m_π² + ¾m_η²)`.
pub fn gmo_meson_k(m_pi: f64, m_eta: f64) -> f64 {
    (0.25 * m_pi * m_pi + 0.75 * m_eta * m_eta).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Selection {
    /// Lowest n₀.
    Ground,
    /// Measured value clamped into the predicted range.
    Measured,
    /// Solved from the Gell-Mann-Okubo relation.
    Gmo,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HadronRow {
    pub name: String,
    pub content: Vec<String>,
    pub n0: Vec<u32>,
    #[serde(rename = "M")]
    pub big_m: u32,
    #[serde(rename = "M0")]
    pub big_m0: u32,
    /// Exact ground prediction, units of m_e/α.
    pub ground: String,
    pub range: (f64, f64),
    pub selection: Selection,
    pub predicted_units: f64,
    pub predicted_gev: f64,
    pub measured_units: Option<(f64, f64)>,
    pub measured_gev: Option<(f64, f64)>,
    pub in_range: bool,
}

fn row(m: &Multiplet, selection: Selection, value: Option<f64>, u: &MassUnit) -> Result<HadronRow> {
    let ground = multiplet_units(m.n0_ground, m.big_m, m.big_m0)?;
    let hi = multiplet_units(*m.n0.iter().max().expect("non-empty"), m.big_m, m.big_m0)?;
    let range = (to_f64(&ground), to_f64(&hi));
    let predicted = match selection {
        Selection::Ground => range.0,
        _ => value.ok_or_else(|| Error::Data(format!("{}: no value to select", m.name)))?,
    };
    Ok(HadronRow {
        name: m.name.clone(),
        content: m.content.clone(),
        n0: m.n0.clone(),
        big_m: m.big_m,
        big_m0: m.big_m0,
        ground: fmt_q(&ground),
        range,
        selection,
        predicted_units: predicted,
        predicted_gev: u.gev(predicted),
        measured_units: m.measured,
        measured_gev: m.measured.map(|(a, b)| (u.gev(a), u.gev(b))),
        in_range: predicted >= range.0 - 1e-9 && predicted <= range.1 + 1e-9,
    })
}

fn clamped_measured(m: &Multiplet) -> Result<f64> {
    let lo = to_f64(&multiplet_units(m.n0_ground, m.big_m, m.big_m0)?);
    let hi = to_f64(&multiplet_units(*m.n0.iter().max().expect("non-empty"), m.big_m, m.big_m0)?);
    let (a, _) = m.measured.ok_or_else(|| Error::Data(format!("{}: no measured mass", m.name)))?;
    Ok(a.clamp(lo, hi))
}

pub fn decuplet_table(d: &Dataset, u: &MassUnit) -> Result<Vec<HadronRow>> {
    let rows = d.family(Family::Decuplet);
    if rows.is_empty() {
        return Err(Error::Data("no decuplet rows".into()));
    }
    rows.into_iter().map(|m| row(m, Selection::Ground, None, u)).collect()
}

/// N at its ground value, Σ and Ξ at their measured values inside the
/// predicted ranges, Λ from the Gell-Mann-Okubo relation.
pub fn octet_table(d: &Dataset, u: &MassUnit) -> Result<Vec<HadronRow>> {
    let n = d.get(Family::Octet, "N")?;
    let sigma = d.get(Family::Octet, "Σ")?;
    let xi = d.get(Family::Octet, "Ξ")?;
    let lambda = d.get(Family::Octet, "Λ")?;
    let n_row = row(n, Selection::Ground, None, u)?;
    let s = clamped_measured(sigma)?;
    let x = clamped_measured(xi)?;
    let l = gmo_octet_lambda(n_row.predicted_units, s, x);
    Ok(vec![
        n_row,
        row(lambda, Selection::Gmo, Some(l), u)?,
        row(sigma, Selection::Measured, Some(s), u)?,
        row(xi, Selection::Measured, Some(x), u)?,
    ])
}

/// π at its ground value, η at its measured value inside the predicted range,
/// K from the Gell-Mann-Okubo relation.
pub fn meson_table(d: &Dataset, u: &MassUnit) -> Result<Vec<HadronRow>> {
    let pi = d.get(Family::Meson, "π")?;
    let k = d.get(Family::Meson, "K")?;
    let eta = d.get(Family::Meson, "η")?;
    let pi_row = row(pi, Selection::Ground, None, u)?;
    let e = clamped_measured(eta)?;
    let kv = gmo_meson_k(pi_row.predicted_units, e);
    Ok(vec![pi_row, row(k, Selection::Gmo, Some(kv), u)?, row(eta, Selection::Measured, Some(e), u)?])
}

pub fn extension_table(d: &Dataset, u: &MassUnit) -> Result<Vec<HadronRow>> {
    d.family(Family::Extension).into_iter().map(|m| row(m, Selection::Ground, None, u)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReggePoint {
    #[serde(rename = "J")]
    pub j: f64,
    pub m2: f64,
    pub m: f64,
}

/// `m² = J·2πκ`.
pub fn regge(j: f64, two_pi_kappa: f64) -> Result<ReggePoint> {
    if two_pi_kappa <= 0.0 {
        return Err(Error::InvalidInput("Regge slope 2πκ must be positive".into()));
    }
    if j < 0.0 {
        return Err(Error::InvalidInput("J must be non-negative".into()));
    }
    let m2 = j * two_pi_kappa;
    Ok(ReggePoint { j, m2, m: m2.sqrt() })
}

/// `J = m²/2πκ`.
pub fn regge_inverse(m: f64, two_pi_kappa: f64) -> Result<ReggePoint> {
    if two_pi_kappa <= 0.0 {
        return Err(Error::InvalidInput("Regge slope 2πκ must be positive".into()));
    }
    Ok(ReggePoint { j: m * m / two_pi_kappa, m2: m * m, m: m.abs() })
}
