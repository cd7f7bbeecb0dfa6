use super::hadrons::MassUnit;
use crate::rational::{fmt_q, q, Q};
use crate::{Error, Result};
use serde::Serialize;

const FLAVOURS: u64 = 6;
const COLOURS: u64 = 3;
/// Three strong plus three other charge slots.
const CHARGE_TYPES: u64 = 6;
const REPRESENTATIONS: u64 = 4;

/// Zero charges in the quark-antiquark vacuum sum over `reps` representations.
pub fn zero_count(reps: u64) -> u64 {
    FLAVOURS * FLAVOURS * COLOURS * CHARGE_TYPES * reps
}

pub fn higgs_zero_count() -> u64 {
    zero_count(REPRESENTATIONS)
}

/// Only the two representations that carry no weak violation.
pub fn z_zero_count() -> u64 {
    zero_count(REPRESENTATIONS / 2)
}

pub fn higgs_mass(u: &MassUnit) -> f64 {
    u.gev(higgs_zero_count() as f64)
}

pub fn z_mass_from_count(u: &MassUnit) -> f64 {
    u.gev(z_zero_count() as f64)
}

fn check_sin2(sin2: f64) -> Result<()> {
    if sin2 > 0.0 && sin2 < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("sin²θ_W = {sin2} outside (0, 1)")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ElectroweakBosons {
    #[serde(rename = "MZ")]
    pub mz: f64,
    #[serde(rename = "MW")]
    pub mw: f64,
    pub sin2_theta_w: f64,
    /// 3·M_W from the model's M_W.
    pub f_model: f64,
    /// 3·M_W from the measured M_W.
    pub f: f64,
    pub f_empirical: f64,
    /// f_empirical/√2.
    pub m_top: f64,
}

/// `M_W = M_Z cos θ_W`, `f = 3M_W`, `m_t = f/√2`.
pub fn electroweak_bosons(mz: f64, sin2: f64, mw_measured: f64, f_empirical: f64) -> Result<ElectroweakBosons> {
    check_sin2(sin2)?;
    let mw = mz * (1.0 - sin2).sqrt();
    Ok(ElectroweakBosons {
        mz,
        mw,
        sin2_theta_w: sin2,
        f_model: 3.0 * mw,
        f: 3.0 * mw_measured,
        f_empirical,
        m_top: f_empirical / 2f64.sqrt(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BosonMassModel {
    #[serde(rename = "MZ")]
    pub mz: f64,
    #[serde(rename = "MW")]
    pub mw: f64,
    pub sin2_theta_w: f64,
    pub f: f64,
    #[serde(rename = "mH")]
    pub m_h: f64,
    pub higgs_zeros: u64,
    pub z_zeros: u64,
    #[serde(rename = "mZFromZeros")]
    pub m_z_from_zeros: f64,
    pub f_empirical: f64,
    pub m_top: f64,
    /// Exact (Σg_f/g)².
    pub coupling_sum_squared: String,
    pub coupling_sum: f64,
}

pub fn boson_model(u: &MassUnit, mz: f64, sin2: f64, mw_measured: f64, f_empirical: f64) -> Result<BosonMassModel> {
    let ew = electroweak_bosons(mz, sin2, mw_measured, f_empirical)?;
    let sq = coupling_sum_squared(&crate::rational::parse_q(&format!("{sin2}"))?)?;
    Ok(BosonMassModel {
        mz,
        mw: ew.mw,
        sin2_theta_w: sin2,
        f: ew.f,
        m_h: higgs_mass(u),
        higgs_zeros: higgs_zero_count(),
        z_zeros: z_zero_count(),
        m_z_from_zeros: z_mass_from_count(u),
        f_empirical,
        m_top: ew.m_top,
        coupling_sum_squared: fmt_q(&sq),
        coupling_sum: fermion_coupling_sum(1.0, sin2)?,
    })
}

/// `(Σg_f/g)² = 2/cos²θ_W`, exact for rational sin²θ_W.
pub fn coupling_sum_squared(sin2: &Q) -> Result<Q> {
    if *sin2 <= q(0) || *sin2 >= q(1) {
        return Err(Error::InvalidInput("sin²θ_W outside (0, 1)".into()));
    }
    Ok(q(2) / (q(1) - sin2))
}

/// `Σg_f = (g/√2)(2/cos θ_W)`.
pub fn fermion_coupling_sum(g: f64, sin2: f64) -> Result<f64> {
    check_sin2(sin2)?;
    Ok(g / 2f64.sqrt() * 2.0 / (1.0 - sin2).sqrt())
}

/// `m/M_H = (g_f/g)√(3/8)`.
pub fn mass_fraction(g_f: f64, g: f64) -> Result<f64> {
    if g == 0.0 {
        return Err(Error::InvalidInput("g must be nonzero".into()));
    }
    Ok(g_f / g * (3.0f64 / 8.0).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Generations {
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
}

/// Splits `total` so each generation is α times the one above.
pub fn generation_partition(total: f64, alpha: f64) -> Result<Generations> {
    if total <= 0.0 {
        return Err(Error::InvalidInput("total mass must be positive".into()));
    }
    if alpha < 0.0 {
        return Err(Error::InvalidInput("α must be non-negative".into()));
    }
    let g1 = total / (1.0 + alpha + alpha * alpha);
    Ok(Generations { g1, g2: alpha * g1, g3: alpha * alpha * g1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CKMMatrixIdeal {
    pub lambda: f64,
    pub matrix: [[f64; 3]; 3],
}

impl CKMMatrixIdeal {
    pub fn new(lambda: f64) -> Self {
        let l2 = lambda * lambda;
        CKMMatrixIdeal { lambda, matrix: [[1.0, lambda, 0.0], [-lambda, 1.0, l2], [0.0, -l2, 1.0]] }
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        self.matrix.map(|r| r[0] * v[0] + r[1] * v[1] + r[2] * v[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CkmResult {
    pub lambda: f64,
    pub input: [f64; 3],
    pub rotated: [f64; 3],
    /// μ′/e′.
    pub mu_over_e: f64,
    /// τ′/μ′.
    pub tau_over_mu: f64,
}

pub fn ckm_apply(leptons: [f64; 3], lambda: f64) -> Result<CkmResult> {
    if leptons.iter().any(|m| *m <= 0.0) {
        return Err(Error::InvalidInput("lepton masses must be positive".into()));
    }
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::InvalidInput(format!("λ = {lambda} outside [0, 1)")));
    }
    let r = CKMMatrixIdeal::new(lambda).apply(leptons);
    Ok(CkmResult { lambda, input: leptons, rotated: r, mu_over_e: r[1] / r[0], tau_over_mu: r[2] / r[1] })
}

/// `(a/b)^(10/41)`.
pub fn alpha_ratio_term(alpha_mu: f64, alpha_mw: f64) -> f64 {
    (alpha_mu / alpha_mw).powf(10.0 / 41.0)
}

/// `α₃(μ)^(12/23) α₃(m_t)^(8/161) α₃(M_X)^(−4/7) · ratio_term`.
pub fn mb_over_mtau(alpha3_mu: f64, alpha3_mt: f64, alpha3_mx: f64, ratio_term: f64) -> Result<f64> {
    if [alpha3_mu, alpha3_mt, alpha3_mx, ratio_term].iter().any(|x| *x <= 0.0) {
        return Err(Error::InvalidInput("couplings must be positive".into()));
    }
    Ok(alpha3_mu.powf(12.0 / 23.0) * alpha3_mt.powf(8.0 / 161.0) * alpha3_mx.powf(-4.0 / 7.0) * ratio_term)
}

/// Same form with α₃(m_c) in place of α₃(m_t).
pub fn ms_over_mmu(alpha3_mu: f64, alpha3_mc: f64, alpha3_mx: f64, ratio_term: f64) -> Result<f64> {
    mb_over_mtau(alpha3_mu, alpha3_mc, alpha3_mx, ratio_term)
}
