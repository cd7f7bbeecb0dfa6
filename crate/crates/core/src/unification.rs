//! One-loop running couplings and the unification scale.
//!
//! Every log is natural. The running laws use `ln(M_X²/μ²)`, while the
//! mixing-angle relation uses `ln(M_X/μ)`.

use crate::rational::{fmt_q, q, qr, Q};
use crate::{Error, Result};
use num::Zero;
use serde::Serialize;
use std::f64::consts::PI;

pub const M_Z: f64 = 91.1867;
pub const PLANCK_MASS: f64 = 1.22e19;

/// Electroweak charge content: weak isospin components and electric charges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeContent {
    #[serde(serialize_with = "ser_qs")]
    pub t3_values: Vec<Q>,
    #[serde(serialize_with = "ser_qs")]
    pub q_values: Vec<Q>,
    pub n_generations: u32,
}

fn ser_qs<S: serde::Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fmt_q))
}

fn repeat(v: &mut Vec<Q>, x: Q, n: usize) {
    v.extend(std::iter::repeat_n(x, n));
}

impl ChargeContent {
    /// Left-handed u, d over three colours plus e and ν for the isospin sum.
    fn isospin() -> Vec<Q> {
        let mut t3 = Vec::new();
        repeat(&mut t3, qr(1, 2), 3);
        repeat(&mut t3, qr(-1, 2), 3);
        t3.push(qr(-1, 2));
        t3.push(qr(1, 2));
        t3
    }

    /// Fractional quark charges, both chiralities.
    pub fn phenomenological() -> Self {
        let mut qs = Vec::new();
        for _ in 0..2 {
            repeat(&mut qs, qr(2, 3), 3);
            repeat(&mut qs, qr(-1, 3), 3);
            qs.push(q(-1));
            qs.push(q(0));
        }
        ChargeContent { t3_values: Self::isospin(), q_values: qs, n_generations: 1 }
    }

    /// Integral (lepton-like) quark charges, both chiralities.
    pub fn lepton_like() -> Self {
        let mut qs = Vec::new();
        for _ in 0..2 {
            qs.extend([q(1), q(1), q(0), q(0), q(0), q(-1), q(-1), q(0)]);
        }
        ChargeContent { t3_values: Self::isospin(), q_values: qs, n_generations: 1 }
    }
}

fn sum_sq(v: &[Q]) -> Q {
    v.iter().map(|x| x * x).sum()
}

/// `Σt₃² / ΣQ²`.
pub fn sin2_from_content(c: &ChargeContent) -> Result<Q> {
    let den = sum_sq(&c.q_values);
    if den.is_zero() {
        return Err(Error::InvalidInput("all electric charges are zero".into()));
    }
    Ok(sum_sq(&c.t3_values) / den)
}

/// Hypercharges of one generation's left-handed states, one entry per state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypercharges {
    #[serde(serialize_with = "ser_qs")]
    pub y: Vec<Q>,
    pub n_generations: u32,
}

impl Hypercharges {
    pub fn conventional() -> Self {
        let mut y = Vec::new();
        repeat(&mut y, qr(1, 6), 6);
        repeat(&mut y, qr(1, 3), 3);
        repeat(&mut y, qr(-2, 3), 3);
        y.extend([qr(-1, 2), qr(-1, 2), q(1)]);
        Hypercharges { y, n_generations: 3 }
    }

    pub fn lepton_like() -> Self {
        let mut y = Vec::new();
        repeat(&mut y, qr(1, 2), 6);
        y.extend([q(-1), q(-1), q(0)]);
        y.extend([q(0), q(0), q(1)]);
        y.extend([qr(-1, 2), qr(-1, 2), q(1)]);
        Hypercharges { y, n_generations: 3 }
    }
}

/// Vacuum-polarization coefficient `(4/3)(1/2)ΣY²·n_g/4π`, returned as the
/// rational multiple of 1/π.
pub fn b1_coefficient(h: &Hypercharges) -> Result<Q> {
    if h.y.is_empty() {
        return Err(Error::InvalidInput("empty hypercharge list".into()));
    }
    Ok(qr(2, 3) * sum_sq(&h.y) * q(h.n_generations as i64) / q(4))
}

/// One-loop law `1/α(μ) = 1/α_G + k·ln(M_X²/μ²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Law {
    Alpha1,
    Alpha2,
    Alpha3,
    Em,
}

impl Law {
    pub fn k(self) -> f64 {
        match self {
            Law::Alpha1 => 1.0 / PI,
            Law::Alpha2 => -5.0 / (6.0 * PI),
            Law::Alpha3 => -7.0 / (4.0 * PI),
            Law::Em => 3.0 / PI,
        }
    }

    pub fn inv_alpha(self, alpha_g: f64, mx: f64, mu: f64) -> Result<f64> {
        check_scales(mu, mx)?;
        Ok(1.0 / alpha_g + self.k() * (mx * mx / (mu * mu)).ln())
    }

    /// μ at which the law reaches `inv`.
    pub fn mu_for(self, alpha_g: f64, mx: f64, inv: f64) -> Result<f64> {
        let l = (inv - 1.0 / alpha_g) / self.k();
        if l < 0.0 {
            return Err(Error::NoSolution(format!("1/α = {inv} is not reached below M_X")));
        }
        Ok(mx * (-l / 2.0).exp())
    }

    /// α_G from one measured value.
    pub fn alpha_g_for(self, inv: f64, mx: f64, mu: f64) -> Result<f64> {
        check_scales(mu, mx)?;
        Ok(1.0 / (inv - self.k() * (mx * mx / (mu * mu)).ln()))
    }

    /// M_X from one measured value and α_G.
    pub fn mx_for(self, alpha_g: f64, inv: f64, mu: f64) -> Result<f64> {
        let l = (inv - 1.0 / alpha_g) / self.k();
        if l < 0.0 {
            return Err(Error::NoSolution("unification would lie below μ".into()));
        }
        Ok(mu * (l / 2.0).exp())
    }
}

fn check_scales(mu: f64, mx: f64) -> Result<()> {
    if mu > 0.0 && mu <= mx {
        Ok(())
    } else {
        Err(Error::ScaleOrdering { mu, mx })
    }
}

pub fn run_alpha2(alpha_g: f64, mx: f64, mu: f64) -> Result<f64> {
    Law::Alpha2.inv_alpha(alpha_g, mx, mu)
}

pub fn run_alpha3(alpha_g: f64, mx: f64, mu: f64) -> Result<f64> {
    Law::Alpha3.inv_alpha(alpha_g, mx, mu)
}

pub fn run_alpha_em(alpha_g: f64, mx: f64, mu: f64) -> Result<f64> {
    Law::Em.inv_alpha(alpha_g, mx, mu)
}

/// `α_G` with `1/α_G = 1/α₃(μ) + (7/4π)ln(M_X²/μ²)`.
pub fn alpha_g_at(alpha3: f64, mx: f64, mu: f64) -> Result<f64> {
    Law::Alpha3.alpha_g_for(1.0 / alpha3, mx, mu)
}

/// `M_X = μ·exp((sin²θ_W/α − 1/α₃)·6π/11)`.
pub fn solve_mx(alpha: f64, alpha3: f64, sin2: f64, mu: f64) -> Result<f64> {
    let x = (sin2 / alpha - 1.0 / alpha3) * 6.0 * PI / 11.0;
    if x < 0.0 {
        return Err(Error::NoSolution(format!("sin²θ_W/α < 1/α₃ gives M_X below μ (exponent {x})")));
    }
    Ok(mu * x.exp())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CouplingSet {
    pub mu: f64,
    pub alpha: f64,
    pub alpha2: f64,
    pub alpha3: f64,
    #[serde(rename = "sin2ThetaW")]
    pub sin2_theta_w: f64,
}

/// All three couplings at μ, with `sin²θ_W = α/α₂`.
pub fn couplings_at(alpha_g: f64, mx: f64, mu: f64) -> Result<CouplingSet> {
    let alpha = 1.0 / run_alpha_em(alpha_g, mx, mu)?;
    let alpha2 = 1.0 / run_alpha2(alpha_g, mx, mu)?;
    let alpha3 = 1.0 / run_alpha3(alpha_g, mx, mu)?;
    Ok(CouplingSet { mu, alpha, alpha2, alpha3, sin2_theta_w: alpha / alpha2 })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnificationResult {
    #[serde(rename = "MX")]
    pub mx: f64,
    #[serde(rename = "alphaG")]
    pub alpha_g: f64,
}

/// Minimal SU(5) quantities at one scale.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Su5Point {
    pub mu: f64,
    pub inv_alpha1: f64,
    pub inv_alpha2: f64,
    /// `5/(3α₁) + 1/α₂`.
    pub inv_alpha_mixed: f64,
    /// `α/α₂` with the mixed α.
    pub sin2_mixed: f64,
    /// `α′/α₂` with the hypercharge coupling `1/α′ = 5/(3α₁)`.
    pub sin2_hypercharge: f64,
}

pub fn legacy_su5(mu: f64, alpha_g: f64, mx: f64) -> Result<Su5Point> {
    let inv_alpha1 = Law::Alpha1.inv_alpha(alpha_g, mx, mu)?;
    let inv_alpha2 = run_alpha2(alpha_g, mx, mu)?;
    let inv_y = 5.0 / 3.0 * inv_alpha1;
    let inv_alpha_mixed = inv_y + inv_alpha2;
    Ok(Su5Point {
        mu,
        inv_alpha1,
        inv_alpha2,
        inv_alpha_mixed,
        sin2_mixed: inv_alpha2 / inv_alpha_mixed,
        sin2_hypercharge: inv_alpha2 / inv_y,
    })
}

/// Minimal SU(5) unification from α(μ) and α₃(μ): eliminating α_G gives
/// `1/α = (8/3)/α₃ + (11/2π)ln(M_X²/μ²)`.
pub fn legacy_su5_solve(alpha: f64, alpha3: f64, mu: f64) -> Result<UnificationResult> {
    let l = (1.0 / alpha - 8.0 / (3.0 * alpha3)) * 2.0 * PI / 11.0;
    if l < 0.0 {
        return Err(Error::NoSolution("minimal SU(5) scale below μ".into()));
    }
    let mx = mu * (l / 2.0).exp();
    Ok(UnificationResult { mx, alpha_g: alpha_g_at(alpha3, mx, mu)? })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LegacyReport {
    pub unification: UnificationResult,
    pub at_mu: Su5Point,
    pub at_1e15: Su5Point,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GutInputs {
    pub alpha: f64,
    pub alpha3: f64,
    pub sin2: f64,
    pub mu: f64,
    pub planck: f64,
}

impl Default for GutInputs {
    fn default() -> Self {
        GutInputs { alpha: 1.0 / 128.0, alpha3: 0.118, sin2: 0.25, mu: M_Z, planck: PLANCK_MASS }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GutReport {
    pub inputs: GutInputs,
    /// Scale solved from the mixing angle.
    pub solved: UnificationResult,
    /// Everything below assumes M_X is the Planck mass.
    pub planck: UnificationResult,
    pub inv_alpha_g: f64,
    pub inv_alpha2_mu: f64,
    pub inv_alpha3_mu: f64,
    pub inv_alpha_em_mu: f64,
    pub inv_alpha_em_14tev: f64,
    /// μ where α₃ = 1.
    pub mu_alpha3_one: f64,
    pub sin2_phenomenological: String,
    pub sin2_lepton_like: String,
    pub b1_conventional_over_pi: String,
    pub b1_lepton_like_over_pi: String,
    pub legacy: LegacyReport,
    pub grid: Vec<CouplingSet>,
}

pub fn gut_report(inputs: &GutInputs, grid: &[f64]) -> Result<GutReport> {
    let mx = solve_mx(inputs.alpha, inputs.alpha3, inputs.sin2, inputs.mu)?;
    let solved = UnificationResult { mx, alpha_g: alpha_g_at(inputs.alpha3, mx, inputs.mu)? };
    let mp = inputs.planck;
    let alpha_g = alpha_g_at(inputs.alpha3, mp, inputs.mu)?;
    let legacy_u = legacy_su5_solve(inputs.alpha, inputs.alpha3, inputs.mu)?;
    let legacy = LegacyReport {
        at_mu: legacy_su5(inputs.mu, legacy_u.alpha_g, legacy_u.mx)?,
        at_1e15: legacy_su5(1e15_f64.min(legacy_u.mx), legacy_u.alpha_g, legacy_u.mx)?,
        unification: legacy_u,
    };
    Ok(GutReport {
        inputs: inputs.clone(),
        solved,
        planck: UnificationResult { mx: mp, alpha_g },
        inv_alpha_g: 1.0 / alpha_g,
        inv_alpha2_mu: run_alpha2(alpha_g, mp, inputs.mu)?,
        inv_alpha3_mu: run_alpha3(alpha_g, mp, inputs.mu)?,
        inv_alpha_em_mu: run_alpha_em(alpha_g, mp, inputs.mu)?,
        inv_alpha_em_14tev: run_alpha_em(alpha_g, mp, 14000.0)?,
        mu_alpha3_one: Law::Alpha3.mu_for(alpha_g, mp, 1.0)?,
        sin2_phenomenological: fmt_q(&sin2_from_content(&ChargeContent::phenomenological())?),
        sin2_lepton_like: fmt_q(&sin2_from_content(&ChargeContent::lepton_like())?),
        b1_conventional_over_pi: fmt_q(&b1_coefficient(&Hypercharges::conventional())?),
        b1_lepton_like_over_pi: fmt_q(&b1_coefficient(&Hypercharges::lepton_like())?),
        legacy,
        grid: grid.iter().map(|mu| couplings_at(alpha_g, mp, *mu)).collect::<Result<_>>()?,
    })
}
