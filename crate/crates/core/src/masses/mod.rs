//! Zero-charge multiplet masses, GMO selections, the boson block, generation
//! scaling, heavy-quark ratios, the idealised CKM rotation and Regge slopes.

pub mod data;
pub mod electroweak;
pub mod hadrons;

pub use data::{Constants, Dataset, Family, Multiplet, RatioInputs};
pub use electroweak::{
    alpha_ratio_term, boson_model, ckm_apply, coupling_sum_squared, electroweak_bosons, fermion_coupling_sum,
    generation_partition, higgs_mass, higgs_zero_count, mass_fraction, mb_over_mtau, ms_over_mmu, z_mass_from_count,
    z_zero_count, BosonMassModel, CKMMatrixIdeal, CkmResult, ElectroweakBosons, Generations,
};
pub use hadrons::{
    decuplet_table, extension_table, gmo_meson_k, gmo_octet_lambda, gmo_octet_residual, meson_table, multiplet_mass,
    multiplet_units, octet_table, regge, regge_inverse, HadronRow, MassUnit, MassValue, ReggePoint, Selection,
};

use crate::Result;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QuarkRatio {
    pub ratio: f64,
    pub lepton: f64,
    pub quark: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MassReport {
    pub unit: MassUnit,
    pub decuplet: Vec<HadronRow>,
    pub octet: Vec<HadronRow>,
    pub mesons: Vec<HadronRow>,
    pub extensions: Vec<HadronRow>,
    pub bosons: BosonMassModel,
    pub generations: Generations,
    pub ckm: CkmResult,
    #[serde(rename = "mbOverMtau")]
    pub mb_over_mtau: QuarkRatio,
    #[serde(rename = "msOverMmu")]
    pub ms_over_mmu: QuarkRatio,
    pub regge: ReggePoint,
}

fn ratio(r: &RatioInputs) -> Result<QuarkRatio> {
    let x = mb_over_mtau(r.alpha3_mu, r.alpha3_heavy, r.alpha3_mx, r.alpha_ratio_term)?;
    Ok(QuarkRatio { ratio: x, lepton: r.lepton, quark: x * r.lepton })
}

pub fn mass_report(d: &Dataset) -> Result<MassReport> {
    let c = &d.constants;
    let u = MassUnit::from_dataset(d)?;
    Ok(MassReport {
        decuplet: decuplet_table(d, &u)?,
        octet: octet_table(d, &u)?,
        mesons: meson_table(d, &u)?,
        extensions: extension_table(d, &u)?,
        bosons: boson_model(&u, c.mz, c.sin2, c.mw_measured, c.f_empirical)?,
        generations: generation_partition(c.fermion_total, u.alpha)?,
        ckm: ckm_apply(c.leptons, c.lambda_ckm)?,
        mb_over_mtau: ratio(&c.mb_over_mtau)?,
        ms_over_mmu: ratio(&c.ms_over_mmu)?,
        regge: regge(1.0, c.two_pi_kappa)?,
        unit: u,
    })
}
