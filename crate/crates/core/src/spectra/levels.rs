use super::scalar::Num;
use super::solver::{match_coefficients, Matching, PotentialSpec, QuantumNumbers};
use crate::rational::{qr, to_f64};
use crate::{Error, Result};
use serde::Serialize;

/// `E/m = (1 + q²A²/(√((j+½)² − q²A²) + n')²)^(−1/2)`.
pub fn coulomb_levels(qa: f64, qn: &QuantumNumbers) -> Result<f64> {
    let j2 = to_f64(&qn.big_j()).powi(2);
    let qa2 = qa * qa;
    if qa2 >= j2 {
        return Err(Error::Supercritical { qa2, j2 });
    }
    let g = (j2 - qa2).sqrt() + qn.n_prime as f64;
    Ok((1.0 + qa2 / (g * g)).powf(-0.5))
}

/// `E = −m(½ + n')/(j + ½)`, the printed sign kept.
pub fn oscillator_levels(m: &Num, qn: &QuantumNumbers) -> Num {
    let k = Num::real(qr(1, 2) + crate::rational::q(qn.n_prime as i64));
    -&(&(m * &k) / &Num::real(qn.big_j()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelFamily {
    Coulomb,
    Confining,
    Oscillator,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelSeries {
    pub family: LevelFamily,
    pub mass: Num,
    /// `qA`, Coulomb family only.
    pub coupling: Option<f64>,
}

impl LevelSeries {
    pub fn energy(&self, qn: &QuantumNumbers) -> Result<Num> {
        match self.family {
            LevelFamily::Oscillator => Ok(oscillator_levels(&self.mass, qn)),
            LevelFamily::Coulomb => {
                let ratio = coulomb_levels(self.coupling.unwrap_or(0.0), qn)?;
                Ok(&self.mass * &Num::float(ratio))
            }
            LevelFamily::Confining => {
                Err(Error::Unsupported("the linear potential gives no closed level series".into()))
            }
        }
    }
}

/// `W = A/r + B/r⁶ − C/r¹²`: the exponent coefficients come out as
/// `c = ±iC`, `b = ∓iB` and the levels are those of the oscillator.
pub fn lennard_jones_solution(
    a: Num,
    b: Num,
    c: Num,
    qn: &QuantumNumbers,
    m: &Num,
) -> Result<(Matching, LevelSeries)> {
    let v = PotentialSpec::lennard_jones(a, b, c);
    let matching = match_coefficients(&v, qn, m, None)?;
    Ok((matching, LevelSeries { family: LevelFamily::Oscillator, mass: m.clone(), coupling: None }))
}
