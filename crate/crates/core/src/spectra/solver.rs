//! Coefficient matching for the radial nilpotent condition
//!
//! `(E + W)² − m² + F² − (j+½)²/r² = 0`, `F = P′(r) + (γ+ν+1)/r`,
//!
//! where `W = q·(Σ c_n rⁿ + A/r)` and the trial function is
//! `exp(P(r))·r^γ·Σ a_ν r^ν`. The ±i(j+½)/r cross terms cancel over the four
//! sign choices, which is why only `(j+½)²` survives.

use super::laurent::Laurent;
use super::scalar::Num;
use crate::rational::{fmt_q, q, qr, Q};
use crate::{Error, Result};
use num::Integer;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

fn default_q() -> Num {
    Num::one()
}

/// `W = q·(Σ c_n rⁿ + A/r)`. A constant term only shifts E.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    #[serde(default)]
    pub terms: BTreeMap<i32, Num>,
    #[serde(rename = "coulombPhase", default = "Num::zero")]
    pub coulomb_phase: Num,
    #[serde(default = "default_q")]
    pub q: Num,
}

impl PotentialSpec {
    pub fn new(terms: BTreeMap<i32, Num>, coulomb_phase: Num, q: Num) -> Self {
        PotentialSpec { terms, coulomb_phase, q }
    }

    /// Quark-antiquark potential `V = σr`, entering as `W = −qσr + qA/r`.
    pub fn strong(q: Num, sigma: Num, a: Num) -> Self {
        PotentialSpec::new(BTreeMap::from([(1, -sigma)]), a, q)
    }

    pub fn coulomb(q: Num, a: Num) -> Self {
        PotentialSpec::new(BTreeMap::new(), a, q)
    }

    /// `W = ½cr² + A/r`.
    pub fn oscillator(c: Num, a: Num) -> Self {
        PotentialSpec::new(BTreeMap::from([(2, &c / &Num::int(2))]), a, Num::one())
    }

    /// `W = A/r + B/r⁶ − C/r¹²`.
    pub fn lennard_jones(a: Num, b: Num, c: Num) -> Self {
        PotentialSpec::new(BTreeMap::from([(-6, b), (-12, -c)]), a, Num::one())
    }

    /// `W = coeff·rⁿ + A/r`.
    pub fn power(n: i32, coeff: Num, a: Num) -> Self {
        PotentialSpec::new(BTreeMap::from([(n, coeff)]), a, Num::one())
    }

    pub fn w(&self) -> Laurent {
        let mut w = Laurent::monomial(-1, &self.q * &self.coulomb_phase);
        for (n, c) in &self.terms {
            w.add_term(*n, &self.q * c);
        }
        w
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumNumbers {
    #[serde(with = "crate::rational::serde_q")]
    pub j: Q,
    #[serde(rename = "nPrime")]
    pub n_prime: u32,
}

impl QuantumNumbers {
    pub fn new(j: Q, n_prime: u32) -> Result<Self> {
        let twice = &j * q(2);
        let odd = twice.is_integer() && twice.numer().is_odd();
        if !odd || j < qr(1, 2) {
            return Err(Error::InvalidInput(format!("j = {} is not a half-integer ≥ 1/2", fmt_q(&j))));
        }
        Ok(QuantumNumbers { j, n_prime })
    }

    pub fn ground() -> Self {
        QuantumNumbers { j: qr(1, 2), n_prime: 0 }
    }

    /// `j + ½`.
    pub fn big_j(&self) -> Q {
        &self.j + qr(1, 2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Coulomb,
    Strong,
    Oscillator,
    LennardJones,
}

/// Potential after absorbing the constant into E and any 1/r term into A.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Normalized {
    pub family: Family,
    pub spec: PotentialSpec,
    /// `q·c₀`, added to E.
    pub energy_shift: Num,
    pub notes: Vec<String>,
}

pub fn classify(v: &PotentialSpec) -> Result<Normalized> {
    let mut spec = v.clone();
    let mut notes = Vec::new();
    spec.terms.retain(|_, c| !c.is_zero());
    let energy_shift = match spec.terms.remove(&0) {
        Some(c) => {
            notes.push("constant term absorbed into E".to_string());
            &v.q * &c
        }
        None => Num::zero(),
    };
    if let Some(c) = spec.terms.remove(&-1) {
        notes.push("1/r term folded into the Coulomb phase".to_string());
        spec.coulomb_phase = &spec.coulomb_phase + &c;
    }
    let powers: Vec<i32> = spec.terms.keys().copied().collect();
    let family = match powers.as_slice() {
        [] => Family::Coulomb,
        [1] => Family::Strong,
        [2] => Family::Oscillator,
        ps if ps.iter().all(|&n| n <= -2) => Family::LennardJones,
        ps => return Err(Error::Unsupported(format!("potential powers {ps:?}"))),
    };
    if family != Family::Coulomb && spec.coulomb_phase.is_zero() {
        notes.push("spherical symmetry needs a Coulomb phase; A = 0 given".to_string());
    }
    Ok(Normalized { family, spec, energy_shift, notes })
}

/// Solved trial function for one sign branch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnsatzSolution {
    pub branch: i8,
    /// Exponent polynomial Σ e_s r^s; the power-1 entry is `−a`.
    #[serde(rename = "expCoefficients")]
    pub exp_coefficients: BTreeMap<i32, Num>,
    pub gamma: Num,
    #[serde(rename = "nPrime")]
    pub n_prime: u32,
    pub a: Num,
    /// Physical energy, before the constant shift.
    pub energy: Num,
    pub mass: Num,
    /// Decays at large r and stays square-integrable at the origin;
    /// `None` when the dominant exponent is purely oscillatory.
    pub normalizable: Option<bool>,
}

impl AnsatzSolution {
    /// `γ + 1`, governing the most singular power.
    pub fn g_lead(&self) -> Num {
        &self.gamma + &Num::one()
    }

    /// `γ + 1 + n'`, the terminating exponent.
    pub fn g_term(&self) -> Num {
        &self.g_lead() + &Num::int(self.n_prime as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Relation {
    pub power: i32,
    pub residual: Num,
    pub satisfied: bool,
    /// Whether the solver used this power to fix a parameter.
    pub solved: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    #[serde(rename = "maxAbs")]
    pub max_abs: f64,
    pub exact: bool,
    pub zero: bool,
    #[serde(rename = "worstPower")]
    pub worst_power: Option<i32>,
    pub coefficients: BTreeMap<i32, Num>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchReport {
    pub solution: AnsatzSolution,
    pub relations: Vec<Relation>,
    pub residual: ResidualReport,
}

impl BranchReport {
    /// The lowest power whose relation fails.
    pub fn offending_power(&self) -> Option<i32> {
        self.relations.iter().find(|r| !r.satisfied).map(|r| r.power)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Matching {
    pub family: Family,
    pub potential: PotentialSpec,
    #[serde(rename = "energyShift")]
    pub energy_shift: Num,
    pub notes: Vec<String>,
    #[serde(rename = "solvedPowers")]
    pub solved_powers: Vec<i32>,
    pub branches: Vec<BranchReport>,
    pub preferred: Option<usize>,
}

impl Matching {
    pub fn consistent(&self) -> bool {
        self.branches.iter().any(|b| b.residual.zero)
    }

    pub fn branch(&self, s: i8) -> Option<&BranchReport> {
        self.branches.iter().find(|b| b.solution.branch == s)
    }
}

fn sgn(s: i8) -> Num {
    Num::int(s as i64)
}

fn normalizable(exp: &BTreeMap<i32, Num>, gamma: &Num) -> Option<bool> {
    const EPS: f64 = 1e-15;
    let top = exp.iter().next_back().filter(|(p, _)| **p > 0)?.1.re();
    if top.abs() < EPS {
        return None;
    }
    let origin = match exp.iter().next().filter(|(p, _)| **p < 0).map(|(_, c)| c.re()) {
        Some(re) if re < -EPS => true,
        Some(re) if re > EPS => false,
        // ∫|r^γ|² r² dr converges at 0 for Re γ > −3/2
        _ => gamma.re() > -1.5,
    };
    Some(top < 0.0 && origin)
}

/// Solves the family's relations in the order the hand derivation uses and
/// reports every power of the expanded condition for both sign branches.
///
/// `e` is required for the strong family (it has no level series); the
/// other families solve for E and ignore it.
pub fn match_coefficients(v: &PotentialSpec, qn: &QuantumNumbers, m: &Num, e: Option<&Num>) -> Result<Matching> {
    let norm = classify(v)?;
    let spec = &norm.spec;
    let qq = &spec.q;
    let qa = qq * &spec.coulomb_phase;
    let jj = Num::real(qn.big_j());
    let np = Num::int(qn.n_prime as i64);
    if norm.family == Family::Strong && e.is_none() {
        return Err(Error::InvalidInput("the linear potential needs an energy".into()));
    }
    if norm.family == Family::Coulomb {
        if let (Some(x), Some(j)) = (qa.square().as_real(), jj.square().as_real()) {
            if x >= j {
                return Err(Error::Supercritical { qa2: crate::rational::to_f64(&x), j2: crate::rational::to_f64(&j) });
            }
        }
    }
    let mut branches = Vec::new();
    let mut solved_powers = Vec::new();
    for s in [1i8, -1] {
        let si = &sgn(s) * &Num::i();
        let mut exp = BTreeMap::new();
        let (e_shifted, g_lead, a);
        match norm.family {
            Family::Coulomb => {
                // 1/r²: q²A² + (γ+1)² − J² = 0
                g_lead = &sgn(s) * &(&jj.square() - &qa.square()).sqrt();
                let g_term = &g_lead + &np;
                // 1/r and constant: m² = E²(1 + q²A²/g²)
                e_shifted = &(m * &g_term) / &(&g_term.square() + &qa.square()).sqrt();
                a = &(&qa * &e_shifted) / &g_term;
                solved_powers = vec![-2, -1, 0];
            }
            Family::Strong => {
                let c = &spec.terms[&1];
                let qc = qq * c;
                let eps = e.unwrap() + &norm.energy_shift;
                // r²: q²c² + 4e₂² = 0
                let e2 = &(&si * &qc) / &Num::int(2);
                // r: 2Eqc + 4e₁e₂ = 0
                let e1 = -&(&(&eps * &qc) / &(&Num::int(2) * &e2));
                // 1/r: 2EqA + 2e₁g = 0
                g_lead = -&(&(&eps * &qa) / &e1);
                a = -&e1;
                exp.insert(2, e2);
                e_shifted = eps;
                solved_powers = vec![-1, 1, 2];
            }
            Family::Oscillator | Family::LennardJones => {
                for (n, c) in &spec.terms {
                    // r^{2n}: (q c_n)² + ((n+1) e_{n+1})² = 0
                    let k = Num::int(*n as i64 + 1);
                    exp.insert(n + 1, &(&si * &(qq * c)) / &k);
                }
                // r^{n−1} for the term nearest the Coulomb phase fixes γ + 1
                let (n, c) = spec.terms.iter().next_back().unwrap();
                let k = Num::int(*n as i64 + 1);
                g_lead = -&(&(&(qq * &qa) * c) / &(&k * &exp[&(n + 1)]));
                let g_term = &g_lead + &np;
                // constant, 1/r and 1/r² together: E = −m(γ + 1 + n')/(j + ½)
                e_shifted = -&(&(m * &g_term) / &jj);
                a = (&m.square() - &e_shifted.square()).sqrt();
                let mut sp: Vec<i32> = spec.terms.keys().map(|n| 2 * n).collect();
                sp.extend([n - 1, 0]);
                sp.sort();
                sp.dedup();
                solved_powers = sp;
            }
        }
        let a_term = -&a;
        if !a_term.is_zero() {
            exp.insert(1, a_term);
        }
        let normalizable = normalizable(&exp, &(&g_lead - &Num::one()));
        let solution = AnsatzSolution {
            branch: s,
            exp_coefficients: exp,
            gamma: &g_lead - &Num::one(),
            n_prime: qn.n_prime,
            a,
            energy: &e_shifted - &norm.energy_shift,
            mass: m.clone(),
            normalizable,
        };
        let residual = residual_verify(v, &solution, qn);
        let mut powers: Vec<i32> = residual.coefficients.keys().copied().collect();
        powers.extend(solved_powers.iter().copied());
        powers.sort();
        powers.dedup();
        let relations = powers
            .into_iter()
            .map(|p| {
                let r = residual.coefficients.get(&p).cloned().unwrap_or_else(Num::zero);
                Relation { power: p, satisfied: r.is_zero(), residual: r, solved: solved_powers.contains(&p) }
            })
            .collect();
        branches.push(BranchReport { solution, relations, residual });
    }
    let good: Vec<usize> =
        branches.iter().enumerate().filter(|(_, b)| b.solution.normalizable == Some(true)).map(|(k, _)| k).collect();
    let preferred = (good.len() == 1).then(|| good[0]);
    Ok(Matching {
        family: norm.family,
        potential: norm.spec.clone(),
        energy_shift: norm.energy_shift,
        notes: norm.notes,
        solved_powers,
        branches,
        preferred,
    })
}

/// The expanded condition as a Laurent polynomial in r.
///
/// The most singular power uses the leading exponent γ+1; every other
/// power uses the terminating exponent γ+1+n'. For n' = 0 they coincide.
pub fn residual_polynomial(v: &PotentialSpec, sol: &AnsatzSolution, qn: &QuantumNumbers) -> Laurent {
    let jj = Num::real(qn.big_j());
    let lhs = Laurent::constant(sol.energy.clone()).add(&v.w()).square();
    let mut exp = Laurent::zero();
    for (s, c) in &sol.exp_coefficients {
        exp.add_term(*s, c.clone());
    }
    let g_term = sol.g_term();
    let f = exp.derivative().add(&Laurent::monomial(-1, g_term.clone()));
    let mut r = lhs.add(&f.square());
    r.add_term(0, -&sol.mass.square());
    r.add_term(-2, -&jj.square());
    r.add_term(-2, &sol.g_lead().square() - &g_term.square());
    r
}

pub fn residual_verify(v: &PotentialSpec, sol: &AnsatzSolution, qn: &QuantumNumbers) -> ResidualReport {
    let poly = residual_polynomial(v, sol, qn);
    let mut max_abs = 0.0;
    let mut worst_power = None;
    let mut exact = true;
    let mut zero = true;
    let mut coefficients = BTreeMap::new();
    for (p, c) in poly.terms() {
        exact &= c.is_exact();
        zero &= c.is_zero();
        let x = c.abs();
        if !c.is_zero() && (worst_power.is_none() || x > max_abs) {
            max_abs = x;
            worst_power = Some(*p);
        }
        coefficients.insert(*p, c.clone());
    }
    let max_abs = if zero { poly.terms().map(|(_, c)| c.abs()).fold(0.0, f64::max) } else { max_abs };
    ResidualReport { max_abs, exact, zero, worst_power, coefficients }
}

/// `b` with `exp(−br²)` convention, for comparison with the hand result
/// `b = ±iqσ/2`.
pub fn strong_b(sol: &AnsatzSolution) -> Option<Num> {
    sol.exp_coefficients.get(&2).map(|c| -c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Num {
        s.parse().unwrap()
    }

    #[test]
    fn strong_matches_hand_relations() {
        let v = PotentialSpec::strong(n("2/5"), n("1"), n("3/10"));
        let m = match_coefficients(&v, &QuantumNumbers::ground(), &n("1"), Some(&n("3/2"))).unwrap();
        assert_eq!(m.family, Family::Strong);
        let b = m.branch(1).unwrap();
        // b = iqσ/2, a = −iE, γ+ν+1 = iqA
        assert_eq!(strong_b(&b.solution).unwrap(), n("1/5i"));
        assert_eq!(b.solution.a, n("-3/2i"));
        assert_eq!(b.solution.g_lead(), n("3/25i"));
        for p in [2, 1, -1] {
            assert!(b.relations.iter().any(|r| r.power == p && r.satisfied), "power {p}");
        }
        // the remaining powers cannot vanish: constant −m², 1/r² −(j+½)²
        assert_eq!(b.residual.coefficients[&0], n("-1"));
        assert_eq!(b.residual.coefficients[&-2], n("-1"));
        assert!(!b.residual.zero);
        assert_eq!(b.offending_power(), Some(-2));
    }

    #[test]
    fn coulomb_exact_and_consistent() {
        // qA = 3/5, j + ½ = 1 → γ + 1 = 4/5, E/m = 4/5
        let v = PotentialSpec::coulomb(n("1"), n("3/5"));
        let m = match_coefficients(&v, &QuantumNumbers::ground(), &n("5"), None).unwrap();
        let b = m.branch(1).unwrap();
        assert!(b.residual.zero && b.residual.exact);
        assert_eq!(b.solution.energy, n("4"));
        assert_eq!(b.solution.a, n("3"));
        assert_eq!(m.preferred, Some(0));
        assert!(m.consistent());
    }

    #[test]
    fn coulomb_excited_float() {
        let v = PotentialSpec::coulomb(n("1"), n("1/10"));
        let qn = QuantumNumbers::new(qr(3, 2), 2).unwrap();
        let m = match_coefficients(&v, &qn, &n("1"), None).unwrap();
        let b = m.branch(1).unwrap();
        assert!(b.residual.max_abs < 1e-10, "{:?}", b.residual);
    }

    #[test]
    fn oscillator_relations() {
        let v = PotentialSpec::oscillator(n("3"), n("1/2i"));
        let m = match_coefficients(&v, &QuantumNumbers::ground(), &n("2"), None).unwrap();
        let b = m.branch(-1).unwrap();
        // b = ±ic/6, 1 + γ = ±iA, E = −m(½ + n')/(j + ½)
        assert_eq!(b.solution.exp_coefficients[&3], n("-1/2i"));
        assert_eq!(b.solution.g_lead(), n("1/2"));
        assert_eq!(b.solution.energy, n("-1"));
        let r4 = b.relations.iter().find(|r| r.power == 4).unwrap();
        assert!(r4.satisfied);
        assert!(!b.residual.zero);
    }

    #[test]
    fn lennard_jones_opposite_signs() {
        let v = PotentialSpec::lennard_jones(n("1/2i"), n("1"), n("1"));
        let m = match_coefficients(&v, &QuantumNumbers::ground(), &n("1"), None).unwrap();
        assert_eq!(m.family, Family::LennardJones);
        let b = m.branch(-1).unwrap();
        // exponent −b r⁻⁵/5 − c r⁻¹¹/11 with b = −iB·(−1), c = iC·(−1)
        let bb = &b.solution.exp_coefficients[&-5] * &Num::int(-5);
        let cc = &b.solution.exp_coefficients[&-11] * &Num::int(-11);
        assert_eq!(cc, n("i"));
        assert_eq!(bb, n("-i"));
        assert_eq!(b.solution.energy, n("-1/2"));
        // only the γ = −1/2 branch is square-integrable at the origin
        assert_eq!(m.preferred, Some(1));
    }

    #[test]
    fn classification() {
        let mut t = BTreeMap::new();
        t.insert(3, Num::one());
        assert!(matches!(classify(&PotentialSpec::new(t, Num::one(), Num::one())), Err(Error::Unsupported(_))));
        let t = BTreeMap::from([(0, n("2")), (-1, n("1")), (1, n("1"))]);
        let c = classify(&PotentialSpec::new(t, n("1"), n("1/2"))).unwrap();
        assert_eq!(c.family, Family::Strong);
        assert_eq!(c.energy_shift, n("1"));
        assert_eq!(c.spec.coulomb_phase, n("2"));
        let spec: PotentialSpec = serde_json::from_str(r#"{"terms": {"1": 1.0, "-1": 0.3}, "coulombPhase": 0.1, "q": 0.4}"#).unwrap();
        assert_eq!(classify(&spec).unwrap().spec.coulomb_phase, n("2/5"));
    }

    #[test]
    fn perturbed_solution_detected() {
        let v = PotentialSpec::coulomb(n("1"), n("3/5"));
        let m = match_coefficients(&v, &QuantumNumbers::ground(), &n("5"), None).unwrap();
        let mut s = m.branch(1).unwrap().solution.clone();
        s.exp_coefficients.insert(2, n("1/100"));
        let r = residual_verify(&v, &s, &QuantumNumbers::ground());
        assert!(!r.zero);
        assert_eq!(r.worst_power.map(|p| p >= 0), Some(true));
        assert!(!r.coefficients[&2].is_zero());
    }

    #[test]
    fn supercritical() {
        let v = PotentialSpec::coulomb(n("1"), n("1"));
        assert!(matches!(
            match_coefficients(&v, &QuantumNumbers::ground(), &n("1"), None),
            Err(Error::Supercritical { .. })
        ));
        assert!(QuantumNumbers::new(q(1), 0).is_err());
    }
}
