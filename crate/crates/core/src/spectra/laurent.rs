use super::scalar::Num;
use std::collections::BTreeMap;

/// Finite Laurent polynomial Σ c_n rⁿ.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i32, Num>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(power: i32, c: Num) -> Self {
        let mut l = Self::zero();
        l.add_term(power, c);
        l
    }

    pub fn constant(c: Num) -> Self {
        Self::monomial(0, c)
    }

    pub fn add_term(&mut self, power: i32, c: Num) {
        let slot = self.coeffs.entry(power).or_insert_with(Num::zero);
        *slot = &*slot + &c;
    }

    pub fn coeff(&self, power: i32) -> Num {
        self.coeffs.get(&power).cloned().unwrap_or_else(Num::zero)
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (p, c) in &o.coeffs {
            out.add_term(*p, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Num) -> Laurent {
        Laurent { coeffs: self.coeffs.iter().map(|(p, c)| (*p, c * k)).collect() }
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (p, a) in &self.coeffs {
            for (r, b) in &o.coeffs {
                out.add_term(p + r, a * b);
            }
        }
        out
    }

    pub fn square(&self) -> Laurent {
        self.mul(self)
    }

    /// d/dr.
    pub fn derivative(&self) -> Laurent {
        let mut out = Laurent::zero();
        for (p, c) in &self.coeffs {
            if *p != 0 {
                out.add_term(p - 1, c * &Num::int(*p as i64));
            }
        }
        out
    }

    /// Powers with nonzero coefficients, ascending.
    pub fn support(&self) -> Vec<i32> {
        self.coeffs.iter().filter(|(_, c)| !c.is_zero()).map(|(p, _)| *p).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &Num)> {
        self.coeffs.iter()
    }

    pub fn eval(&self, r: f64) -> num::Complex<f64> {
        self.coeffs.iter().map(|(p, c)| c.to_c64() * r.powi(*p)).sum()
    }
}

impl std::fmt::Display for Laurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| match p {
                0 => format!("({c})"),
                1 => format!("({c})r"),
                _ => format!("({c})r^{p}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_and_derivative() {
        // (1 + 2r + 3/r)² and its derivative against pointwise evaluation
        let mut l = Laurent::constant(Num::int(1));
        l.add_term(1, Num::int(2));
        l.add_term(-1, Num::int(3));
        let sq = l.square();
        for r in [0.5, 1.3, 2.0] {
            assert!((sq.eval(r) - l.eval(r) * l.eval(r)).norm() < 1e-12);
        }
        assert_eq!(sq.coeff(0), Num::int(13));
        let d = l.derivative();
        assert_eq!(d.coeff(0), Num::int(2));
        assert_eq!(d.coeff(-2), Num::int(-3));
        assert_eq!(d.support(), vec![-2, 0]);
    }
}
