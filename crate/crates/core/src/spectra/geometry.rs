use crate::{Error, Result};

/// Distance at which the linear term cancels the free phase: `r = 2E/(qσ)`.
pub fn infrared_radius(e: f64, q: f64, sigma: f64) -> Result<f64> {
    if !(q > 0.0 && sigma > 0.0) {
        return Err(Error::InvalidInput(format!("coupling q = {q} and tension σ = {sigma} must be positive")));
    }
    Ok(2.0 * e / (q * sigma))
}

/// Minimal total flux-tube length for quarks at the corners of a triangle
/// with sides a, b, c.
pub fn lmin(a: f64, b: f64, c: f64) -> Result<f64> {
    let tol = 1e-12 * (a + b + c).max(1.0);
    if a < 0.0 || b < 0.0 || c < 0.0 || a > b + c + tol || b > a + c + tol || c > a + b + tol {
        return Err(Error::Triangle(a, b, c));
    }
    let heron = ((a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)).max(0.0);
    Ok((0.5 * (a * a + b * b + c * c) + 3f64.sqrt() / 2.0 * heron.sqrt()).sqrt())
}
