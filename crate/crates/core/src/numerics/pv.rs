//! Principal-value integrals over a truncated half-line.
//!
//! The generic kernel is g(k')/(k'^2 - k^2) with the pole k inside the
//! integration range. Singularity subtraction splits it as
//!
//!   [g(k') - g(k)]/(k'^2 - k^2)  +  g(k) / (k'^2 - k^2),
//!
//! where the first part is smooth (removable singularity) and handled by
//! adaptive quadrature, and the PV of the second has the closed form
//! (1/2k) ln |(k'-k)/(k'+k)| evaluated at the limits.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::quad::integrate_complex;

/// A principal-value integrand g(k')/(k'^2 - pole^2) on [threshold, cutoff].
pub struct PvIntegrand<'a> {
    /// The regular numerator g(k'), continuous at the pole.
    pub regular_factor: &'a dyn Fn(f64) -> Complex64,
    /// Pole location k > 0; the kernel pole sits at k' = k.
    pub pole: f64,
    /// Lower end of the integration range (channel threshold).
    pub threshold: f64,
    /// Upper truncation of the half-line; the caller guarantees the
    /// discarded tail decays at least like 1/k'^2 or handles it separately.
    pub cutoff: f64,
}

/// PV of g(k')/(k'^2 - k^2) over [threshold, cutoff].
pub fn pv_integral(g: &PvIntegrand, quad_tol: f64) -> Result<Complex64> {
    let k = g.pole;
    let (a, b) = (g.threshold, g.cutoff);
    if !(a < k && k < b) {
        return Err(Error::domain(format!(
            "pv_integral: pole {k} must lie strictly inside [{a}, {b}]"
        )));
    }
    let g0 = (g.regular_factor)(k);
    // local derivatives for the Taylor patch right at the pole
    let h = 1e-5 * (k - a).min(b - k).min(k);
    let gp = (g.regular_factor)(k + h);
    let gm = (g.regular_factor)(k - h);
    let g1 = (gp - gm) / (2.0 * h);
    let g2 = (gp - 2.0 * g0 + gm) / (h * h);
    let patch = 40.0 * h;

    let mut smooth = |kp: f64| {
        let d = kp - k;
        if d.abs() < patch {
            (g1 + 0.5 * g2 * d) / (kp + k)
        } else {
            ((g.regular_factor)(kp) - g0) / (d * (kp + k))
        }
    };
    let regular = integrate_complex(&mut smooth, a, b, quad_tol)?;

    // PV int dk'/(k'^2 - k^2) = (1/2k) ln|(k'-k)/(k'+k)| between the limits
    let pv_kernel = ((b - k).abs() * (a + k).abs() / ((b + k).abs() * (a - k).abs())).ln() / (2.0 * k);
    Ok(regular.value + g0 * pv_kernel)
}
