//! Large-argument Hankel expansion.
//!
//! H(1)_m(z) ~ sqrt(2/(pi z)) e^{i(z - m pi/2 - pi/4)} sum_j i^j a_j(m)/z^j
//! with a_j(m) = (4m^2-1)(4m^2-9)...(4m^2-(2j-1)^2)/(j! 8^j). The expansion
//! is truncated at the smallest term. It is only called where the leading
//! term ratio keeps the partial products near one (see `eligible`), which
//! holds for the order-0/1 seeds at |z| >= 16 and for high orders once
//! 4m^2 + 1 <= 3.2 |z|; there the truncation error sits below 1e-15 relative.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// True when the plain expansion reaches ~1e-15 relative accuracy at (m, |z|).
pub(super) fn eligible(m: u32, z_abs: f64) -> bool {
    z_abs >= 16.0 && 4.0 * (m as f64) * (m as f64) + 1.0 <= 3.2 * z_abs
}

/// H(1)_m(z) by the Hankel expansion; caller must check `eligible`.
pub(super) fn hankel1_asymptotic(m: u32, z: Complex64) -> Complex64 {
    let mu = 4.0 * (m as f64) * (m as f64);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut smallest = f64::INFINITY;
    for j in 0u32..60 {
        let num = mu - (2.0 * j as f64 + 1.0).powi(2);
        term *= Complex64::new(0.0, 1.0) * num / (8.0 * (j as f64 + 1.0)) / z;
        let t = term.norm();
        if t >= smallest {
            break; // asymptotic tail started growing
        }
        smallest = t;
        sum += term;
        if t < 1e-17 * sum.norm() {
            break;
        }
    }
    let phase = phase_factor(m, z);
    (Complex64::new(2.0 / PI, 0.0) / z).sqrt() * phase * sum
}

/// e^{i(z - m pi/2 - pi/4)} with the order phase reduced exactly mod 2 pi.
fn phase_factor(m: u32, z: Complex64) -> Complex64 {
    let quarter_turns = (m % 4) as f64;
    let offset = -quarter_turns * FRAC_PI_2 - FRAC_PI_4;
    // e^{iz} = e^{-Im z} (cos Re z + i sin Re z)
    let scale = (-z.im).exp();
    let ang = z.re + offset;
    Complex64::new(scale * ang.cos(), scale * ang.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eligibility_thresholds() {
        assert!(eligible(0, 16.0));
        assert!(eligible(1, 16.0));
        assert!(!eligible(0, 15.9));
        assert!(!eligible(13, 100.0));
        assert!(eligible(13, 250.0));
        assert!(!eligible(60, 4000.0));
        assert!(eligible(60, 4600.0));
    }

    #[test]
    fn matches_series_route_for_moderate_argument() {
        // cross-check against the double-double series at the crossover
        let z = Complex64::new(16.0, 0.0);
        let (_, _, r0, r1) = super::super::series::seeds_series_dd(z);
        let h0 = hankel1_asymptotic(0, z);
        let h1 = hankel1_asymptotic(1, z);
        assert!((h0 - r0).norm() < 2e-14 * r0.norm(), "{h0} vs {r0}");
        assert!((h1 - r1).norm() < 2e-14 * r1.norm(), "{h1} vs {r1}");
    }
}
