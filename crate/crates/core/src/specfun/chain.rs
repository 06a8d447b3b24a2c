//! Order chains for J and H(1) at fixed argument.
//!
//! J: the ratio J_{M+1}/J_M comes from the standard continued fraction
//! (modified Lentz), the chain is filled by downward recurrence, and the
//! overall scale is fixed by the cross Wronskian against the order-0/1
//! H(1) seeds, J_1 H_0 - J_0 H_1 = 2i/(pi z). Seeding the recurrence with
//! the converged ratio keeps the chain proportional to the minimal solution
//! to machine accuracy, so no Miller-style buffer orders are needed.
//!
//! H(1): order-0/1 seeds plus upward recurrence; H is never the minimal
//! solution in the upward direction, so the recurrence is unconditionally
//! stable in relative terms.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::asymptotic::{eligible, hankel1_asymptotic};
use super::series::{bessel_j_series, seeds_series_dd};

const SERIES_RADIUS: f64 = 9.0;
const SEED_SERIES_RADIUS: f64 = 16.0;

/// J_{top+1}(z)/J_{top}(z) by the continued fraction, modified Lentz.
fn cf1_ratio(top: u32, z: Complex64) -> Result<Complex64> {
    // tiny is kept well above sqrt(f64::MIN_POSITIVE): num-complex divides
    // through norm_sqr, which must not underflow
    let tiny = Complex64::new(1e-130, 0.0);
    let mut f = tiny;
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    for j in 1..100_000u32 {
        // f = a_1/(b_1 + a_2/(b_2 + ...)), a_1 = 1, a_j = -1 afterwards
        let b = 2.0 * (top + j) as f64 / z;
        let a = if j == 1 { 1.0 } else { -1.0 };
        d = b + a * d;
        if d.norm_sqr() < 1e-260 {
            d = tiny;
        }
        c = b + a / c;
        if c.norm_sqr() < 1e-260 {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        // below the turning point the fraction can plateau with delta ~ 1
        // without having converged; only trust it past j ~ |z|
        if (delta - 1.0).norm() < 1e-16 && j > 1 && (top + j) as f64 > z.norm() {
            return Ok(f);
        }
    }
    Err(Error::NoConvergence { iterations: 100_000, last: f, residual: f64::NAN })
}

/// H(1)_0(z) and H(1)_1(z).
pub(super) fn hankel1_seeds(z: Complex64) -> (Complex64, Complex64) {
    if z.norm() <= SEED_SERIES_RADIUS {
        let (_, _, h0, h1) = seeds_series_dd(z);
        (h0, h1)
    } else {
        (hankel1_asymptotic(0, z), hankel1_asymptotic(1, z))
    }
}

/// J_0..J_{m_max} at z (z != 0, Re z >= 0).
pub(super) fn bessel_j_chain(m_max: u32, z: Complex64) -> Result<Vec<Complex64>> {
    let z_abs = z.norm();
    if z_abs <= SERIES_RADIUS {
        return Ok((0..=m_max).map(|m| bessel_j_series(m, z)).collect());
    }
    if z.im == 0.0 && eligible(m_max, z_abs) {
        // real axis, all orders in the eligible regime: J = Re H(1)
        return Ok((0..=m_max).map(|m| Complex64::new(hankel1_asymptotic(m, z).re, 0.0)).collect());
    }
    let top = m_max.max(1);
    let ratio = cf1_ratio(top, z)?;
    let mut chain = vec![Complex64::new(0.0, 0.0); (top + 2) as usize];
    // unnormalized minimal solution, seeded by the converged ratio
    let (seed_hi, seed_lo) = if ratio.norm() > 1.0 {
        (Complex64::new(1.0, 0.0), 1.0 / ratio)
    } else {
        (ratio, Complex64::new(1.0, 0.0))
    };
    chain[(top + 1) as usize] = seed_hi;
    chain[top as usize] = seed_lo;
    for n in (0..top).rev() {
        let nn = (n + 1) as f64;
        chain[n as usize] = 2.0 * nn / z * chain[(n + 1) as usize] - chain[(n + 2) as usize];
    }
    // Close against whichever Hankel function stays independent of J:
    // below the axis J ~ H(1)/2 and the H(1) cross product cancels to
    // ~e^{-2|Im z|}, so use H(2) there (J_1 H(2)_0 - J_0 H(2)_1 = -2i/(pi z));
    // above it, H(1) (J_1 H(1)_0 - J_0 H(1)_1 = +2i/(pi z)).
    let (h0, h1, wronskian) = if z.im <= 0.0 {
        let (a0, a1) = hankel1_seeds(z.conj());
        (a0.conj(), a1.conj(), Complex64::new(0.0, -2.0 / std::f64::consts::PI) / z)
    } else {
        let (a0, a1) = hankel1_seeds(z);
        (a0, a1, Complex64::new(0.0, 2.0 / std::f64::consts::PI) / z)
    };
    let scale = wronskian / (chain[1] * h0 - chain[0] * h1);
    chain.truncate((m_max + 1) as usize);
    for v in &mut chain {
        *v *= scale;
    }
    Ok(chain)
}

/// H(1)_0..H(1)_{m_max} at z (z != 0, Re z >= 0).
///
/// In the closed upper half plane the seed error's growing-solution
/// component is suppressed by e^{-2 Im z}, so plain upward recurrence keeps
/// relative accuracy. Below the axis that component is amplified by
/// e^{2|Im z|} instead, so H(1) is assembled there as 2J - conj(H(1)(conj z)).
pub(super) fn hankel1_chain(m_max: u32, z: Complex64) -> Result<Vec<Complex64>> {
    if z.im < 0.0 {
        let j = bessel_j_chain(m_max, z)?;
        let upper = hankel1_chain(m_max, z.conj())?;
        return Ok(j
            .iter()
            .zip(upper.iter())
            .map(|(jj, hh)| 2.0 * jj - hh.conj())
            .collect());
    }
    let (h0, h1) = hankel1_seeds(z);
    let mut out = Vec::with_capacity((m_max + 1) as usize);
    out.push(h0);
    if m_max >= 1 {
        out.push(h1);
    }
    for m in 1..m_max {
        let next = 2.0 * m as f64 / z * out[m as usize] - out[(m - 1) as usize];
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_series_agree_on_overlap() {
        // the ascending series is still accurate a little past the switch
        // radius; both routes must produce the same values there
        for &(re, im) in &[(9.5f64, 0.0f64), (8.5, 3.0), (6.7, -6.7)] {
            let z = Complex64::new(re, im);
            let chain = bessel_j_chain(20, z).unwrap();
            for m in 0..=20u32 {
                let s = bessel_j_series(m, z);
                let d = (chain[m as usize] - s).norm();
                assert!(
                    d < 1e-11 * s.norm().max(1e-30),
                    "m={m} z={z} chain={} series={s}",
                    chain[m as usize]
                );
            }
        }
    }

    #[test]
    fn upward_h_recurrence_residual() {
        let z = Complex64::new(13.7, -2.1);
        let h = hankel1_chain(30, z).unwrap();
        for m in 1..30usize {
            let res = h[m - 1] + h[m + 1] - 2.0 * m as f64 / z * h[m];
            let scale = h[m - 1].norm().max(h[m + 1].norm());
            assert!(res.norm() <= 1e-13 * scale);
        }
    }
}
