//! Integer-order cylinder functions J, Y, H(1), H(2), their derivatives,
//! and zeros of J_m.
//!
//! Evaluation strategy (crossovers pinned by the stored oracle grid):
//!
//! * ascending power series for |z| <= 9;
//! * continued-fraction ratio at the top order, downward recurrence, and a
//!   Wronskian closure against the order-0/1 H(1) seeds for the mid range;
//! * plain Hankel asymptotics once 4m^2 + 1 <= 3.2 |z| (and |z| >= 16);
//! * H(1) seeds from double-double log series (|z| <= 16) or asymptotics,
//!   extended upward in order; Y on the real axis is Im H(1), complex Y
//!   exists only through H(1) = J + iY;
//! * H(2) by 2J - H(1) in the closed upper half plane and by reflection
//!   conj(H(1)(conj z)) below the axis, so |H(2)| never suffers
//!   cancellation.
//!
//! Negative orders are reduced with C_{-m} = (-1)^m C_m before evaluation.
//! Validated domain: |m| <= 60; real arguments 0 < x <= 4e4 (large-index
//! zeros), complex arguments with Re z >= 0, |z| <= 200, |Im z| <= 10.

mod asymptotic;
mod chain;
pub mod dd;
pub mod oracle;
mod series;
mod zeros;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use zeros::{bessel_j_zero, bessel_j_zeros_upto, BesselZero};

/// Largest supported order magnitude.
pub const MAX_ORDER: i32 = 60;
/// Largest supported zero index.
pub const MAX_ZERO_INDEX: usize = 10_000;

/// Which cylinder function a derivative refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CylKind {
    J,
    Y,
    H1,
    H2,
}

fn reflect(m: i32) -> (u32, f64) {
    let mu = m.unsigned_abs();
    (mu, if m < 0 && mu % 2 == 1 { -1.0 } else { 1.0 })
}

fn check_order(m: i32, headroom: u32) -> Result<u32> {
    let mu = m.unsigned_abs();
    if mu > MAX_ORDER as u32 + headroom {
        return Err(Error::domain(format!("order |m| = {mu} exceeds {MAX_ORDER}")));
    }
    Ok(mu)
}

fn check_argument(z: Complex64, need_nonzero: bool) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain("non-finite argument"));
    }
    if need_nonzero && z == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("argument must be nonzero"));
    }
    if z.im == 0.0 {
        if z.re < 0.0 {
            return Err(Error::domain("negative real arguments are outside the validated domain"));
        }
        if z.re > 4.0e4 {
            return Err(Error::domain("real argument exceeds 4e4"));
        }
    } else {
        if z.re < 0.0 {
            return Err(Error::domain("complex arguments need Re z >= 0"));
        }
        if z.norm() > 200.0 + 1e-9 {
            return Err(Error::domain("complex |z| exceeds 200"));
        }
        if z.im.abs() > 10.0 + 1e-9 {
            return Err(Error::domain("|Im z| exceeds 10"));
        }
    }
    Ok(())
}

/// J_m for all orders 0..=m_max at once (one chain evaluation).
pub fn bessel_j_all(m_max: i32, z: Complex64) -> Result<Vec<Complex64>> {
    let mu = check_order(m_max, 2)?;
    check_argument(z, false)?;
    bessel_j_all_unchecked(mu, z)
}

pub(crate) fn bessel_j_all_unchecked(m_max: u32, z: Complex64) -> Result<Vec<Complex64>> {
    if z == Complex64::new(0.0, 0.0) {
        let mut v = vec![Complex64::new(0.0, 0.0); (m_max + 1) as usize];
        v[0] = Complex64::new(1.0, 0.0);
        return Ok(v);
    }
    chain::bessel_j_chain(m_max, z)
}

/// H(1)_m for all orders 0..=m_max at once.
pub fn hankel1_all(m_max: i32, z: Complex64) -> Result<Vec<Complex64>> {
    let mu = check_order(m_max, 2)?;
    check_argument(z, true)?;
    chain::hankel1_chain(mu, z)
}

/// Bessel function of the first kind, complex argument.
pub fn bessel_j(m: i32, z: Complex64) -> Result<Complex64> {
    let (mu, sign) = reflect(m);
    check_order(m, 0)?;
    check_argument(z, false)?;
    Ok(sign * bessel_j_all_unchecked(mu, z)?[mu as usize])
}

/// Bessel function of the second kind, positive real argument.
pub fn bessel_y(m: i32, x: f64) -> Result<f64> {
    let (mu, sign) = reflect(m);
    check_order(m, 0)?;
    if !(x > 0.0) {
        return Err(Error::domain("bessel_y needs x > 0"));
    }
    check_argument(Complex64::new(x, 0.0), true)?;
    let h = chain::hankel1_chain(mu, Complex64::new(x, 0.0))?;
    Ok(sign * h[mu as usize].im)
}

/// Hankel functions H(1) (kind = 1) and H(2) (kind = 2).
pub fn hankel(kind: u8, m: i32, z: Complex64) -> Result<Complex64> {
    let (mu, sign) = reflect(m);
    check_order(m, 0)?;
    check_argument(z, true)?;
    match kind {
        1 => Ok(sign * hankel1_of(mu, z)?),
        2 => Ok(sign * hankel2_of(mu, z)?),
        other => Err(Error::domain(format!("hankel kind must be 1 or 2, got {other}"))),
    }
}

fn hankel1_of(mu: u32, z: Complex64) -> Result<Complex64> {
    let h = chain::hankel1_chain(mu, z)?[mu as usize];
    if z.im == 0.0 {
        // real axis: take J from its own chain so H = J + iY holds exactly
        let j = bessel_j_all_unchecked(mu, z)?[mu as usize].re;
        Ok(Complex64::new(j, h.im))
    } else {
        Ok(h)
    }
}

fn hankel2_of(mu: u32, z: Complex64) -> Result<Complex64> {
    if z.im < 0.0 {
        // reflection keeps H(2) (the exponentially large solution below the
        // axis) free of cancellation
        Ok(hankel1_of(mu, z.conj())?.conj())
    } else {
        let j = bessel_j_all_unchecked(mu, z)?[mu as usize];
        Ok(2.0 * j - hankel1_of(mu, z)?)
    }
}

/// Argument derivative C'_m via C'_m = (C_{m-1} - C_{m+1})/2 (and C'_0 = -C_1).
pub fn cyl_deriv(kind: CylKind, m: i32, z: Complex64) -> Result<Complex64> {
    let (mu, sign) = reflect(m);
    check_order(m, 0)?;
    let eval = |order: u32| -> Result<Complex64> {
        match kind {
            CylKind::J => Ok(bessel_j_all_unchecked(order.max(1), z)?[order as usize]),
            CylKind::Y => {
                if z.im != 0.0 {
                    return Err(Error::domain("complex Y only exists through H(1) = J + iY"));
                }
                Ok(Complex64::new(bessel_y(order as i32, z.re)?, 0.0))
            }
            CylKind::H1 => hankel1_of(order, z),
            CylKind::H2 => hankel2_of(order, z),
        }
    };
    check_argument(z, kind != CylKind::J)?;
    let d = if mu == 0 {
        -eval(1)?
    } else {
        0.5 * (eval(mu - 1)? - eval(mu + 1)?)
    };
    Ok(sign * d)
}

/// J_m and J'_m on the real axis in one evaluation.
pub fn bessel_j_and_deriv(m: i32, x: f64) -> Result<(f64, f64)> {
    let (mu, sign) = reflect(m);
    check_order(m, 0)?;
    check_argument(Complex64::new(x, 0.0), false)?;
    let chain = bessel_j_all_unchecked(mu + 1, Complex64::new(x, 0.0))?;
    let j = chain[mu as usize].re;
    let dj = if mu == 0 {
        -chain[1].re
    } else {
        0.5 * (chain[(mu - 1) as usize].re - chain[(mu + 1) as usize].re)
    };
    Ok((sign * j, sign * dj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use oracle::{parse_grid, GridKind, GRID};

    fn rel_err(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn stored_grid_within_1e11() {
        let mut worst = 0.0f64;
        let mut worst_rec = None;
        for rec in parse_grid(GRID).unwrap() {
            let val = match rec.kind {
                GridKind::J => bessel_j(rec.m, rec.z).unwrap(),
                GridKind::Y => Complex64::new(bessel_y(rec.m, rec.z.re).unwrap(), 0.0),
                GridKind::H1 => hankel(1, rec.m, rec.z).unwrap(),
                GridKind::H2 => hankel(2, rec.m, rec.z).unwrap(),
                GridKind::DJ => cyl_deriv(CylKind::J, rec.m, rec.z).unwrap(),
                GridKind::DY => cyl_deriv(CylKind::Y, rec.m, rec.z).unwrap(),
                GridKind::DH1 => cyl_deriv(CylKind::H1, rec.m, rec.z).unwrap(),
                GridKind::JZero => {
                    let z = bessel_j_zero(rec.m, rec.z.re as usize).unwrap();
                    Complex64::new(z.x, 0.0)
                }
            };
            let e = rel_err(val, rec.value);
            if e > worst {
                worst = e;
                worst_rec = Some(rec);
            }
        }
        assert!(worst < 1e-11, "worst relative error {worst:.3e} at {worst_rec:?}");
    }

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j(0, Complex64::new(0.0, 0.0)).unwrap().re, 1.0);
        assert_eq!(bessel_j(1, Complex64::new(0.0, 0.0)).unwrap().re, 0.0);
        let j0z = bessel_j(0, Complex64::new(2.404825557695773, 0.0)).unwrap();
        assert!(j0z.norm() < 1e-12);
        // J'_0(0) = 0, J'_1(0) = 1/2
        assert_eq!(cyl_deriv(CylKind::J, 0, Complex64::new(0.0, 0.0)).unwrap().re, -0.0);
        assert_eq!(cyl_deriv(CylKind::J, 1, Complex64::new(0.0, 0.0)).unwrap().re, 0.5);
    }

    #[test]
    fn hankel_conjugacy_and_composition() {
        let x = Complex64::new(5.0, 0.0);
        let h1 = hankel(1, 2, x).unwrap();
        let h2 = hankel(2, 2, x).unwrap();
        assert!((h2 - h1.conj()).norm() < 1e-15);
        // H1 = J + iY exactly by construction
        let j = bessel_j(2, x).unwrap().re;
        let y = bessel_y(2, 5.0).unwrap();
        assert!((h1 - Complex64::new(j, y)).norm() < 1e-16 * h1.norm());
    }

    #[test]
    fn hankel_wronskian_at_high_order() {
        // J_m H'(1)_m - J'_m H(1)_m = 2i/(pi x) at (m, x) = (13, 10.5)
        let m = 13;
        let x = Complex64::new(10.5, 0.0);
        let j = bessel_j(m, x).unwrap();
        let dj = cyl_deriv(CylKind::J, m, x).unwrap();
        let h = hankel(1, m, x).unwrap();
        let dh = cyl_deriv(CylKind::H1, m, x).unwrap();
        let w = j * dh - dj * h;
        let expect = Complex64::new(0.0, 2.0 / (std::f64::consts::PI * 10.5));
        assert!((w - expect).norm() < 1e-14 * expect.norm());
    }

    #[test]
    fn wronskian_sweep() {
        // J_m Y'_m - J'_m Y_m = 2/(pi x) within 1e-10 over the stated box
        let mut worst = 0.0f64;
        for m in (0..=40).step_by(4) {
            for i in 0..40 {
                let x = 0.1 + (100.0 - 0.1) * (i as f64 + 0.5) / 40.0;
                let zc = Complex64::new(x, 0.0);
                let j = bessel_j(m, zc).unwrap().re;
                let dj = cyl_deriv(CylKind::J, m, zc).unwrap().re;
                let y = bessel_y(m, x).unwrap();
                let dy = cyl_deriv(CylKind::Y, m, zc).unwrap().re;
                let res = (j * dy - dj * y - 2.0 / (std::f64::consts::PI * x)).abs();
                worst = worst.max(res);
            }
        }
        assert!(worst < 1e-10, "worst Wronskian residual {worst:.3e}");
    }

    #[test]
    fn recurrence_residual_all_kinds() {
        let pts = [Complex64::new(7.7, 0.0), Complex64::new(23.0, 0.0), Complex64::new(14.2, -3.0)];
        for &z in &pts {
            for m in 1..=30 {
                for kind in [CylKind::J, CylKind::Y, CylKind::H1, CylKind::H2] {
                    if kind == CylKind::Y && z.im != 0.0 {
                        continue;
                    }
                    let eval = |mm: i32| -> Complex64 {
                        match kind {
                            CylKind::J => bessel_j(mm, z).unwrap(),
                            CylKind::Y => Complex64::new(bessel_y(mm, z.re).unwrap(), 0.0),
                            CylKind::H1 => hankel(1, mm, z).unwrap(),
                            CylKind::H2 => hankel(2, mm, z).unwrap(),
                        }
                    };
                    let res = eval(m - 1) + eval(m + 1) - 2.0 * m as f64 / z * eval(m);
                    let scale = eval(m - 1).norm().max(eval(m + 1).norm());
                    assert!(res.norm() <= 1e-9 * scale, "{kind:?} m={m} z={z}");
                }
            }
        }
    }

    #[test]
    fn reflection_negative_order() {
        let z = Complex64::new(6.6, 1.2);
        for m in 1..=7 {
            let a = bessel_j(-m, z).unwrap();
            let b = bessel_j(m, z).unwrap();
            let sign = if m % 2 == 1 { -1.0 } else { 1.0 };
            assert_eq!(a, sign * b, "reflection must be exact by construction");
        }
    }

    #[test]
    fn y_log_divergence_sign() {
        assert!(bessel_y(0, 1e-6).unwrap() < -8.0);
    }

    #[test]
    fn derivative_vs_central_difference() {
        let h = 1e-6;
        for (kind, m, z) in [
            (CylKind::J, 3, Complex64::new(7.3, 0.0)),
            (CylKind::H1, 13, Complex64::new(10.5, -0.3)),
            (CylKind::Y, 5, Complex64::new(4.4, 0.0)),
        ] {
            let eval = |zz: Complex64| -> Complex64 {
                match kind {
                    CylKind::J => bessel_j(m, zz).unwrap(),
                    CylKind::Y => Complex64::new(bessel_y(m, zz.re).unwrap(), 0.0),
                    CylKind::H1 => hankel(1, m, zz).unwrap(),
                    CylKind::H2 => hankel(2, m, zz).unwrap(),
                }
            };
            let fd = (eval(z + h) - eval(z - h)) / (2.0 * h);
            let d = cyl_deriv(kind, m, z).unwrap();
            assert!((fd - d).norm() < 1e-8 * d.norm().max(1.0), "{kind:?}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j(61, Complex64::new(1.0, 0.0)).is_err());
        assert!(bessel_y(0, -1.0).is_err());
        assert!(bessel_y(0, 0.0).is_err());
        assert!(hankel(1, 0, Complex64::new(0.0, 0.0)).is_err());
        assert!(hankel(3, 0, Complex64::new(1.0, 0.0)).is_err());
        assert!(bessel_j(0, Complex64::new(50.0, 11.0)).is_err());
        assert!(bessel_j(0, Complex64::new(250.0, 5.0)).is_err());
    }
}
