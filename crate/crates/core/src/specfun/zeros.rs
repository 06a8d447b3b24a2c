//! Positive zeros of J_m.
//!
//! Large zero indices use the McMahon expansion as a Newton seed. For the
//! first zeros of high orders McMahon is far off (at m = 60 the lambda = 1
//! seed misses by nine zeros), so the low-index range starts from the
//! Olver/Airy first-zero estimate and walks forward zero by zero, using the
//! monotone behaviour of the inter-zero spacing to place each next seed.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::{bessel_j_all_unchecked, MAX_ZERO_INDEX};

/// A located zero of J_m.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BesselZero {
    /// Order of the Bessel function.
    pub m: i32,
    /// One-based index of the zero.
    pub lambda: usize,
    /// The zero itself.
    pub x: f64,
}

fn mcmahon_seed(m: u32, lambda: usize) -> f64 {
    let mu = 4.0 * (m as f64) * (m as f64);
    let beta = (lambda as f64 + 0.5 * m as f64 - 0.25) * std::f64::consts::PI;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8.powi(5))
}

fn first_zero_seed(m: u32) -> f64 {
    match m {
        0 => 2.404825557695773,
        1 => 3.8317059702075125,
        _ => {
            let mf = m as f64;
            mf + 1.8557571 * mf.cbrt() + 1.0331504 / mf.cbrt()
        }
    }
}

/// J_m(x) and J'_m(x) for the Newton polish.
fn j_and_deriv(m: u32, x: f64) -> (f64, f64) {
    let z = Complex64::new(x, 0.0);
    let chain = bessel_j_all_unchecked(m + 1, z).expect("zero search stays in the real domain");
    let j = chain[m as usize].re;
    let dj = if m == 0 {
        -chain[1].re
    } else {
        // C'_m = (C_{m-1} - C_{m+1})/2
        0.5 * (chain[(m - 1) as usize].re - chain[(m + 1) as usize].re)
    };
    (j, dj)
}

/// Newton polish from `seed`, staying within `max_step` of it.
///
/// Iterates until the step hits the evaluation noise floor and keeps the
/// iterate with the smallest residual.
fn polish(m: u32, seed: f64, max_step: f64) -> Result<f64> {
    let mut x = seed;
    let mut best = (f64::INFINITY, seed, 1.0);
    for _ in 0..40 {
        let (j, dj) = j_and_deriv(m, x);
        if j.abs() < best.0 {
            best = (j.abs(), x, dj);
        }
        let step = (j / dj).clamp(-max_step, max_step);
        x -= step;
        if step.abs() <= 4e-14 * x.abs() {
            break;
        }
    }
    let (res, x, dj) = best;
    if res <= 1e-12 * dj.abs().max(1.0) {
        Ok(x)
    } else {
        Err(Error::NoConvergence { iterations: 40, last: Complex64::new(x, 0.0), residual: res })
    }
}

/// The first `count` zeros of J_m, strictly increasing.
pub fn bessel_j_zeros_upto(m: i32, count: usize) -> Result<Vec<f64>> {
    let mu = m.unsigned_abs();
    if mu > 60 {
        return Err(Error::domain(format!("bessel_j_zeros_upto: |m| = {mu} exceeds 60")));
    }
    if count > MAX_ZERO_INDEX {
        return Err(Error::domain(format!("zero index {count} exceeds {MAX_ZERO_INDEX}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<f64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(zs) = guard.get(&mu) {
            if zs.len() >= count {
                return Ok(zs[..count].to_vec());
            }
        }
    }
    let mut zs: Vec<f64> = {
        let guard = cache.lock().unwrap();
        guard.get(&mu).cloned().unwrap_or_default()
    };
    if zs.is_empty() && count > 0 {
        zs.push(polish(mu, first_zero_seed(mu), 1.6)?);
    }
    let mut spacing = 0.0;
    while zs.len() < count {
        let lambda = zs.len() + 1;
        let last = *zs.last().unwrap();
        let seed = if lambda > (30usize).max(2 * mu as usize) {
            mcmahon_seed(mu, lambda)
        } else if spacing > 0.0 {
            last + spacing
        } else {
            // second zero: Airy gap scaled estimate, floored by pi
            last + (1.7292 * (0.5 * mu as f64).cbrt()).max(std::f64::consts::PI)
        };
        let x = polish(mu, seed, 1.6)?;
        if x <= last + 3.0 || x >= last + 6.0 {
            return Err(Error::NoConvergence {
                iterations: 0,
                last: Complex64::new(x, 0.0),
                residual: x - last,
            });
        }
        spacing = x - last;
        zs.push(x);
    }
    let mut guard = cache.lock().unwrap();
    let entry = guard.entry(mu).or_default();
    if entry.len() < zs.len() {
        *entry = zs.clone();
    }
    zs.truncate(count);
    Ok(zs)
}

/// The lambda-th positive zero of J_m (lambda >= 1).
pub fn bessel_j_zero(m: i32, lambda: usize) -> Result<BesselZero> {
    if lambda == 0 {
        return Err(Error::domain("bessel_j_zero: zero index starts at 1"));
    }
    let mu = m.unsigned_abs();
    if mu > 60 {
        return Err(Error::domain(format!("bessel_j_zero: |m| = {mu} exceeds 60")));
    }
    if lambda > MAX_ZERO_INDEX {
        return Err(Error::domain(format!("zero index {lambda} exceeds {MAX_ZERO_INDEX}")));
    }
    let x = if lambda > (30usize).max(2 * mu as usize) {
        // deep in the McMahon regime: solve directly
        let seed = mcmahon_seed(mu, lambda);
        let x = polish(mu, seed, 1.6)?;
        if (x - seed).abs() > 1.0 {
            return Err(Error::NoConvergence {
                iterations: 0,
                last: Complex64::new(x, 0.0),
                residual: (x - seed).abs(),
            });
        }
        x
    } else {
        *bessel_j_zeros_upto(m, lambda)?.last().unwrap()
    };
    Ok(BesselZero { m, lambda, x })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walk_and_mcmahon_agree_at_the_handover() {
        for &m in &[0i32, 7, 41, 60] {
            let n = (30usize).max(2 * m as usize);
            let walked = bessel_j_zeros_upto(m, n).unwrap();
            let direct = bessel_j_zero(m, n + 1).unwrap().x;
            assert!(direct > walked[n - 1] + 3.0 && direct < walked[n - 1] + 6.0);
        }
    }

    #[test]
    fn monotone_and_interlaced() {
        let z5 = bessel_j_zeros_upto(5, 12).unwrap();
        let z6 = bessel_j_zeros_upto(6, 12).unwrap();
        for i in 1..12 {
            assert!(z5[i] > z5[i - 1]);
            assert!(z5[i - 1] < z6[i - 1], "interlacing x_(5,l) < x_(6,l)");
            assert!(z6[i - 1] < z5[i], "interlacing x_(6,l) < x_(5,l+1)");
        }
    }

    #[test]
    fn negative_order_reflects() {
        let a = bessel_j_zero(-13, 2).unwrap();
        let b = bessel_j_zero(13, 2).unwrap();
        assert_eq!(a.x, b.x);
    }
}
