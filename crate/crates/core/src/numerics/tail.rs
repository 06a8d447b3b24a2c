//! Euler–Maclaurin summation for series with algebraic tails.

use crate::error::{Error, Result};

use super::quad::gauss_legendre;

/// Value and error estimate of a tail-corrected series sum.
#[derive(Clone, Copy, Debug)]
pub struct TailSum {
    pub value: f64,
    /// Magnitude of the first neglected Euler–Maclaurin correction.
    pub error_estimate: f64,
}

/// Sum of term(lambda) over integer lambda in [start, infinity).
///
/// The partial sum runs to lambda_max - 1; the remainder is the
/// Euler–Maclaurin tail at M = lambda_max,
///
///   int_M^inf t dx + t(M)/2 - t'(M)/12 + t'''(M)/720,
///
/// with derivatives from a 7-point stencil and the integral mapped to (0, 1]
/// by x = M/u. `term` must therefore be callable at real (non-integer)
/// arguments and decay like 1/lambda^p with p = tail_order >= 2.
pub fn series_sum_tail(
    term: &dyn Fn(f64) -> f64,
    start: i64,
    tail_order: u32,
    lambda_max: i64,
) -> Result<TailSum> {
    if tail_order < 2 {
        return Err(Error::domain("series_sum_tail needs tail_order >= 2"));
    }
    if lambda_max < start + 4 {
        return Err(Error::domain("series_sum_tail needs lambda_max >= start + 4"));
    }
    // Neumaier-compensated partial sum
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for lambda in start..lambda_max {
        let t = term(lambda as f64);
        let s = sum + t;
        if sum.abs() >= t.abs() {
            comp += (sum - s) + t;
        } else {
            comp += (t - s) + sum;
        }
        sum = s;
    }
    let partial = sum + comp;

    let m = lambda_max as f64;
    // int_M^inf term dx, mapped through x = M/u
    let (nodes, weights) = gauss_legendre(60);
    let mut integral = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let u = 0.5 * (x + 1.0);
        let xx = m / u;
        integral += 0.5 * w * term(xx) * m / (u * u);
    }

    let t = |d: i64| term(m + d as f64);
    let d1 = (-t(-3) + 9.0 * t(-2) - 45.0 * t(-1) + 45.0 * t(1) - 9.0 * t(2) + t(3)) / 60.0;
    let d3 = (t(-3) - 8.0 * t(-2) + 13.0 * t(-1) - 13.0 * t(1) + 8.0 * t(2) - t(3)) / 8.0;
    let d5 = (-t(-3) + 4.0 * t(-2) - 5.0 * t(-1) + 5.0 * t(1) - 4.0 * t(2) + t(3)) / 2.0;

    let tail = integral + 0.5 * t(0) - d1 / 12.0 + d3 / 720.0;
    let error_estimate = (d5 / 30240.0).abs() + f64::EPSILON * partial.abs();
    Ok(TailSum { value: partial + tail, error_estimate })
}
