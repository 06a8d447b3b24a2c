//! Oscillatory tail integrals by half-period panels and Euler acceleration.

use num_complex::Complex64;

use super::quad::gauss_legendre;

/// Integral over [start, infinity) of an integrand whose sign alternates
/// between consecutive panels of width `half_period` (e.g. a power-law decay
/// times sin/cos or e^{±i omega k}), with an algebraically decaying envelope.
///
/// Panel integrals are taken with a fixed 16-point Gauss rule and the
/// alternating panel series is summed by repeated averaging (Euler/van
/// Wijngaarden), which converges like 2^-panels for smooth envelopes.
pub fn oscillatory_tail(
    f: &mut dyn FnMut(f64) -> Complex64,
    start: f64,
    half_period: f64,
    panels: usize,
) -> Complex64 {
    assert!(half_period > 0.0 && panels >= 4);
    let (nodes, weights) = gauss_legendre(16);
    let mut partial = Vec::with_capacity(panels);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..panels {
        let a = start + j as f64 * half_period;
        let c = a + 0.5 * half_period;
        let h = 0.5 * half_period;
        let mut panel = Complex64::new(0.0, 0.0);
        for (x, w) in nodes.iter().zip(&weights) {
            panel += *w * f(c + h * x);
        }
        panel *= h;
        acc += panel;
        partial.push(acc);
    }
    // repeated averaging of the partial sums
    let mut row = partial;
    while row.len() > 1 {
        for i in 0..row.len() - 1 {
            row[i] = 0.5 * (row[i] + row[i + 1]);
        }
        row.pop();
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_integral_tail() {
        // int_{10.3}^inf sin(t)/t dt = pi/2 - Si(10.3) = -0.0680346208678887859
        let mut f = |t: f64| Complex64::new(t.sin() / t, 0.0);
        let v = oscillatory_tail(&mut f, 10.3, std::f64::consts::PI, 40);
        assert!((v.re + 0.0680346208678887859).abs() < 1e-12, "{}", v.re);
    }

    #[test]
    fn cosine_tail_with_frequency() {
        // int_5^inf cos(3t)/t dt = -Ci(15) = -0.0462786776743604396
        let mut f = |t: f64| Complex64::new((3.0 * t).cos() / t, 0.0);
        let v = oscillatory_tail(&mut f, 5.0, std::f64::consts::PI / 3.0, 40);
        assert!((v.re + 0.0462786776743604396).abs() < 1e-12, "{}", v.re);
    }
}
