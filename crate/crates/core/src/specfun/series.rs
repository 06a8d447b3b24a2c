//! Power-series evaluation of cylinder functions near the origin.
//!
//! `bessel_j_series` is the plain f64 ascending series, used for |z| <= 9
//! where cancellation costs at most ~3 digits. The order-0/1 seed functions
//! run the same series in double-double arithmetic together with the
//! logarithmic Neumann series, which keeps full f64 accuracy up to |z| = 16
//! even on the real axis where the terms cancel to ~7 digits.

use num_complex::Complex64;

use super::dd::{atan2_dd, ln_half_abs_dd, Dd, DdC, EULER_GAMMA, PI};

const MAX_TERMS: usize = 120;

/// Ascending series for J_m(z), m >= 0. Relative accuracy ~1e-13 for |z| <= 9.
pub(super) fn bessel_j_series(m: u32, z: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return if m == 0 { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
    }
    let half = 0.5 * z;
    let q = -half * half;
    // leading coefficient (z/2)^m / m!
    let mut lead = Complex64::new(1.0, 0.0);
    for j in 1..=m {
        lead *= half / j as f64;
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for j in 1..MAX_TERMS as u32 {
        term *= q / (j as f64 * (j + m) as f64);
        sum += term;
        if term.norm_sqr() < 1e-34 * sum.norm_sqr() {
            break;
        }
    }
    lead * sum
}

/// J_0, J_1, H(1)_0, H(1)_1 at complex z via double-double series; |z| <= 16.
///
/// The double-double accumulation absorbs the alternating-series
/// cancellation, the cancellation between the log term and the harmonic
/// series, and — crucially — the one between J and iY, so the returned
/// H(1) keeps full relative accuracy even where it is exponentially small.
/// Rounding to f64 happens only after the J + iY combination.
pub(super) fn seeds_series_dd(z: Complex64) -> (Complex64, Complex64, Complex64, Complex64) {
    let zdd = DdC::from_c64(z);
    let half = zdd.div_f64(2.0);
    let q = half.mul(half); // (z/2)^2
    let mq = DdC { re: q.re.neg(), im: q.im.neg() };

    // J0 = sum (-q)^j / (j!)^2,  J1 = (z/2) sum (-q)^j / (j!(j+1)!)
    // S0 = sum_{j>=1} (-1)^{j+1} h_j q^j/(j!)^2          (enters Y0)
    // S1 = sum_{j>=0} (h_j + h_{j+1}) (-q)^j/(j!(j+1)!)  (enters Y1)
    let one = DdC { re: Dd::from_f64(1.0), im: Dd::default() };
    let mut j0 = one;
    let mut t0 = one;
    let mut s0 = DdC::default();
    let mut j1s = one;
    let mut t1 = one;
    let mut s1 = one; // j = 0 term: (h_0 + h_1) * 1 = 1
    let mut h = Dd::default(); // harmonic number h_j
    for j in 1..MAX_TERMS {
        let jf = j as f64;
        h = h.add(Dd::from_f64(1.0).div_f64(jf));
        t0 = t0.mul(mq).div_f64(jf * jf);
        j0 = j0.add(t0);
        // (-1)^{j+1} h_j q^j/(j!)^2 = -h_j * t0  (t0 already carries (-1)^j)
        s0 = s0.sub(DdC { re: t0.re.mul(h), im: t0.im.mul(h) });
        t1 = t1.mul(mq).div_f64(jf * (jf + 1.0));
        j1s = j1s.add(t1);
        let h2 = h.add(h).add(Dd::from_f64(1.0).div_f64(jf + 1.0));
        s1 = s1.add(DdC { re: t1.re.mul(h2), im: t1.im.mul(h2) });
        if t0.abs_sup() < 1e-34 * j0.abs_sup() && t1.abs_sup() < 1e-34 * j1s.abs_sup() {
            break;
        }
    }
    let j1 = half.mul(j1s);

    // ln(z/2) + gamma, with the argument taken in (-pi, pi]
    let lnr = ln_half_abs_dd(z.re, z.im);
    let arg = if z.im == 0.0 && z.re > 0.0 { Dd::default() } else { atan2_dd(z.im, z.re) };
    let lg = DdC { re: lnr.add(EULER_GAMMA), im: arg };

    let two_over_pi = Dd::from_f64(2.0).div(PI);
    // Y0 = (2/pi) [ (ln(z/2)+gamma) J0 + S0 ]
    let y0c = lg.mul(j0).add(s0);
    let y0 = DdC { re: y0c.re.mul(two_over_pi), im: y0c.im.mul(two_over_pi) };
    // Y1 = (2/pi) [ (ln(z/2)+gamma) J1 - 1/z - (z/4) S1 ]
    let inv_z = one.div(zdd);
    let term_a = lg.mul(j1);
    let term_c = half.mul(s1).div_f64(2.0);
    let y1c = term_a.sub(inv_z).sub(term_c);
    let y1 = DdC { re: y1c.re.mul(two_over_pi), im: y1c.im.mul(two_over_pi) };

    // H = J + iY assembled in double-double
    let h0 = DdC { re: j0.re.sub(y0.im), im: j0.im.add(y0.re) };
    let h1 = DdC { re: j1.re.sub(y1.im), im: j1.im.add(y1.re) };
    (j0.to_c64(), j1.to_c64(), h0.to_c64(), h1.to_c64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_series_small_arguments() {
        assert_eq!(bessel_j_series(0, Complex64::new(0.0, 0.0)).re, 1.0);
        assert_eq!(bessel_j_series(1, Complex64::new(0.0, 0.0)).re, 0.0);
        // J0 at the first zero of J0
        let v = bessel_j_series(0, Complex64::new(2.404825557695773, 0.0));
        assert!(v.norm() < 1e-13);
    }

    #[test]
    fn seeds_match_f64_series_where_benign() {
        let z = Complex64::new(3.7, 1.1);
        let (j0, j1, _, _) = seeds_series_dd(z);
        let a = bessel_j_series(0, z);
        let b = bessel_j_series(1, z);
        assert!((j0 - a).norm() < 1e-12 * a.norm());
        assert!((j1 - b).norm() < 1e-12 * b.norm());
    }

    #[test]
    fn y0_log_singularity_sign() {
        let (_, _, h0, _) = seeds_series_dd(Complex64::new(1e-6, 0.0));
        assert!(h0.im < -8.0); // Y0 = Im H(1)_0 ~ (2/pi) ln(x/2) ~ -9.3
        assert!((h0.re - 1.0).abs() < 1e-12);
    }
}
