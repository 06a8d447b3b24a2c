//! Slow reference implementations and the stored high-precision grid.
//!
//! Two independent yardsticks back the fast evaluators:
//!
//! * a stored grid of 348 values computed once with 40-digit arithmetic
//!   (`data/specfun_grid.txt`, regenerated by `tools/gen_specfun_grid.py`),
//!   formatted as `kind m Re(z) Im(z) Re(val) Im(val)` with 17 significant
//!   digits per field;
//! * a pure ascending-series evaluator in double-double arithmetic with no
//!   recurrences (`j_reference`, `y_reference`), convergent for |z| <= 20,
//!   which cross-checks the stored grid on that subdomain.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::dd::{atan2_dd, ln_half_abs_dd, Dd, DdC, EULER_GAMMA, PI};

/// The stored reference grid.
pub const GRID: &str = include_str!("../../data/specfun_grid.txt");

/// One record of the reference grid.
#[derive(Clone, Copy, Debug)]
pub struct GridRecord {
    pub kind: GridKind,
    pub m: i32,
    pub z: Complex64,
    pub value: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridKind {
    J,
    Y,
    H1,
    H2,
    DJ,
    DY,
    DH1,
    /// Zero of J_m; the index is stored in Re(z), the zero in Re(val).
    JZero,
}

/// Parse the stored grid.
pub fn parse_grid(text: &str) -> Result<Vec<GridRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let mut field = || {
            it.next().ok_or_else(|| Error::Parse(format!("grid line {}: missing field", i + 1)))
        };
        let kind = match field()? {
            "j" => GridKind::J,
            "y" => GridKind::Y,
            "h1" => GridKind::H1,
            "h2" => GridKind::H2,
            "dj" => GridKind::DJ,
            "dy" => GridKind::DY,
            "dh1" => GridKind::DH1,
            "jz" => GridKind::JZero,
            other => return Err(Error::Parse(format!("grid line {}: unknown kind {other}", i + 1))),
        };
        let m: i32 = field()?
            .parse()
            .map_err(|e| Error::Parse(format!("grid line {}: {e}", i + 1)))?;
        let nums: Vec<f64> = (0..4)
            .map(|_| field()?.parse::<f64>().map_err(|e| Error::Parse(format!("grid line {}: {e}", i + 1))))
            .collect::<Result<_>>()?;
        out.push(GridRecord {
            kind,
            m,
            z: Complex64::new(nums[0], nums[1]),
            value: Complex64::new(nums[2], nums[3]),
        });
    }
    Ok(out)
}

fn dd_pow_int(base: DdC, n: u32) -> DdC {
    let one = DdC { re: Dd::from_f64(1.0), im: Dd::default() };
    let mut acc = one;
    for _ in 0..n {
        acc = acc.mul(base);
    }
    acc
}

fn factorial_dd(n: u32) -> Dd {
    let mut acc = Dd::from_f64(1.0);
    for j in 2..=n {
        acc = acc.mul_f64(j as f64);
    }
    acc
}

/// J_m(z) by the plain ascending series in double-double arithmetic.
///
/// Valid for |z| <= 20 (beyond that the ~e^{|z|} cancellation erodes even
/// the 32-digit accumulation below the 1e-13 target).
pub fn j_reference(m: i32, z: Complex64) -> Result<Complex64> {
    let mu = m.unsigned_abs();
    if z.norm() > 20.0 {
        return Err(Error::domain("j_reference: series oracle limited to |z| <= 20"));
    }
    let sign = if m < 0 && mu % 2 == 1 { -1.0 } else { 1.0 };
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(if mu == 0 { sign } else { 0.0 }, 0.0));
    }
    let half = DdC::from_c64(z).div_f64(2.0);
    let q = half.mul(half);
    let mq = DdC { re: q.re.neg(), im: q.im.neg() };
    let lead = dd_pow_int(half, mu);
    let lead = DdC { re: lead.re.div(factorial_dd(mu)), im: lead.im.div(factorial_dd(mu)) };
    let one = DdC { re: Dd::from_f64(1.0), im: Dd::default() };
    let mut term = one;
    let mut sum = one;
    for j in 1..300u32 {
        term = term.mul(mq).div_f64(j as f64 * (j + mu) as f64);
        sum = sum.add(term);
        if term.abs_sup() < 1e-36 * sum.abs_sup().max(1e-300) {
            break;
        }
    }
    Ok(lead.mul(sum).mul_f64(sign).to_c64())
}

/// Y_m(z) by the logarithmic ascending series in double-double arithmetic,
/// |z| <= 20, no recurrences.
pub fn y_reference(m: i32, z: Complex64) -> Result<Complex64> {
    let mu = m.unsigned_abs();
    if z.norm() > 20.0 || z == Complex64::new(0.0, 0.0) {
        return Err(Error::domain("y_reference: need 0 < |z| <= 20"));
    }
    let sign = if m < 0 && mu % 2 == 1 { -1.0 } else { 1.0 };
    let half = DdC::from_c64(z).div_f64(2.0);
    let q = half.mul(half);
    let mq = DdC { re: q.re.neg(), im: q.im.neg() };
    let one = DdC { re: Dd::from_f64(1.0), im: Dd::default() };

    // finite part: -(1/pi) (z/2)^{-m} sum_{k<mu} (mu-k-1)!/k! q^k
    let mut finite = DdC::default();
    if mu > 0 {
        let mut coeff = DdC { re: factorial_dd(mu - 1), im: Dd::default() };
        let mut qk = one;
        for k in 0..mu {
            if k > 0 {
                // (mu-k-1)!/k! = previous * 1/(k (mu-k))
                coeff = coeff.div_f64(k as f64 * (mu - k) as f64);
                qk = qk.mul(q);
            }
            finite = finite.add(coeff.mul(qk));
        }
        finite = finite.div(dd_pow_int(half, mu));
    }

    // log part: (2/pi) (ln(z/2)+gamma) J_m(z) -- gamma folded into psi below,
    // so compute with plain ln(z/2) and psi(k+1)+psi(mu+k+1) explicit.
    let lnr = ln_half_abs_dd(z.re, z.im);
    let arg = if z.im == 0.0 && z.re > 0.0 { Dd::default() } else { atan2_dd(z.im, z.re) };
    let lnz2 = DdC { re: lnr, im: arg };
    let jm = DdC::from_c64(j_reference(mu as i32, z)?);

    // psi series: (1/pi) (z/2)^mu sum_k (psi(k+1)+psi(mu+k+1)) (-q)^k / (k!(mu+k)!)
    let mut h_k = Dd::default();
    let mut h_mk = Dd::default();
    for j in 1..=mu {
        h_mk = h_mk.add(Dd::from_f64(1.0).div_f64(j as f64));
    }
    let gamma2 = EULER_GAMMA.mul_f64(2.0);
    let mut term = one;
    let mut psi_sum = DdC::default();
    let lead = dd_pow_int(half, mu);
    let inv_fact = Dd::from_f64(1.0).div(factorial_dd(mu));
    for k in 0..300u32 {
        if k > 0 {
            term = term.mul(mq).div_f64(k as f64 * (k + mu) as f64);
            h_k = h_k.add(Dd::from_f64(1.0).div_f64(k as f64));
            h_mk = h_mk.add(Dd::from_f64(1.0).div_f64((k + mu) as f64));
        }
        let psi = h_k.add(h_mk).sub(gamma2);
        let contrib = DdC { re: term.re.mul(psi), im: term.im.mul(psi) };
        psi_sum = psi_sum.add(contrib);
        if term.abs_sup() < 1e-36 && k > mu {
            break;
        }
    }
    let psi_part = lead.mul(psi_sum);
    let psi_part = DdC { re: psi_part.re.mul(inv_fact), im: psi_part.im.mul(inv_fact) };

    let inv_pi = Dd::from_f64(1.0).div(PI);
    let total = lnz2
        .mul(jm)
        .mul_f64(2.0)
        .sub(finite)
        .sub(psi_part);
    let total = DdC { re: total.re.mul(inv_pi), im: total.im.mul(inv_pi) };
    Ok(total.mul_f64(sign).to_c64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parses_and_is_large_enough() {
        let g = parse_grid(GRID).unwrap();
        assert!(g.len() >= 200, "stored grid has {} records", g.len());
    }

    #[test]
    fn series_reference_agrees_with_stored_grid() {
        // the two oracles are independent: mpmath vs double-double series
        let mut checked = 0usize;
        for rec in parse_grid(GRID).unwrap() {
            if rec.z.norm() > 20.0 {
                continue;
            }
            let val = match rec.kind {
                GridKind::J => j_reference(rec.m, rec.z).unwrap(),
                GridKind::Y => y_reference(rec.m, rec.z).unwrap(),
                GridKind::H1 => {
                    j_reference(rec.m, rec.z).unwrap()
                        + Complex64::i() * y_reference(rec.m, rec.z).unwrap()
                }
                _ => continue,
            };
            let rel = (val - rec.value).norm() / rec.value.norm();
            assert!(rel < 1e-13, "{:?} m={} z={}: rel {rel:.2e}", rec.kind, rec.m, rec.z);
            checked += 1;
        }
        assert!(checked > 80, "only {checked} grid records cross-checked");
    }

    #[test]
    fn y_reference_known_wronskian() {
        let z = Complex64::new(1.7, 0.0);
        let j3 = j_reference(3, z).unwrap();
        let y3 = y_reference(3, z).unwrap();
        let dj = 0.5 * (j_reference(2, z).unwrap() - j_reference(4, z).unwrap());
        let dy = 0.5 * (y_reference(2, z).unwrap() - y_reference(4, z).unwrap());
        let w = j3 * dy - dj * y3 - 2.0 / (std::f64::consts::PI * 1.7);
        assert!(w.norm() < 1e-15);
    }
}
