//! Double-double arithmetic for the cancellation-prone series seeds.
//!
//! A value is stored as an unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`,
//! giving roughly 32 significant decimal digits. Only the operations needed
//! by the Bessel/Neumann power series are provided; error-free transforms
//! follow Dekker and Knuth, products use the hardware FMA.

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// ln 2 to double-double precision.
pub const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
/// pi to double-double precision.
pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
/// pi/2 to double-double precision.
pub const PI_2: Dd = Dd { hi: 1.5707963267948966, lo: 6.123233995736766e-17 };
/// Euler–Mascheroni constant to double-double precision.
pub const EULER_GAMMA: Dd = Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q1));
        let q2 = r.hi / other.hi;
        let r = r.sub(other.mul_f64(q2));
        let q3 = r.hi / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> Dd {
        self.div(Dd::from_f64(x))
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.to_f64().abs()
    }
}

/// Natural log of a positive finite f64, computed to double-double accuracy
/// via exact binary scaling and the atanh series on the reduced mantissa.
pub fn ln_dd(x: f64) -> Dd {
    assert!(x > 0.0 && x.is_finite());
    let bits = x.to_bits();
    let mut exp = ((bits >> 52) & 0x7ff) as i64 - 1023;
    let mut mant = f64::from_bits((bits & 0x000f_ffff_ffff_ffff) | 0x3ff0_0000_0000_0000);
    // balance the mantissa around 1 so the series argument stays small
    if mant > std::f64::consts::SQRT_2 {
        mant *= 0.5;
        exp += 1;
    }
    // ln(mant) = 2 atanh(t), t = (mant-1)/(mant+1), |t| <= 0.172
    let t = Dd::from_f64(mant - 1.0).div(Dd::from_f64(mant + 1.0));
    let t2 = t.mul(t);
    let mut term = t;
    let mut sum = t;
    for j in 1..25 {
        term = term.mul(t2);
        let add = term.div_f64((2 * j + 1) as f64);
        sum = sum.add(add);
        if add.abs() < 1e-35 * sum.abs() {
            break;
        }
    }
    LN2.mul_f64(exp as f64).add(sum.mul_f64(2.0))
}

/// sin and cos of an f64 angle to double-double accuracy (|theta| <= 8).
pub fn sin_cos_dd(theta: f64) -> (Dd, Dd) {
    let n = (theta / PI_2.hi).round();
    let r = Dd::from_f64(theta).sub(PI_2.mul_f64(n));
    let (s, c) = sin_cos_reduced(r);
    // rotate by n quarter turns
    match (n as i64).rem_euclid(4) {
        0 => (s, c),
        1 => (c, s.neg()),
        2 => (s.neg(), c.neg()),
        _ => (c.neg(), s),
    }
}

fn sin_cos_reduced(r: Dd) -> (Dd, Dd) {
    let r2 = r.mul(r);
    let mut s = r;
    let mut term = r;
    let mut k = 1.0;
    loop {
        term = term.mul(r2).div_f64(-((k + 1.0) * (k + 2.0)));
        s = s.add(term);
        k += 2.0;
        if term.abs() < 1e-36 {
            break;
        }
    }
    let mut c = Dd::from_f64(1.0);
    let mut term = Dd::from_f64(1.0);
    let mut k = 0.0;
    loop {
        term = term.mul(r2).div_f64(-((k + 1.0) * (k + 2.0)));
        c = c.add(term);
        k += 2.0;
        if term.abs() < 1e-36 {
            break;
        }
    }
    (s, c)
}

/// atan2 to double-double accuracy: one refinement step on the f64 result.
pub fn atan2_dd(y: f64, x: f64) -> Dd {
    if y == 0.0 {
        return if x >= 0.0 { Dd::from_f64(0.0) } else { PI };
    }
    let theta0 = y.atan2(x);
    let (s, c) = sin_cos_dd(theta0);
    // residual rotation: tan(delta) = (y cos - x sin)/(x cos + y sin)
    let num = c.mul_f64(y).sub(s.mul_f64(x));
    let den = c.mul_f64(x).add(s.mul_f64(y));
    let delta = num.div(den);
    Dd::from_f64(theta0).add(delta)
}

/// ln(|x + iy|/2) to double-double accuracy from the exact f64 components.
pub fn ln_half_abs_dd(x: f64, y: f64) -> Dd {
    // s = x^2 + y^2 exactly in dd, then ln(s)/2 - ln 2 with a first-order
    // correction for the dd tail of s
    let (px, ex) = two_prod(x, x);
    let (py, ey) = two_prod(y, y);
    let s = Dd::new(px, ex).add(Dd::new(py, ey));
    let corr = s.lo / s.hi;
    ln_dd(s.hi).add(Dd::from_f64(corr)).mul_f64(0.5).sub(LN2)
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default)]
pub struct DdC {
    pub re: Dd,
    pub im: Dd,
}

impl DdC {
    #[inline]
    pub fn new(re: Dd, im: Dd) -> Self {
        DdC { re, im }
    }

    #[inline]
    pub fn from_c64(z: num_complex::Complex64) -> Self {
        DdC { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub fn to_c64(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, o: DdC) -> DdC {
        DdC { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub fn sub(self, o: DdC) -> DdC {
        DdC { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    #[inline]
    pub fn mul(self, o: DdC) -> DdC {
        DdC {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn div(self, o: DdC) -> DdC {
        let norm = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(DdC { re: o.re, im: o.im.neg() });
        DdC { re: num.re.div(norm), im: num.im.div(norm) }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> DdC {
        DdC { re: self.re.mul_f64(x), im: self.im.mul_f64(x) }
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> DdC {
        DdC { re: self.re.div_f64(x), im: self.im.div_f64(x) }
    }

    #[inline]
    pub fn abs_sup(self) -> f64 {
        self.re.abs().max(self.im.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dd_mul_recovers_product_error() {
        let a = Dd::from_f64(1.0).div_f64(3.0);
        let b = a.mul_f64(3.0);
        assert!((b.to_f64() - 1.0).abs() < 1e-31);
        assert!((b.hi - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ln_dd_matches_f64_ln_to_higher_precision() {
        for &x in &[0.3, 1.0, 2.0, 7.25, 16.0, 123.456] {
            let l = ln_dd(x);
            assert!((l.hi - x.ln()).abs() <= x.ln().abs().max(1.0) * 1e-15, "x = {x}");
        }
        // ln(2) should reproduce the stored constant almost exactly
        let l2 = ln_dd(2.0);
        assert!((l2.sub(LN2)).abs() < 1e-33);
    }

    #[test]
    fn sin_cos_dd_pythagorean() {
        for &t in &[0.0, 0.3, 1.2, 2.9, -1.7, 3.14159, 6.2] {
            let (s, c) = sin_cos_dd(t);
            let p = s.mul(s).add(c.mul(c)).to_f64();
            assert!((p - 1.0).abs() < 1e-30, "t = {t}");
            assert!((s.to_f64() - t.sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn atan2_dd_consistent_with_f64() {
        for &(y, x) in &[(0.3, 1.2), (-0.9, 0.1), (2.0, -3.0), (-1.0, -1.0)] {
            let a = atan2_dd(y, x);
            assert!((a.hi - y.atan2(x)).abs() < 1e-15);
            let (s, c) = sin_cos_dd(a.hi);
            // tan(theta) must reproduce y/x to double-double accuracy
            let lhs = s.add(Dd::from_f64(a.lo).mul(c)); // sin(hi+lo) ~ sin hi + lo cos hi
            let t = lhs.div(c.sub(Dd::from_f64(a.lo).mul(s)));
            assert!((t.to_f64() - y / x).abs() < 1e-28 * (y / x).abs().max(1.0));
        }
    }
}
