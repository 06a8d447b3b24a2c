//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands and
//! Gauss–Legendre rules computed on demand.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Result of an adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: Complex64,
    pub error: f64,
    pub evaluations: usize,
}

fn gk15(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let x = h * XGK[i];
        let fsum = f(c - x) + f(c + x);
        kronrod += WGK[i] * fsum;
        if i % 2 == 1 {
            gauss += WG[i / 2] * fsum;
        }
    }
    kronrod *= h;
    gauss *= h;
    (kronrod, (kronrod - gauss).norm())
}

#[derive(Debug)]
struct Interval {
    err: f64,
    a: f64,
    b: f64,
    value: Complex64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.a == other.a
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        // largest error first; ties broken by position for determinism
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Adaptive Gauss–Kronrod integration of a complex integrand over [a, b]
/// to absolute accuracy `tol`.
pub fn integrate_complex(
    f: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<QuadResult> {
    if !(a < b) {
        return Err(Error::domain("integrate_complex needs a < b"));
    }
    let mut evals = 0usize;
    let mut eval = |x: f64| {
        evals += 1;
        f(x)
    };
    let (v, e) = gk15(&mut eval, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Interval { err: e, a, b, value: v });
    let mut total_err = e;
    let max_intervals = 20_000;
    while total_err > tol && heap.len() < max_intervals {
        let worst = heap.pop().expect("heap cannot be empty");
        if worst.err <= f64::EPSILON * worst.value.norm() {
            // interval converged to roundoff; refining further cannot help
            heap.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break; // interval at floating-point resolution
        }
        total_err -= worst.err;
        let (v1, e1) = gk15(&mut eval, worst.a, mid);
        let (v2, e2) = gk15(&mut eval, mid, worst.b);
        total_err += e1 + e2;
        heap.push(Interval { err: e1, a: worst.a, b: mid, value: v1 });
        heap.push(Interval { err: e2, a: mid, b: worst.b, value: v2 });
    }
    let value = heap.iter().fold(Complex64::new(0.0, 0.0), |acc, iv| acc + iv.value);
    if total_err > tol.max(1e-13 * value.norm().max(1.0)) && heap.len() >= max_intervals {
        return Err(Error::QuadTolerance { achieved: total_err, requested: tol });
    }
    Ok(QuadResult { value, error: total_err, evaluations: evals })
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rule) = cache.lock().unwrap().get(&n) {
        return rule.clone();
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Newton on P_n from the Chebyshev-like initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    cache.lock().unwrap().insert(n, (nodes.clone(), weights.clone()));
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_oscillatory_complex() {
        // int_0^{2 pi} e^{i 5 x} dx = 0; int_0^{pi} sin x dx = 2
        let mut f = |x: f64| Complex64::new(0.0, 5.0 * x).exp();
        let r = integrate_complex(&mut f, 0.0, 2.0 * std::f64::consts::PI, 1e-12).unwrap();
        assert!(r.value.norm() < 1e-12);
        let mut g = |x: f64| Complex64::new(x.sin(), 0.0);
        let r = integrate_complex(&mut g, 0.0, std::f64::consts::PI, 1e-13).unwrap();
        assert!((r.value.re - 2.0).abs() < 1e-13);
    }

    #[test]
    fn gauss_legendre_exact_for_polynomials() {
        let (x, w) = gauss_legendre(12);
        // degree-23 polynomial integrated exactly
        let integral: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(22)).sum();
        assert!((integral - 2.0 / 23.0).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn near_singular_peak() {
        let mut f = |x: f64| Complex64::new(1.0 / ((x - 0.3).powi(2) + 1e-6), 0.0);
        let r = integrate_complex(&mut f, 0.0, 1.0, 1e-9).unwrap();
        // arctan closed form
        let eps: f64 = 1e-3;
        let exact = ((1.0 - 0.3) / eps).atan() / eps + (0.3f64 / eps).atan() / eps;
        assert!((r.value.re - exact).abs() < 1e-8 * exact);
    }
}
