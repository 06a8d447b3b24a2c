//! Complex Newton iteration with an analytic or stencil derivative.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// How `newton_complex` obtains f'.
pub enum Derivative<'a> {
    /// Caller-supplied analytic derivative.
    Analytic(&'a dyn Fn(Complex64) -> Complex64),
    /// Eight-point circle stencil (trapezoidal Cauchy integral). Exact up to
    /// O(rho^8) for analytic f and free of subtractive cancellation: the
    /// constant term drops out of the stencil by symmetry, so the noise
    /// floor scales with |f| on the circle, not with 1/step.
    CircleStencil,
}

const STENCIL_POINTS: usize = 8;

fn stencil_derivative(f: &dyn Fn(Complex64) -> Complex64, z: Complex64, scale: f64) -> Complex64 {
    let rho = 1e-4 * scale.max(1e-12);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..STENCIL_POINTS {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / STENCIL_POINTS as f64;
        let dir = Complex64::new(theta.cos(), theta.sin());
        acc += f(z + rho * dir) * dir.conj();
    }
    acc / (STENCIL_POINTS as f64 * rho)
}

/// Newton iteration for a root of f from `seed`, stopping at |f| <= tol.
///
/// The iteration is capped at 60 steps; failure reports the last iterate
/// and residual. Steps that increase |f| are halved a few times before
/// being accepted, which keeps the iteration inside the seed's basin.
pub fn newton_complex(
    f: &dyn Fn(Complex64) -> Complex64,
    df: Derivative,
    seed: Complex64,
    tol: f64,
) -> Result<Complex64> {
    let mut z = seed;
    let mut fz = f(z);
    if fz.norm() <= tol {
        return Ok(z);
    }
    for _ in 0..60 {
        let d = match &df {
            Derivative::Analytic(g) => g(z),
            Derivative::CircleStencil => stencil_derivative(f, z, z.norm().max(1.0)),
        };
        if d.norm() == 0.0 {
            return Err(Error::NoConvergence { iterations: 60, last: z, residual: fz.norm() });
        }
        let mut step = fz / d;
        let mut z_new = z - step;
        let mut f_new = f(z_new);
        // damped retreat if the full step overshoots
        let mut halvings = 0;
        while f_new.norm() > fz.norm() && halvings < 6 {
            step *= 0.5;
            z_new = z - step;
            f_new = f(z_new);
            halvings += 1;
        }
        z = z_new;
        fz = f_new;
        if fz.norm() <= tol {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence { iterations: 60, last: z, residual: fz.norm() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_root_of_quadratic() {
        let f = |z: Complex64| z * z + 1.0;
        let root =
            newton_complex(&f, Derivative::CircleStencil, Complex64::new(0.0, 0.9), 1e-13).unwrap();
        assert!((root - Complex64::i()).norm() < 1e-12);
        let df = |z: Complex64| 2.0 * z;
        let root2 =
            newton_complex(&f, Derivative::Analytic(&df), Complex64::new(0.0, 0.9), 1e-13).unwrap();
        assert!((root2 - Complex64::i()).norm() < 1e-12);
    }

    #[test]
    fn identity_residual_converges_in_one_step() {
        let seed = Complex64::new(0.3, -0.7);
        let f = move |z: Complex64| z - seed;
        let root = newton_complex(&f, Derivative::CircleStencil, seed + 1.0, 1e-14).unwrap();
        assert!((root - seed).norm() < 1e-14);
    }

    #[test]
    fn slab_resonance_condition_root() {
        // tan(n k) + i n = 0 (unit length), n = 1.5: root k = pi/3 + (i/3) ln 0.2
        let n = 1.5;
        let f = move |k: Complex64| {
            let a = n * k;
            a.sin() / a.cos() + Complex64::new(0.0, n)
        };
        let seed = Complex64::new(std::f64::consts::PI / 3.0, -0.5);
        let root = newton_complex(&f, Derivative::CircleStencil, seed, 1e-12).unwrap();
        let exact = Complex64::new(
            std::f64::consts::PI / 3.0,
            0.2f64.ln() / 3.0,
        );
        assert!((root - exact).norm() < 1e-10, "{root} vs {exact}");
    }
}
