//! One dimensional dielectric cavity closed by a perfect mirror.
//!
//! A dielectric of index n fills x in [-l, 0] against a mirror at x = -l;
//! empty space extends over x > 0. The exact scattering state, S-matrix and
//! interior amplitude are closed forms. The interior/channel decomposition
//! at x = 0 comes in two variants: Neumann interior condition (Dirichlet
//! channel) and the interchanged pair; physical quantities agree between
//! them while mode ladders, couplings and expansion coefficients differ.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Boundary-condition variant of the interior/channel split at x = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcVariant {
    /// Interior modes with vanishing derivative at x = 0-, channel modes
    /// vanishing at x = 0+.
    NeumannCavity,
    /// Interior modes vanishing at x = 0-, channel modes with vanishing
    /// derivative at x = 0+.
    DirichletCavity,
}

/// Distributional channel-coefficient kernel at fixed k:
/// beta(k, k') = delta_coeff * delta(k' - k) + PV[ pv_part(k') / (k'^2 - k^2) ].
pub struct BetaKernel {
    pub k: f64,
    pub delta_coeff: Complex64,
    pub pv_part: Box<dyn Fn(f64) -> Complex64 + Send + Sync>,
}

/// Geometry and material of the slab cavity.
#[derive(Clone, Copy, Debug)]
pub struct Slab {
    /// Refractive index of the dielectric (any positive value, also < 1).
    pub n: f64,
    /// Cavity length; interfaces report wavenumbers as k * length.
    pub length: f64,
}

impl Slab {
    pub fn new(n: f64, length: f64) -> Result<Self> {
        if !(n > 0.0) || !(length > 0.0) {
            return Err(Error::domain("slab needs n > 0 and length > 0"));
        }
        Ok(Slab { n, length })
    }

    /// Single-channel S-matrix, S = -(n cos + i sin)/(n cos - i sin) at nkl.
    ///
    /// The cos/sin form never overflows at the tan poles, and numerator and
    /// denominator are exact conjugates up to sign for real k, so |S| = 1 to
    /// machine precision.
    pub fn s_matrix(&self, k: f64) -> Complex64 {
        let a = self.n * k * self.length;
        let num = Complex64::new(self.n * a.cos(), a.sin());
        -num / num.conj()
    }

    /// Interior mode-strength amplitude I_k = -2in/(n cos(nkl) - i sin(nkl)).
    pub fn mode_strength(&self, k: f64) -> Complex64 {
        let a = self.n * k * self.length;
        Complex64::new(0.0, -2.0 * self.n) / Complex64::new(self.n * a.cos(), -a.sin())
    }

    /// Exact scattering state at real k, for x >= -length.
    pub fn exact_field(&self, k: f64, x: f64) -> Result<Complex64> {
        if x < -self.length {
            return Err(Error::domain("exact_field: x < -length is behind the mirror"));
        }
        let norm = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
        if x <= 0.0 {
            let arg = self.n * k * (x + self.length);
            Ok(norm * self.mode_strength(k) / self.n * arg.sin())
        } else {
            let out = Complex64::new(0.0, k * x).exp();
            Ok(norm * (out.conj() + self.s_matrix(k) * out))
        }
    }

    /// Interior eigen-wavenumber k_lambda for the chosen variant.
    pub fn cavity_eigen_k(&self, bc: BcVariant, lambda: usize) -> Result<f64> {
        let nl = self.n * self.length;
        match bc {
            BcVariant::NeumannCavity => {
                Ok((2.0 * lambda as f64 + 1.0) * std::f64::consts::PI / (2.0 * nl))
            }
            BcVariant::DirichletCavity => {
                if lambda == 0 {
                    return Err(Error::domain("Dirichlet-variant mode index starts at 1"));
                }
                Ok(lambda as f64 * std::f64::consts::PI / nl)
            }
        }
    }

    /// First valid interior mode index of the variant.
    pub fn lambda_start(bc: BcVariant) -> usize {
        match bc {
            BcVariant::NeumannCavity => 0,
            BcVariant::DirichletCavity => 1,
        }
    }

    /// Normalized interior mode sqrt(2/l) sin(n k_lambda (x + l)) on [-l, 0].
    pub fn cavity_mode(&self, bc: BcVariant, lambda: usize, x: f64) -> Result<f64> {
        if !(-self.length..=0.0).contains(&x) {
            return Err(Error::domain("cavity_mode: x outside [-length, 0]"));
        }
        let kl = self.cavity_eigen_k(bc, lambda)?;
        Ok((2.0 / self.length).sqrt() * (self.n * kl * (x + self.length)).sin())
    }

    /// Channel mode on x >= 0: sqrt(2/pi) sin(kx) or cos(kx) by variant.
    pub fn channel_mode(&self, bc: BcVariant, k: f64, x: f64) -> Result<f64> {
        if x < 0.0 {
            return Err(Error::domain("channel_mode: x < 0"));
        }
        let amp = (2.0 / std::f64::consts::PI).sqrt();
        Ok(match bc {
            BcVariant::NeumannCavity => amp * (k * x).sin(),
            BcVariant::DirichletCavity => amp * (k * x).cos(),
        })
    }

    /// Coupling amplitude W_lambda(k) = V_lambda(k) between interior mode
    /// lambda and the channel at wavenumber k.
    pub fn coupling_w(&self, bc: BcVariant, lambda: usize, k: f64) -> Result<f64> {
        let klam = self.cavity_eigen_k(bc, lambda)?;
        let pl = std::f64::consts::PI * self.length;
        let sign = if lambda % 2 == 0 { 1.0 } else { -1.0 };
        Ok(match bc {
            BcVariant::NeumannCavity => -sign / self.n * (k / (klam * pl)).sqrt(),
            BcVariant::DirichletCavity => sign * (klam / (k * pl)).sqrt(),
        })
    }

    /// Expansion coefficient alpha_lambda(k) of the exact state onto
    /// interior mode lambda.
    ///
    /// Evaluated through the exactly equivalent pole-cancelled form
    /// (cos(nkl) = (-1)^{lambda+1} sin(nl(k - k_lambda)) on the Neumann
    /// ladder and its Dirichlet analogue), smooth through k = k_lambda.
    pub fn alpha(&self, bc: BcVariant, lambda: usize, k: f64) -> Result<Complex64> {
        let klam = self.cavity_eigen_k(bc, lambda)?;
        let nl = self.n * self.length;
        let d = k - klam;
        let sinc = if d == 0.0 { nl } else { (nl * d).sin() / d };
        let pref = match bc {
            BcVariant::NeumannCavity => k,
            BcVariant::DirichletCavity => klam,
        };
        Ok(self.mode_strength(k) * pref * sinc
            / (self.n * (std::f64::consts::PI * self.length).sqrt() * (k + klam)))
    }

    /// Channel-coefficient kernel beta(k, k') for the chosen variant.
    pub fn beta_kernel(&self, bc: BcVariant, k: f64) -> BetaKernel {
        let s = self.s_matrix(k);
        match bc {
            BcVariant::NeumannCavity => BetaKernel {
                k,
                delta_coeff: -Complex64::i() * (1.0 - s) / 2.0,
                pv_part: Box::new(move |kp: f64| kp * (1.0 + s) / std::f64::consts::PI),
            },
            BcVariant::DirichletCavity => BetaKernel {
                k,
                delta_coeff: (1.0 + s) / 2.0,
                pv_part: Box::new(move |_kp: f64| {
                    Complex64::i() * k * (1.0 - s) / std::f64::consts::PI
                }),
            },
        }
    }

    /// Residual of the resonance condition tan(n k l) + i n, via sin/cos.
    pub fn resonance_condition(&self, kc: Complex64) -> Complex64 {
        let a = self.n * kc * self.length;
        (a.sin() + Complex64::new(0.0, self.n) * a.cos()) / a.cos()
    }

    /// Entire function with the same zeros as the resonance condition,
    /// sin(nkl) + i n cos(nkl); suitable for winding-number searches.
    pub fn resonance_entire(&self, kc: Complex64) -> Complex64 {
        let a = self.n * kc * self.length;
        a.sin() + Complex64::new(0.0, self.n) * a.cos()
    }

    /// Denominator of the S-matrix, n cos(nkl) - i sin(nkl); its complex
    /// zeros are the resonance poles.
    pub fn s_pole_denominator(&self, kc: Complex64) -> Complex64 {
        let a = self.n * kc * self.length;
        self.n * a.cos() - Complex64::i() * a.sin()
    }

    /// The j-th closed-form resonance.
    pub fn analytic_resonance(&self, j: usize) -> Result<Complex64> {
        let r = (self.n - 1.0) / (self.n + 1.0);
        if r == 0.0 {
            return Err(Error::domain("n = 1 slab has no resonances"));
        }
        let nl = self.n * self.length;
        let re = if self.n > 1.0 {
            (2.0 * j as f64 + 1.0) * std::f64::consts::PI / 2.0
        } else {
            if j == 0 {
                return Err(Error::domain("n < 1 resonance index starts at 1"));
            }
            j as f64 * std::f64::consts::PI
        };
        Ok(Complex64::new(re, 0.5 * r.abs().ln()) / nl)
    }

    /// Cavity gain factor, closed form.
    pub fn gain_closed(&self, k: f64) -> f64 {
        let a = self.n * k * self.length;
        let b = k * self.length;
        let num = self.n * self.n * (1.0 - (2.0 * a).sin() / (2.0 * a));
        let den = (self.n * self.n * a.cos().powi(2) + a.sin().powi(2))
            * (1.0 - (2.0 * b).sin() / (2.0 * b));
        num / den
    }

    /// Integrated interior density of states; identical closed form for
    /// both boundary-condition variants.
    pub fn ldos_cavity(&self, _bc: BcVariant, k: f64) -> f64 {
        let a = self.n * k * self.length;
        self.length * self.mode_strength(k).norm_sqr() / (4.0 * std::f64::consts::PI)
            * (1.0 - (2.0 * a).sin() / (2.0 * a))
    }

    /// Integrated free-space density of states over the cavity volume.
    pub fn ldos_free(&self, k: f64) -> f64 {
        let b = k * self.length;
        self.length / std::f64::consts::PI * (1.0 - (2.0 * b).sin() / (2.0 * b))
    }

    /// Residual of the Siegert outgoing-wave condition at x = 0- for the
    /// interior trial state sin(n kc (x + l)):
    /// d xi/dx|_{0-} - i kc xi(0-) = kc (n cos(n kc l) - i sin(n kc l)).
    pub fn siegert_residual(&self, kc: Complex64) -> Complex64 {
        let a = self.n * kc * self.length;
        kc * (self.n * a.cos() - Complex64::i() * a.sin())
    }
}
