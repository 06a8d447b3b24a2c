//! Numerical workbench for open optical resonators.
//!
//! Three exactly solvable cavities — a one dimensional dielectric slab closed
//! by a mirror, a one dimensional cavity with a thin semitransparent mirror,
//! and a two dimensional dielectric disk — are quantized as a discrete set of
//! interior modes coupled to continuum channel modes. The crate provides the
//! exact scattering solutions, the interior/channel mode bases and coupling
//! amplitudes, expansion coefficients, resonance searches in the complex
//! wavenumber plane, and cavity gain factors, each cross-checked against an
//! independent route (overlap quadrature, winding-number audits, spectral
//! Green-function integrals, closed forms).
//!
//! Units: `c = 1`, wavenumbers are reported as `k·l` (or `k·R` for the disk)
//! once the geometry length is set to one, which is the default everywhere.

pub mod engine;
pub mod error;
pub mod mirror;
pub mod numerics;
pub mod disk;
pub mod slab;
pub mod specfun;

pub use error::{Error, Result};
