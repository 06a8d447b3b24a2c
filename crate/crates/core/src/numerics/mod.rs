//! Root finding, quadrature and series summation shared by the resonator
//! models: complex Newton iteration, exhaustive winding-number root searches
//! over rectangles, Gauss–Kronrod adaptive quadrature, principal-value
//! integration by singularity subtraction, Euler-accelerated oscillatory
//! tails, and Euler–Maclaurin summation of slowly converging series.

mod newton;
mod osc;
mod pv;
mod quad;
mod tail;
mod winding;

pub use newton::{newton_complex, Derivative};
pub use osc::oscillatory_tail;
pub use pv::{pv_integral, PvIntegrand};
pub use quad::{gauss_legendre, integrate_complex, QuadResult};
pub use tail::{series_sum_tail, TailSum};
pub use winding::{roots_in_region, winding_number, SearchRegion};
