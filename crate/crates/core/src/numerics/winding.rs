//! Exhaustive root searches in complex rectangles by the argument principle.
//!
//! The winding number of f along the rectangle boundary counts the enclosed
//! roots. Regions are split quadtree-style until each cell holds at most one
//! root, the root is polished by Newton from the cell centroid, and the
//! total count is audited against the winding number of the full region.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::newton::{newton_complex, Derivative};

/// A closed axis-aligned rectangle in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl SearchRegion {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min < re_max && im_min < im_max) {
            return Err(Error::domain("search region must have positive extent"));
        }
        Ok(SearchRegion { re_min, re_max, im_min, im_max })
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }

    fn centroid(&self) -> Complex64 {
        Complex64::new(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))
    }

    fn contains(&self, z: Complex64, slack: f64) -> bool {
        z.re >= self.re_min - slack
            && z.re <= self.re_max + slack
            && z.im >= self.im_min - slack
            && z.im <= self.im_max + slack
    }

    fn diameter(&self) -> f64 {
        (self.re_max - self.re_min).hypot(self.im_max - self.im_min)
    }
}

/// Phase increment along one straight edge, refined until every step turns
/// the phase by less than pi/4.
fn edge_phase(f: &dyn Fn(Complex64) -> Complex64, a: Complex64, b: Complex64) -> Result<f64> {
    fn rec(
        f: &dyn Fn(Complex64) -> Complex64,
        a: Complex64,
        fa: Complex64,
        b: Complex64,
        fb: Complex64,
        depth: u32,
    ) -> Result<f64> {
        let step = (fb / fa).arg();
        if step.abs() < std::f64::consts::FRAC_PI_4 && depth >= 2 {
            return Ok(step);
        }
        if depth > 44 {
            return Err(Error::BoundaryRoot { magnitude: fa.norm().min(fb.norm()) });
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm.norm() < 1e-280 {
            return Err(Error::BoundaryRoot { magnitude: fm.norm() });
        }
        Ok(rec(f, a, fa, m, fm, depth + 1)? + rec(f, m, fm, b, fb, depth + 1)?)
    }
    let fa = f(a);
    let fb = f(b);
    if fa.norm() < 1e-280 || fb.norm() < 1e-280 {
        return Err(Error::BoundaryRoot { magnitude: fa.norm().min(fb.norm()) });
    }
    rec(f, a, fa, b, fb, 0)
}

/// Winding number of f around the rectangle boundary (counterclockwise).
pub fn winding_number(f: &dyn Fn(Complex64) -> Complex64, region: &SearchRegion) -> Result<i64> {
    let c = region.corners();
    let mut total = 0.0;
    for i in 0..4 {
        total += edge_phase(f, c[i], c[(i + 1) % 4])?;
    }
    let turns = total / (2.0 * std::f64::consts::PI);
    let n = turns.round();
    if (turns - n).abs() > 0.25 {
        return Err(Error::domain(format!(
            "winding number did not settle near an integer: {turns}"
        )));
    }
    Ok(n as i64)
}

fn subdivide(region: &SearchRegion, fraction: f64) -> [SearchRegion; 4] {
    let rm = region.re_min + fraction * (region.re_max - region.re_min);
    let im = region.im_min + fraction * (region.im_max - region.im_min);
    [
        SearchRegion { re_min: region.re_min, re_max: rm, im_min: region.im_min, im_max: im },
        SearchRegion { re_min: rm, re_max: region.re_max, im_min: region.im_min, im_max: im },
        SearchRegion { re_min: region.re_min, re_max: rm, im_min: im, im_max: region.im_max },
        SearchRegion { re_min: rm, re_max: region.re_max, im_min: im, im_max: region.im_max },
    ]
}

fn solve_cell(
    f: &dyn Fn(Complex64) -> Complex64,
    region: &SearchRegion,
    count: i64,
    depth: u32,
    polish_tol: f64,
    out: &mut Vec<Complex64>,
) -> Result<()> {
    if count == 0 {
        return Ok(());
    }
    if count == 1 {
        let root = newton_complex(f, Derivative::CircleStencil, region.centroid(), polish_tol);
        if let Ok(root) = root {
            if region.contains(root, 0.05 * region.diameter()) {
                out.push(root);
                return Ok(());
            }
        }
        // Newton left the cell or stalled: tighten by subdividing further
    }
    if depth >= 40 {
        return Err(Error::RootAudit {
            re_min: region.re_min,
            re_max: region.re_max,
            im_min: region.im_min,
            im_max: region.im_max,
            expected: count,
            found: 0,
        });
    }
    // split; if a root sits on the split lines, nudge the split fraction
    let mut children = None;
    'fraction: for &fraction in &[0.5, 0.47, 0.53, 0.41] {
        let cells = subdivide(region, fraction);
        let mut counts = [0i64; 4];
        for (i, cell) in cells.iter().enumerate() {
            match winding_number(f, cell) {
                Ok(n) => counts[i] = n,
                Err(_) => continue 'fraction,
            }
        }
        if counts.iter().sum::<i64>() == count {
            children = Some((cells, counts));
            break;
        }
    }
    let (cells, counts) = children.ok_or(Error::RootAudit {
        re_min: region.re_min,
        re_max: region.re_max,
        im_min: region.im_min,
        im_max: region.im_max,
        expected: count,
        found: 0,
    })?;
    for (cell, n) in cells.iter().zip(counts) {
        solve_cell(f, cell, n, depth + 1, polish_tol, out)?;
    }
    Ok(())
}

/// All roots of f inside the region, audited by the winding number.
///
/// Roots are polished to |f| <= 1e-10, deduplicated within 1e-8 and returned
/// sorted by (Re, Im). The count is guaranteed to match the region's winding
/// number; a mismatch (or more than `max_roots` roots) is an error.
pub fn roots_in_region(
    f: &dyn Fn(Complex64) -> Complex64,
    region: &SearchRegion,
    max_roots: usize,
) -> Result<Vec<Complex64>> {
    let total = winding_number(f, region)?;
    if total < 0 {
        return Err(Error::domain("negative winding number: f must be analytic (no poles)"));
    }
    if total as usize > max_roots {
        return Err(Error::RootAudit {
            re_min: region.re_min,
            re_max: region.re_max,
            im_min: region.im_min,
            im_max: region.im_max,
            expected: total,
            found: max_roots,
        });
    }
    let mut roots = Vec::new();
    solve_cell(f, region, total, 0, 1e-10, &mut roots)?;
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    roots.dedup_by(|a, b| (*a - *b).norm() < 1e-8);
    if roots.len() != total as usize {
        return Err(Error::RootAudit {
            re_min: region.re_min,
            re_max: region.re_max,
            im_min: region.im_min,
            im_max: region.im_max,
            expected: total,
            found: roots.len(),
        });
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sine_roots() {
        let f = |z: Complex64| z.sin();
        let region = SearchRegion::new(2.0, 8.0, -1.0, 1.0).unwrap();
        let roots = roots_in_region(&f, &region, 8).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0] - Complex64::new(std::f64::consts::PI, 0.0)).norm() < 1e-10);
        assert!((roots[1] - Complex64::new(2.0 * std::f64::consts::PI, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn empty_region() {
        let f = |z: Complex64| z.sin();
        let region = SearchRegion::new(0.5, 2.5, 0.5, 1.5).unwrap();
        assert_eq!(winding_number(&f, &region).unwrap(), 0);
        assert!(roots_in_region(&f, &region, 4).unwrap().is_empty());
    }

    #[test]
    fn clustered_roots_are_separated() {
        // roots at 1 +/- 0.01 and 1 + 0.5i
        let f = |z: Complex64| {
            (z - Complex64::new(0.99, 0.0))
                * (z - Complex64::new(1.01, 0.0))
                * (z - Complex64::new(1.0, 0.5))
        };
        let region = SearchRegion::new(0.0, 2.0, -0.2, 0.8).unwrap();
        let roots = roots_in_region(&f, &region, 5).unwrap();
        assert_eq!(roots.len(), 3);
        // the |f| <= 1e-10 polish maps to ~1e-8 in position for this cluster
        assert!((roots[0] - Complex64::new(0.99, 0.0)).norm() < 1e-7);
        assert!((roots[1] - Complex64::new(1.0, 0.5)).norm() < 1e-9);
        assert!((roots[2] - Complex64::new(1.01, 0.0)).norm() < 1e-7);
        for r in &roots {
            assert!(f(*r).norm() <= 1e-10);
        }
    }

    #[test]
    fn winding_counts_multiplicity() {
        let f = |z: Complex64| (z - Complex64::new(0.5, 0.0)).powi(3);
        let region = SearchRegion::new(0.0, 1.0, -0.5, 0.5).unwrap();
        assert_eq!(winding_number(&f, &region).unwrap(), 3);
    }
}
