//! The nephroid region φ(𝔻) as an implicit sextic, with membership queries
//! and an independent ray-crossing oracle over the parametric boundary.

use crate::targets::nephroid_boundary;
use crate::{ComplexValue, Error, Result};

/// Left cusp of the nephroid, φ(−1) = 1/3.
pub const CUSP_LEFT: f64 = 1.0 / 3.0;
/// Right cusp, φ(1) = 5/3.
pub const CUSP_RIGHT: f64 = 5.0 / 3.0;

/// F(u, v) = ((u−1)² + v² − 4/9)³ − (4/3) v².
///
/// Negative inside the region, zero on the curve, positive outside. The sign
/// convention is fixed by F(1, 0) = −64/729 and certified against the
/// ray-crossing oracle.
pub fn implicit_value(u: f64, v: f64) -> f64 {
    let du = u - 1.0;
    let s = du * du + v * v - 4.0 / 9.0;
    s * s * s - 4.0 / 3.0 * v * v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipVerdict {
    Interior,
    Boundary,
    Exterior,
}

/// Classification of a point with its signed implicit margin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub verdict: MembershipVerdict,
    /// Signed implicit value F(u, v) at the query point.
    pub margin: f64,
}

/// Sign test against the implicit sextic; |F| ≤ `tol` classifies as Boundary.
///
/// Near the cusps the gradient of F vanishes, so this works on the raw
/// implicit value rather than any distance normalization.
pub fn contains(w: ComplexValue, tol: f64) -> Result<Membership> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!(
            "membership tolerance {tol} must be positive"
        )));
    }
    let margin = implicit_value(w.re, w.im);
    let verdict = if margin.abs() <= tol {
        MembershipVerdict::Boundary
    } else if margin < 0.0 {
        MembershipVerdict::Interior
    } else {
        MembershipVerdict::Exterior
    };
    Ok(Membership { verdict, margin })
}

/// Even–odd ray-crossing membership against the parametric boundary,
/// independent of the implicit sign test. Test-oracle grade: builds a fresh
/// region of `n` samples. For batch queries build one [`NephroidRegion`].
pub fn membership_oracle(w: ComplexValue, n: usize) -> Result<Membership> {
    NephroidRegion::with_resolution(n)?.membership_oracle(w)
}

/// The region with a cached boundary sampling (t, u, v) at fixed resolution.
#[derive(Debug, Clone)]
pub struct NephroidRegion {
    pub cusp_left: ComplexValue,
    pub cusp_right: ComplexValue,
    /// Ordered samples (t, u, v) with t increasing over (−π, π].
    pub boundary_samples: Vec<(f64, f64, f64)>,
}

impl NephroidRegion {
    /// Sample the boundary at `n` uniform angles (n ≥ 1024).
    pub fn with_resolution(n: usize) -> Result<Self> {
        if n < 1024 {
            return Err(Error::Parameter(format!(
                "oracle needs n >= 1024 samples, got {n}"
            )));
        }
        let samples = (0..n)
            .map(|k| {
                let t = -std::f64::consts::PI
                    + 2.0 * std::f64::consts::PI * (k as f64 + 1.0) / n as f64;
                let p = nephroid_boundary(t);
                (t, p.re, p.im)
            })
            .collect();
        Ok(NephroidRegion {
            cusp_left: ComplexValue::new(CUSP_LEFT, 0.0),
            cusp_right: ComplexValue::new(CUSP_RIGHT, 0.0),
            boundary_samples: samples,
        })
    }

    /// Even–odd test: count crossings of the horizontal ray from `w` towards
    /// +∞ with the sampled boundary, refining each sign change of v(t) − v₀
    /// by bisection on the exact parameterization.
    pub fn membership_oracle(&self, w: ComplexValue) -> Result<Membership> {
        let (u0, v0) = (w.re, w.im);
        // Too close to the boundary polyline: refuse to classify.
        let mut min_dist2 = f64::INFINITY;
        for &(_, u, v) in &self.boundary_samples {
            let d2 = (u - u0) * (u - u0) + (v - v0) * (v - v0);
            if d2 < min_dist2 {
                min_dist2 = d2;
            }
        }
        if min_dist2.sqrt() < 1e-9 {
            return Err(Error::OracleInconclusive);
        }

        let n = self.boundary_samples.len();
        let mut crossings = 0usize;
        for i in 0..n {
            let (t0, _, va) = self.boundary_samples[i];
            let (t1, _, vb) = self.boundary_samples[(i + 1) % n];
            // wrap the parameter interval at the seam
            let t1 = if t1 > t0 {
                t1
            } else {
                t1 + 2.0 * std::f64::consts::PI
            };
            if (va > v0) == (vb > v0) {
                continue;
            }
            let t_star = bisect_crossing(t0, t1, v0);
            let p = nephroid_boundary(t_star);
            if (p.re - u0).abs() < 1e-9 && (p.im - v0).abs() < 1e-9 {
                return Err(Error::OracleInconclusive);
            }
            if p.re > u0 {
                crossings += 1;
            }
        }
        let margin = implicit_value(u0, v0);
        let verdict = if crossings % 2 == 1 {
            MembershipVerdict::Interior
        } else {
            MembershipVerdict::Exterior
        };
        Ok(Membership { verdict, margin })
    }
}

fn bisect_crossing(mut lo: f64, mut hi: f64, v0: f64) -> f64 {
    let sign_lo = nephroid_boundary(lo).im - v0 > 0.0;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if (nephroid_boundary(mid).im - v0 > 0.0) == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
