//! Numerical certification that a dominant's image lies in the closed
//! nephroid region: dense boundary sampling through the implicit sextic,
//! with golden-section refinement around the worst angle and an interior
//! polar grid as a second check. Boundary containment of the analytic
//! dominant certifies containment of the whole image by the maximum
//! principle.

use crate::bounds::{kustner_lower_bound, TauDelta};
use crate::dominants::{eval_dominant, DominantSpec};
use crate::nephroid::implicit_value;
use crate::numerics::{hyp2f1, hyp2f1_derivative, Hyp2F1Params};
use crate::targets::angular_distance;
use crate::{ComplexValue, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContainmentVerdict {
    /// Every sampled implicit value is below −tol: strictly interior.
    ContainedStrict,
    /// The worst implicit value sits within ±tol of zero: the image touches
    /// the boundary (sharpness witness).
    ContainedTangent,
    /// Some sampled implicit value exceeds +tol: the image leaves the region.
    Violated,
}

/// Outcome of a boundary-sampling containment check.
#[derive(Debug, Clone)]
pub struct ContainmentReport {
    pub spec: DominantSpec,
    /// Number of boundary angles actually evaluated.
    pub samples: usize,
    /// Max of the implicit value over the sampled (and refined) boundary image.
    pub worst_value: f64,
    pub worst_angle: f64,
    /// Max of the implicit value over the 32×32 interior grid.
    pub interior_worst: f64,
    pub verdict: ContainmentVerdict,
    /// Angles whose image satisfies |F| ≤ tol.
    pub tangency_points: Vec<f64>,
    /// Angles skipped (branch-point exclusion zone or branch errors).
    pub skipped: usize,
}

/// Sample q_β(e^{it}) at `n` angles (n ≥ 2048), classify the image against
/// the nephroid, and report the worst implicit value with its location.
///
/// Angles within 1e−6 of a branch-point angle of the family's target are
/// excluded; more than 1% skipped angles aborts with a sampling error.
pub fn verify_containment(spec: DominantSpec, n: usize, tol: f64) -> Result<ContainmentReport> {
    if n < 2048 {
        return Err(Error::Parameter(format!(
            "containment check needs n >= 2048, got {n}"
        )));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let branch_angles = spec.family.branch_point_angles();
    let mut worst_value = f64::NEG_INFINITY;
    let mut worst_angle = 0.0;
    let mut tangency_points = Vec::new();
    let mut skipped = 0usize;
    let mut samples = 0usize;

    let step = 2.0 * std::f64::consts::PI / n as f64;
    for k in 0..n {
        let t = -std::f64::consts::PI + step * (k as f64 + 0.5);
        if branch_angles.iter().any(|&s| angular_distance(t, s) < 1e-6) {
            skipped += 1;
            continue;
        }
        let z = ComplexValue::new(t.cos(), t.sin());
        let q = match eval_dominant(spec, z) {
            Ok(q) => q,
            Err(Error::Branch(_)) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        samples += 1;
        let f = implicit_value(q.re, q.im);
        if f > worst_value {
            worst_value = f;
            worst_angle = t;
        }
        if f.abs() <= tol {
            tangency_points.push(t);
        }
    }
    if skipped * 100 > n {
        return Err(Error::Sampling(format!("{skipped} of {n} angles skipped")));
    }

    // Local golden-section refinement of the worst angle.
    if let Some((t, f)) = refine_worst(spec, worst_angle - step, worst_angle + step) {
        if f > worst_value {
            worst_value = f;
            worst_angle = t;
        }
    }
    if worst_value.abs() <= tol
        && !tangency_points
            .iter()
            .any(|&t| (t - worst_angle).abs() < 0.5 * step)
    {
        tangency_points.push(worst_angle);
    }

    // Interior grid: the image of the open disk must not cross either. For
    // an analytic dominant the boundary image dominates, so an interior
    // escape that the boundary sweep missed signals a broken evaluation,
    // not a containment verdict.
    let mut interior_worst = f64::NEG_INFINITY;
    for i in 0..32 {
        let r = (i as f64 + 0.5) / 32.0;
        for j in 0..32 {
            let t = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / 32.0;
            let z = ComplexValue::new(r * t.cos(), r * t.sin());
            if let Ok(q) = eval_dominant(spec, z) {
                interior_worst = interior_worst.max(implicit_value(q.re, q.im));
            }
        }
    }
    if interior_worst > tol && worst_value <= tol {
        return Err(Error::Sampling(format!(
            "interior sample at implicit value {interior_worst:e} escapes although the \
             boundary stays at {worst_value:e}"
        )));
    }

    let verdict = if worst_value > tol {
        ContainmentVerdict::Violated
    } else if worst_value >= -tol {
        ContainmentVerdict::ContainedTangent
    } else {
        ContainmentVerdict::ContainedStrict
    };
    Ok(ContainmentReport {
        spec,
        samples,
        worst_value,
        worst_angle,
        interior_worst,
        verdict,
        tangency_points,
        skipped,
    })
}

fn refine_worst(spec: DominantSpec, mut lo: f64, mut hi: f64) -> Option<(f64, f64)> {
    let g = |t: f64| -> Option<f64> {
        let z = ComplexValue::new(t.cos(), t.sin());
        let q = eval_dominant(spec, z).ok()?;
        Some(implicit_value(q.re, q.im))
    };
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = hi - (hi - lo) * INV_PHI;
    let mut b = lo + (hi - lo) * INV_PHI;
    let mut fa = g(a)?;
    let mut fb = g(b)?;
    for _ in 0..70 {
        if fa < fb {
            lo = a;
            a = b;
            fa = fb;
            b = lo + (hi - lo) * INV_PHI;
            fb = g(b)?;
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - (hi - lo) * INV_PHI;
            fa = g(a)?;
        }
    }
    let t = 0.5 * (lo + hi);
    Some((t, g(t)?))
}

/// Sampled estimate of the order of starlikeness of z·F(a, b; c; z):
/// the minimum of Re(1 + zF′/F) over a polar grid of the disk of the given
/// radius. An upper bound on the true infimum σ.
#[derive(Debug, Clone, Copy)]
pub struct StarlikenessEstimate {
    pub inf_estimate: f64,
    pub grid_size: usize,
    pub radius: f64,
}

pub fn starlikeness_order_estimate(
    a: f64,
    b: f64,
    c: f64,
    radius: f64,
    grid: usize,
) -> Result<StarlikenessEstimate> {
    kustner_lower_bound(a, b, c)?; // validates 0 < a <= b <= c
    if radius.is_nan() || radius <= 0.0 || radius >= 1.0 {
        return Err(Error::Parameter(format!(
            "radius {radius} must lie in (0, 1)"
        )));
    }
    if grid == 0 {
        return Err(Error::Parameter("grid must be non-empty".into()));
    }
    let params = Hyp2F1Params::new(a, b, c)?;
    let mut min = f64::INFINITY;
    for i in 0..grid {
        let r = radius * (i as f64 + 1.0) / grid as f64;
        for j in 0..grid {
            let t = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / grid as f64;
            let z = ComplexValue::new(r * t.cos(), r * t.sin());
            let f = hyp2f1(params, z, 1e-11)?;
            if f.norm() < 1e-12 {
                return Err(Error::Pole(format!("F vanishes near z = {z}")));
            }
            let df = hyp2f1_derivative(params, z)?;
            let val = (ComplexValue::new(1.0, 0.0) + z * df / f).re;
            if val < min {
                min = val;
            }
        }
    }
    Ok(StarlikenessEstimate {
        inf_estimate: min,
        grid_size: grid * grid,
        radius,
    })
}

/// Tabulate τ(β) and δ(β) on a grid in (0, 50], checking the ranges
/// τ ∈ (−1/3, 2/3) and δ ∈ (5/3 − √2, 2/3) along the way.
pub fn range_of_tau_delta(beta_grid: &[f64]) -> Result<Vec<TauDelta>> {
    let mut out = Vec::with_capacity(beta_grid.len());
    for &beta in beta_grid {
        if !(beta > 0.0 && beta <= 50.0) {
            return Err(Error::Parameter(format!("beta {beta} outside (0, 50]")));
        }
        let tau = crate::bounds::tau(beta)?;
        let delta = crate::bounds::delta(beta)?;
        if !(tau > -1.0 / 3.0 && tau < 2.0 / 3.0) {
            return Err(Error::Convergence(format!(
                "tau({beta}) = {tau} outside (-1/3, 2/3)"
            )));
        }
        let lo = 5.0 / 3.0 - std::f64::consts::SQRT_2;
        if !(delta > lo && delta < 2.0 / 3.0) {
            return Err(Error::Convergence(format!(
                "delta({beta}) = {delta} outside (5/3 - sqrt 2, 2/3)"
            )));
        }
        out.push(TauDelta { beta, tau, delta });
    }
    Ok(out)
}
