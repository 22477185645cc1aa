//! Bracketing root finder: bisection with secant acceleration.

use crate::{Error, Result};

const MAX_ITER: usize = 200;

/// Root of a continuous f on [lo, hi] with f(lo)·f(hi) < 0.
///
/// Tries a secant step each round and falls back to bisection whenever the
/// step leaves the bracket or fails to shrink it fast enough, so convergence
/// is never worse than bisection. Stops when the bracket width is ≤ `tol`.
pub fn find_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!(
            "root tolerance {tol} must be positive"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    // One bracket update; returns the zero if it is hit exactly.
    let shrink = |a: &mut f64, fa: &mut f64, b: &mut f64, fb: &mut f64, x: f64, fx: f64| {
        if fx.signum() == fa.signum() {
            *a = x;
            *fa = fx;
        } else {
            *b = x;
            *fb = fx;
        }
    };
    for _ in 0..MAX_ITER {
        let width = (b - a).abs();
        if width <= tol {
            return Ok(0.5 * (a + b));
        }
        // Secant candidate when it lands strictly inside, else midpoint.
        let sec = b - fb * (b - a) / (fb - fa);
        let x = if sec.is_finite() && sec > a.min(b) && sec < a.max(b) {
            sec
        } else {
            0.5 * (a + b)
        };
        let fx = f(x);
        if fx == 0.0 {
            return Ok(x);
        }
        shrink(&mut a, &mut fa, &mut b, &mut fb, x, fx);
        // Guarantee at least bisection-rate progress every round.
        if (b - a).abs() > 0.5 * width {
            let m = 0.5 * (a + b);
            let fm = f(m);
            if fm == 0.0 {
                return Ok(m);
            }
            shrink(&mut a, &mut fa, &mut b, &mut fb, m, fm);
        }
    }
    Err(Error::MaxIterations)
}
