//! Adaptive Simpson quadrature for complex-valued integrands.

use crate::{ComplexValue, Error, Result};

const MAX_DEPTH: u32 = 48;

/// ∫ₐᵇ f(t) dt for f : ℝ → ℂ, to absolute tolerance `tol`.
pub fn integrate<F>(f: F, a: f64, b: f64, tol: f64) -> Result<ComplexValue>
where
    F: Fn(f64) -> ComplexValue,
{
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter(format!(
            "quadrature tolerance {tol} must be positive"
        )));
    }
    if a == b {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    let (value, err) = adapt(&f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH);
    if err > tol {
        return Err(Error::ToleranceNotMet {
            requested: tol,
            achieved: err,
        });
    }
    Ok(value)
}

/// ∫ f along the straight segment from `z0` to `z1`.
pub fn integrate_segment<F>(
    f: F,
    z0: ComplexValue,
    z1: ComplexValue,
    tol: f64,
) -> Result<ComplexValue>
where
    F: Fn(ComplexValue) -> ComplexValue,
{
    let dir = z1 - z0;
    if dir.norm() == 0.0 {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    integrate(|s| f(z0 + dir * s) * dir, 0.0, 1.0, tol)
}

fn simpson(a: f64, b: f64, fa: ComplexValue, fm: ComplexValue, fb: ComplexValue) -> ComplexValue {
    (fa + fm * 4.0 + fb) * ((b - a) / 6.0)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: ComplexValue,
    fm: ComplexValue,
    fb: ComplexValue,
    whole: ComplexValue,
    tol: f64,
    depth: u32,
) -> (ComplexValue, f64)
where
    F: Fn(f64) -> ComplexValue,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let refined = left + right;
    let delta = refined - whole;
    // Richardson: S2 + (S2 - S1)/15 has one order more than S2.
    if delta.norm() <= 15.0 * tol || depth == 0 {
        return (refined + delta / 15.0, delta.norm() / 15.0);
    }
    let (lv, le) = adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1);
    let (rv, re) = adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    (lv + rv, le + re)
}
