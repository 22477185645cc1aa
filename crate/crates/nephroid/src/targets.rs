//! The ten Carathéodory target functions 𝒫(z) on the closed unit disk.
//!
//! Every square root and logarithm takes the principal branch (cut along the
//! negative real axis of its argument); points exactly on a cut resolve as
//! the limit from the upper half-plane, which is what IEEE signed zero gives
//! through `atan2`. With that convention each target satisfies 𝒫(0) = 1 and
//! conjugate symmetry 𝒫(z̄) = 𝒫(z)̄.

use crate::{check_disk, ensure_finite, ComplexValue, Error, Result};

/// k = √2 + 1, the fixed constant of the rational target.
pub const RATIONAL_K: f64 = std::f64::consts::SQRT_2 + 1.0;

/// Tagged enumeration of the target maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TargetFunction {
    /// 1 + z − z³/3, the nephroid map itself.
    Nephroid,
    /// √(1+z), right half of the lemniscate of Bernoulli.
    Lemniscate,
    /// √2 − (√2−1)√((1−z)/(1+2(√2−1)z)), left half of the shifted lemniscate.
    ShiftedLemniscate,
    /// 2/(1+e⁻ᶻ), the modified sigmoid.
    Sigmoid,
    /// eᶻ.
    Exponential,
    /// z + √(1+z²), crescent-shaped image.
    Crescent,
    /// 1 + 4z/3 + 2z²/3, cardioid image.
    Cardioid,
    /// 1 + (z/k)(k+z)/(k−z) with k = √2+1, a shifted-cardioid interior.
    RationalK,
    /// 1 + sin z, eight-shaped image.
    Sine,
    /// (1+Az)/(1+Bz) with −1 < B < A ≤ 1, B ≠ 0.
    Janowski { a: f64, b: f64 },
}

impl TargetFunction {
    /// Janowski target with the hypothesis −1 < B < A ≤ 1, B ≠ 0 enforced.
    pub fn janowski(a: f64, b: f64) -> Result<Self> {
        if !(b > -1.0 && b < a && a <= 1.0) || b == 0.0 {
            return Err(Error::Parameter(format!(
                "Janowski parameters need -1 < B < A <= 1 and B != 0, got A = {a}, B = {b}"
            )));
        }
        Ok(TargetFunction::Janowski { a, b })
    }

    /// Boundary angles where the defining square root has a branch point.
    pub fn branch_point_angles(&self) -> &'static [f64] {
        use std::f64::consts::{FRAC_PI_2, PI};
        const LEM: [f64; 1] = [PI];
        const RL: [f64; 1] = [0.0];
        const CRESCENT: [f64; 2] = [FRAC_PI_2, -FRAC_PI_2];
        match self {
            TargetFunction::Lemniscate => &LEM,
            TargetFunction::ShiftedLemniscate => &RL,
            TargetFunction::Crescent => &CRESCENT,
            _ => &[],
        }
    }
}

/// 𝒫(z) on the closed disk.
pub fn eval_target(f: TargetFunction, z: ComplexValue) -> Result<ComplexValue> {
    check_disk(z, "eval_target")?;
    let one = ComplexValue::new(1.0, 0.0);
    let w = match f {
        TargetFunction::Nephroid => one + z - z * z * z / 3.0,
        TargetFunction::Lemniscate => (one + z).sqrt(),
        TargetFunction::ShiftedLemniscate => {
            let s2 = std::f64::consts::SQRT_2;
            let ratio = (one - z) / (z * (2.0 * (s2 - 1.0)) + 1.0);
            ComplexValue::new(s2, 0.0) - ratio.sqrt() * (s2 - 1.0)
        }
        TargetFunction::Sigmoid => ComplexValue::new(2.0, 0.0) / (one + (-z).exp()),
        TargetFunction::Exponential => z.exp(),
        TargetFunction::Crescent => z + (one + z * z).sqrt(),
        TargetFunction::Cardioid => one + z * (4.0 / 3.0) + z * z * (2.0 / 3.0),
        TargetFunction::RationalK => {
            let k = ComplexValue::new(RATIONAL_K, 0.0);
            one + (z / k) * ((k + z) / (k - z))
        }
        TargetFunction::Sine => one + z.sin(),
        TargetFunction::Janowski { a, b } => {
            TargetFunction::janowski(a, b)?;
            (one + z * a) / (one + z * b)
        }
    };
    ensure_finite(w, "eval_target")
}

/// 𝒫(e^{it}); equals `eval_target` at e^{it}, with the explicit
/// trigonometric form for the nephroid (fast and exact at the cusps):
/// u + iv = 1 + cos t − cos(3t)/3 + i (sin t − sin(3t)/3).
pub fn boundary_point(f: TargetFunction, t: f64) -> Result<ComplexValue> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("boundary angle {t}")));
    }
    if let TargetFunction::Nephroid = f {
        return Ok(nephroid_boundary(t));
    }
    eval_target(f, ComplexValue::new(t.cos(), t.sin()))
}

pub(crate) fn nephroid_boundary(t: f64) -> ComplexValue {
    ComplexValue::new(
        1.0 + t.cos() - (3.0 * t).cos() / 3.0,
        t.sin() - (3.0 * t).sin() / 3.0,
    )
}

/// Distance between two boundary angles measured around the circle.
pub fn angular_distance(s: f64, t: f64) -> f64 {
    let d = (s - t).rem_euclid(std::f64::consts::TAU);
    d.min(std::f64::consts::TAU - d)
}

/// (𝒫(−1), 𝒫(1)) as one-sided radial limits. All ten targets extend
/// continuously to ±1, so the limits are plain evaluations in closed form.
pub fn target_real_extremes(f: TargetFunction) -> (f64, f64) {
    let s2 = std::f64::consts::SQRT_2;
    match f {
        TargetFunction::Nephroid => (1.0 / 3.0, 5.0 / 3.0),
        TargetFunction::Lemniscate => (0.0, s2),
        TargetFunction::ShiftedLemniscate => (0.0, s2),
        TargetFunction::Sigmoid => (
            2.0 / (1.0 + std::f64::consts::E),
            2.0 / (1.0 + (-1.0f64).exp()),
        ),
        TargetFunction::Exponential => ((-1.0f64).exp(), std::f64::consts::E),
        TargetFunction::Crescent => (s2 - 1.0, s2 + 1.0),
        TargetFunction::Cardioid => (1.0 / 3.0, 3.0),
        // 1 - 1/k^2 = 2sqrt2 - 2 and 1 + (k+1)/(k(k-1)) = 2
        TargetFunction::RationalK => (2.0 * s2 - 2.0, 2.0),
        TargetFunction::Sine => (1.0 - (1.0f64).sin(), 1.0 + (1.0f64).sin()),
        TargetFunction::Janowski { a, b } => ((1.0 - a) / (1.0 - b), (1.0 + a) / (1.0 + b)),
    }
}
