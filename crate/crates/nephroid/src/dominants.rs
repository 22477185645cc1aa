//! Closed-form dominant solutions of the subordination problems.
//!
//! Every family of the first-order problem 1 + β z q′/qʲ ≺ 𝒫 shares one
//! potential G(z) = ∫₀ᶻ (𝒫(t)−1)/t dt with G(0) = 0, and the three cases
//! are wrappers around it:
//!
//! ```text
//! j = 0:  q_β = 1 + G/β      j = 1:  q̂_β = exp(G/β)      j = 2:  q̃_β = (1 − G/β)⁻¹
//! ```
//!
//! The linear problem q + β z q′ ≺ φ has hypergeometric solutions instead:
//! F(−1/2, 1/β; 1/β+1; −z) for φ = √(1+z) and 1 + z/(1+β) for φ = 1 + z.

use crate::numerics::{ein_sum, g0, hyp2f1, psi_rl, sigmoid_ell, sine_sum, Hyp2F1Params};
use crate::targets::{eval_target, TargetFunction, RATIONAL_K};
use crate::{check_disk, ensure_finite, ComplexValue, Error, Result};

// Internal tolerances for the potentials that are series or integrals.
const SERIES_TOL: f64 = 1e-14;
const ELL_TOL: f64 = 1e-12;
const HYP_TOL: f64 = 1e-11;

/// Dominant family: the nine wrapper families of the 1 + βzq′/qʲ problem
/// plus the two hypergeometric families of the linear problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    LemB,
    ShiftedLemB,
    Sigmoid,
    Exponential,
    Crescent,
    Cardioid,
    RationalK,
    Sine,
    Janowski { a: f64, b: f64 },
    HgLemniscate,
    HgLinear,
}

impl Family {
    /// The Carathéodory target this family is subordinate to, when it is one
    /// of the ten; the linear 1 + z right-hand side has no target entry.
    pub fn target(&self) -> Option<TargetFunction> {
        match *self {
            Family::LemB => Some(TargetFunction::Lemniscate),
            Family::ShiftedLemB => Some(TargetFunction::ShiftedLemniscate),
            Family::Sigmoid => Some(TargetFunction::Sigmoid),
            Family::Exponential => Some(TargetFunction::Exponential),
            Family::Crescent => Some(TargetFunction::Crescent),
            Family::Cardioid => Some(TargetFunction::Cardioid),
            Family::RationalK => Some(TargetFunction::RationalK),
            Family::Sine => Some(TargetFunction::Sine),
            Family::Janowski { a, b } => Some(TargetFunction::Janowski { a, b }),
            Family::HgLemniscate => Some(TargetFunction::Lemniscate),
            Family::HgLinear => None,
        }
    }

    /// Right-hand side of the family's defining differential equation.
    pub fn subordination_rhs(&self, z: ComplexValue) -> Result<ComplexValue> {
        match self.target() {
            Some(t) => eval_target(t, z),
            None => Ok(ComplexValue::new(1.0, 0.0) + z),
        }
    }

    /// Boundary angles to skip when sampling (branch points of the target).
    pub fn branch_point_angles(&self) -> &'static [f64] {
        match self.target() {
            Some(t) => t.branch_point_angles(),
            None => &[],
        }
    }

    fn is_hypergeometric(&self) -> bool {
        matches!(self, Family::HgLemniscate | Family::HgLinear)
    }
}

/// Case index j of the subordination, or the linear p + βzp′ form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantCase {
    J0,
    J1,
    J2,
    Linear,
}

/// One concrete dominant q_β: family, case, and β > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DominantSpec {
    pub family: Family,
    pub case: DominantCase,
    pub beta: f64,
}

impl DominantSpec {
    pub fn new(family: Family, case: DominantCase, beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::Parameter(format!(
                "beta must be positive, got {beta}"
            )));
        }
        if let Family::Janowski { a, b } = family {
            TargetFunction::janowski(a, b)?;
        }
        let linear = case == DominantCase::Linear;
        if family.is_hypergeometric() != linear {
            return Err(Error::Parameter(format!(
                "case {case:?} does not apply to family {family:?}"
            )));
        }
        Ok(DominantSpec { family, case, beta })
    }
}

/// The potential G(z) with G(0) = 0, so that 1 + G/β solves 1 + βzq′ = 𝒫.
///
/// Closed forms per family; only the sigmoid, exponential and sine families
/// go through their series/integral primitives.
pub fn potential(family: Family, z: ComplexValue) -> Result<ComplexValue> {
    check_disk(z, "potential")?;
    let one = ComplexValue::new(1.0, 0.0);
    let ln2 = std::f64::consts::LN_2;
    let g = match family {
        Family::LemB => {
            let w = (one + z).sqrt();
            (w + ln2 - (one + w).ln() - 1.0) * 2.0
        }
        Family::ShiftedLemB => {
            let s2 = std::f64::consts::SQRT_2;
            let psi = psi_rl(z)?;
            (psi / 2.0).ln() * (2.0 * (s2 - 1.0)) + g0(z)?
        }
        Family::Sigmoid => sigmoid_ell(z, ELL_TOL)?,
        Family::Exponential => ein_sum(z, SERIES_TOL)?,
        Family::Crescent => {
            let w = (one + z * z).sqrt();
            z + w - 1.0 - (one + w).ln() + ln2
        }
        Family::Cardioid => z * (z + 4.0) / 3.0,
        Family::RationalK => {
            let k = ComplexValue::new(RATIONAL_K, 0.0);
            (k / (k - z)).ln() * 2.0 - z / RATIONAL_K
        }
        Family::Sine => sine_sum(z, SERIES_TOL)?,
        Family::Janowski { a, b } => {
            TargetFunction::janowski(a, b)?;
            (one + z * b).ln() * ((a - b) / b)
        }
        Family::HgLemniscate | Family::HgLinear => {
            return Err(Error::Parameter(
                "hypergeometric dominants are not potential wrappers".into(),
            ))
        }
    };
    ensure_finite(g, "potential")
}

/// Evaluate the dominant q_β(z) on the closed disk.
pub fn eval_dominant(spec: DominantSpec, z: ComplexValue) -> Result<ComplexValue> {
    check_disk(z, "eval_dominant")?;
    let one = ComplexValue::new(1.0, 0.0);
    let w = match (spec.family, spec.case) {
        (Family::HgLemniscate, DominantCase::Linear) => {
            let p = Hyp2F1Params::new(-0.5, 1.0 / spec.beta, 1.0 / spec.beta + 1.0)?;
            hyp2f1(p, -z, HYP_TOL)?
        }
        (Family::HgLinear, DominantCase::Linear) => one + z / (1.0 + spec.beta),
        (family, DominantCase::J0) => one + potential(family, z)? / spec.beta,
        (family, DominantCase::J1) => (potential(family, z)? / spec.beta).exp(),
        (family, DominantCase::J2) => {
            let d = one - potential(family, z)? / spec.beta;
            if d.norm() < 1e-10 {
                return Err(Error::Pole(format!(
                    "dominant denominator vanishes at z = {z} for beta = {}",
                    spec.beta
                )));
            }
            d.inv()
        }
        (family, DominantCase::Linear) => {
            return Err(Error::Parameter(format!(
                "family {family:?} has no linear-case dominant"
            )))
        }
    };
    ensure_finite(w, "eval_dominant")
}

/// Residual of the defining differential equation at z, with q′ taken by
/// fourth-order central differences of step `h` along the real direction.
///
/// For the wrapper cases the residual is |1 + β z q′/qʲ − 𝒫(z)|; for the
/// linear case it is |q + β z q′ − φ(z)|.
pub fn ode_residual(spec: DominantSpec, z: ComplexValue, h: f64) -> Result<f64> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::Parameter(format!("step {h} must be positive")));
    }
    let r = z.norm();
    if r == 0.0 || r > 1.0 - 2.0 * h {
        return Err(Error::Domain(format!(
            "residual needs 0 < |z| <= 1 - 2h, got |z| = {r} with h = {h}"
        )));
    }
    let q = |w: ComplexValue| eval_dominant(spec, w);
    let dq = (q(z - h)? * -8.0 + q(z + h)? * 8.0 + q(z - 2.0 * h)? - q(z + 2.0 * h)?) / (12.0 * h);
    let rhs = spec.family.subordination_rhs(z)?;
    let lhs = match spec.case {
        DominantCase::J0 => ComplexValue::new(1.0, 0.0) + z * dq * spec.beta,
        DominantCase::J1 => ComplexValue::new(1.0, 0.0) + z * dq * spec.beta / q(z)?,
        DominantCase::J2 => {
            let qv = q(z)?;
            ComplexValue::new(1.0, 0.0) + z * dq * spec.beta / (qv * qv)
        }
        DominantCase::Linear => q(z)? + z * dq * spec.beta,
    };
    Ok((lhs - rhs).norm())
}
