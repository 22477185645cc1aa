//! Sharp β thresholds.
//!
//! For the wrapper cases everything reduces to the two real endpoint values
//! of the potential, G(−1) < 0 < G(1):
//!
//! ```text
//! j = 0:  β₁ = −(3/2) G(−1)      β₂ = (3/2) G(1)
//! j = 1:  β₁ = −G(−1)/log 3      β₂ = G(1)/log(5/3)
//! j = 2:  β₁ = −G(−1)/2          β₂ = (5/2) G(1)
//! ```
//!
//! with the sharp bound max{β₁, β₂}; β₁ pins q(−1) to the left cusp 1/3 and
//! β₂ pins q(1) to the right cusp 5/3. The linear problem contributes β_L
//! (unique root of τ) and the constant 1/2.

use crate::dominants::{potential, DominantCase, Family};
use crate::numerics::{find_root, hyp2f1, Hyp2F1Params};
use crate::{ComplexValue, Error, Result};

const LN_3: f64 = 1.0986122886681098;

fn ln53() -> f64 {
    (5.0f64 / 3.0).ln()
}

/// Which nephroid cusp the dominant touches at the sharp β.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharpEndpoint {
    /// q(−1) = 1/3 is the binding constraint (β₁ wins).
    MinusOneTouchesOneThird,
    /// q(1) = 5/3 is the binding constraint (β₂ wins).
    PlusOneTouchesFiveThirds,
}

/// A sharp threshold record: both endpoint components, their max, the
/// winning closed form, and the designated touching cusp.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaBound {
    pub family: Family,
    pub case: DominantCase,
    pub beta1: f64,
    pub beta2: f64,
    /// max{β₁, β₂}, the sharp bound.
    pub value: f64,
    pub formula: String,
    pub sharp_endpoint: SharpEndpoint,
}

impl BetaBound {
    /// True when both endpoints bind simultaneously (odd potentials give
    /// β₁ = β₂ exactly for j = 0).
    pub fn is_tie(&self) -> bool {
        (self.beta1 - self.beta2).abs() <= 1e-9 * self.value.max(1.0)
    }
}

fn endpoint_bound(family: Family, case: DominantCase) -> Result<BetaBound> {
    let g_plus = potential(family, ComplexValue::new(1.0, 0.0))?.re;
    let g_minus = potential(family, ComplexValue::new(-1.0, 0.0))?.re;
    let (beta1, beta2) = match case {
        DominantCase::J0 => (-1.5 * g_minus, 1.5 * g_plus),
        DominantCase::J1 => (-g_minus / LN_3, g_plus / ln53()),
        DominantCase::J2 => (-0.5 * g_minus, 2.5 * g_plus),
        DominantCase::Linear => {
            return Err(Error::Parameter(
                "linear case has no endpoint wrapper bound".into(),
            ))
        }
    };
    let value = beta1.max(beta2);
    let sharp_endpoint = if beta1 > beta2 {
        SharpEndpoint::MinusOneTouchesOneThird
    } else {
        SharpEndpoint::PlusOneTouchesFiveThirds
    };
    Ok(BetaBound {
        family,
        case,
        beta1,
        beta2,
        value,
        formula: formula_for(family, case),
        sharp_endpoint,
    })
}

/// Sharp β for the eight closed-form families (Janowski has its own entry
/// point carrying the parameters, and the hypergeometric thresholds are
/// [`beta_l`] and [`hg_linear_beta`]).
pub fn sharp_beta(family: Family, case: DominantCase) -> Result<BetaBound> {
    match family {
        Family::Janowski { .. } => Err(Error::Parameter(
            "use janowski_beta for the Janowski family".into(),
        )),
        Family::HgLemniscate | Family::HgLinear => Err(Error::Parameter(
            "use beta_l / hg_linear_beta for the hypergeometric families".into(),
        )),
        _ => endpoint_bound(family, case),
    }
}

/// Sharp β for the Janowski target (1+Az)/(1+Bz), −1 < B < A ≤ 1, B ≠ 0.
pub fn janowski_beta(a: f64, b: f64, case: DominantCase) -> Result<BetaBound> {
    crate::targets::TargetFunction::janowski(a, b)?;
    endpoint_bound(Family::Janowski { a, b }, case)
}

/// The eight closed-form families, in presentation order.
pub const CLOSED_FORM_FAMILIES: [Family; 8] = [
    Family::LemB,
    Family::ShiftedLemB,
    Family::Sigmoid,
    Family::Exponential,
    Family::Crescent,
    Family::Cardioid,
    Family::RationalK,
    Family::Sine,
];

/// All 24 closed-form thresholds (8 families × 3 cases).
pub fn all_sharp_bounds() -> Result<Vec<BetaBound>> {
    let mut out = Vec::with_capacity(24);
    for family in CLOSED_FORM_FAMILIES {
        for case in [DominantCase::J0, DominantCase::J1, DominantCase::J2] {
            out.push(sharp_beta(family, case)?);
        }
    }
    Ok(out)
}

/// τ(β) = F(−1/2, 1/β; 1/β+1; 1) − 1/3, strictly increasing on (0, ∞).
pub fn tau(beta: f64) -> Result<f64> {
    hg_lem_endpoint(beta, 1.0).map(|v| v - 1.0 / 3.0)
}

/// δ(β) = 5/3 − F(−1/2, 1/β; 1/β+1; −1), positive for all β > 0.
pub fn delta(beta: f64) -> Result<f64> {
    hg_lem_endpoint(beta, -1.0).map(|v| 5.0 / 3.0 - v)
}

fn hg_lem_endpoint(beta: f64, arg: f64) -> Result<f64> {
    if beta.is_nan() || beta <= 0.0 {
        return Err(Error::Parameter(format!(
            "beta must be positive, got {beta}"
        )));
    }
    let p = Hyp2F1Params::new(-0.5, 1.0 / beta, 1.0 / beta + 1.0)?;
    Ok(hyp2f1(p, ComplexValue::new(arg, 0.0), 1e-11)?.re)
}

/// One row of the τ/δ table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauDelta {
    pub beta: f64,
    pub tau: f64,
    pub delta: f64,
}

/// β_L, the unique root of τ: bracket by scanning β ∈ {0.1, 0.2, …, 10},
/// then bisection/secant refinement to `tol`. The scan doubles as a sanity
/// sweep: δ must stay positive everywhere on it.
pub fn beta_l(tol: f64) -> Result<f64> {
    let mut prev_beta = 0.1;
    let mut prev_tau = tau(prev_beta)?;
    if delta(prev_beta)? <= 0.0 {
        return Err(Error::Convergence(format!(
            "delta({prev_beta}) is not positive"
        )));
    }
    let mut bracket = None;
    for k in 2..=100 {
        let b = k as f64 * 0.1;
        let t = tau(b)?;
        if delta(b)? <= 0.0 {
            return Err(Error::Convergence(format!("delta({b}) is not positive")));
        }
        if bracket.is_none() && prev_tau.signum() != t.signum() {
            bracket = Some((prev_beta, b));
        }
        prev_beta = b;
        prev_tau = t;
    }
    let (lo, hi) = bracket.ok_or(Error::NoBracket { lo: 0.1, hi: 10.0 })?;
    find_root(|b| tau(b).expect("tau evaluable on bracket"), lo, hi, tol)
}

/// Sharp β of the linear problem against 1 + z: exactly 1/2, where the
/// dominant 1 + z/(1+β) touches both cusps at once.
pub fn hg_linear_beta() -> f64 {
    0.5
}

/// Disk-radius sufficient-condition constant: the minimum boundary modulus
/// of 𝒫 − 1 divided by the sharp β of the (family, case) pair.
pub fn corollary_disk_threshold(family: Family, case: DominantCase) -> Result<f64> {
    match family {
        Family::RationalK => {
            // min_theta |(k+e^{i t})/(k(k-e^{i t}))| = (k-1)/(k(k+1)) = 3-2 sqrt 2
            let min_modulus = 3.0 - 2.0 * std::f64::consts::SQRT_2;
            Ok(min_modulus / sharp_beta(family, case)?.value)
        }
        Family::Janowski { a, b } => {
            let min_modulus = (a - b) / (1.0 + b.abs());
            Ok(min_modulus / janowski_beta(a, b, case)?.value)
        }
        _ => Err(Error::Parameter(format!(
            "no disk-radius corollary for family {family:?}"
        ))),
    }
}

/// Kustner's lower bound 1 − ab/(b+c) on the order of starlikeness of
/// z·F(a, b; c; z), valid for 0 < a ≤ b ≤ c.
pub fn kustner_lower_bound(a: f64, b: f64, c: f64) -> Result<f64> {
    let ordered = 0.0 < a && a <= b && b <= c;
    if !ordered {
        return Err(Error::Parameter(format!(
            "Kustner bound needs 0 < a <= b <= c, got ({a}, {b}, {c})"
        )));
    }
    Ok(1.0 - a * b / (b + c))
}

fn formula_for(family: Family, case: DominantCase) -> String {
    use DominantCase::*;
    match (family, case) {
        (Family::LemB, J0) => "3(1-log 2)".into(),
        (Family::LemB, J1) => "2(sqrt 2+log 2-1-log(1+sqrt 2))/log(5/3)".into(),
        (Family::LemB, J2) => "5(sqrt 2+log 2-1-log(1+sqrt 2))".into(),
        (Family::ShiftedLemB, J0) => "-(3/2)(2(sqrt 2-1)log(Psi(-1)/2)+g0(-1))".into(),
        (Family::ShiftedLemB, J1) => "(2(sqrt 2-1)log(Psi(1)/2)+g0(1))/log(5/3)".into(),
        (Family::ShiftedLemB, J2) => "(5/2)(2(sqrt 2-1)log(Psi(1)/2)+g0(1))".into(),
        (Family::Sigmoid, J0) => "3 l(1)/2".into(),
        (Family::Sigmoid, J1) => "l(1)/log(5/3)".into(),
        (Family::Sigmoid, J2) => "5 l(1)/2".into(),
        (Family::Exponential, J0) => "(3/2) sum 1/(n n!)".into(),
        (Family::Exponential, J1) => "(sum 1/(n n!))/log(5/3)".into(),
        (Family::Exponential, J2) => "(5/2) sum 1/(n n!)".into(),
        (Family::Crescent, J0) => "(3/2)(sqrt 2+log 2-log(1+sqrt 2))".into(),
        (Family::Crescent, J1) => "(sqrt 2+log 2-log(1+sqrt 2))/log(5/3)".into(),
        (Family::Crescent, J2) => "(5/2)(sqrt 2+log 2-log(1+sqrt 2))".into(),
        (Family::Cardioid, J0) => "5/2".into(),
        (Family::Cardioid, J1) => "5/(3 log(5/3))".into(),
        (Family::Cardioid, J2) => "25/6".into(),
        (Family::RationalK, J0) => "3 log(1+1/sqrt 2)-(3/2)(sqrt 2-1)".into(),
        (Family::RationalK, J1) => "2(log((1+sqrt 2)/sqrt 2)-1/(2(1+sqrt 2)))/log(5/3)".into(),
        (Family::RationalK, J2) => "5(log((1+sqrt 2)/sqrt 2)-1/(2(1+sqrt 2)))".into(),
        (Family::Sine, J0) => "(3/2) sum B_n".into(),
        (Family::Sine, J1) => "(sum B_n)/log(5/3)".into(),
        (Family::Sine, J2) => "(5/2) sum B_n".into(),
        (Family::Janowski { .. }, J0) => {
            "max{(A-B)/(2B) log(1-B)^-3, (A-B)/(2B) log(1+B)^3}".into()
        }
        (Family::Janowski { .. }, J1) => {
            "max{(A-B)/(B log 3) log(1-B)^-1, (A-B)/(B log(5/3)) log(1+B)}".into()
        }
        (Family::Janowski { .. }, J2) => {
            "max{(A-B)/(2B) log(1-B)^-1, (A-B)/(2B) log(1+B)^5}".into()
        }
        _ => String::new(),
    }
}
