//! Auxiliary series and closed forms feeding the sharp-bound formulas:
//! Σ zⁿ/(n·n!), the sine-integral series Σ Bₙ z²ⁿ⁺¹, the sigmoid
//! potential ℓ(z), and the shifted-lemniscate helpers Ψ(z), g₀(z).

use crate::numerics::{quad, SeriesTail};
use crate::{check_disk, ensure_finite, ComplexValue, Result};

/// Σ_{n≥1} zⁿ/(n·n!) with a factorial tail bound ≤ `tol`.
///
/// This is the entire primitive of (eᶻ−1)/z vanishing at 0.
pub fn ein_sum(z: ComplexValue, tol: f64) -> Result<ComplexValue> {
    ein_sum_with_tail(z, tol).map(|(v, _)| v)
}

/// [`ein_sum`] together with its convergence record.
pub fn ein_sum_with_tail(z: ComplexValue, tol: f64) -> Result<(ComplexValue, SeriesTail)> {
    check_disk(z, "ein_sum")?;
    let mut sum = ComplexValue::new(0.0, 0.0);
    let mut power = ComplexValue::new(1.0, 0.0); // z^n / n!
    let mut tail = SeriesTail {
        terms_used: 0,
        tail_bound: 0.0,
    };
    for n in 1..200u32 {
        power *= z / n as f64;
        let term = power / n as f64;
        sum += term;
        tail.terms_used = n as usize;
        // Remaining terms shrink at least geometrically with ratio 1/(n+2)
        // on the closed disk, so twice the next term bounds the tail.
        let next = power.norm() / ((n + 1) as f64 * (n + 1) as f64);
        tail.tail_bound = 2.0 * next;
        if tail.tail_bound <= tol {
            break;
        }
    }
    Ok((ensure_finite(sum, "ein_sum")?, tail))
}

/// Σ_{n≥0} Bₙ z²ⁿ⁺¹ with Bₙ = (−1)ⁿ/((2n+1)!·(2n+1)).
///
/// The entire primitive of sin(z)/z vanishing at 0; alternating for real z
/// with a first-omitted-term tail bound.
pub fn sine_sum(z: ComplexValue, tol: f64) -> Result<ComplexValue> {
    sine_sum_with_tail(z, tol).map(|(v, _)| v)
}

/// [`sine_sum`] together with its convergence record.
pub fn sine_sum_with_tail(z: ComplexValue, tol: f64) -> Result<(ComplexValue, SeriesTail)> {
    check_disk(z, "sine_sum")?;
    let z2 = z * z;
    let mut sum = ComplexValue::new(0.0, 0.0);
    let mut power = z; // z^{2n+1} / (2n+1)!
    let mut n = 0u32;
    let tail = loop {
        let k = 2 * n + 1;
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        sum += power * (sign / k as f64);
        power *= z2 / ((k + 1) as f64 * (k + 2) as f64);
        let omitted = power.norm() / (k + 2) as f64;
        if omitted <= tol || n > 60 {
            break SeriesTail {
                terms_used: n as usize + 1,
                tail_bound: omitted,
            };
        }
        n += 1;
    };
    Ok((ensure_finite(sum, "sine_sum")?, tail))
}

/// ℓ(z) = ∫₀ᶻ (eᵗ−1)/(t(eᵗ+1)) dt along the straight segment from 0.
///
/// The integrand extends analytically over t = 0 with value 1/2; a short
/// Maclaurin tail is used near the origin to avoid cancellation.
pub fn sigmoid_ell(z: ComplexValue, tol: f64) -> Result<ComplexValue> {
    check_disk(z, "sigmoid_ell")?;
    if z.norm() == 0.0 {
        return Ok(ComplexValue::new(0.0, 0.0));
    }
    let v = quad::integrate_segment(sigmoid_integrand, ComplexValue::new(0.0, 0.0), z, tol)?;
    ensure_finite(v, "sigmoid_ell")
}

fn sigmoid_integrand(t: ComplexValue) -> ComplexValue {
    if t.norm() < 1e-4 {
        // tanh(t/2)/t = 1/2 - t^2/24 + t^4/240 - ...
        let t2 = t * t;
        return ComplexValue::new(0.5, 0.0) - t2 / 24.0 + t2 * t2 / 240.0;
    }
    let e = t.exp();
    (e - 1.0) / (t * (e + 1.0))
}

/// Ψ(z) = √(1−z) + √(2(√2−1)z + 1), principal branches.
pub fn psi_rl(z: ComplexValue) -> Result<ComplexValue> {
    check_disk(z, "psi_rl")?;
    let a = 2.0 * (std::f64::consts::SQRT_2 - 1.0);
    let w = (ComplexValue::new(1.0, 0.0) - z).sqrt() + (z * a + 1.0).sqrt();
    ensure_finite(w, "psi_rl")
}

/// g₀(z) = √(2(√2−1)) · tan⁻¹( √(2(√2−1)) (√(2(√2−1)z+1) − √(1−z))
///                            / (2(√2−1)√(1−z) + √(2(√2−1)z+1)) ),
/// normalized so g₀(0) = 0. Real on [−1, 1], principal continuation elsewhere.
pub fn g0(z: ComplexValue) -> Result<ComplexValue> {
    check_disk(z, "g0")?;
    let a = 2.0 * (std::f64::consts::SQRT_2 - 1.0);
    let c = a.sqrt();
    let p = (z * a + 1.0).sqrt();
    let q = (ComplexValue::new(1.0, 0.0) - z).sqrt();
    let num = (p - q) * c;
    let den = q * a + p;
    // den has positive real part on the closed disk (both roots map into
    // the right half-plane and cannot vanish together), so the quotient is
    // well defined and the principal arctangent stays on its sheet.
    let w = (num / den).atan() * c;
    ensure_finite(w, "g0")
}
