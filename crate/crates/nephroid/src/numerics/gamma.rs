//! Real gamma function via the Lanczos approximation.

use crate::{Error, Result};

// Lanczos coefficients for g = 7, n = 9 (the GSL set).
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // published coefficient digits kept verbatim
const LANCZOS_P: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.5 && x == x.floor()
}

/// Γ(x) for real x, not a non-positive integer.
///
/// Uses the 9-term Lanczos series for x ≥ 0.5 and the reflection formula
/// Γ(x) Γ(1−x) = π / sin(πx) below that. Relative error stays under 1e−12
/// on [−10, 30] away from the poles.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma({x})")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(format!("gamma pole at {x}")));
    }
    if x < 0.5 {
        // sin(pi x) via the fractional part keeps the reflection accurate
        // for moderately large negative x.
        let s = sin_pi(x);
        return Ok(std::f64::consts::PI / (s * gamma(1.0 - x)?));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_P[0];
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        acc += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // t^(z+0.5) alone overflows long before gamma itself does; splitting the
    // power around exp(-t) keeps intermediates in range up to x ~ 170.
    let half_pow = t.powf(0.5 * (z + 0.5));
    Ok((2.0 * std::f64::consts::PI).sqrt() * half_pow * (-t).exp() * half_pow * acc)
}

// sin(pi x) computed from the reduced argument so cancellation near the
// integers does not leak into the reflection formula.
fn sin_pi(x: f64) -> f64 {
    let r = x - x.floor();
    // sin(pi (x - floor x)) equals |sin(pi x)|; restore the sign by parity.
    let s = (std::f64::consts::PI * r).sin();
    if (x.floor() as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_PI: f64 = 1.772_453_850_905_516;

    #[test]
    fn half_integer_values() {
        assert!((gamma(0.5).unwrap() - SQRT_PI).abs() < 1e-14);
        assert!((gamma(-0.5).unwrap() + 2.0 * SQRT_PI).abs() < 1e-13);
        assert!((gamma(1.5).unwrap() - 0.5 * SQRT_PI).abs() < 1e-14);
    }

    #[test]
    fn factorials() {
        assert!((gamma(5.0).unwrap() - 24.0).abs() < 1e-11);
        assert!((gamma(1.0).unwrap() - 1.0).abs() < 1e-13);
        assert!((gamma(2.0).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn poles_rejected() {
        assert!(matches!(gamma(0.0), Err(Error::Pole(_))));
        assert!(matches!(gamma(-3.0), Err(Error::Pole(_))));
    }

    #[test]
    fn relative_error_on_range() {
        // Reference values by the recurrence from well-conditioned seeds.
        let mut reference = 1.0f64; // gamma(1)
        for n in 1..30 {
            // gamma(n+1) = n * gamma(n)
            reference *= n as f64;
            let got = gamma((n + 1) as f64).unwrap();
            let rel = ((got - reference) / reference).abs();
            assert!(rel < 1e-12, "gamma({}) rel err {rel:e}", n + 1);
        }
        // Negative half-integers by reflection of the exact ladder.
        let mut pos = SQRT_PI; // gamma(1/2)
        for k in 0..=9 {
            let x = 0.5 - k as f64; // gamma(x - 1) = gamma(x)/(x-1)
            let next = pos / (x - 1.0);
            let got = gamma(x - 1.0).unwrap();
            let rel = ((got - next) / next).abs();
            assert!(rel < 1e-12, "gamma({}) rel err {rel:e}", x - 1.0);
            pos = next;
        }
    }
}
