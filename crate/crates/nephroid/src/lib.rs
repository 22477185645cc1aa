//! Numerics for starlike functions associated with the nephroid domain.
//!
//! The nephroid here is the image of the unit circle under
//! φ(z) = 1 + z − z³/3, the two-cusped curve
//!
//! ```text
//! ((u − 1)² + v² − 4/9)³ − (4/3) v² = 0
//! ```
//!
//! with cusps at 1/3 and 5/3. The crate evaluates ten Carathéodory target
//! functions on the closed disk, the closed-form dominant solutions of the
//! first-order differential subordinations
//!
//! ```text
//! 1 + β z p'(z) / pʲ(z) ≺ 𝒫(z),   j = 0, 1, 2
//! p(z) + β z p'(z)      ≺ √(1+z)  or  1 + z
//! ```
//!
//! and every sharp β threshold attached to them, and it certifies the
//! containment q_β(𝔻) ⊂ φ(𝔻) numerically by dense boundary sampling
//! against the implicit sextic.
//!
//! Modules follow the pipeline: [`targets`] → [`nephroid`] (geometry) →
//! [`numerics`] (Γ, ₂F₁, quadrature, roots) → [`dominants`] → [`bounds`] →
//! [`verifier`].
//!
//! ```
//! use nephroid::bounds::{sharp_beta, SharpEndpoint};
//! use nephroid::dominants::{DominantCase, DominantSpec, Family};
//! use nephroid::verifier::{verify_containment, ContainmentVerdict};
//!
//! // the cardioid threshold for 1 + beta z p' is exactly 5/2
//! let bound = sharp_beta(Family::Cardioid, DominantCase::J0)?;
//! assert!((bound.value - 2.5).abs() < 1e-12);
//! assert_eq!(bound.sharp_endpoint, SharpEndpoint::PlusOneTouchesFiveThirds);
//!
//! // at that beta the dominant's boundary image touches the right cusp
//! let spec = DominantSpec::new(Family::Cardioid, DominantCase::J0, bound.value)?;
//! let report = verify_containment(spec, 2048, 1e-6)?;
//! assert_eq!(report.verdict, ContainmentVerdict::ContainedTangent);
//! # Ok::<(), nephroid::Error>(())
//! ```

pub mod bounds;
pub mod dominants;
mod error;
pub mod nephroid;
pub mod numerics;
pub mod targets;
pub mod verifier;

pub use error::{Error, Result};

/// A point u + iv of the plane; the universal currency of evaluation.
pub type ComplexValue = num_complex::Complex64;

/// Absolute slack accepted on |z| ≤ 1 to absorb rounding on the closed disk.
pub const DISK_SLACK: f64 = 1e-12;

pub(crate) fn ensure_finite(w: ComplexValue, what: &str) -> Result<ComplexValue> {
    if w.re.is_finite() && w.im.is_finite() {
        Ok(w)
    } else {
        Err(Error::Domain(format!("{what} produced a non-finite value")))
    }
}

pub(crate) fn check_disk(z: ComplexValue, what: &str) -> Result<()> {
    if z.norm() <= 1.0 + DISK_SLACK {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{what}: |z| = {} exceeds 1",
            z.norm()
        )))
    }
}
