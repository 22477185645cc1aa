//! Special functions and numeric primitives: Γ, ₂F₁, auxiliary series,
//! adaptive quadrature, and bracketing root-finding.

pub mod gamma;
pub mod hyp2f1;
pub mod quad;
pub mod roots;
pub mod series;

pub use gamma::gamma;
pub use hyp2f1::{
    hyp2f1, hyp2f1_derivative, hyp2f1_euler, hyp2f1_series, hyp2f1_series_with_tail, Hyp2F1Params,
};
pub use quad::{integrate, integrate_segment};
pub use roots::find_root;
pub use series::{
    ein_sum, ein_sum_with_tail, g0, psi_rl, sigmoid_ell, sine_sum, sine_sum_with_tail,
};

/// Convergence record of a truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTail {
    /// Terms actually summed, counting the constant term.
    pub terms_used: usize,
    /// Rigorous bound on the omitted remainder; zero when the series
    /// terminates. At most the requested tolerance on success.
    pub tail_bound: f64,
}
