//! Runtime errors of the geometry kernel.
//!
//! Parse errors live with the parser ([`crate::expr::ParseError`]); this is
//! everything that can go wrong once expressions are already well-formed.
//! Diagnostics carry `f64` payloads so the error type stays independent of
//! the scalar the kernel runs on.

use thiserror::Error;

use crate::jet::JetError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    /// A jet operation failed while evaluating an expression at `at`.
    #[error("numeric failure at parameter {at}: {source}")]
    Numeric { at: f64, source: JetError },

    #[error("unbound parameter `{name}`")]
    UnboundParameter { name: String },

    #[error("parameter {s} outside the domain [{lo}, {hi}]")]
    OutOfDomain { s: f64, lo: f64, hi: f64 },

    #[error("domain is empty or inverted: [{lo}, {hi}]")]
    BadDomain { lo: f64, hi: f64 },

    /// The scan found |x'(t)| below threshold or a sign change at `t`.
    #[error("curve is not admissible: x'(t) degenerates near t = {t}")]
    NotAdmissible { t: f64 },

    #[error("arc-length solve for s = {target} did not converge")]
    NoConvergence { target: f64 },

    /// Curvature too small for a principal normal; the tangent and the
    /// curvature value remain meaningful.
    #[error("Frenet frame undefined at s = {s}: curvature {kappa} below threshold")]
    FrameUndefined { s: f64, kappa: f64 },

    #[error("planar curve has degenerate speed at s = {s}")]
    DegenerateSpeed { s: f64 },

    #[error("transformation is not an isometry (requires a12 = 1 and a23 = 1)")]
    NotAnIsometry,

    #[error("check domain [{lo}, {hi}] is empty")]
    EmptyCheckDomain { lo: f64, hi: f64 },

    #[error("parameter s = {s} too close to the singular value c = {c}")]
    SingularLambda { s: f64, c: f64 },

    #[error("base curve is planar: max |tau| on the grid is {max_abs_tau}")]
    PlanarBase { max_abs_tau: f64 },

    #[error("the two evolutes were built against different targets or correspondences")]
    MismatchedTargets,

    #[error("sample grid needs at least 2 points, got {0}")]
    BadGrid(usize),

    #[error("invalid integration grid: start {start}, end {end}, step {step}")]
    BadIntegrationGrid { start: f64, end: f64, step: f64 },

    /// An arc-length curve description whose x-coordinate expression is not
    /// literally the parameter.
    #[error("x-coordinate expression must be exactly the curve parameter")]
    XNotParameter,
}

impl CurveError {
    /// True for errors caused by how the request was written rather than by
    /// the numerics of the curve. Front ends map these to usage errors.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            CurveError::UnboundParameter { .. }
                | CurveError::BadDomain { .. }
                | CurveError::BadGrid(_)
                | CurveError::BadIntegrationGrid { .. }
                | CurveError::XNotParameter
        )
    }
}
