//! Numeric thresholds used across the kernel.
//!
//! Every cutoff gets one definition here so checkers, constructors and the
//! CLI agree on what "degenerate" means.

/// A vector counts as isotropic when |x| is at or below this bound.
///
/// The case split of the Galilean scalar product is exact on paper; floating
/// point needs a tolerance.
pub const ISO_EPS: f64 = 1e-12;

/// Below this curvature the principal normal and binormal are undefined.
pub const KAPPA_EPS: f64 = 1e-9;

/// Below this Euclidean speed a planar curve has no unit tangent.
pub const SPEED_EPS: f64 = 1e-9;

/// Minimum |x'(t)| for a raw curve to admit arc-length reparametrization.
pub const ADMIT_EPS: f64 = 1e-8;

/// Number of scan points used to certify |x'| >= `ADMIT_EPS` (and to scan
/// curvature before building an involute).
pub const ADMIT_SCAN_POINTS: usize = 256;

/// Exclusion radius around the singular parameter s = c of an involute.
///
/// The checked identities hold literally only for s < c, and the involute
/// frame blows up as s -> c.
pub const LAMBDA_MIN: f64 = 1e-2;

/// Residual target |x(t) - s| for the arc-length root solve (f64).
pub const ROOT_TOL: f64 = 1e-12;

/// Iteration cap for the safeguarded Newton solve.
pub const ROOT_MAX_ITER: usize = 100;

/// A base curve counts as planar when max |tau| on the grid stays below this.
pub const PLANAR_TAU_EPS: f64 = 1e-9;

/// Central-difference step for the Frenet-equation residual check.
pub const FD_STEP: f64 = 1e-4;

/// Default step for the evolute ODE integration.
pub const DEFAULT_EVOLUTE_STEP: f64 = 1e-3;

// Default checker tolerances. Identities that are exact up to rounding sit
// at 1e-9; oracle-vs-formula comparisons at 1e-6; finite-difference residual
// checks at 1e-5. All of them are caller-overridable.

/// Constant-distance check between a curve and its involute.
pub const TOL_DISTANCE_CONSTANCY: f64 = 1e-9;

/// Euclidean-curvature oracle vs the curvature relation of the involute.
pub const TOL_CURVATURE_RELATION: f64 = 1e-6;

/// Constancy of the helix invariant f = <T, T* ^ N*>.
pub const TOL_HELIX_INVARIANT: f64 = 1e-9;

/// Constancy of the tangent angle between two evolutes.
pub const TOL_TANGENT_ANGLE: f64 = 1e-9;

/// Finite-difference residuals of the Frenet equations.
pub const TOL_FRENET_ODE: f64 = 1e-5;

/// Invariance of kappa and tau under random isometries.
pub const TOL_ISOMETRY: f64 = 1e-9;
