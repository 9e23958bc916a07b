//! Curves in the 3-dimensional Galilean space: the degenerate metric, the
//! Frenet apparatus, involute/evolute constructions and numeric checkers
//! for the identities those constructions satisfy.
//!
//! The space singles out one coordinate direction (here x): planes
//! x = const are Euclidean, every other direction is measured by the
//! x-component alone, and the arc length of an admissible curve *is* its
//! x-coordinate. On top of that structure this crate provides
//!
//! - [`GVec3`]: vectors with the Galilean scalar product, norm, cross
//!   product and isotropy classification ([`vector`]);
//! - [`IsometryParams`]: the similarity group action and its isometry
//!   subgroup ([`isometry`]);
//! - [`Jet3`]: order-3 forward differentiation ([`jet`]), driving exact
//!   curvature/torsion for curves given as expressions ([`expr`]);
//! - [`AdmissibleCurve`] / [`PlanarCurve`]: curve models, arc-length
//!   reparametrization and Frenet frames ([`curve`]);
//! - [`InvolutePair`] / [`Evolute`]: involute construction, evolute
//!   reconstruction by ODE integration, and checkers that sample the
//!   involute identities on grids ([`involute`]).
//!
//! Everything numeric is generic over the scalar via [`Real`] (`f32` or
//! `f64`); the `*64` aliases below fix the common double-precision case.
//! All types are immutable values: evaluation is pure and thread-safe.

pub mod curve;
pub mod error;
pub mod expr;
pub mod involute;
pub mod isometry;
pub mod jet;
pub mod numeric;
pub mod report;
pub mod scalar;
pub mod tol;
pub mod vector;

pub use curve::{
    check_frenet_equations, check_isometry_invariance, AdmissibleCurve, CurveDerivatives,
    CurveKind, CurveSpec, FrenetFrame, PlanarCurve, PlanarDerivatives, PlanarFrame,
};
pub use error::CurveError;
pub use expr::{Expr, Func, ParseError};
pub use involute::{
    check_constant_distance, check_curvature_relation, check_helix_invariant,
    check_tangent_angle, make_evolute, make_involute, Evolute, EvoluteProblem, InvoluteFrame,
    InvolutePair,
};
pub use isometry::IsometryParams;
pub use jet::{Jet3, JetError};
pub use report::{CheckReport, Sample};
pub use scalar::Real;
pub use vector::{GVec3, VectorClass};

/// Double-precision aliases for the core types.
pub type GVec364 = GVec3<f64>;
pub type Jet364 = Jet3<f64>;
pub type Isometry64 = IsometryParams<f64>;
pub type FrenetFrame64 = FrenetFrame<f64>;
pub type CurveSpec64 = CurveSpec<f64>;
pub type AdmissibleCurve64 = AdmissibleCurve<f64>;
pub type PlanarCurve64 = PlanarCurve<f64>;
pub type InvolutePair64 = InvolutePair<f64>;
pub type Evolute64 = Evolute<f64>;
