//! The eight-parameter similarity group of the Galilean space and its
//! isometry subgroup.
//!
//! In non-homogeneous coordinates a similarity acts as
//!
//! ```text
//! x' = a11 + a12*x
//! y' = a21 + a22*x + a23*y*cos(phi) + a23*z*sin(phi)
//! z' = a31 + a32*x - a23*y*sin(phi) + a23*z*cos(phi)
//! ```
//!
//! The subgroup with `a12 = a23 = 1` consists of the isometries; only those
//! preserve arc length, curvature and torsion of admissible curves, and only
//! those are accepted by curve transforms.

use crate::scalar::Real;
use crate::vector::GVec3;

/// Parameters of a similarity transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsometryParams<T> {
    pub a11: T,
    pub a21: T,
    pub a31: T,
    pub a12: T,
    pub a22: T,
    pub a32: T,
    pub a23: T,
    /// Rotation angle of the Euclidean y-z planes, in radians.
    pub phi: T,
}

impl<T: Real> IsometryParams<T> {
    pub fn identity() -> Self {
        Self {
            a11: T::zero(),
            a21: T::zero(),
            a31: T::zero(),
            a12: T::one(),
            a22: T::zero(),
            a32: T::zero(),
            a23: T::one(),
            phi: T::zero(),
        }
    }

    /// An isometry (`a12 = a23 = 1`) from its six free parameters.
    pub fn isometry(a11: T, a21: T, a31: T, a22: T, a32: T, phi: T) -> Self {
        Self {
            a11,
            a21,
            a31,
            a12: T::one(),
            a22,
            a32,
            a23: T::one(),
            phi,
        }
    }

    pub fn translation(a11: T, a21: T, a31: T) -> Self {
        Self::isometry(a11, a21, a31, T::zero(), T::zero(), T::zero())
    }

    /// Exact test for membership in the isometry subgroup.
    pub fn is_isometry(&self) -> bool {
        self.a12 == T::one() && self.a23 == T::one()
    }

    /// Image of a point.
    pub fn apply_point(&self, p: GVec3<T>) -> GVec3<T> {
        let (sin_phi, cos_phi) = (self.phi.sin(), self.phi.cos());
        GVec3::new(
            self.a11 + self.a12 * p.x,
            self.a21 + self.a22 * p.x + self.a23 * p.y * cos_phi + self.a23 * p.z * sin_phi,
            self.a31 + self.a32 * p.x - self.a23 * p.y * sin_phi + self.a23 * p.z * cos_phi,
        )
    }

    /// Image of a free vector: the linear part only, translations dropped.
    pub fn apply_vector(&self, v: GVec3<T>) -> GVec3<T> {
        let (sin_phi, cos_phi) = (self.phi.sin(), self.phi.cos());
        GVec3::new(
            self.a12 * v.x,
            self.a22 * v.x + self.a23 * v.y * cos_phi + self.a23 * v.z * sin_phi,
            self.a32 * v.x - self.a23 * v.y * sin_phi + self.a23 * v.z * cos_phi,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn identity_fixes_points() {
        let id = IsometryParams::identity();
        let p = GVec3::new(1.0, 2.0, 3.0);
        assert_eq!(id.apply_point(p), p);
    }

    #[test]
    fn pure_translation() {
        let m = IsometryParams::translation(1.0, 2.0, 3.0);
        assert_eq!(
            m.apply_point(GVec3::new(0.0, 0.0, 0.0)),
            GVec3::new(1.0, 2.0, 3.0)
        );
    }

    #[test]
    fn quarter_turn_sign_pattern() {
        let m = IsometryParams::isometry(0.0, 0.0, 0.0, 0.0, 0.0, FRAC_PI_2);
        let q = m.apply_point(GVec3::new(0.0, 1.0, 0.0));
        assert!(q.x.abs() < 1e-15);
        assert!(q.y.abs() < 1e-15);
        assert!((q.z + 1.0).abs() < 1e-15);
    }

    #[test]
    fn vector_action_is_linear_at_zero() {
        let m = IsometryParams::isometry(5.0, -3.0, 2.0, 1.5, -0.5, 0.7);
        assert_eq!(m.apply_vector(GVec3::zero()), GVec3::zero());
    }

    #[test]
    fn shear_column_moves_absolute_direction() {
        let m = IsometryParams::isometry(0.0, 0.0, 0.0, 5.0, 0.0, 0.0);
        assert_eq!(
            m.apply_vector(GVec3::new(1.0, 0.0, 0.0)),
            GVec3::new(1.0, 5.0, 0.0)
        );
    }

    #[test]
    fn isometry_preserves_isotropic_norm() {
        let m = IsometryParams::<f64>::isometry(1.0, 2.0, 3.0, -0.7, 0.4, 1.234);
        let v = GVec3::new(0.0, 3.0, -4.0);
        let w = m.apply_vector(v);
        assert!(w.is_isotropic());
        assert!((w.norm() - v.norm()).abs() < 1e-12);
    }

    #[test]
    fn isometry_membership_is_exact() {
        assert!(IsometryParams::<f64>::identity().is_isometry());
        let mut m = IsometryParams::<f64>::identity();
        m.a12 = 2.0;
        assert!(!m.is_isometry());
        let mut m = IsometryParams::<f64>::identity();
        m.a23 = 1.0 + 1e-16;
        assert!(m.is_isometry(), "1 + 1e-16 rounds to exactly 1 in f64");
    }
}
