//! Vectors of the Galilean 3-space and its degenerate metric.
//!
//! The first coordinate is the absolute (Galilean) direction; the y-z part
//! lives in the Euclidean planes x = const. A vector with vanishing first
//! coordinate is *isotropic* and is measured with the ordinary Euclidean
//! metric of its plane; every other vector is measured by its first
//! coordinate alone.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Real;
use crate::tol;

/// Metric class of a vector: decided by the first coordinate alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorClass {
    /// x = 0 (within [`tol::ISO_EPS`]); lives in a Euclidean plane.
    Isotropic,
    /// x != 0; measured along the absolute direction.
    NonIsotropic,
}

/// A vector (or point) in Galilean coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GVec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> GVec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Self { x, y, z }
    }

    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// Classification is a pure function of the first coordinate.
    pub fn classify(&self) -> VectorClass {
        if self.x.abs() <= T::of(tol::ISO_EPS) {
            VectorClass::Isotropic
        } else {
            VectorClass::NonIsotropic
        }
    }

    pub fn is_isotropic(&self) -> bool {
        self.classify() == VectorClass::Isotropic
    }

    /// Galilean scalar product.
    ///
    /// `x1*x2` when either argument is non-isotropic, `y1*y2 + z1*z2` when
    /// both are isotropic. Total and symmetric in both branches.
    pub fn dot(&self, rhs: &Self) -> T {
        if self.is_isotropic() && rhs.is_isotropic() {
            self.y * rhs.y + self.z * rhs.z
        } else {
            self.x * rhs.x
        }
    }

    /// Galilean norm: |x| for non-isotropic vectors, the Euclidean length of
    /// (y, z) for isotropic ones. Always nonnegative.
    pub fn norm(&self) -> T {
        if self.is_isotropic() {
            self.y.hypot(self.z)
        } else {
            self.x.abs()
        }
    }

    /// Cross product adapted to the degenerate metric.
    ///
    /// When either argument is non-isotropic the first row of the defining
    /// determinant is (0, e2, e3), which yields an isotropic result; when
    /// both arguments are isotropic the Euclidean formula applies and the
    /// result points along the absolute direction. Either way, the trihedron
    /// identity B = T ^ N holds for admissible curves.
    pub fn cross(&self, rhs: &Self) -> Self {
        if self.is_isotropic() && rhs.is_isotropic() {
            Self::new(
                self.y * rhs.z - self.z * rhs.y,
                self.z * rhs.x - self.x * rhs.z,
                self.x * rhs.y - self.y * rhs.x,
            )
        } else {
            Self::new(
                T::zero(),
                rhs.x * self.z - self.x * rhs.z,
                self.x * rhs.y - rhs.x * self.y,
            )
        }
    }

    /// Plain Euclidean length of all three components. Used by residual
    /// checks on isotropic differences; not a Galilean invariant.
    pub fn euclid_norm(&self) -> T {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn to_f64_array(&self) -> [f64; 3] {
        [self.x.as_f64(), self.y.as_f64(), self.z.as_f64()]
    }
}

impl<T: Real> Add for GVec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl<T: Real> Sub for GVec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl<T: Real> Neg for GVec3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Real> Mul<T> for GVec3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.x * k, self.y * k, self.z * k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: f64, y: f64, z: f64) -> GVec3<f64> {
        GVec3::new(x, y, z)
    }

    #[test]
    fn dot_non_isotropic_case() {
        assert_eq!(v(1.0, 2.0, 3.0).dot(&v(2.0, 5.0, 7.0)), 2.0);
    }

    #[test]
    fn dot_isotropic_case() {
        assert_eq!(v(0.0, 3.0, 4.0).dot(&v(0.0, 1.0, 2.0)), 11.0);
    }

    #[test]
    fn dot_mixed_case_takes_x_product() {
        assert_eq!(v(0.0, 3.0, 4.0).dot(&v(2.0, 1.0, 1.0)), 0.0);
    }

    #[test]
    fn norm_non_isotropic() {
        assert_eq!(v(3.0, -1.0, 2.0).norm(), 3.0);
        // Absolute-value convention: the norm never goes negative.
        assert_eq!(v(-3.0, 1.0, 2.0).norm(), 3.0);
    }

    #[test]
    fn norm_isotropic_is_euclidean() {
        assert_eq!(v(0.0, 3.0, 4.0).norm(), 5.0);
    }

    #[test]
    fn cross_mixed() {
        assert_eq!(v(1.0, 0.0, 0.0).cross(&v(0.0, 1.0, 0.0)), v(0.0, 0.0, 1.0));
    }

    #[test]
    fn cross_both_isotropic() {
        assert_eq!(v(0.0, 1.0, 0.0).cross(&v(0.0, 0.0, 1.0)), v(1.0, 0.0, 0.0));
    }

    #[test]
    fn cross_of_helix_tangent_and_normal_is_binormal() {
        // (s, cos s, sin s) at s = 0: T = (1, 0, 1), N = (0, -1, 0), B = (0, 0, -1).
        let t = v(1.0, 0.0, 1.0);
        let n = v(0.0, -1.0, 0.0);
        assert_eq!(t.cross(&n), v(0.0, 0.0, -1.0));
    }

    #[test]
    fn classify_cases() {
        assert_eq!(v(1.0, 2.0, 3.0).classify(), VectorClass::NonIsotropic);
        assert_eq!(v(0.0, 2.0, 3.0).classify(), VectorClass::Isotropic);
        // Tolerance contract: tiny first components count as isotropic.
        assert_eq!(v(1e-15, 2.0, 3.0).classify(), VectorClass::Isotropic);
    }

    #[test]
    fn dot_symmetry_spot() {
        let a = v(0.3, -1.0, 2.0);
        let b = v(0.0, 4.0, 5.0);
        assert_eq!(a.dot(&b), b.dot(&a));
    }
}
