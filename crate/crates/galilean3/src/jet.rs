//! Order-3 forward differentiation arithmetic.
//!
//! A [`Jet3`] carries a value together with its first three derivatives with
//! respect to one parameter. Arithmetic propagates derivatives by truncated
//! Taylor rules, so curvature (second derivatives) and torsion (third
//! derivatives) come out free of truncation error for analytic curves.
//! The order is fixed at three: torsion needs r''' and nothing more.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Real;

/// Failure of a partial jet operation.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum JetError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{func} undefined for argument {value}")]
    Domain { func: &'static str, value: f64 },
}

/// Value and first three derivatives of a scalar function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet3<T> {
    pub v: T,
    pub d1: T,
    pub d2: T,
    pub d3: T,
}

impl<T: Real> Jet3<T> {
    pub fn new(v: T, d1: T, d2: T, d3: T) -> Self {
        Self { v, d1, d2, d3 }
    }

    /// The seeded independent variable: value `t0`, derivative 1.
    pub fn var(t0: T) -> Self {
        Self::new(t0, T::one(), T::zero(), T::zero())
    }

    /// A constant: all derivatives vanish.
    pub fn constant(c: T) -> Self {
        Self::new(c, T::zero(), T::zero(), T::zero())
    }

    /// Chain rule through order 3.
    ///
    /// Treats `self` as the derivatives of an outer function with respect to
    /// an intermediate variable u, evaluated at u = `inner.v`, and `inner`
    /// as the derivatives of u with respect to the final parameter.
    pub fn compose(self, inner: Jet3<T>) -> Self {
        let three = T::of(3.0);
        Self::new(
            self.v,
            self.d1 * inner.d1,
            self.d2 * inner.d1 * inner.d1 + self.d1 * inner.d2,
            self.d3 * inner.d1 * inner.d1 * inner.d1
                + three * self.d2 * inner.d1 * inner.d2
                + self.d1 * inner.d3,
        )
    }

    pub fn sin(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        Self::new(s, c, -s, -c).compose(self)
    }

    pub fn cos(self) -> Self {
        let (s, c) = (self.v.sin(), self.v.cos());
        Self::new(c, -s, -c, s).compose(self)
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Self::new(e, e, e, e).compose(self)
    }

    pub fn sqrt(self) -> Result<Self, JetError> {
        if self.v <= T::zero() {
            return Err(JetError::Domain {
                func: "sqrt",
                value: self.v.as_f64(),
            });
        }
        let r = self.v.sqrt();
        let half = T::of(0.5);
        let g1 = half / r;
        let g2 = -half * g1 / self.v;
        let g3 = -T::of(1.5) * g2 / self.v;
        Ok(Self::new(r, g1, g2, g3).compose(self))
    }

    pub fn ln(self) -> Result<Self, JetError> {
        if self.v <= T::zero() {
            return Err(JetError::Domain {
                func: "ln",
                value: self.v.as_f64(),
            });
        }
        let g1 = self.v.recip();
        let g2 = -g1 * g1;
        let g3 = T::of(2.0) * g1 * g1 * g1;
        Ok(Self::new(self.v.ln(), g1, g2, g3).compose(self))
    }

    /// Division; fails when the denominator value is zero.
    pub fn try_div(self, rhs: Self) -> Result<Self, JetError> {
        if rhs.v == T::zero() {
            return Err(JetError::DivisionByZero);
        }
        let two = T::of(2.0);
        let three = T::of(3.0);
        let h = self.v / rhs.v;
        let h1 = (self.d1 - h * rhs.d1) / rhs.v;
        let h2 = (self.d2 - two * h1 * rhs.d1 - h * rhs.d2) / rhs.v;
        let h3 = (self.d3 - three * h2 * rhs.d1 - three * h1 * rhs.d2 - h * rhs.d3) / rhs.v;
        Ok(Self::new(h, h1, h2, h3))
    }

    /// Integer power. Exponents of magnitude at most 8 go by repeated
    /// multiplication; larger ones via exp(n ln x), which needs x > 0.
    pub fn powi(self, n: i32) -> Result<Self, JetError> {
        let m = (n as i64).unsigned_abs();
        if m == 0 {
            return Ok(Self::constant(T::one()));
        }
        let positive_power = if m <= 8 {
            let mut acc = self;
            for _ in 1..m {
                acc = acc * self;
            }
            acc
        } else {
            if self.v <= T::zero() {
                return Err(JetError::Domain {
                    func: "powi",
                    value: self.v.as_f64(),
                });
            }
            (self.ln()? * Self::constant(T::of(m as f64))).exp()
        };
        if n < 0 {
            Self::constant(T::one()).try_div(positive_power)
        } else {
            Ok(positive_power)
        }
    }
}

impl<T: Real> Add for Jet3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.v + rhs.v,
            self.d1 + rhs.d1,
            self.d2 + rhs.d2,
            self.d3 + rhs.d3,
        )
    }
}

impl<T: Real> Sub for Jet3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.v - rhs.v,
            self.d1 - rhs.d1,
            self.d2 - rhs.d2,
            self.d3 - rhs.d3,
        )
    }
}

impl<T: Real> Neg for Jet3<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.v, -self.d1, -self.d2, -self.d3)
    }
}

impl<T: Real> Mul for Jet3<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let two = T::of(2.0);
        let three = T::of(3.0);
        Self::new(
            self.v * rhs.v,
            self.d1 * rhs.v + self.v * rhs.d1,
            self.d2 * rhs.v + two * self.d1 * rhs.d1 + self.v * rhs.d2,
            self.d3 * rhs.v + three * self.d2 * rhs.d1 + three * self.d1 * rhs.d2
                + self.v * rhs.d3,
        )
    }
}

impl<T: Real> Mul<T> for Jet3<T> {
    type Output = Self;
    fn mul(self, k: T) -> Self {
        Self::new(self.v * k, self.d1 * k, self.d2 * k, self.d3 * k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type J = Jet3<f64>;

    #[test]
    fn var_seeds_unit_derivative() {
        assert_eq!(J::var(2.5), J::new(2.5, 1.0, 0.0, 0.0));
        assert_eq!(J::var(0.0), J::new(0.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn var_plus_constant_keeps_seed() {
        let j = J::var(3.0) + J::constant(4.0);
        assert_eq!(j, J::new(7.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn square_of_variable() {
        let t = J::var(3.0);
        assert_eq!(t * t, J::new(9.0, 6.0, 2.0, 0.0));
    }

    #[test]
    fn sine_at_origin() {
        assert_eq!(J::var(0.0).sin(), J::new(0.0, 1.0, 0.0, -1.0));
    }

    #[test]
    fn reciprocal_of_variable() {
        let j = J::constant(1.0).try_div(J::var(2.0)).unwrap();
        assert_eq!(j, J::new(0.5, -0.25, 0.25, -0.375));
    }

    #[test]
    fn division_by_zero_value_fails() {
        assert_eq!(
            J::constant(1.0).try_div(J::var(0.0)),
            Err(JetError::DivisionByZero)
        );
    }

    #[test]
    fn sqrt_requires_positive_value() {
        let err = J::var(-1.0).sqrt().unwrap_err();
        assert!(matches!(err, JetError::Domain { func: "sqrt", .. }));
    }

    #[test]
    fn sqrt_derivatives() {
        let j = J::var(4.0).sqrt().unwrap();
        // g = sqrt(t): g' = 1/(2 sqrt t), g'' = -1/(4 t^(3/2)), g''' = 3/(8 t^(5/2)).
        assert!((j.v - 2.0).abs() < 1e-15);
        assert!((j.d1 - 0.25).abs() < 1e-15);
        assert!((j.d2 + 1.0 / 32.0).abs() < 1e-15);
        assert!((j.d3 - 3.0 / 256.0).abs() < 1e-15);
    }

    #[test]
    fn powi_small_matches_repeated_multiplication() {
        let t = J::var(3.0);
        assert_eq!(t.powi(3).unwrap(), t * t * t);
        assert_eq!(t.powi(1).unwrap(), t);
        assert_eq!(t.powi(0).unwrap(), J::constant(1.0));
    }

    #[test]
    fn powi_large_goes_through_exp_log() {
        let t = J::var(1.5);
        let direct = {
            let mut acc = t;
            for _ in 1..12 {
                acc = acc * t;
            }
            acc
        };
        let via_exp = t.powi(12).unwrap();
        assert!((via_exp.v - direct.v).abs() / direct.v < 1e-13);
        assert!((via_exp.d1 - direct.d1).abs() / direct.d1 < 1e-12);
        assert!((via_exp.d2 - direct.d2).abs() / direct.d2 < 1e-12);
        assert!((via_exp.d3 - direct.d3).abs() / direct.d3 < 1e-11);
        assert!(J::var(-1.5).powi(12).is_err());
    }

    #[test]
    fn negative_power_is_reciprocal() {
        let t = J::var(2.0);
        let inv2 = t.powi(-2).unwrap();
        let by_hand = J::constant(1.0).try_div(t * t).unwrap();
        assert_eq!(inv2, by_hand);
        assert_eq!(J::var(0.0).powi(-1), Err(JetError::DivisionByZero));
    }

    #[test]
    fn exp_of_scaled_variable() {
        // g(t) = exp(2t) at t = 0: derivatives 1, 2, 4, 8.
        let j = (J::var(0.0) * 2.0).exp();
        assert!((j.v - 1.0).abs() < 1e-15);
        assert!((j.d1 - 2.0).abs() < 1e-15);
        assert!((j.d2 - 4.0).abs() < 1e-15);
        assert!((j.d3 - 8.0).abs() < 1e-15);
    }
}
