//! Curve representations, arc-length reparametrization and the Frenet
//! apparatus.
//!
//! An *admissible* curve is one whose x-coordinate can serve as the
//! parameter; in the Galilean space that coordinate is the arc length, so an
//! admissible curve is s -> (s, y(s), z(s)). Along such a curve
//!
//! ```text
//! kappa = sqrt(y''^2 + z''^2)            T = (1, y', z')
//! tau   = det(r', r'', r''') / kappa^2   N = (0, y'', z'') / kappa
//!                                        B = (0, -z'', y'') / kappa
//! ```
//!
//! Curves given in an arbitrary parameter t are reparametrized by inverting
//! x(t) with a safeguarded Newton solve; derivatives of the inverse come
//! from the order-3 inverse-function rule, so no truncation error enters.
//! Planar curves (in a Euclidean plane x = const) carry their ordinary
//! Euclidean Frenet data, which later serves as an independent oracle.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CurveError;
use crate::expr::Expr;
use crate::isometry::IsometryParams;
use crate::jet::Jet3;
use crate::numeric::linspace;
use crate::report::{CheckReport, Sample};
use crate::scalar::Real;
use crate::tol;
use crate::vector::GVec3;

/// How a [`CurveSpec`] is parametrized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    /// Arbitrary parameter t; needs reparametrization.
    Raw,
    /// Already arc-length parametrized: the x-expression is the parameter.
    Admissible,
}

/// A curve description: three coordinate expressions plus bound constants
/// and a parameter interval.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec<T: Real> {
    pub kind: CurveKind,
    pub x: Expr,
    pub y: Expr,
    pub z: Expr,
    pub params: BTreeMap<String, T>,
    pub domain: (T, T),
}

impl<T: Real> CurveSpec<T> {
    pub fn raw(
        x: Expr,
        y: Expr,
        z: Expr,
        params: BTreeMap<String, T>,
        domain: (T, T),
    ) -> Result<Self, CurveError> {
        let spec = Self {
            kind: CurveKind::Raw,
            x,
            y,
            z,
            params,
            domain,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// An arc-length description; `x` must be literally the parameter.
    pub fn admissible(
        x: Expr,
        y: Expr,
        z: Expr,
        params: BTreeMap<String, T>,
        domain: (T, T),
    ) -> Result<Self, CurveError> {
        if x != Expr::Var {
            return Err(CurveError::XNotParameter);
        }
        let spec = Self {
            kind: CurveKind::Admissible,
            x,
            y,
            z,
            params,
            domain,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), CurveError> {
        let (lo, hi) = self.domain;
        if !(lo < hi) {
            return Err(CurveError::BadDomain {
                lo: lo.as_f64(),
                hi: hi.as_f64(),
            });
        }
        for expr in [&self.x, &self.y, &self.z] {
            for name in expr.free_params() {
                if !self.params.contains_key(&name) {
                    return Err(CurveError::UnboundParameter { name });
                }
            }
        }
        Ok(())
    }
}

/// Position and first three parameter derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveDerivatives<T> {
    pub position: GVec3<T>,
    pub r1: GVec3<T>,
    pub r2: GVec3<T>,
    pub r3: GVec3<T>,
}

/// The orthonormal trihedron with curvature and torsion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetFrame<T> {
    pub tangent: GVec3<T>,
    pub normal: GVec3<T>,
    pub binormal: GVec3<T>,
    pub kappa: T,
    pub tau: T,
}

/// Sampled cubic Hermite data backing ODE-constructed curves.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteTrack<T> {
    s0: T,
    h: T,
    ys: Vec<T>,
    dys: Vec<T>,
    zs: Vec<T>,
    dzs: Vec<T>,
}

impl<T: Real> HermiteTrack<T> {
    pub(crate) fn new(s0: T, h: T, ys: Vec<T>, dys: Vec<T>, zs: Vec<T>, dzs: Vec<T>) -> Self {
        debug_assert!(ys.len() >= 2 && ys.len() == dys.len());
        debug_assert!(ys.len() == zs.len() && zs.len() == dzs.len());
        Self {
            s0,
            h,
            ys,
            dys,
            zs,
            dzs,
        }
    }

    fn eval(&self, s: T) -> (Jet3<T>, Jet3<T>) {
        let n_seg = self.ys.len() - 1;
        let raw = ((s - self.s0) / self.h).floor().as_f64();
        let i = (raw.max(0.0) as usize).min(n_seg - 1);
        let si = self.s0 + self.h * T::of(i as f64);
        let u = (s - si) / self.h;
        (
            cubic_jets(self.ys[i], self.dys[i], self.ys[i + 1], self.dys[i + 1], self.h, u),
            cubic_jets(self.zs[i], self.dzs[i], self.zs[i + 1], self.dzs[i + 1], self.h, u),
        )
    }
}

/// Jets of the cubic Hermite segment with endpoint values `p0`, `p1` and
/// derivatives `m0`, `m1` (with respect to s) at local coordinate `u`.
fn cubic_jets<T: Real>(p0: T, m0: T, p1: T, m1: T, h: T, u: T) -> Jet3<T> {
    let two = T::of(2.0);
    let three = T::of(3.0);
    let six = T::of(6.0);
    let c0 = p0;
    let c1 = h * m0;
    let c2 = three * (p1 - p0) - h * (two * m0 + m1);
    let c3 = two * (p0 - p1) + h * (m0 + m1);
    let value = c0 + u * (c1 + u * (c2 + u * c3));
    let du = c1 + u * (two * c2 + three * u * c3);
    let ddu = two * c2 + six * c3 * u;
    let dddu = six * c3;
    Jet3::new(value, du / h, ddu / (h * h), dddu / (h * h * h))
}

#[derive(Debug, Clone, PartialEq)]
enum Backend<T: Real> {
    Analytic {
        y: Expr,
        z: Expr,
        params: BTreeMap<String, T>,
    },
    Inverted {
        x: Expr,
        y: Expr,
        z: Expr,
        params: BTreeMap<String, T>,
        t_domain: (T, T),
    },
    Hermite(HermiteTrack<T>),
    Mapped {
        base: Box<AdmissibleCurve<T>>,
        iso: IsometryParams<T>,
    },
}

/// An arc-length parametrized curve s -> (s, y(s), z(s)).
///
/// Immutable after construction; evaluation is pure, so instances may be
/// shared and evaluated from any number of threads.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleCurve<T: Real> {
    domain: (T, T),
    backend: Backend<T>,
}

impl<T: Real> AdmissibleCurve<T> {
    /// Build from a curve description, reparametrizing raw curves so the
    /// x-coordinate becomes the parameter.
    ///
    /// Raw curves must have x'(t) of constant sign with |x'| at or above
    /// [`tol::ADMIT_EPS`]; this is certified on a scan of
    /// [`tol::ADMIT_SCAN_POINTS`] points. A decreasing x reverses the
    /// orientation so the new parameter always increases.
    pub fn from_spec(spec: &CurveSpec<T>) -> Result<Self, CurveError> {
        match spec.kind {
            CurveKind::Admissible => Ok(Self {
                domain: spec.domain,
                backend: Backend::Analytic {
                    y: spec.y.clone(),
                    z: spec.z.clone(),
                    params: spec.params.clone(),
                },
            }),
            CurveKind::Raw => Self::reparametrize(spec),
        }
    }

    fn reparametrize(spec: &CurveSpec<T>) -> Result<Self, CurveError> {
        let (t_lo, t_hi) = spec.domain;
        let mut sign = T::zero();
        for t in linspace(t_lo, t_hi, tol::ADMIT_SCAN_POINTS) {
            let xj = spec.x.eval_jet(Jet3::var(t), &spec.params)?;
            if xj.d1.abs() < T::of(tol::ADMIT_EPS) {
                return Err(CurveError::NotAdmissible { t: t.as_f64() });
            }
            if sign == T::zero() {
                sign = xj.d1.signum();
            } else if xj.d1.signum() != sign {
                return Err(CurveError::NotAdmissible { t: t.as_f64() });
            }
        }
        let s_a = spec.x.eval_jet(Jet3::var(t_lo), &spec.params)?.v;
        let s_b = spec.x.eval_jet(Jet3::var(t_hi), &spec.params)?.v;
        let domain = if s_a < s_b { (s_a, s_b) } else { (s_b, s_a) };
        Ok(Self {
            domain,
            backend: Backend::Inverted {
                x: spec.x.clone(),
                y: spec.y.clone(),
                z: spec.z.clone(),
                params: spec.params.clone(),
                t_domain: spec.domain,
            },
        })
    }

    pub(crate) fn from_hermite(track: HermiteTrack<T>, domain: (T, T)) -> Self {
        Self {
            domain,
            backend: Backend::Hermite(track),
        }
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    /// Jets of y(s) and z(s).
    pub fn jets(&self, s: T) -> Result<(Jet3<T>, Jet3<T>), CurveError> {
        let s = clamp_to_domain(s, self.domain)?;
        match &self.backend {
            Backend::Analytic { y, z, params } => {
                let t = Jet3::var(s);
                Ok((y.eval_jet(t, params)?, z.eval_jet(t, params)?))
            }
            Backend::Inverted {
                x,
                y,
                z,
                params,
                t_domain,
            } => {
                let (t, x_jets) = invert_arc_length(x, params, *t_domain, s)?;
                let t_jets = inverse_jets(s, x_jets)?;
                let tj = Jet3::var(t);
                let y_in_t = y.eval_jet(tj, params)?;
                let z_in_t = z.eval_jet(tj, params)?;
                Ok((y_in_t.compose(t_jets), z_in_t.compose(t_jets)))
            }
            Backend::Hermite(track) => Ok(track.eval(s)),
            Backend::Mapped { base, iso } => {
                let s_base = s - iso.a11;
                let (yj, zj) = base.jets(s_base)?;
                let xj = Jet3::var(s_base);
                let (sin_phi, cos_phi) = (iso.phi.sin(), iso.phi.cos());
                let y_new = Jet3::constant(iso.a21)
                    + xj * iso.a22
                    + yj * (iso.a23 * cos_phi)
                    + zj * (iso.a23 * sin_phi);
                let z_new = Jet3::constant(iso.a31) + xj * iso.a32 - yj * (iso.a23 * sin_phi)
                    + zj * (iso.a23 * cos_phi);
                Ok((y_new, z_new))
            }
        }
    }

    /// Position and the first three derivative vectors at `s`.
    pub fn derivatives(&self, s: T) -> Result<CurveDerivatives<T>, CurveError> {
        let (yj, zj) = self.jets(s)?;
        Ok(CurveDerivatives {
            position: GVec3::new(s, yj.v, zj.v),
            r1: GVec3::new(T::one(), yj.d1, zj.d1),
            r2: GVec3::new(T::zero(), yj.d2, zj.d2),
            r3: GVec3::new(T::zero(), yj.d3, zj.d3),
        })
    }

    pub fn position(&self, s: T) -> Result<GVec3<T>, CurveError> {
        Ok(self.derivatives(s)?.position)
    }

    /// The Frenet frame at `s`. Fails with [`CurveError::FrameUndefined`]
    /// when the curvature drops below [`tol::KAPPA_EPS`].
    pub fn frenet(&self, s: T) -> Result<FrenetFrame<T>, CurveError> {
        let d = self.derivatives(s)?;
        let kappa = d.r2.y.hypot(d.r2.z);
        if kappa < T::of(tol::KAPPA_EPS) {
            return Err(CurveError::FrameUndefined {
                s: s.as_f64(),
                kappa: kappa.as_f64(),
            });
        }
        let tau = (d.r2.y * d.r3.z - d.r2.z * d.r3.y) / (kappa * kappa);
        Ok(FrenetFrame {
            tangent: d.r1,
            normal: GVec3::new(T::zero(), d.r2.y / kappa, d.r2.z / kappa),
            binormal: GVec3::new(T::zero(), -d.r2.z / kappa, d.r2.y / kappa),
            kappa,
            tau,
        })
    }

    /// Pointwise image under an isometry, reindexed so x stays the
    /// parameter. Isometries shift x by `a11`, so the domain shifts too.
    pub fn transformed(&self, iso: &IsometryParams<T>) -> Result<Self, CurveError> {
        if !iso.is_isometry() {
            return Err(CurveError::NotAnIsometry);
        }
        Ok(Self {
            domain: (self.domain.0 + iso.a11, self.domain.1 + iso.a11),
            backend: Backend::Mapped {
                base: Box::new(self.clone()),
                iso: *iso,
            },
        })
    }
}

fn clamp_to_domain<T: Real>(s: T, (lo, hi): (T, T)) -> Result<T, CurveError> {
    let scale = T::one() + lo.abs().max(hi.abs());
    let slack = T::of(32.0) * T::epsilon() * scale;
    if s < lo - slack || s > hi + slack {
        return Err(CurveError::OutOfDomain {
            s: s.as_f64(),
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        });
    }
    Ok(s.max(lo).min(hi))
}

/// Solve x(t) = s by Newton iteration safeguarded with bisection, returning
/// the root and the jets of x there.
fn invert_arc_length<T: Real>(
    x: &Expr,
    params: &BTreeMap<String, T>,
    (t_lo, t_hi): (T, T),
    s: T,
) -> Result<(T, Jet3<T>), CurveError> {
    let x_lo = x.eval_jet(Jet3::var(t_lo), params)?.v;
    let x_hi = x.eval_jet(Jet3::var(t_hi), params)?.v;
    let increasing = x_hi > x_lo;
    let (mut lo, mut hi) = (t_lo, t_hi);
    let tolerance = T::of(tol::ROOT_TOL)
        .max(T::of(8.0) * T::epsilon() * (T::one() + s.abs()));
    // Linear interpolation seed; exact for affine x(t).
    let span = x_hi - x_lo;
    let mut t = if span == T::zero() {
        (t_lo + t_hi) * T::of(0.5)
    } else {
        t_lo + (s - x_lo) / span * (t_hi - t_lo)
    };
    t = t.max(t_lo.min(t_hi)).min(t_lo.max(t_hi));
    for _ in 0..tol::ROOT_MAX_ITER {
        let jets = x.eval_jet(Jet3::var(t), params)?;
        let residual = jets.v - s;
        if residual.abs() <= tolerance {
            return Ok((t, jets));
        }
        let too_small = (residual < T::zero()) == increasing;
        if too_small {
            lo = t;
        } else {
            hi = t;
        }
        let newton = t - residual / jets.d1;
        let (bra, ket) = (lo.min(hi), lo.max(hi));
        t = if jets.d1.abs() > T::zero() && newton > bra && newton < ket {
            newton
        } else {
            (lo + hi) * T::of(0.5)
        };
    }
    Err(CurveError::NoConvergence {
        target: s.as_f64(),
    })
}

/// Order-3 inverse-function rule: jets of t(s) from the jets of x(t).
fn inverse_jets<T: Real>(s: T, x: Jet3<T>) -> Result<Jet3<T>, CurveError> {
    if x.d1.abs() < T::of(tol::ADMIT_EPS) {
        return Err(CurveError::NotAdmissible { t: s.as_f64() });
    }
    let xp = x.d1;
    let xp2 = xp * xp;
    let xp3 = xp2 * xp;
    let d1 = xp.recip();
    let d2 = -x.d2 / xp3;
    let d3 = (T::of(3.0) * x.d2 * x.d2 - xp * x.d3) / (xp3 * xp2);
    // The value slot holds t itself; the caller tracks it.
    Ok(Jet3::new(s, d1, d2, d3))
}

// ---------------------------------------------------------------------------
// Planar curves
// ---------------------------------------------------------------------------

/// Euclidean tangent data of a planar curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarFrame<T> {
    /// Unit tangent (isotropic: first component zero).
    pub tangent: GVec3<T>,
    /// Euclidean arc-length rate ds*/ds.
    pub speed: T,
    /// Ordinary (nonnegative) Euclidean curvature of the plane curve.
    pub kappa: T,
}

/// Position and first two derivative vectors of a planar curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarDerivatives<T> {
    pub position: GVec3<T>,
    pub r1: GVec3<T>,
    pub r2: GVec3<T>,
}

#[derive(Debug, Clone, PartialEq)]
enum PlanarBackend<T: Real> {
    Analytic {
        y: Expr,
        z: Expr,
        params: BTreeMap<String, T>,
    },
    /// y*(s) = y + (c - s) y', z*(s) = z + (c - s) z' over the base curve.
    InvoluteOf { base: AdmissibleCurve<T> },
}

/// A curve confined to the Euclidean plane x = const, parametrized by its
/// parent parameter. Evaluation exposes derivatives through order two,
/// which is everything its consumers (Euclidean frame, arc length, ODE
/// right-hand sides) need.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarCurve<T: Real> {
    plane_x: T,
    domain: (T, T),
    backend: PlanarBackend<T>,
}

impl<T: Real> PlanarCurve<T> {
    /// A planar curve given by two coordinate expressions.
    pub fn analytic(
        plane_x: T,
        y: Expr,
        z: Expr,
        params: BTreeMap<String, T>,
        domain: (T, T),
    ) -> Result<Self, CurveError> {
        if !(domain.0 < domain.1) {
            return Err(CurveError::BadDomain {
                lo: domain.0.as_f64(),
                hi: domain.1.as_f64(),
            });
        }
        for expr in [&y, &z] {
            for name in expr.free_params() {
                if !params.contains_key(&name) {
                    return Err(CurveError::UnboundParameter { name });
                }
            }
        }
        Ok(Self {
            plane_x,
            domain,
            backend: PlanarBackend::Analytic { y, z, params },
        })
    }

    pub(crate) fn involute_of(base: AdmissibleCurve<T>, c: T) -> Self {
        let domain = base.domain();
        Self {
            plane_x: c,
            domain,
            backend: PlanarBackend::InvoluteOf { base },
        }
    }

    pub fn plane_x(&self) -> T {
        self.plane_x
    }

    pub fn domain(&self) -> (T, T) {
        self.domain
    }

    /// Position and first two derivatives with respect to the parent
    /// parameter.
    pub fn derivatives(&self, s: T) -> Result<PlanarDerivatives<T>, CurveError> {
        let s = clamp_to_domain(s, self.domain)?;
        let (y, z) = match &self.backend {
            PlanarBackend::Analytic { y, z, params } => {
                let t = Jet3::var(s);
                (y.eval_jet(t, params)?, z.eval_jet(t, params)?)
            }
            PlanarBackend::InvoluteOf { base } => {
                let lambda = self.plane_x - s;
                let (yj, zj) = base.jets(s)?;
                let fold = |j: Jet3<T>| {
                    Jet3::new(
                        j.v + lambda * j.d1,
                        lambda * j.d2,
                        -j.d2 + lambda * j.d3,
                        T::nan(), // order-3 data of the base ends here
                    )
                };
                (fold(yj), fold(zj))
            }
        };
        Ok(PlanarDerivatives {
            position: GVec3::new(self.plane_x, y.v, z.v),
            r1: GVec3::new(T::zero(), y.d1, z.d1),
            r2: GVec3::new(T::zero(), y.d2, z.d2),
        })
    }

    pub fn position(&self, s: T) -> Result<GVec3<T>, CurveError> {
        Ok(self.derivatives(s)?.position)
    }

    /// Euclidean unit tangent, speed and curvature at `s`.
    ///
    /// Fails with [`CurveError::DegenerateSpeed`] when the speed drops to
    /// [`tol::SPEED_EPS`] or below (for an involute that happens exactly at
    /// s = c).
    pub fn euclid_frame(&self, s: T) -> Result<PlanarFrame<T>, CurveError> {
        let d = self.derivatives(s)?;
        let speed = d.r1.y.hypot(d.r1.z);
        if speed <= T::of(tol::SPEED_EPS) {
            return Err(CurveError::DegenerateSpeed { s: s.as_f64() });
        }
        let tangent = GVec3::new(T::zero(), d.r1.y / speed, d.r1.z / speed);
        let kappa = (d.r1.y * d.r2.z - d.r1.z * d.r2.y).abs() / (speed * speed * speed);
        Ok(PlanarFrame {
            tangent,
            speed,
            kappa,
        })
    }
}

// ---------------------------------------------------------------------------
// Curve-level verification
// ---------------------------------------------------------------------------

/// Residuals of the Frenet equations T' = kappa N, N' = tau B, B' = -tau N
/// under central finite differences with step [`tol::FD_STEP`].
///
/// This is deliberately a derivative route independent of the jets that
/// produce the frames.
pub fn check_frenet_equations<T: Real>(
    curve: &AdmissibleCurve<T>,
    n: usize,
    tolerance: Option<f64>,
) -> Result<CheckReport, CurveError> {
    if n < 2 {
        return Err(CurveError::BadGrid(n));
    }
    let tolerance = tolerance.unwrap_or(tol::TOL_FRENET_ODE);
    let h = T::of(tol::FD_STEP);
    let (lo, hi) = curve.domain();
    let grid = linspace(lo + h, hi - h, n);
    let mut samples = Vec::with_capacity(n);
    for &s in &grid {
        let back = curve.frenet(s - h)?;
        let here = curve.frenet(s)?;
        let fwd = curve.frenet(s + h)?;
        let two_h = T::of(2.0) * h;
        let fd = |a: GVec3<T>, b: GVec3<T>| (b - a) * two_h.recip();
        let r_t = (fd(back.tangent, fwd.tangent) - here.normal * here.kappa).euclid_norm();
        let r_n = (fd(back.normal, fwd.normal) - here.binormal * here.tau).euclid_norm();
        let r_b = (fd(back.binormal, fwd.binormal) + here.normal * here.tau).euclid_norm();
        let deviation = r_t.max(r_n).max(r_b);
        samples.push(
            Sample::new(s.as_f64(), deviation.as_f64())
                .with("residual_tangent", r_t.as_f64())
                .with("residual_normal", r_n.as_f64())
                .with("residual_binormal", r_b.as_f64()),
        );
    }
    Ok(CheckReport::new(
        "frenet-ode",
        grid.iter().map(|s| s.as_f64()).collect(),
        samples,
        tolerance,
        format!("central differences with step {}", tol::FD_STEP),
    ))
}

/// Invariance of curvature and torsion under random isometries.
///
/// Draws `n_isometries` isometries from a seeded generator (translations and
/// shears in [-2, 2], rotation angle in [-pi, pi]) and compares kappa and
/// tau of the transformed curve at the shifted parameter against the
/// originals on an `n`-point grid.
pub fn check_isometry_invariance<T: Real>(
    curve: &AdmissibleCurve<T>,
    n_isometries: usize,
    n: usize,
    seed: u64,
    tolerance: Option<f64>,
) -> Result<CheckReport, CurveError> {
    if n < 2 {
        return Err(CurveError::BadGrid(n));
    }
    let tolerance = tolerance.unwrap_or(tol::TOL_ISOMETRY);
    let (lo, hi) = curve.domain();
    let grid = linspace(lo, hi, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(n_isometries * n);
    for index in 0..n_isometries {
        let iso = random_isometry::<T, _>(&mut rng);
        let moved = curve.transformed(&iso)?;
        for &s in &grid {
            let original = curve.frenet(s)?;
            let image = moved.frenet(s + iso.a11)?;
            let dk = (image.kappa - original.kappa).abs();
            let dt = (image.tau - original.tau).abs();
            samples.push(
                Sample::new(s.as_f64(), dk.max(dt).as_f64())
                    .with("isometry_index", index as f64)
                    .with("kappa_deviation", dk.as_f64())
                    .with("tau_deviation", dt.as_f64()),
            );
        }
    }
    Ok(CheckReport::new(
        "isometry",
        grid.iter().map(|s| s.as_f64()).collect(),
        samples,
        tolerance,
        format!("{n_isometries} random isometries, seed {seed}"),
    ))
}

fn random_isometry<T: Real, R: Rng>(rng: &mut R) -> IsometryParams<T> {
    let mut draw = |lo: f64, hi: f64| T::of(rng.gen_range(lo..hi));
    IsometryParams::isometry(
        draw(-2.0, 2.0),
        draw(-2.0, 2.0),
        draw(-2.0, 2.0),
        draw(-2.0, 2.0),
        draw(-2.0, 2.0),
        draw(-std::f64::consts::PI, std::f64::consts::PI),
    )
}
