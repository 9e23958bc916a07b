//! Involute and evolute constructions with their verification checkers.
//!
//! The involute of an admissible curve alpha with constant c is
//! alpha*(s) = alpha(s) + (c - s) T(s). Because the tangent's first
//! component is 1, the x-image collapses to c: the involute lives entirely
//! in the Euclidean plane x = c, and the following hold on s < c:
//!
//! ```text
//! || alpha*(s) - alpha(s) || = |c - s|      (constant-rate distance)
//! T* = N        ds*/ds = (c - s) kappa      (frame exchange)
//! kappa* = tau / ((c - s) kappa)            (curvature relation)
//! ```
//!
//! An evolute reverses the construction: given a planar curve, a
//! correspondence u(s) and initial values, the defining identity
//! target(u(s)) = beta(s) + (c - s) T_beta(s) becomes a linear ODE for the
//! evolute's coordinates, integrated here with classical RK4.
//!
//! The checkers sample these identities on grids, excluding a neighbourhood
//! of the singular parameter s = c, and report per-point deviations.

use std::collections::BTreeMap;

use crate::curve::{AdmissibleCurve, HermiteTrack, PlanarCurve};
use crate::error::CurveError;
use crate::expr::Expr;
use crate::jet::Jet3;
use crate::numeric::linspace;
use crate::report::{CheckReport, Sample};
use crate::scalar::Real;
use crate::tol;
use crate::vector::GVec3;

/// An admissible curve paired with its involute in the plane x = c.
#[derive(Debug, Clone, PartialEq)]
pub struct InvolutePair<T: Real> {
    base: AdmissibleCurve<T>,
    c: T,
    involute: PlanarCurve<T>,
    check_domain: (T, T),
}

/// Frame data of the involute at one parameter value.
///
/// The involute is a plane curve, so only its tangent, normal and Euclidean
/// curvature are defined; `kappa_star` is reported nonnegative with the sign
/// of tau absorbed into `n_star`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvoluteFrame<T> {
    pub t_star: GVec3<T>,
    pub n_star: GVec3<T>,
    pub kappa_star: T,
    pub dsstar_ds: T,
}

/// Build the involute of `base` with constant `c`.
///
/// The base must have curvature at or above [`tol::KAPPA_EPS`] everywhere
/// (certified on a scan), and the check domain — the part of the base domain
/// with s <= c - [`tol::LAMBDA_MIN`] — must be nonempty.
pub fn make_involute<T: Real>(
    base: &AdmissibleCurve<T>,
    c: T,
) -> Result<InvolutePair<T>, CurveError> {
    let (lo, hi) = base.domain();
    for s in linspace(lo, hi, tol::ADMIT_SCAN_POINTS) {
        base.frenet(s)?; // propagates FrameUndefined on vanishing curvature
    }
    let check_hi = hi.min(c - T::of(tol::LAMBDA_MIN));
    if !(lo < check_hi) {
        return Err(CurveError::EmptyCheckDomain {
            lo: lo.as_f64(),
            hi: check_hi.as_f64(),
        });
    }
    Ok(InvolutePair {
        base: base.clone(),
        c,
        involute: PlanarCurve::involute_of(base.clone(), c),
        check_domain: (lo, check_hi),
    })
}

impl<T: Real> InvolutePair<T> {
    pub fn base(&self) -> &AdmissibleCurve<T> {
        &self.base
    }

    pub fn c(&self) -> T {
        self.c
    }

    pub fn involute(&self) -> &PlanarCurve<T> {
        &self.involute
    }

    pub fn check_domain(&self) -> (T, T) {
        self.check_domain
    }

    /// Involute frame via the base frame: T* = N, ds*/ds = (c - s) kappa,
    /// kappa* = |tau| / ((c - s) kappa), N* = sign(tau) B.
    pub fn frame(&self, s: T) -> Result<InvoluteFrame<T>, CurveError> {
        // Same subtraction as the check-domain edge, so grid endpoints never
        // straddle the cutoff.
        let singular_edge = self.c - T::of(tol::LAMBDA_MIN);
        if s > singular_edge && s < self.c + T::of(tol::LAMBDA_MIN) {
            return Err(CurveError::SingularLambda {
                s: s.as_f64(),
                c: self.c.as_f64(),
            });
        }
        let (lo, hi) = self.check_domain;
        if s < lo || s > hi {
            return Err(CurveError::OutOfDomain {
                s: s.as_f64(),
                lo: lo.as_f64(),
                hi: hi.as_f64(),
            });
        }
        let fr = self.base.frenet(s)?;
        let dsstar_ds = (self.c - s) * fr.kappa;
        let kappa_star = fr.tau.abs() / dsstar_ds;
        let n_star = if fr.tau < T::zero() {
            -fr.binormal
        } else {
            fr.binormal
        };
        Ok(InvoluteFrame {
            t_star: fr.normal,
            n_star,
            kappa_star,
            dsstar_ds,
        })
    }
}

// ---------------------------------------------------------------------------
// Evolutes
// ---------------------------------------------------------------------------

/// Data determining one evolute of a planar curve.
///
/// `target` is the planar curve that is to become the involute;
/// `correspondence` maps the evolute parameter s (monotonically) to the
/// target's own parameter. Each choice of initial values picks one member
/// of the evolute family.
#[derive(Debug, Clone, PartialEq)]
pub struct EvoluteProblem<T: Real> {
    pub target: PlanarCurve<T>,
    pub correspondence: Expr,
    pub corr_params: BTreeMap<String, T>,
    pub y0: T,
    pub z0: T,
    pub s_start: T,
    pub s_end: T,
    pub step: T,
}

/// A reconstructed evolute, remembering the problem it solves so that two
/// evolutes of the same target can be compared.
#[derive(Debug, Clone, PartialEq)]
pub struct Evolute<T: Real> {
    curve: AdmissibleCurve<T>,
    problem: EvoluteProblem<T>,
}

impl<T: Real> Evolute<T> {
    pub fn curve(&self) -> &AdmissibleCurve<T> {
        &self.curve
    }

    pub fn problem(&self) -> &EvoluteProblem<T> {
        &self.problem
    }

    fn shares_setup_with(&self, other: &Self) -> bool {
        self.problem.target == other.problem.target
            && self.problem.correspondence == other.problem.correspondence
            && self.problem.corr_params == other.problem.corr_params
    }
}

/// Integrate the evolute ODE
///
/// ```text
/// y'(s) = (Y(u(s)) - y(s)) / (c - s)
/// z'(s) = (Z(u(s)) - z(s)) / (c - s)
/// ```
///
/// from the problem's initial values by classical RK4 with fixed step
/// (adjusted to divide the interval evenly), where (c, Y, Z) is the target
/// planar curve. The result is an admissible curve backed by cubic Hermite
/// interpolation of the integration nodes, with node derivatives taken from
/// the ODE right-hand side; by construction its involute with constant c
/// reproduces the target at the integration nodes exactly.
pub fn make_evolute<T: Real>(problem: &EvoluteProblem<T>) -> Result<Evolute<T>, CurveError> {
    let EvoluteProblem {
        target,
        correspondence,
        corr_params,
        y0,
        z0,
        s_start,
        s_end,
        step,
    } = problem;
    let (s_start, s_end, step) = (*s_start, *s_end, *step);
    if !(s_start < s_end) || !(step > T::zero()) {
        return Err(CurveError::BadIntegrationGrid {
            start: s_start.as_f64(),
            end: s_end.as_f64(),
            step: step.as_f64(),
        });
    }
    let c = target.plane_x();
    if s_end >= c {
        return Err(CurveError::SingularLambda {
            s: s_end.as_f64(),
            c: c.as_f64(),
        });
    }

    let span = s_end - s_start;
    let n_steps = ((span / step).as_f64().round().max(1.0)) as usize;
    let h = span / T::of(n_steps as f64);

    let rhs = |s: T, y: T, z: T| -> Result<(T, T), CurveError> {
        let u = correspondence.eval_jet(Jet3::var(s), corr_params)?.v;
        let p = target.position(u)?;
        let lambda = c - s;
        Ok(((p.y - y) / lambda, (p.z - z) / lambda))
    };

    let mut ys = Vec::with_capacity(n_steps + 1);
    let mut zs = Vec::with_capacity(n_steps + 1);
    let mut dys = Vec::with_capacity(n_steps + 1);
    let mut dzs = Vec::with_capacity(n_steps + 1);
    let (mut y, mut z) = (*y0, *z0);
    let half = T::of(0.5);
    let sixth = T::of(6.0).recip();
    let two = T::of(2.0);
    for k in 0..=n_steps {
        let s = s_start + h * T::of(k as f64);
        let (dy, dz) = rhs(s, y, z)?;
        ys.push(y);
        zs.push(z);
        dys.push(dy);
        dzs.push(dz);
        if k == n_steps {
            break;
        }
        let (k1y, k1z) = (dy, dz);
        let (k2y, k2z) = rhs(s + half * h, y + half * h * k1y, z + half * h * k1z)?;
        let (k3y, k3z) = rhs(s + half * h, y + half * h * k2y, z + half * h * k2z)?;
        let (k4y, k4z) = rhs(s + h, y + h * k3y, z + h * k3z)?;
        y = y + h * sixth * (k1y + two * k2y + two * k3y + k4y);
        z = z + h * sixth * (k1z + two * k2z + two * k3z + k4z);
    }

    let track = HermiteTrack::new(s_start, h, ys, dys, zs, dzs);
    Ok(Evolute {
        curve: AdmissibleCurve::from_hermite(track, (s_start, s_end)),
        problem: problem.clone(),
    })
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

/// Distance constancy: || alpha*(s) - alpha(s) || must equal |c - s|.
pub fn check_constant_distance<T: Real>(
    pair: &InvolutePair<T>,
    n: usize,
    tolerance: Option<f64>,
) -> Result<CheckReport, CurveError> {
    let tolerance = tolerance.unwrap_or(tol::TOL_DISTANCE_CONSTANCY);
    let grid = check_grid(pair, n)?;
    let mut samples = Vec::with_capacity(n);
    for &s in &grid {
        let base = pair.base.position(s)?;
        let image = pair.involute.position(s)?;
        let distance = (image - base).norm();
        let expected = (pair.c - s).abs();
        samples.push(
            Sample::new(s.as_f64(), (distance - expected).abs().as_f64())
                .with("distance", distance.as_f64())
                .with("expected", expected.as_f64()),
        );
    }
    Ok(CheckReport::new(
        "3.1",
        to_f64(&grid),
        samples,
        tolerance,
        format!("c = {}", pair.c),
    ))
}

/// Curvature relation: the independent Euclidean curvature of the involute
/// against |tau| / ((c - s) kappa), relative to max(1, kappa*). The speed
/// identity ds*/ds = (c - s) kappa is recorded per sample as well.
pub fn check_curvature_relation<T: Real>(
    pair: &InvolutePair<T>,
    n: usize,
    tolerance: Option<f64>,
) -> Result<CheckReport, CurveError> {
    let tolerance = tolerance.unwrap_or(tol::TOL_CURVATURE_RELATION);
    let grid = check_grid(pair, n)?;
    let mut samples = Vec::with_capacity(n);
    let mut max_speed_dev = 0.0f64;
    for &s in &grid {
        let frame = pair.frame(s)?;
        let oracle = pair.involute.euclid_frame(s)?;
        let denom = T::one().max(frame.kappa_star);
        let deviation = (oracle.kappa - frame.kappa_star).abs() / denom;
        let speed_deviation = (oracle.speed - frame.dsstar_ds).abs();
        max_speed_dev = max_speed_dev.max(speed_deviation.as_f64());
        samples.push(
            Sample::new(s.as_f64(), deviation.as_f64())
                .with("kappa_star_oracle", oracle.kappa.as_f64())
                .with("kappa_star_formula", frame.kappa_star.as_f64())
                .with("speed", oracle.speed.as_f64())
                .with("speed_formula", frame.dsstar_ds.as_f64())
                .with("speed_deviation", speed_deviation.as_f64()),
        );
    }
    Ok(CheckReport::new(
        "3.2",
        to_f64(&grid),
        samples,
        tolerance,
        format!("c = {}; max speed deviation = {max_speed_dev:e}", pair.c),
    ))
}

/// Helix invariant: f(s) = <T, T* ^ N*> must be constant along the base.
///
/// Requires a non-planar base (max |tau| above [`tol::PLANAR_TAU_EPS`] on
/// the grid). The ratio tau/kappa and its spread are recorded per sample as
/// auxiliary diagnostics; they do not contribute to pass/fail.
pub fn check_helix_invariant<T: Real>(
    pair: &InvolutePair<T>,
    n: usize,
    tolerance: Option<f64>,
) -> Result<CheckReport, CurveError> {
    let tolerance = tolerance.unwrap_or(tol::TOL_HELIX_INVARIANT);
    let grid = check_grid(pair, n)?;

    let mut fs = Vec::with_capacity(n);
    let mut ratios = Vec::with_capacity(n);
    let mut max_abs_tau = 0.0f64;
    for &s in &grid {
        let base_frame = pair.base.frenet(s)?;
        max_abs_tau = max_abs_tau.max(base_frame.tau.abs().as_f64());
        let inv = pair.frame(s)?;
        let f = base_frame.tangent.dot(&inv.t_star.cross(&inv.n_star));
        fs.push(f);
        ratios.push(base_frame.tau / base_frame.kappa);
    }
    if max_abs_tau <= tol::PLANAR_TAU_EPS {
        return Err(CurveError::PlanarBase { max_abs_tau });
    }

    let mean_f = mean(&fs);
    let mean_ratio = mean(&ratios);
    let mut max_ratio_dev = 0.0f64;
    let mut samples = Vec::with_capacity(n);
    for (i, &s) in grid.iter().enumerate() {
        let ratio_dev = (ratios[i] - mean_ratio).abs().as_f64();
        max_ratio_dev = max_ratio_dev.max(ratio_dev);
        samples.push(
            Sample::new(s.as_f64(), (fs[i] - mean_f).abs().as_f64())
                .with("f", fs[i].as_f64())
                .with("helix_ratio", ratios[i].as_f64())
                .with("helix_ratio_deviation", ratio_dev),
        );
    }
    Ok(CheckReport::new(
        "3.3",
        to_f64(&grid),
        samples,
        tolerance,
        format!(
            "mean f = {}; auxiliary tau/kappa: mean = {}, max deviation = {max_ratio_dev:e}",
            mean_f.as_f64(),
            mean_ratio.as_f64()
        ),
    ))
}

/// Tangent-angle constancy between two evolutes of the same target:
/// f(s) = <T_beta, T_gamma> must be constant where both are defined.
pub fn check_tangent_angle<T: Real>(
    beta: &Evolute<T>,
    gamma: &Evolute<T>,
    n: usize,
    tolerance: Option<f64>,
) -> Result<CheckReport, CurveError> {
    if n < 2 {
        return Err(CurveError::BadGrid(n));
    }
    if !beta.shares_setup_with(gamma) {
        return Err(CurveError::MismatchedTargets);
    }
    let tolerance = tolerance.unwrap_or(tol::TOL_TANGENT_ANGLE);
    let (b_lo, b_hi) = beta.curve.domain();
    let (g_lo, g_hi) = gamma.curve.domain();
    let (lo, hi) = (b_lo.max(g_lo), b_hi.min(g_hi));
    if !(lo < hi) {
        return Err(CurveError::EmptyCheckDomain {
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        });
    }
    let grid = linspace(lo, hi, n);
    let mut fs = Vec::with_capacity(n);
    for &s in &grid {
        let tb = beta.curve.derivatives(s)?.r1;
        let tg = gamma.curve.derivatives(s)?.r1;
        fs.push(tb.dot(&tg));
    }
    let mean_f = mean(&fs);
    let samples = grid
        .iter()
        .zip(&fs)
        .map(|(&s, &f)| {
            Sample::new(s.as_f64(), (f - mean_f).abs().as_f64()).with("f", f.as_f64())
        })
        .collect();
    Ok(CheckReport::new(
        "3.4",
        to_f64(&grid),
        samples,
        tolerance,
        format!("mean f = {}", mean_f.as_f64()),
    ))
}

fn check_grid<T: Real>(pair: &InvolutePair<T>, n: usize) -> Result<Vec<T>, CurveError> {
    if n < 2 {
        return Err(CurveError::BadGrid(n));
    }
    let (lo, hi) = pair.check_domain;
    Ok(linspace(lo, hi, n))
}

fn to_f64<T: Real>(grid: &[T]) -> Vec<f64> {
    grid.iter().map(|s| s.as_f64()).collect()
}

fn mean<T: Real>(values: &[T]) -> T {
    let sum = values.iter().fold(T::zero(), |acc, &v| acc + v);
    sum / T::of(values.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::CurveSpec;

    fn admissible(y: &str, z: &str, domain: (f64, f64)) -> AdmissibleCurve<f64> {
        let spec = CurveSpec::admissible(
            Expr::Var,
            Expr::parse_with_var(y, "s").unwrap(),
            Expr::parse_with_var(z, "s").unwrap(),
            BTreeMap::new(),
            domain,
        )
        .unwrap();
        AdmissibleCurve::from_spec(&spec).unwrap()
    }

    fn helix(domain: (f64, f64)) -> AdmissibleCurve<f64> {
        admissible("cos(s)", "sin(s)", domain)
    }

    fn poly(domain: (f64, f64)) -> AdmissibleCurve<f64> {
        admissible("s^2", "s^3", domain)
    }

    fn circle_target(plane_x: f64, domain: (f64, f64)) -> PlanarCurve<f64> {
        PlanarCurve::analytic(
            plane_x,
            Expr::parse_with_var("cos(u)", "u").unwrap(),
            Expr::parse_with_var("sin(u)", "u").unwrap(),
            BTreeMap::new(),
            domain,
        )
        .unwrap()
    }

    fn circle_problem(y0: f64, z0: f64) -> EvoluteProblem<f64> {
        EvoluteProblem {
            target: circle_target(2.0, (-0.1, 1.1)),
            correspondence: Expr::parse_with_var("s", "s").unwrap(),
            corr_params: BTreeMap::new(),
            y0,
            z0,
            s_start: 0.0,
            s_end: 1.0,
            step: 1e-3,
        }
    }

    #[test]
    fn involute_point_of_helix() {
        // alpha(0) = (0, 1, 0), T(0) = (1, 0, 1), c = 2: point (2, 1, 2).
        let pair = make_involute(&helix((0.0, 1.5)), 2.0).unwrap();
        let p = pair.involute().position(0.0).unwrap();
        assert!((p.x - 2.0).abs() < 1e-15);
        assert!((p.y - 1.0).abs() < 1e-15);
        assert!((p.z - 2.0).abs() < 1e-15);
    }

    #[test]
    fn involute_meets_base_image_at_c() {
        let pair = make_involute(&helix((0.0, 2.2)), 2.0).unwrap();
        let p = pair.involute().position(2.0).unwrap();
        assert_eq!(p.x, 2.0);
        assert!((p.y - 2.0f64.cos()).abs() < 1e-15);
        assert!((p.z - 2.0f64.sin()).abs() < 1e-15);
    }

    #[test]
    fn flat_base_has_no_involute() {
        let line = admissible("s", "0", (0.0, 1.0));
        let err = make_involute(&line, 2.0).unwrap_err();
        assert!(matches!(err, CurveError::FrameUndefined { .. }));
    }

    #[test]
    fn empty_check_domain_is_rejected() {
        let err = make_involute(&helix((0.0, 1.0)), -1.0).unwrap_err();
        assert!(matches!(err, CurveError::EmptyCheckDomain { .. }));
    }

    #[test]
    fn involute_frame_of_helix() {
        let pair = make_involute(&helix((0.0, 1.5)), 2.0).unwrap();
        let f = pair.frame(0.0).unwrap();
        assert_eq!(f.t_star, GVec3::new(0.0, -1.0, 0.0));
        assert!((f.dsstar_ds - 2.0).abs() < 1e-15);
        assert!((f.kappa_star - 0.5).abs() < 1e-15);
        // tau = 1 > 0, so N* = B = (0, sin s, -cos s) at 0 -> (0, 0, -1).
        assert_eq!(f.n_star, GVec3::new(0.0, 0.0, -1.0));
    }

    #[test]
    fn involute_frame_of_polynomial() {
        let pair = make_involute(&poly((0.0, 0.5)), 1.0).unwrap();
        let f = pair.frame(0.0).unwrap();
        // kappa(0) = 2, tau(0) = 3: kappa* = 3 / (1 * 2).
        assert!((f.kappa_star - 1.5).abs() < 1e-12);
    }

    #[test]
    fn frame_near_singularity_is_rejected() {
        let pair = make_involute(&helix((0.0, 2.2)), 2.0).unwrap();
        let err = pair.frame(2.0 - 1e-15).unwrap_err();
        assert!(matches!(err, CurveError::SingularLambda { .. }));
    }

    #[test]
    fn evolute_of_circle_round_trips() {
        let evolute = make_evolute(&circle_problem(0.0, 0.0)).unwrap();
        let pair = make_involute(evolute.curve(), 2.0).unwrap();
        let mut worst = 0.0f64;
        for s in linspace(0.0, 1.0, 501) {
            let p = pair.involute().position(s).unwrap();
            let q = GVec3::new(2.0, s.cos(), s.sin());
            worst = worst.max((p - q).euclid_norm());
        }
        assert!(worst < 1e-6, "sup deviation {worst}");
    }

    #[test]
    fn evolute_recovers_helix_from_its_involute() {
        let base = helix((0.0, 1.5));
        let pair = make_involute(&base, 2.0).unwrap();
        let problem = EvoluteProblem {
            target: pair.involute().clone(),
            correspondence: Expr::parse_with_var("s", "s").unwrap(),
            corr_params: BTreeMap::new(),
            y0: 1.0, // (cos 0, sin 0)
            z0: 0.0,
            s_start: 0.0,
            s_end: 1.0,
            step: 1e-3,
        };
        let evolute = make_evolute(&problem).unwrap();
        let mut worst = 0.0f64;
        for s in linspace(0.0, 1.0, 201) {
            let p = evolute.curve().position(s).unwrap();
            worst = worst
                .max((p.y - s.cos()).abs())
                .max((p.z - s.sin()).abs());
        }
        assert!(worst < 1e-6, "sup deviation {worst}");
    }

    #[test]
    fn evolute_grid_may_not_touch_plane() {
        let mut problem = circle_problem(0.0, 0.0);
        problem.s_end = 2.0;
        let err = make_evolute(&problem).unwrap_err();
        assert!(matches!(err, CurveError::SingularLambda { .. }));
    }

    #[test]
    fn distance_check_passes_for_helix() {
        let pair = make_involute(&helix((0.0, 1.5)), 2.0).unwrap();
        let report = check_constant_distance(&pair, 100, None).unwrap();
        assert!(report.pass);
        assert!(report.max_abs_deviation < 1e-12);
    }

    #[test]
    fn distance_check_passes_for_polynomial() {
        let pair = make_involute(&poly((0.0, 0.9)), 1.0).unwrap();
        let report = check_constant_distance(&pair, 100, None).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn distance_check_needs_two_points() {
        let pair = make_involute(&helix((0.0, 1.5)), 2.0).unwrap();
        assert_eq!(
            check_constant_distance(&pair, 1, None).unwrap_err(),
            CurveError::BadGrid(1)
        );
    }

    #[test]
    fn curvature_relation_closed_form_for_helix() {
        let pair = make_involute(&helix((0.0, 1.5)), 2.0).unwrap();
        let report = check_curvature_relation(&pair, 100, None).unwrap();
        assert!(report.pass);
        assert!(report.max_abs_deviation < 1e-9);
        for sample in &report.samples {
            // kappa(s) = tau(s) = 1, so kappa* = 1/(2 - s) and speed = 2 - s.
            let s = sample.s;
            assert!((sample.extra["kappa_star_formula"] - 1.0 / (2.0 - s)).abs() < 1e-12);
            assert!(sample.extra["speed_deviation"] < 1e-9);
            assert!((sample.extra["speed"] - (2.0 - s)).abs() < 1e-9);
        }
    }

    #[test]
    fn curvature_relation_for_stretched_helix() {
        let mut params = BTreeMap::new();
        params.insert("a".to_string(), 1.0);
        params.insert("w".to_string(), 2.0);
        let spec = CurveSpec::admissible(
            Expr::Var,
            Expr::parse_with_var("a*cos(w*s)", "s").unwrap(),
            Expr::parse_with_var("a*sin(w*s)", "s").unwrap(),
            params,
            (0.0, 1.5),
        )
        .unwrap();
        let base = AdmissibleCurve::from_spec(&spec).unwrap();
        let pair = make_involute(&base, 3.0).unwrap();
        let report = check_curvature_relation(&pair, 50, None).unwrap();
        assert!(report.pass);
        for sample in &report.samples {
            // kappa = 4, tau = 2: kappa* = 2 / ((3 - s) * 4).
            let expect = 2.0 / ((3.0 - sample.s) * 4.0);
            assert!((sample.extra["kappa_star_formula"] - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn curvature_relation_for_polynomial() {
        let pair = make_involute(&poly((0.0, 1.0)), 2.0).unwrap();
        let report = check_curvature_relation(&pair, 100, None).unwrap();
        assert!(report.pass, "max deviation {}", report.max_abs_deviation);
    }

    #[test]
    fn helix_invariant_for_helix() {
        let pair = make_involute(&helix((0.0, 1.5)), 2.0).unwrap();
        let report = check_helix_invariant(&pair, 100, None).unwrap();
        assert!(report.pass);
        assert!(report.max_abs_deviation < 1e-12);
        for sample in &report.samples {
            assert!((sample.extra["f"].abs() - 1.0).abs() < 1e-12);
            assert!((sample.extra["helix_ratio"] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn helix_invariant_for_polynomial_ratio_varies() {
        let pair = make_involute(&poly((0.0, 1.0)), 2.0).unwrap();
        let report = check_helix_invariant(&pair, 100, None).unwrap();
        assert!(report.pass, "f should still be constant");
        let max_ratio_dev = report
            .samples
            .iter()
            .map(|s| s.extra["helix_ratio_deviation"])
            .fold(0.0, f64::max);
        assert!(
            max_ratio_dev > 1e-3,
            "tau/kappa is not constant for this curve"
        );
    }

    #[test]
    fn planar_base_is_rejected() {
        let flat = admissible("s^2", "0", (0.0, 1.0));
        let pair = make_involute(&flat, 2.0).unwrap();
        let err = check_helix_invariant(&pair, 50, None).unwrap_err();
        assert!(matches!(err, CurveError::PlanarBase { .. }));
    }

    #[test]
    fn tangent_angle_between_two_evolutes() {
        let beta = make_evolute(&circle_problem(0.0, 0.0)).unwrap();
        let gamma = make_evolute(&circle_problem(1.0, 0.0)).unwrap();
        let report = check_tangent_angle(&beta, &gamma, 100, None).unwrap();
        assert!(report.pass);
        for sample in &report.samples {
            assert!((sample.extra["f"] - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn tangent_angle_of_evolute_with_itself() {
        let beta = make_evolute(&circle_problem(0.5, -0.5)).unwrap();
        let report = check_tangent_angle(&beta, &beta, 50, None).unwrap();
        assert!(report.pass);
        assert!((report.samples[0].extra["f"] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn mismatched_correspondences_are_rejected() {
        let beta = make_evolute(&circle_problem(0.0, 0.0)).unwrap();
        let mut other = circle_problem(1.0, 0.0);
        other.correspondence = Expr::parse_with_var("2*s", "s").unwrap();
        other.s_end = 0.5;
        let gamma = make_evolute(&other).unwrap();
        assert_eq!(
            check_tangent_angle(&beta, &gamma, 50, None).unwrap_err(),
            CurveError::MismatchedTargets
        );
    }
}
