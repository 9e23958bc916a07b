//! Small numeric helpers: sample grids and adaptive quadrature.

use crate::error::CurveError;
use crate::scalar::Real;

/// `n` equally spaced samples of `[lo, hi]` including both endpoints.
pub fn linspace<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * (T::of(i as f64) / T::of((n - 1) as f64))
                }
            })
            .collect(),
    }
}

/// Adaptive Simpson quadrature of a fallible integrand.
pub fn adaptive_simpson<T: Real>(
    f: &mut dyn FnMut(T) -> Result<T, CurveError>,
    a: T,
    b: T,
    tol: f64,
) -> Result<T, CurveError> {
    let m = (a + b) * T::of(0.5);
    let fa = f(a)?;
    let fb = f(b)?;
    let fm = f(m)?;
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, fa, b, fb, m, fm, whole, T::of(tol), 30)
}

fn simpson<T: Real>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::of(6.0) * (fa + T::of(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T: Real>(
    f: &mut dyn FnMut(T) -> Result<T, CurveError>,
    a: T,
    fa: T,
    b: T,
    fb: T,
    m: T,
    fm: T,
    whole: T,
    tol: T,
    depth: usize,
) -> Result<T, CurveError> {
    let lm = (a + m) * T::of(0.5);
    let rm = (m + b) * T::of(0.5);
    let flm = f(lm)?;
    let frm = f(rm)?;
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::of(15.0) * tol {
        return Ok(left + right + delta / T::of(15.0));
    }
    let half_tol = tol * T::of(0.5);
    let l = recurse(f, a, fa, m, fm, lm, flm, left, half_tol, depth - 1)?;
    let r = recurse(f, m, fm, b, fb, rm, frm, right, half_tol, depth - 1)?;
    Ok(l + r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_both_endpoints() {
        let g = linspace(0.0, 1.5, 4);
        assert_eq!(g, vec![0.0, 0.5, 1.0, 1.5]);
    }

    #[test]
    fn simpson_integrates_cubic_exactly() {
        let v = adaptive_simpson(&mut |x: f64| Ok(x * x * x), 0.0, 2.0, 1e-12).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
    }

    #[test]
    fn simpson_integrates_cosine() {
        let v = adaptive_simpson(&mut |x: f64| Ok(x.cos()), 0.0, 1.0, 1e-12).unwrap();
        assert!((v - 1.0f64.sin()).abs() < 1e-11);
    }
}
