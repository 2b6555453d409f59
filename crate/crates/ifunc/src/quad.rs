//! Internal real-line quadrature used by kernel-side code (Bessel integral
//! representation, I-FIG fallback path). The verification oracles carry
//! their own independent integrator in `verify`.

use crate::error::{Error, Result};

fn simpson(fa: f64, fm: f64, fb: f64, h: f64) -> f64 {
    h / 6.0 * (fa + 4.0 * fm + fb)
}

fn rec(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    rel_tol: f64,
    depth: u32,
) -> (f64, f64) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let err = (left + right - whole) / 15.0;
    if depth == 0 || err.abs() <= rel_tol * (left + right).abs().max(1e-300) {
        return (left + right + err, err.abs());
    }
    let (vl, el) = rec(f, a, m, fa, flm, fm, left, rel_tol, depth - 1);
    let (vr, er) = rec(f, m, b, fm, frm, fb, right, rel_tol, depth - 1);
    (vl + vr, el + er)
}

/// Adaptive Simpson on a finite interval with a relative-error target.
pub(crate) fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    rel_tol: f64,
    depth: u32,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain("adaptive_simpson needs finite limits".into()));
    }
    // Seed with a handful of panels so narrow features are not missed.
    let seeds = 8;
    let mut total = 0.0;
    let mut err = 0.0;
    for i in 0..seeds {
        let x0 = a + (b - a) * i as f64 / seeds as f64;
        let x1 = a + (b - a) * (i + 1) as f64 / seeds as f64;
        let m = 0.5 * (x0 + x1);
        let (fa, fm, fb) = (f(x0), f(m), f(x1));
        let whole = simpson(fa, fm, fb, x1 - x0);
        let (v, e) = rec(f, x0, x1, fa, fm, fb, whole, rel_tol, depth);
        total += v;
        err += e;
    }
    if err > 1e3 * rel_tol * total.abs().max(1e-300) {
        return Err(Error::NonConvergence(format!(
            "adaptive_simpson error estimate {err:.3e} for integral {total:.6e}"
        )));
    }
    Ok(total)
}
