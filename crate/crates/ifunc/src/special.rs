//! Scalar special-function kernels: complex log-gamma on the principal
//! branch, real-exponent gamma powers, and the modified Bessel function of
//! the second kind.
//!
//! Everything else in the crate reduces to these three primitives, so their
//! accuracy targets are the tightest in the crate: log-gamma is good to
//! ~1e-14 relative for |z| <= 1e3 and `bessel_k` to ~1e-11.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex number alias used throughout the public API.
pub type Complex = Complex64;

/// Absolute distance to a nonpositive integer below which an argument is
/// treated as a gamma pole.
pub const POLE_TOL: f64 = 1e-12;

const LN_TWO_PI_HALF: f64 = 0.918_938_533_204_672_74; // ln(2*pi)/2

/// Stirling series coefficients B_{2k} / (2k (2k-1)).
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

fn near_nonpositive_integer(z: Complex64) -> Option<Complex64> {
    if z.re > 0.5 {
        return None;
    }
    let k = z.re.round();
    if k > 0.5 {
        return None;
    }
    let d = (z - Complex64::new(k, 0.0)).norm();
    (d < POLE_TOL).then_some(z)
}

/// Stirling expansion, valid for |z| large and z away from the negative axis.
fn stirling(z: Complex64) -> Complex64 {
    let lz = z.ln();
    let mut sum = Complex64::new(0.0, 0.0);
    let z2 = z * z;
    let mut zp = z;
    for c in STIRLING {
        sum += c / zp;
        zp *= z2;
    }
    (z - 0.5) * lz - z + LN_TWO_PI_HALF + sum
}

/// ln sin(πz), continuous on each half-plane and matching the principal
/// branch needed for the log-gamma reflection (limit from above on the real
/// axis).
fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im >= 0.0 {
        let i = Complex64::new(0.0, 1.0);
        let pi = std::f64::consts::PI;
        let w = (2.0 * pi * i * z).exp();
        Complex64::new(-std::f64::consts::LN_2, pi / 2.0) - i * pi * z
            + (Complex64::new(1.0, 0.0) - w).ln()
    } else {
        ln_sin_pi(z.conj()).conj()
    }
}

/// Principal branch of ln Γ(z), continuous on the plane cut along the
/// nonpositive real axis. Arguments exactly on the cut are resolved by the
/// sign of `z.im` (±0.0 gives the limit from above/below).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if near_nonpositive_integer(z).is_some() {
        return Err(Error::pole(z, "log_gamma"));
    }
    // Far-left arguments: reflect instead of walking the recurrence.
    if z.re < -40.0 {
        let refl = Complex64::new(std::f64::consts::PI.ln(), 0.0)
            - ln_sin_pi(z)
            - log_gamma(Complex64::new(1.0, 0.0) - z)?;
        return Ok(refl);
    }
    // Direct Stirling is safe once the argument is large and not hugging the
    // negative real axis; otherwise shift right with LogΓ(z) = LogΓ(z+1) - Log z,
    // which preserves the principal branch within each half-plane.
    let safe = |w: Complex64| {
        (w.re >= 12.0 && w.norm_sqr() >= 144.0)
            || (w.norm_sqr() >= 900.0 && w.re >= -0.5 * w.im.abs())
    };
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while !safe(w) {
        acc += w.ln();
        w += 1.0;
    }
    let mut out = stirling(w) - acc;
    // Keep real inputs exactly real.
    if z.im == 0.0 && z.re > 0.0 {
        out.im = 0.0;
    }
    Ok(out)
}

/// Γ^α(z) defined as exp(α · ln Γ(z)) on the principal log-gamma branch.
pub fn gamma_power(z: Complex64, alpha: f64) -> Result<Complex64> {
    if alpha <= 0.0 {
        return Err(Error::Domain(format!(
            "gamma_power exponent must be positive, got {alpha}"
        )));
    }
    Ok((alpha * log_gamma(z)?).exp())
}

/// Γ(z) for complex z via the principal log-gamma branch.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

/// sin(πx) with argument reduction so large |x| stays accurate.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.floor();
    let f = x - n;
    let s = if f <= 0.25 {
        (std::f64::consts::PI * f).sin()
    } else if f <= 0.75 {
        (std::f64::consts::PI * (0.5 - f)).cos()
    } else {
        -(std::f64::consts::PI * (f - 1.0)).sin()
    };
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Γ(x) for real x (reflection below 1/2).
pub fn real_gamma(x: f64) -> Result<f64> {
    if x >= 0.5 {
        Ok(log_gamma(Complex64::new(x, 0.0))?.re.exp())
    } else {
        let k = x.round();
        if k <= 0.5 && (x - k).abs() < POLE_TOL {
            return Err(Error::pole(Complex64::new(x, 0.0), "real_gamma"));
        }
        let denom = sin_pi(x) * real_gamma(1.0 - x)?;
        Ok(std::f64::consts::PI / denom)
    }
}

/// ln Γ(x) for real x > 0.
pub fn real_ln_gamma(x: f64) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("real_ln_gamma needs x > 0, got {x}")));
    }
    Ok(log_gamma(Complex64::new(x, 0.0))?.re)
}

/// Modified Bessel function of the first kind by its power series.
/// Converges for all x; used on the moderate-x branch of `bessel_k`.
fn bessel_i_series(nu: f64, x: f64) -> Result<f64> {
    let half = 0.5 * x;
    let log_half = half.ln();
    // Γ(nu + 1 + l) by upward recurrence from Γ(nu + 1).
    let mut gam = real_gamma(nu + 1.0)?;
    let mut sum = 0.0_f64;
    let mut l_fact = 1.0_f64;
    let mut small_streak = 0;
    for l in 0..500 {
        let lf = l as f64;
        if l > 0 {
            l_fact *= lf;
            gam *= nu + lf;
        }
        let term = ((2.0 * lf + nu) * log_half).exp() / (gam * l_fact);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::SeriesDivergence { cap: 500 })
}

/// K_ν(x) through the integral representation ∫₀^∞ e^{-x cosh t} cosh(νt) dt.
/// Stable for every x > 0 and any real order; the workhorse for integer ν
/// and for large x where the series pair cancels.
fn bessel_k_integral(nu: f64, x: f64) -> Result<f64> {
    // Pick T so the integrand has decayed below 1e-320 at the endpoint.
    let nu = nu.abs();
    let mut t_max = 2.0_f64;
    for _ in 0..40 {
        let next = ((760.0 + nu * t_max) / x).max(1.0).acosh().max(1e-3);
        if (next - t_max).abs() < 1e-9 {
            t_max = next;
            break;
        }
        t_max = next;
    }
    let f = |t: f64| {
        let e = -x * t.cosh() + ln_cosh(nu * t);
        if e < -745.0 {
            0.0
        } else {
            e.exp()
        }
    };
    crate::quad::adaptive_simpson(&f, 0.0, t_max, 1e-14, 52)
        .map_err(|_| Error::NonConvergence("bessel_k integral representation".into()))
}

fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    if a > 20.0 {
        a - std::f64::consts::LN_2 + (-2.0 * a).exp().ln_1p()
    } else {
        a.cosh().ln()
    }
}

/// K_ν(x) through the series pair π (I_{-ν} - I_ν) / (2 sin νπ). Valid for
/// non-integer ν; the difference cancels like e^{-2x}, so this path is only
/// used at moderate x.
fn bessel_k_series(nu: f64, x: f64) -> Result<f64> {
    let i_neg = bessel_i_series(-nu, x)?;
    let i_pos = bessel_i_series(nu, x)?;
    let diff = i_neg - i_pos;
    let cancellation = (i_neg.abs() + i_pos.abs()) / diff.abs().max(1e-300);
    if cancellation > 1e4 {
        return bessel_k_integral(nu, x);
    }
    Ok(std::f64::consts::PI * diff / (2.0 * sin_pi(nu)))
}

/// Modified Bessel function of the second kind K_ν(x) for real order and
/// x > 0. Non-integer orders at moderate x go through the
/// (I_{-ν} - I_ν) / sin(νπ) form; orders within 1e-6 of an integer, and any
/// order once x is large enough for that difference to cancel, use the
/// cosh-integral representation.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("bessel_k needs x > 0, got {x}")));
    }
    let nu = nu.abs();
    let near_integer = (nu - nu.round()).abs() < 1e-6;
    if near_integer || x > 3.5 {
        return bessel_k_integral(nu, x);
    }
    bessel_k_series(nu, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn log_gamma_known_values() {
        assert_relative_eq!(
            log_gamma(Complex64::new(1.0, 0.0)).unwrap().re,
            0.0,
            epsilon = 1e-14
        );
        assert_relative_eq!(
            log_gamma(Complex64::new(0.5, 0.0)).unwrap().re,
            std::f64::consts::PI.sqrt().ln(),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            log_gamma(Complex64::new(4.0, 0.0)).unwrap().re,
            6.0_f64.ln(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn log_gamma_rejects_poles() {
        for z in [
            Complex64::new(0.0, 0.0),
            Complex64::new(-3.0, 0.0),
            Complex64::new(-7.0, 5e-13),
        ] {
            assert!(matches!(log_gamma(z), Err(Error::Pole { .. })), "{z}");
        }
        // Near but not at a pole is fine.
        assert!(log_gamma(Complex64::new(-3.0 + 1e-9, 0.0)).is_ok());
    }

    #[test]
    fn log_gamma_principal_branch_lower_half_conjugate() {
        let z = Complex64::new(-4.3, 0.7);
        let a = log_gamma(z).unwrap();
        let b = log_gamma(z.conj()).unwrap();
        assert_relative_eq!(a.re, b.re, max_relative = 1e-13);
        assert_relative_eq!(a.im, -b.im, max_relative = 1e-13);
    }

    #[test]
    fn log_gamma_recurrence_large_arguments() {
        // Γ(z+1) = z Γ(z) across magnitudes up to 1e3.
        for &(re, im) in &[
            (0.7, 0.3),
            (-5.2, 1.9),
            (300.0, -40.0),
            (-800.5, 2.0),
            (3.0, 900.0),
        ] {
            let z = Complex64::new(re, im);
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            let diff = (lhs - rhs).norm();
            assert!(
                diff <= 1e-12 * lhs.norm().max(1.0),
                "recurrence failed at {z}: {diff:.3e}"
            );
        }
    }

    #[test]
    fn gamma_power_definition() {
        assert_relative_eq!(
            gamma_power(Complex64::new(0.5, 0.0), 2.0).unwrap().re,
            std::f64::consts::PI,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            gamma_power(Complex64::new(3.0, 0.0), 1.0).unwrap().re,
            2.0,
            max_relative = 1e-13
        );
        assert!(matches!(
            gamma_power(Complex64::new(1.0, 0.0), 0.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gamma_power_additivity() {
        let z = Complex64::new(1.3, -0.8);
        let a = gamma_power(z, 0.7).unwrap() * gamma_power(z, 1.6).unwrap();
        let b = gamma_power(z, 2.3).unwrap();
        assert!((a - b).norm() <= 1e-12 * b.norm());
    }

    #[test]
    fn real_gamma_reflection_sign() {
        // Γ(-0.5) = -2 sqrt(pi)
        assert_relative_eq!(
            real_gamma(-0.5).unwrap(),
            -2.0 * std::f64::consts::PI.sqrt(),
            max_relative = 1e-13
        );
        assert_relative_eq!(real_gamma(-1.5).unwrap(), 2.3632718012073548, max_relative = 1e-12);
    }

    #[test]
    fn bessel_k_half_order_closed_form() {
        // K_{±1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for x in [0.5, 2.0, 5.0] {
            let expect = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
            assert_relative_eq!(bessel_k(0.5, x).unwrap(), expect, max_relative = 1e-11);
            assert_relative_eq!(bessel_k(-0.5, x).unwrap(), expect, max_relative = 1e-11);
        }
        assert_relative_eq!(
            bessel_k(-0.5, 2.0).unwrap(),
            0.11993777196806146,
            max_relative = 1e-10
        );
    }

    #[test]
    fn bessel_k_integer_order() {
        // K_0(1), K_1(1) reference values (Abramowitz & Stegun 9.8).
        assert_relative_eq!(bessel_k(0.0, 1.0).unwrap(), 0.42102443824070834, max_relative = 1e-10);
        assert_relative_eq!(bessel_k(1.0, 1.0).unwrap(), 0.6019072301972346, max_relative = 1e-10);
        assert_relative_eq!(bessel_k(0.0, 2.0).unwrap(), 0.11389387274953344, max_relative = 1e-10);
    }

    #[test]
    fn bessel_k_symmetry_and_path_agreement() {
        for nu in [0.3, 0.5, 1.5] {
            for x in [0.5, 1.0, 4.0] {
                let series = bessel_k_series(nu, x).unwrap();
                let integral = bessel_k_integral(nu, x).unwrap();
                assert_relative_eq!(series, integral, max_relative = 1e-9);
                assert_relative_eq!(
                    bessel_k(nu, x).unwrap(),
                    bessel_k(-nu, x).unwrap(),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn bessel_k_domain_error() {
        assert!(matches!(bessel_k(1.0, 0.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_k(1.0, -2.0), Err(Error::Domain(_))));
    }
}
