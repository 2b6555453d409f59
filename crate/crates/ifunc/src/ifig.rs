//! The I-function inverse Gaussian family: densities
//! k₂ x^{α-1} e^{-ax - b/x} I(δ x^σ) with the sign restrictions
//! (a>0, b≥0 | α>0), (a≥0, b>0 | α<0), (a>0, b>0 | α=0).
//!
//! The Mellin transform is a series over l with (ab)^l / l! weights whose
//! two blocks cancel catastrophically once 2√(ab) is large; the evaluator
//! monitors the cancellation ratio and falls back to the stable closed
//! form (σ = 0) or to direct quadrature of the defining integral (σ > 0),
//! reporting which path produced the value.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::closed_form::is_constant_pattern;
use crate::contour::{eval_kernel, real_part, EvalConfig};
use crate::error::{Error, Result};
use crate::kernel::{CTriple, Kernel};
use crate::params::{triple, IFunctionParams};
use crate::special::{bessel_k, real_gamma, sin_pi};

/// Which evaluation route produced an I-FIG transform value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IfigPath {
    /// The theorem-level series converged without significant cancellation.
    Series,
    /// Closed Bessel/gamma form (σ = 0 only).
    ClosedForm,
    /// Direct quadrature of the defining integral.
    Quadrature,
}

#[derive(Debug, Clone)]
pub struct IFIGDistribution {
    alpha: f64,
    a: f64,
    b: f64,
    params: IFunctionParams,
    delta: f64,
    sigma: f64,
    k2: f64,
    series_cap: usize,
}

#[derive(Serialize, Deserialize)]
struct IfigJson {
    alpha: f64,
    a: f64,
    b: f64,
    ifunction: IFunctionParams,
    delta: f64,
    sigma: f64,
}

impl Serialize for IFIGDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IfigJson {
            alpha: self.alpha,
            a: self.a,
            b: self.b,
            ifunction: self.params.clone(),
            delta: self.delta,
            sigma: self.sigma,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IFIGDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IfigJson::deserialize(d)?;
        make_ifig(raw.alpha, raw.a, raw.b, raw.ifunction, raw.delta, raw.sigma)
            .map_err(serde::de::Error::custom)
    }
}

const DEFAULT_SERIES_CAP: usize = 200;

/// Series / closed-form / quadrature evaluation of the un-normalized Mellin
/// transform ∫ x^{α+s-2} e^{-ax-b/x} I(δ x^σ) dx.
fn raw_mellin(
    alpha: f64,
    a: f64,
    b: f64,
    params: &IFunctionParams,
    delta: f64,
    sigma: f64,
    s: f64,
    cap: usize,
) -> Result<(f64, IfigPath)> {
    if sigma == 0.0 {
        raw_mellin_constant(alpha, a, b, s, cap)
    } else {
        raw_mellin_series(alpha, a, b, params, delta, sigma, s, cap)
    }
}

/// σ = 0 (constant I-factor, value 1): the series collapses to gamma terms;
/// the stable fallback is 2 (b/a)^{ν/2} K_ν(2√(ab)).
fn raw_mellin_constant(alpha: f64, a: f64, b: f64, s: f64, cap: usize) -> Result<(f64, IfigPath)> {
    let nu = alpha + s - 1.0;
    if b == 0.0 {
        if nu <= 1e-12 {
            return Err(Error::MomentDivergence { order: s - 1.0 });
        }
        return Ok((real_gamma(nu)? * a.powf(-nu), IfigPath::ClosedForm));
    }
    if a == 0.0 {
        if nu >= -1e-12 {
            return Err(Error::MomentDivergence { order: s - 1.0 });
        }
        return Ok((real_gamma(-nu)? * b.powf(nu), IfigPath::ClosedForm));
    }
    let closed = || -> Result<(f64, IfigPath)> {
        let v = 2.0 * (b / a).powf(nu / 2.0) * bessel_k(nu, 2.0 * (a * b).sqrt())?;
        Ok((v, IfigPath::ClosedForm))
    };
    if (nu - nu.round()).abs() < 1e-6 {
        return closed();
    }
    // term_l = (ab)^l/l! · [a^{-ν} c / Γ(l-ν+1) - b^{ν} c / Γ(l+ν+1)],
    // c = Γ(ν)Γ(1-ν) = π / sin(πν)
    let c = std::f64::consts::PI / sin_pi(nu);
    let a_pow = a.powf(-nu);
    let b_pow = b.powf(nu);
    let ab = a * b;
    let mut sum = 0.0_f64;
    let mut gross = 0.0_f64;
    let mut weight = 1.0_f64;
    let mut small_streak = 0;
    for l in 0..cap {
        if l > 0 {
            weight *= ab / l as f64;
        }
        let t1 = a_pow * c / real_gamma(l as f64 - nu + 1.0)?;
        let t2 = b_pow * c / real_gamma(l as f64 + nu + 1.0)?;
        let term = weight * (t1 - t2);
        sum += term;
        gross += weight * (t1.abs() + t2.abs());
        if term.abs() < 1e-12 * sum.abs().max(1e-300) {
            small_streak += 1;
            if small_streak >= 2 {
                if gross > 1e6 * sum.abs().max(1e-300) {
                    return closed();
                }
                return Ok((sum, IfigPath::Series));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::SeriesDivergence { cap })
}

/// σ > 0: the two constructed I-function blocks per series index.
#[allow(clippy::too_many_arguments)]
fn raw_mellin_series(
    alpha: f64,
    a: f64,
    b: f64,
    params: &IFunctionParams,
    delta: f64,
    sigma: f64,
    s: f64,
    cap: usize,
) -> Result<(f64, IfigPath)> {
    let cfg = EvalConfig::default();
    let head = 2.0 - alpha - s;
    // block 1: argument δ/a^σ, extra upper (2-α-s, σ) numerator and
    // (2+l-α-s, σ) denominator, extra lower (2-α-s, σ) numerator
    let block1 = |l: usize| -> Result<f64> {
        let mut upper = vec![CTriple::real(head, sigma, 1.0)];
        for t in params.upper() {
            upper.push(CTriple::real(t.shift, t.scale, t.exponent));
        }
        upper.push(CTriple::real(head + l as f64, sigma, 1.0));
        let mut lower = vec![CTriple::real(head, sigma, 1.0)];
        for t in params.lower() {
            lower.push(CTriple::real(t.shift, t.scale, t.exponent));
        }
        let kernel = Kernel::new(params.n() + 1, params.m() + 1, upper, lower)?;
        let z = Complex64::new(delta / a.powf(sigma), 0.0);
        real_part(eval_kernel(&kernel, z, &cfg)?)
    };
    // block 2: argument b^σ δ, extra lower (1-l-α-s, σ) in the denominator
    let block2 = |l: usize| -> Result<f64> {
        let mut upper = vec![CTriple::real(head, sigma, 1.0)];
        for t in params.upper() {
            upper.push(CTriple::real(t.shift, t.scale, t.exponent));
        }
        let mut lower = vec![CTriple::real(head, sigma, 1.0)];
        for t in params.lower() {
            lower.push(CTriple::real(t.shift, t.scale, t.exponent));
        }
        lower.push(CTriple::real(head - 1.0 - l as f64, sigma, 1.0));
        let kernel = Kernel::new(params.n() + 1, params.m() + 1, upper, lower)?;
        let z = Complex64::new(b.powf(sigma) * delta, 0.0);
        real_part(eval_kernel(&kernel, z, &cfg)?)
    };

    if b == 0.0 {
        // (ab)^l vanishes beyond l = 0, and the b-block vanishes for the
        // convergent exponents; only the first block at l = 0 survives.
        if a <= 0.0 {
            return Err(Error::Restriction("a must be positive when b = 0".into()));
        }
        let v = a.powf(1.0 - alpha - s) * block1(0)?;
        return Ok((v, IfigPath::Series));
    }
    if a == 0.0 {
        if 1.0 - alpha - s <= 0.0 {
            return Err(Error::MomentDivergence { order: s - 1.0 });
        }
        let v = -b.powf(alpha + s - 1.0) * block2(0)?;
        return Ok((v, IfigPath::Series));
    }

    let a_coef = a.powf(1.0 - alpha - s);
    let b_coef = b.powf(alpha + s - 1.0);
    let ab = a * b;
    let mut sum = 0.0_f64;
    let mut gross = 0.0_f64;
    let mut weight = 1.0_f64;
    let mut small_streak = 0;
    for l in 0..cap {
        if l > 0 {
            weight *= ab / l as f64;
        }
        let t1 = a_coef * block1(l)?;
        let t2 = b_coef * block2(l)?;
        let term = weight * (t1 - t2);
        sum += term;
        gross += weight * (t1.abs() + t2.abs());
        if term.abs() < 1e-12 * sum.abs().max(1e-300) {
            small_streak += 1;
            if small_streak >= 2 {
                if gross > 1e6 * sum.abs().max(1e-300) {
                    return raw_mellin_quadrature(alpha, a, b, params, delta, sigma, s);
                }
                return Ok((sum, IfigPath::Series));
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::SeriesDivergence { cap })
}

/// Direct quadrature of ∫ x^{α+s-2} e^{-ax-b/x} I(δ x^σ) dx; the fallback
/// when the series blocks cancel.
fn raw_mellin_quadrature(
    alpha: f64,
    a: f64,
    b: f64,
    params: &IFunctionParams,
    delta: f64,
    sigma: f64,
    s: f64,
) -> Result<(f64, IfigPath)> {
    let cfg = EvalConfig {
        rel_tol: 1e-9,
        tail_tol: 1e-11,
        ..EvalConfig::default()
    };
    let envelope = |x: f64| (alpha + s - 2.0) * x.ln() - a * x - b / x;
    // peak of the envelope by golden section on log x
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let (mut ulo, mut uhi) = (-18.0_f64, 18.0_f64);
    for _ in 0..80 {
        let u1 = uhi - phi * (uhi - ulo);
        let u2 = ulo + phi * (uhi - ulo);
        if envelope(u1.exp()) > envelope(u2.exp()) {
            uhi = u2;
        } else {
            ulo = u1;
        }
    }
    let upeak = 0.5 * (ulo + uhi);
    let peak = envelope(upeak.exp());
    let mut lo = upeak;
    while lo > -30.0 && envelope(lo.exp()) > peak - 46.0 {
        lo -= 0.5;
    }
    let mut hi = upeak;
    while hi < 30.0 && envelope(hi.exp()) > peak - 46.0 {
        hi += 0.5;
    }
    let kernel = params.kernel();
    // integrate in u = ln x to keep the substitution well-conditioned
    let f = |u: f64| -> f64 {
        let x = u.exp();
        let ifac = match eval_kernel(
            &kernel,
            Complex64::new(delta * x.powf(sigma), 0.0),
            &cfg,
        ) {
            Ok(v) => v.re,
            Err(_) => return f64::NAN,
        };
        (envelope(x) + u).exp() * ifac
    };
    let v = crate::quad::adaptive_simpson(&f, lo, hi, 1e-9, 30)?;
    Ok((v, IfigPath::Quadrature))
}

/// Build and normalize an I-FIG distribution (k₂ from the corollary series
/// at s = 1).
pub fn make_ifig(
    alpha: f64,
    a: f64,
    b: f64,
    params: IFunctionParams,
    delta: f64,
    sigma: f64,
) -> Result<IFIGDistribution> {
    make_ifig_with_cap(alpha, a, b, params, delta, sigma, DEFAULT_SERIES_CAP)
}

pub fn make_ifig_with_cap(
    alpha: f64,
    a: f64,
    b: f64,
    params: IFunctionParams,
    delta: f64,
    sigma: f64,
    series_cap: usize,
) -> Result<IFIGDistribution> {
    if a < 0.0 || b < 0.0 {
        return Err(Error::Restriction(format!(
            "a and b must be nonnegative, got a = {a}, b = {b}"
        )));
    }
    let ok = if alpha > 0.0 {
        a > 0.0
    } else if alpha < 0.0 {
        b > 0.0
    } else {
        a > 0.0 && b > 0.0
    };
    if !ok {
        return Err(Error::Restriction(format!(
            "sign table violated: α = {alpha}, a = {a}, b = {b}"
        )));
    }
    if sigma < 0.0 {
        return Err(Error::Restriction(format!("σ must be nonnegative, got {sigma}")));
    }
    if delta == 0.0 {
        return Err(Error::Domain("δ must be nonzero".into()));
    }
    if sigma == 0.0 && !(is_constant_pattern(&params) && delta.abs() < 1.0) {
        return Err(Error::Restriction(
            "σ = 0 is supported only through the constant pattern I^{1,0}_{1,1}[δ|(1,1,1);(0,1,1)] with |δ| < 1"
                .into(),
        ));
    }
    if series_cap == 0 {
        return Err(Error::Domain("series cap must be positive".into()));
    }
    let (norm, _) = raw_mellin(alpha, a, b, &params, delta, sigma, 1.0, series_cap)?;
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::Normalization(format!(
            "I-FIG normalization integral = {norm}"
        )));
    }
    let dist = IFIGDistribution {
        alpha,
        a,
        b,
        params,
        delta,
        sigma,
        k2: 1.0 / norm,
        series_cap,
    };
    dist.probe_nonnegative()?;
    Ok(dist)
}

impl IFIGDistribution {
    fn probe_nonnegative(&self) -> Result<()> {
        let mut worst = 0.0_f64;
        let mut worst_x = 0.0;
        let mut max_abs = 0.0_f64;
        for i in 0..32 {
            let t = (i as f64 + 0.5) / 32.0;
            let x = 1e-4 * (1e8_f64).powf(t);
            if let Ok(v) = self.pdf(x) {
                max_abs = max_abs.max(v.abs());
                if v < worst {
                    worst = v;
                    worst_x = x;
                }
            }
        }
        if worst < -1e-9 * max_abs.max(1e-12) {
            return Err(Error::NegativeDensity {
                x: worst_x,
                value: worst,
            });
        }
        Ok(())
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn params(&self) -> &IFunctionParams {
        &self.params
    }
    pub fn delta(&self) -> f64 {
        self.delta
    }
    pub fn sigma(&self) -> f64 {
        self.sigma
    }
    pub fn k2(&self) -> f64 {
        self.k2
    }
    pub fn series_cap(&self) -> usize {
        self.series_cap
    }

    /// Same distribution with a different series cap (for self-consistency
    /// checks).
    pub fn with_series_cap(&self, cap: usize) -> Result<IFIGDistribution> {
        make_ifig_with_cap(
            self.alpha,
            self.a,
            self.b,
            self.params.clone(),
            self.delta,
            self.sigma,
            cap,
        )
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Ok(0.0);
        }
        let envelope = (self.alpha - 1.0) * x.ln() - self.a * x - self.b / x;
        if envelope < -745.0 {
            return Ok(0.0);
        }
        let ifac = if self.sigma == 0.0 {
            1.0
        } else {
            let z = Complex64::new(self.delta * x.powf(self.sigma), 0.0);
            real_part(eval_kernel(&self.params.kernel(), z, &EvalConfig::default())?)?
        };
        Ok(self.k2 * envelope.exp() * ifac)
    }

    /// Mellin transform E[X^{s-1}].
    pub fn mellin(&self, s: f64) -> Result<f64> {
        Ok(self.mellin_detailed(s)?.0)
    }

    /// Mellin transform together with the evaluation path used.
    pub fn mellin_detailed(&self, s: f64) -> Result<(f64, IfigPath)> {
        let (v, path) = raw_mellin(
            self.alpha,
            self.a,
            self.b,
            &self.params,
            self.delta,
            self.sigma,
            s,
            self.series_cap,
        )?;
        Ok((self.k2 * v, path))
    }

    /// r-th raw moment.
    pub fn moment(&self, r: f64) -> Result<f64> {
        self.mellin(r + 1.0)
    }

    /// Laplace transform E[e^{-rX}] for r ≥ 0: the corollary series with a
    /// replaced by a + r.
    pub fn laplace(&self, r: f64) -> Result<f64> {
        if r < 0.0 {
            return Err(Error::Domain(format!(
                "Laplace argument must be nonnegative, got {r}"
            )));
        }
        let (v, _) = raw_mellin(
            self.alpha,
            self.a + r,
            self.b,
            &self.params,
            self.delta,
            self.sigma,
            1.0,
            self.series_cap,
        )?;
        Ok(self.k2 * v)
    }

    /// When b = 0 the family reduces to a product of two I-functions:
    /// a gamma-type factor at argument ax times the original I-factor.
    pub fn to_product_form(&self) -> Result<crate::algebra::ProductFormDistribution> {
        if self.b != 0.0 {
            return Err(Error::Restriction(format!(
                "product-form reduction needs b = 0, got b = {}",
                self.b
            )));
        }
        if !(self.alpha > 0.0 && self.a > 0.0) {
            return Err(Error::Restriction(
                "product-form reduction needs α > 0 and a > 0".into(),
            ));
        }
        let gamma_factor =
            IFunctionParams::new(1, 0, vec![], vec![triple(self.alpha - 1.0, 1.0, 1.0)])?;
        crate::algebra::make_product_form(
            &gamma_factor,
            self.a,
            1.0,
            &self.params,
            self.delta,
            self.sigma,
        )
    }
}

/// Named I-FIG special cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IfigCatalog {
    /// Generalized inverse Gaussian with density
    /// β^{α/2} x^{α-1} e^{-(βx + γ/x)/2} / (2 γ^{α/2} K_α(√(βγ))).
    Gig { alpha: f64, beta: f64, gamma: f64 },
    InverseGaussian { mu: f64, lambda: f64 },
    InverseGamma { theta: f64, lambda: f64 },
}

/// The constant I-factor carried by every catalog entry; any |δ| < 1 is
/// equivalent, 1/2 is the default.
pub fn constant_factor() -> IFunctionParams {
    IFunctionParams::new(
        1,
        0,
        vec![triple(1.0, 1.0, 1.0)],
        vec![triple(0.0, 1.0, 1.0)],
    )
    .expect("constant pattern is valid")
}

impl IfigCatalog {
    pub fn name(&self) -> &'static str {
        match self {
            IfigCatalog::Gig { .. } => "gig",
            IfigCatalog::InverseGaussian { .. } => "inverse_gaussian",
            IfigCatalog::InverseGamma { .. } => "inverse_gamma",
        }
    }

    pub fn distribution(&self) -> Result<IFIGDistribution> {
        match *self {
            IfigCatalog::Gig { alpha, beta, gamma } => {
                if !(beta > 0.0 && gamma > 0.0) {
                    return Err(Error::Domain(format!(
                        "GIG needs β, γ > 0, got β = {beta}, γ = {gamma}"
                    )));
                }
                make_ifig(alpha, beta / 2.0, gamma / 2.0, constant_factor(), 0.5, 0.0)
            }
            IfigCatalog::InverseGaussian { mu, lambda } => {
                if !(mu > 0.0 && lambda > 0.0) {
                    return Err(Error::Domain(format!(
                        "inverse Gaussian needs μ, λ > 0, got μ = {mu}, λ = {lambda}"
                    )));
                }
                IfigCatalog::Gig {
                    alpha: -0.5,
                    beta: lambda / (mu * mu),
                    gamma: lambda,
                }
                .distribution()
            }
            IfigCatalog::InverseGamma { theta, lambda } => {
                if !(theta > 0.0 && lambda > 0.0) {
                    return Err(Error::Domain(format!(
                        "inverse gamma needs θ, λ > 0, got θ = {theta}, λ = {lambda}"
                    )));
                }
                make_ifig(-theta, 0.0, lambda, constant_factor(), 0.5, 0.0)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_case_normalizes_to_one() {
        // b = 0, constant I-factor, α = 2, a = 1: density x e^{-x}, k₂ = 1.
        let d = make_ifig(2.0, 1.0, 0.0, constant_factor(), 0.5, 0.0).unwrap();
        assert_relative_eq!(d.k2(), 1.0, max_relative = 1e-12);
        assert_relative_eq!(d.pdf(1.3).unwrap(), 1.3 * (-1.3_f64).exp(), max_relative = 1e-12);
        assert_relative_eq!(d.mellin(1.0).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn gig_normalizer_matches_bessel_closed_form() {
        let (alpha, beta, gamma) = (1.5, 2.0, 3.0);
        let d = IfigCatalog::Gig { alpha, beta, gamma }.distribution().unwrap();
        let expect = beta.powf(alpha / 2.0)
            / (2.0 * gamma.powf(alpha / 2.0) * bessel_k(alpha, (beta * gamma).sqrt()).unwrap());
        assert_relative_eq!(d.k2(), expect, max_relative = 1e-6);
    }

    #[test]
    fn gig_mean_bessel_ratio() {
        let (alpha, beta, gamma) = (1.5, 2.0, 3.0);
        let d = IfigCatalog::Gig { alpha, beta, gamma }.distribution().unwrap();
        let root = (beta * gamma).sqrt();
        let expect = (gamma / beta).sqrt() * bessel_k(alpha + 1.0, root).unwrap()
            / bessel_k(alpha, root).unwrap();
        assert_relative_eq!(d.moment(1.0).unwrap(), expect, max_relative = 1e-6);
    }

    #[test]
    fn inverse_gaussian_pdf_and_laplace() {
        let (mu, lambda) = (1.0, 1.0);
        let d = IfigCatalog::InverseGaussian { mu, lambda }.distribution().unwrap();
        for x in [0.5, 1.0, 2.0] {
            let expect = (lambda / (2.0 * std::f64::consts::PI * x.powi(3)))
                .sqrt()
                * (-lambda * (x - mu).powi(2) / (2.0 * mu * mu * x)).exp();
            assert_relative_eq!(d.pdf(x).unwrap(), expect, max_relative = 1e-7);
        }
        // known transform e^{(λ/μ)(1 - sqrt(1 + 2 μ² r/λ))}
        let r = 1.0;
        let expect = ((lambda / mu) * (1.0 - (1.0 + 2.0 * mu * mu * r / lambda).sqrt())).exp();
        assert_relative_eq!(d.laplace(r).unwrap(), expect, max_relative = 1e-6);
        assert_relative_eq!(d.laplace(0.0).unwrap(), 1.0, max_relative = 1e-10);
    }

    #[test]
    fn inverse_gamma_pdf_and_mean() {
        let (theta, lambda) = (3.0, 2.0);
        let d = IfigCatalog::InverseGamma { theta, lambda }.distribution().unwrap();
        let gamma_theta = real_gamma(theta).unwrap();
        for x in [0.4, 1.0, 2.0] {
            let expect =
                lambda.powf(theta) * x.powf(-theta - 1.0) * (-lambda / x).exp() / gamma_theta;
            assert_relative_eq!(d.pdf(x).unwrap(), expect, max_relative = 1e-9);
        }
        assert_relative_eq!(
            d.moment(1.0).unwrap(),
            lambda / (theta - 1.0),
            max_relative = 1e-8
        );
        // moments at or above θ do not exist
        assert!(d.moment(3.0).is_err());
    }

    #[test]
    fn sign_restrictions() {
        let cp = constant_factor();
        assert!(matches!(
            make_ifig(2.0, 0.0, 1.0, cp.clone(), 0.5, 0.0),
            Err(Error::Restriction(_))
        ));
        assert!(matches!(
            make_ifig(-2.0, 1.0, 0.0, cp.clone(), 0.5, 0.0),
            Err(Error::Restriction(_))
        ));
        assert!(matches!(
            make_ifig(0.0, 1.0, 0.0, cp.clone(), 0.5, 0.0),
            Err(Error::Restriction(_))
        ));
        // σ = 0 with a non-constant factor is rejected
        let expo = IFunctionParams::new(1, 0, vec![], vec![triple(0.0, 1.0, 1.0)]).unwrap();
        assert!(matches!(
            make_ifig(2.0, 1.0, 0.0, expo, 0.5, 0.0),
            Err(Error::Restriction(_))
        ));
        assert!(matches!(
            make_ifig(2.0, 1.0, 1.0, cp, 1.5, 0.0),
            Err(Error::Restriction(_))
        ));
    }

    #[test]
    fn series_cap_stability() {
        let d = IfigCatalog::Gig { alpha: 1.5, beta: 2.0, gamma: 3.0 }
            .distribution()
            .unwrap();
        let d2 = d.with_series_cap(2 * d.series_cap()).unwrap();
        assert_relative_eq!(d.k2(), d2.k2(), max_relative = 1e-12);
        for s in [1.0, 1.5, 2.0, 3.0] {
            assert_relative_eq!(
                d.mellin(s).unwrap(),
                d2.mellin(s).unwrap(),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn zero_zero_convention_selects_first_term() {
        // b = 0 must behave as the l = 0 limit with (ab)^0 = 1.
        let d = make_ifig(2.5, 1.2, 0.0, constant_factor(), 0.5, 0.0).unwrap();
        let expect = real_gamma(2.5).unwrap() * 1.2_f64.powf(-2.5);
        assert_relative_eq!(1.0 / d.k2(), expect, max_relative = 1e-12);
    }

    #[test]
    fn large_ab_falls_back_to_stable_path() {
        // 2 sqrt(ab) = 20: the series pair cancels to ~e^{-40}; the monitor
        // must reroute instead of returning noise.
        let d = IfigCatalog::Gig { alpha: 1.3, beta: 20.0, gamma: 10.0 }
            .distribution()
            .unwrap();
        let (_, path) = d.mellin_detailed(1.0).unwrap();
        assert_eq!(path, IfigPath::ClosedForm);
        let root = (200.0_f64).sqrt();
        let expect = (10.0_f64 / 20.0).sqrt() * bessel_k(2.3, root).unwrap()
            / bessel_k(1.3, root).unwrap();
        assert_relative_eq!(d.moment(1.0).unwrap(), expect, max_relative = 1e-8);
    }

    #[test]
    fn product_form_reduction_when_b_zero() {
        let d = make_ifig(2.0, 1.0, 0.0, constant_factor(), 0.5, 0.0).unwrap();
        let pf = d.to_product_form().unwrap();
        for x in [0.3, 1.0, 2.7] {
            assert_relative_eq!(
                pf.pdf(x).unwrap(),
                d.pdf(x).unwrap(),
                max_relative = 1e-10
            );
        }
        let with_b = IfigCatalog::Gig { alpha: 1.0, beta: 1.0, gamma: 1.0 }
            .distribution()
            .unwrap();
        assert!(matches!(
            with_b.to_product_form(),
            Err(Error::Restriction(_))
        ));
    }

    #[test]
    fn ifig_schema_round_trip() {
        let d = IfigCatalog::Gig { alpha: 1.5, beta: 2.0, gamma: 3.0 }
            .distribution()
            .unwrap();
        let js = serde_json::to_string(&d).unwrap();
        assert!(js.contains("\"alpha\":1.5"));
        let back: IFIGDistribution = serde_json::from_str(&js).unwrap();
        assert_relative_eq!(back.k2(), d.k2(), max_relative = 1e-13);
    }
}
