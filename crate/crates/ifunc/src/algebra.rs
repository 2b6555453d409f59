//! Closure of the I-function family under products, quotients, positive
//! scalings and rational powers of independent variates, plus the
//! distribution whose density is a product of two I-functions.
//!
//! The parameter constructions are implemented from the Mellin compositions
//! in the proofs (χ(s) ↦ Π χ_l(s/σ_l), χ₁(s/σ₁)·χ₂(2/σ₂ - s/σ₂), …): each
//! result is a plain `IDistribution` whose own normalizer reproduces the
//! stated constants.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::contour::{eval_kernel, real_part, EvalConfig};
use crate::distribution::{IDistribution, Support};
use crate::error::{Error, Result};
use crate::params::{GammaTriple, IFunctionParams};
use crate::transforms::{product_mellin_params, ProductMellin};

/// base^e for real base, allowing negative bases only at integer exponents.
fn signed_pow(base: f64, e: f64) -> Result<f64> {
    if base > 0.0 {
        Ok(base.powf(e))
    } else if base == 0.0 {
        Err(Error::Domain("zero base in signed power".into()))
    } else if (e - e.round()).abs() < 1e-12 {
        let k = e.round() as i32;
        Ok(base.abs().powi(k) * if k % 2 == 0 { 1.0 } else { -1.0 })
    } else {
        Err(Error::Branch(format!(
            "negative base {base} with non-integer exponent {e}"
        )))
    }
}

fn rescaled(t: &GammaTriple, inv_sigma: f64) -> Result<GammaTriple> {
    GammaTriple::new(t.shift, t.scale * inv_sigma, t.exponent)
}

/// Distribution of Π X_l for independent I-function variates: orders are
/// summed, each factor's scales divide by its own σ_l, numerator blocks of
/// all factors come first, and δ = Π δ_l^{1/σ_l}.
pub fn product(ds: &[IDistribution]) -> Result<IDistribution> {
    if ds.is_empty() {
        return Err(Error::Domain("product of zero distributions".into()));
    }
    let mut upper_num = Vec::new();
    let mut upper_den = Vec::new();
    let mut lower_num = Vec::new();
    let mut lower_den = Vec::new();
    let mut delta = 1.0;
    let mut lo = 1.0;
    let mut hi = Some(1.0);
    for d in ds {
        let inv = 1.0 / d.sigma();
        let p = d.params();
        for t in &p.upper()[..p.n()] {
            upper_num.push(rescaled(t, inv)?);
        }
        for t in &p.upper()[p.n()..] {
            upper_den.push(rescaled(t, inv)?);
        }
        for t in &p.lower()[..p.m()] {
            lower_num.push(rescaled(t, inv)?);
        }
        for t in &p.lower()[p.m()..] {
            lower_den.push(rescaled(t, inv)?);
        }
        delta *= signed_pow(d.delta(), inv)?;
        let s = d.support();
        lo *= s.lo;
        hi = match (hi, s.hi) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
    }
    let m = lower_num.len();
    let n = upper_num.len();
    upper_num.extend(upper_den);
    lower_num.extend(lower_den);
    let params = IFunctionParams::new(m, n, upper_num, lower_num)?;
    IDistribution::with_support(params, delta, 1.0, Support { lo, hi })
}

/// Distribution of aX for a > 0.
pub fn scale(d: &IDistribution, a: f64) -> Result<IDistribution> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("scale must be positive, got {a}")));
    }
    let inv = 1.0 / d.sigma();
    let p = d.params();
    let upper = p
        .upper()
        .iter()
        .map(|t| rescaled(t, inv))
        .collect::<Result<Vec<_>>>()?;
    let lower = p
        .lower()
        .iter()
        .map(|t| rescaled(t, inv))
        .collect::<Result<Vec<_>>>()?;
    let params = IFunctionParams::new(p.m(), p.n(), upper, lower)?;
    let delta = signed_pow(d.delta(), inv)? / a;
    let s = d.support();
    IDistribution::with_support(
        params,
        delta,
        1.0,
        Support {
            lo: a * s.lo,
            hi: s.hi.map(|h| a * h),
        },
    )
}

/// Distribution of X^r for rational r ≠ 0. Positive powers keep the order
/// structure; negative powers swap the upper and lower lists.
pub fn power(d: &IDistribution, r: f64) -> Result<IDistribution> {
    if r == 0.0 || !r.is_finite() {
        return Err(Error::Domain("power must be nonzero".into()));
    }
    let inv = 1.0 / d.sigma();
    let p = d.params();
    let delta = signed_pow(d.delta(), r * inv)?;
    let s = d.support();
    let params;
    let support;
    if r > 0.0 {
        let map = |t: &GammaTriple| {
            GammaTriple::new(
                t.shift + (1.0 - r) * inv * t.scale,
                r * inv * t.scale,
                t.exponent,
            )
        };
        params = IFunctionParams::new(
            p.m(),
            p.n(),
            p.upper().iter().map(map).collect::<Result<Vec<_>>>()?,
            p.lower().iter().map(map).collect::<Result<Vec<_>>>()?,
        )?;
        support = Support {
            lo: s.lo.powf(r),
            hi: s.hi.map(|h| h.powf(r)),
        };
    } else {
        let map = |t: &GammaTriple| {
            GammaTriple::new(
                1.0 - t.shift - (1.0 - r) * inv * t.scale,
                -r * inv * t.scale,
                t.exponent,
            )
        };
        let upper = p.lower().iter().map(map).collect::<Result<Vec<_>>>()?;
        let lower = p.upper().iter().map(map).collect::<Result<Vec<_>>>()?;
        params = IFunctionParams::new(p.n(), p.m(), upper, lower)?;
        let lo = match s.hi {
            Some(h) => h.powf(r),
            None => 0.0,
        };
        let hi = if s.lo > 0.0 { Some(s.lo.powf(r)) } else { None };
        support = Support { lo, hi };
    }
    IDistribution::with_support(params, delta, 1.0, support)
}

/// Distribution of X₁/X₂ for independent I-function variates.
pub fn quotient(d1: &IDistribution, d2: &IDistribution) -> Result<IDistribution> {
    let inv1 = 1.0 / d1.sigma();
    let inv2 = 1.0 / d2.sigma();
    let p1 = d1.params();
    let p2 = d2.params();
    // factor-2 triples reflected through s ↦ 2/σ₂ - s/σ₂
    let reflect = |t: &GammaTriple| {
        GammaTriple::new(
            1.0 - t.shift - 2.0 * inv2 * t.scale,
            inv2 * t.scale,
            t.exponent,
        )
    };
    let mut upper = Vec::with_capacity(p1.p() + p2.q());
    for t in &p1.upper()[..p1.n()] {
        upper.push(rescaled(t, inv1)?);
    }
    for t in p2.lower() {
        upper.push(reflect(t)?);
    }
    for t in &p1.upper()[p1.n()..] {
        upper.push(rescaled(t, inv1)?);
    }
    let mut lower = Vec::with_capacity(p1.q() + p2.p());
    for t in &p1.lower()[..p1.m()] {
        lower.push(rescaled(t, inv1)?);
    }
    for t in p2.upper() {
        lower.push(reflect(t)?);
    }
    for t in &p1.lower()[p1.m()..] {
        lower.push(rescaled(t, inv1)?);
    }
    let m = p1.m() + p2.n();
    let n = p1.n() + p2.m();
    let params = IFunctionParams::new(m, n, upper, lower)?;
    let delta = signed_pow(d1.delta(), inv1)? * signed_pow(d2.delta(), -inv2)?;
    let (s1, s2) = (d1.support(), d2.support());
    let lo = match s2.hi {
        Some(h2) => s1.lo / h2,
        None => 0.0,
    };
    let hi = match (s1.hi, s2.lo > 0.0) {
        (Some(h1), true) => Some(h1 / s2.lo),
        _ => None,
    };
    IDistribution::with_support(params, delta, 1.0, Support { lo, hi })
}

/// Density k₁ · I(δ x^σ) · I(η x^μ): the product-of-two-I-functions family,
/// kept distinct from `IDistribution` (whether such a product is itself an
/// I-function is open).
#[derive(Debug, Clone)]
pub struct ProductFormDistribution {
    params1: IFunctionParams,
    delta: f64,
    sigma: f64,
    params2: IFunctionParams,
    eta: f64,
    mu: f64,
    k1: f64,
    mellin: ProductMellin,
}

#[derive(Serialize, Deserialize)]
struct Factor2Json {
    ifunction: IFunctionParams,
    eta: f64,
    mu: f64,
}

#[derive(Serialize, Deserialize)]
struct ProductFormJson {
    ifunction: IFunctionParams,
    delta: f64,
    sigma: f64,
    factor2: Factor2Json,
}

impl Serialize for ProductFormDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProductFormJson {
            ifunction: self.params1.clone(),
            delta: self.delta,
            sigma: self.sigma,
            factor2: Factor2Json {
                ifunction: self.params2.clone(),
                eta: self.eta,
                mu: self.mu,
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProductFormDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ProductFormJson::deserialize(d)?;
        make_product_form(
            &raw.ifunction,
            raw.delta,
            raw.sigma,
            &raw.factor2.ifunction,
            raw.factor2.eta,
            raw.factor2.mu,
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Normalize the product form: k₁ is the reciprocal of the product-Mellin
/// value at s = 1.
pub fn make_product_form(
    params1: &IFunctionParams,
    delta: f64,
    sigma: f64,
    params2: &IFunctionParams,
    eta: f64,
    mu: f64,
) -> Result<ProductFormDistribution> {
    let mellin = product_mellin_params(params1, delta, sigma, params2, eta, mu)?;
    let norm = mellin
        .eval(Complex64::new(1.0, 0.0))
        .map_err(|e| Error::Normalization(format!("product-Mellin at s = 1: {e}")))?;
    let norm = real_part(norm).map_err(|_| {
        Error::Normalization(format!("product-Mellin at s = 1 is not real: {norm}"))
    })?;
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::Normalization(format!(
            "product-Mellin normalization integral = {norm}"
        )));
    }
    Ok(ProductFormDistribution {
        params1: params1.clone(),
        delta,
        sigma,
        params2: params2.clone(),
        eta,
        mu,
        k1: 1.0 / norm,
        mellin,
    })
}

impl ProductFormDistribution {
    pub fn k1(&self) -> f64 {
        self.k1
    }

    pub fn factor1(&self) -> (&IFunctionParams, f64, f64) {
        (&self.params1, self.delta, self.sigma)
    }

    pub fn factor2(&self) -> (&IFunctionParams, f64, f64) {
        (&self.params2, self.eta, self.mu)
    }

    pub fn mellin(&self) -> &ProductMellin {
        &self.mellin
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        self.pdf_with(x, &EvalConfig::default())
    }

    pub fn pdf_with(&self, x: f64, cfg: &EvalConfig) -> Result<f64> {
        if !(x > 0.0) {
            return Ok(0.0);
        }
        let z1 = Complex64::new(self.delta * x.powf(self.sigma), 0.0);
        let f1 = real_part(eval_kernel(&self.params1.kernel(), z1, cfg)?)?;
        let f2 = if self.mu == 0.0 {
            if crate::closed_form::is_constant_pattern(&self.params2) && self.eta.abs() < 1.0 {
                1.0
            } else {
                real_part(eval_kernel(
                    &self.params2.kernel(),
                    Complex64::new(self.eta, 0.0),
                    cfg,
                )?)?
            }
        } else {
            let z2 = Complex64::new(self.eta * x.powf(self.mu), 0.0);
            real_part(eval_kernel(&self.params2.kernel(), z2, cfg)?)?
        };
        Ok(self.k1 * f1 * f2)
    }

    /// r-th moment through the product-Mellin object at s = r + 1.
    pub fn moment(&self, r: f64) -> Result<f64> {
        let v = self.mellin.eval(Complex64::new(r + 1.0, 0.0))?;
        Ok(self.k1 * real_part(v)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::Catalog;
    use crate::params::triple;
    use approx::assert_relative_eq;

    #[test]
    fn product_of_uniform_and_gamma_two_is_exponential() {
        let u = Catalog::Uniform.distribution().unwrap();
        let g = Catalog::Gamma { theta: 2.0, lambda: 1.3 }.distribution().unwrap();
        let prod = product(&[u, g]).unwrap();
        let target = Catalog::Exponential { lambda: 1.3 }.distribution().unwrap();
        for x in [0.2, 0.7, 1.5, 3.0] {
            assert_relative_eq!(
                prod.pdf(x).unwrap(),
                target.pdf(x).unwrap(),
                max_relative = 1e-9
            );
        }
        assert_eq!(prod.support().hi, None);
    }

    #[test]
    fn single_factor_product_is_mellin_identical() {
        let d = Catalog::Weibull { theta: 2.0, lambda: 1.0 }.distribution().unwrap();
        let p = product(std::slice::from_ref(&d)).unwrap();
        let (md, mp) = (d.mellin(), p.mellin());
        for k in 0..10 {
            let s = Complex64::new(0.6 + 0.2 * k as f64, 0.3);
            let a = md.eval(s).unwrap();
            let b = mp.eval(s).unwrap();
            assert!((a - b).norm() <= 1e-10 * a.norm(), "s = {s}");
        }
    }

    #[test]
    fn scaled_exponential_is_exponential() {
        let d = Catalog::Exponential { lambda: 0.8 }.distribution().unwrap();
        let s = scale(&d, 2.5).unwrap();
        let target = Catalog::Exponential { lambda: 2.0 }.distribution().unwrap();
        for x in [0.1, 1.0, 4.0] {
            assert_relative_eq!(
                s.pdf(x).unwrap(),
                target.pdf(x).unwrap(),
                max_relative = 1e-9
            );
        }
        // scale(d, 1) is pointwise identical
        let s1 = scale(&d, 1.0).unwrap();
        for x in [0.3, 2.0] {
            assert_relative_eq!(
                s1.pdf(x).unwrap(),
                d.pdf(x).unwrap(),
                max_relative = 1e-10
            );
        }
        // moment scaling rule
        assert_relative_eq!(
            scale(&d, 3.0).unwrap().moment(2.0).unwrap(),
            9.0 * d.moment(2.0).unwrap(),
            max_relative = 1e-10
        );
    }

    #[test]
    fn power_of_exponential_is_weibull() {
        let lambda = 1.2;
        let theta = 2.0;
        let d = Catalog::Exponential { lambda }.distribution().unwrap();
        let z = power(&d, 1.0 / theta).unwrap();
        let target = Catalog::Weibull { theta, lambda }.distribution().unwrap();
        for x in [0.3, 0.9, 1.8] {
            assert_relative_eq!(
                z.pdf(x).unwrap(),
                target.pdf(x).unwrap(),
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn negative_power_matches_change_of_variables() {
        let d = Catalog::Gamma { theta: 2.0, lambda: 1.0 }.distribution().unwrap();
        let inv = power(&d, -1.0).unwrap();
        for x in [0.4, 1.0, 2.5] {
            let expect = d.pdf(1.0 / x).unwrap() / (x * x);
            assert_relative_eq!(inv.pdf(x).unwrap(), expect, max_relative = 1e-8);
        }
        // Mellin identity M_Y(s) = M_X(rs - r + 1)
        let (my, mx) = (inv.mellin(), d.mellin());
        let s = Complex64::new(0.8, 0.4);
        let a = my.eval(s).unwrap();
        let b = mx.eval(-s + 2.0).unwrap();
        assert!((a - b).norm() <= 1e-10 * a.norm());
    }

    #[test]
    fn quotient_of_half_normals_is_half_cauchy() {
        let d1 = Catalog::HalfNormal { lambda: 1.4 }.distribution().unwrap();
        let d2 = Catalog::HalfNormal { lambda: 0.8 }.distribution().unwrap();
        let q = quotient(&d1, &d2).unwrap();
        let target = Catalog::HalfCauchy { lambda: 1.4 / 0.8 }.distribution().unwrap();
        for x in [0.2, 1.0, 3.5] {
            assert_relative_eq!(
                q.pdf(x).unwrap(),
                target.pdf(x).unwrap(),
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn quotient_of_unit_exponentials() {
        let d = Catalog::Exponential { lambda: 1.0 }.distribution().unwrap();
        let q = quotient(&d, &d).unwrap();
        // pdf 1/(1+y)^2
        assert_relative_eq!(q.pdf(1.0).unwrap(), 0.25, max_relative = 1e-9);
        // Mellin identity at complex s
        let s = Complex64::new(1.3, 0.7);
        let m = d.mellin();
        let a = q.mellin().eval(s).unwrap();
        let b = m.eval(s).unwrap() * m.eval(2.0 - s).unwrap();
        assert!((a - b).norm() <= 1e-10 * a.norm());
    }

    #[test]
    fn product_form_constant_factor_reduces_to_distribution() {
        let expo = Catalog::Exponential { lambda: 1.0 }.distribution().unwrap();
        let constant = IFunctionParams::new(
            1,
            0,
            vec![triple(1.0, 1.0, 1.0)],
            vec![triple(0.0, 1.0, 1.0)],
        )
        .unwrap();
        let pf = make_product_form(expo.params(), 1.0, 1.0, &constant, 0.5, 0.0).unwrap();
        for x in [0.3, 1.0, 2.5] {
            assert_relative_eq!(
                pf.pdf(x).unwrap(),
                expo.pdf(x).unwrap(),
                max_relative = 1e-9
            );
        }
        assert_relative_eq!(pf.moment(0.0).unwrap(), 1.0, max_relative = 1e-10);
    }

    #[test]
    fn bessel_gamma_normalizer() {
        // density a e^{-λ/a} (ax)^{α-1} e^{-ax} ₀F₁(; α; λx)/Γ(α): k₁ = a e^{-λ/a}
        let (alpha, a, lambda) = (2.0, 1.5, 0.8);
        let f1 = IFunctionParams::new(1, 0, vec![], vec![triple(alpha - 1.0, 1.0, 1.0)]).unwrap();
        let f2 = IFunctionParams::new(
            1,
            0,
            vec![],
            vec![triple(0.0, 1.0, 1.0), triple(1.0 - alpha, 1.0, 1.0)],
        )
        .unwrap();
        let pf = make_product_form(&f1, a, 1.0, &f2, -lambda, 1.0).unwrap();
        assert_relative_eq!(
            pf.k1(),
            a * (-lambda / a).exp(),
            max_relative = 1e-8
        );
    }
}
