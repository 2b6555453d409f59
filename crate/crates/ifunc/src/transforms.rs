//! Mellin and Laplace transforms of I-functions, the kernel-level Mellin
//! transform of a product of two I-functions, and the Epstein combinators
//! that turn scalings, powers, quotients and products of independent
//! positive variates into Mellin arithmetic.

use std::sync::Arc;

use num_complex::Complex64;

use crate::contour::{eval_kernel, EvalConfig};
use crate::error::{Error, Result};
use crate::kernel::{CTriple, Kernel, KernelTemplate, STriple};
use crate::params::IFunctionParams;

/// A Mellin transform as an abstract evaluator with its strip of validity.
#[derive(Clone)]
pub struct MellinFunction {
    eval: Arc<dyn Fn(Complex64) -> Result<Complex64> + Send + Sync>,
    strip: (f64, f64),
}

/// Margin by which composed strips are shrunk.
const STRIP_MARGIN: f64 = 1e-9;

impl MellinFunction {
    pub fn new(
        strip: (f64, f64),
        eval: impl Fn(Complex64) -> Result<Complex64> + Send + Sync + 'static,
    ) -> Self {
        MellinFunction {
            eval: Arc::new(eval),
            strip,
        }
    }

    pub fn strip(&self) -> (f64, f64) {
        self.strip
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        if s.re <= self.strip.0 + STRIP_MARGIN || s.re >= self.strip.1 - STRIP_MARGIN {
            return Err(Error::Strip {
                re: s.re,
                im: s.im,
                lo: self.strip.0,
                hi: self.strip.1,
            });
        }
        (self.eval)(s)
    }
}

impl std::fmt::Debug for MellinFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MellinFunction {{ strip: {:?} }}", self.strip)
    }
}

/// z^w for a possibly negative real base: refuse non-integer real powers of
/// negative bases, admit integer ones.
fn real_base_pow(base: f64, w: Complex64, context: &str) -> Result<Complex64> {
    if base > 0.0 {
        Ok((w * base.ln()).exp())
    } else if base == 0.0 {
        Err(Error::Domain(format!("{context}: zero base")))
    } else if w.im == 0.0 && (w.re - w.re.round()).abs() < 1e-12 {
        let k = w.re.round() as i64;
        let mag = base.abs().powi(k as i32);
        Ok(Complex64::new(if k % 2 == 0 { mag } else { -mag }, 0.0))
    } else {
        Err(Error::Branch(format!(
            "{context}: real power {w} of negative base {base}"
        )))
    }
}

/// Kernel-level Mellin transform of I(δ x^σ): χ(s/σ) / (σ δ^{s/σ}).
pub fn mellin_ifunction(
    params: &IFunctionParams,
    delta: f64,
    sigma: f64,
    s: Complex64,
) -> Result<Complex64> {
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!("σ must be positive, got {sigma}")));
    }
    if delta == 0.0 {
        return Err(Error::Domain("δ must be nonzero".into()));
    }
    let w = s / sigma;
    let chi = params.chi(w)?;
    let dpow = real_base_pow(delta, -w, "mellin_ifunction δ^{-s/σ}")?;
    Ok(chi * dpow / sigma)
}

/// `mellin_ifunction` wrapped with its strip of validity.
pub fn mellin_of(params: &IFunctionParams, delta: f64, sigma: f64) -> Result<MellinFunction> {
    if !(sigma > 0.0) || delta == 0.0 {
        return Err(Error::Domain("need σ > 0 and δ ≠ 0".into()));
    }
    let (l, r) = params.strip();
    let p = params.clone();
    Ok(MellinFunction::new((sigma * l, sigma * r), move |s| {
        mellin_ifunction(&p, delta, sigma, s)
    }))
}

/// The Mellin transform of I(δ x^σ)·I(η x^μ) as a symbolic object: an
/// s-dependent prefactor (1/σ) δ^{-s/σ} times an I-function of fixed
/// argument η / δ^{μ/σ} whose parameter shifts are affine in s.
#[derive(Debug, Clone)]
pub struct ProductMellin {
    sigma: f64,
    delta: f64,
    argument: f64,
    template: KernelTemplate,
    strip: (f64, f64),
}

/// Assemble the product-Mellin object from the two factors. The interleaving
/// of the parameter lists follows the construction exactly: the second
/// factor's numerator triples flank the first factor's s-shifted triples.
pub fn product_mellin_params(
    params1: &IFunctionParams,
    delta: f64,
    sigma: f64,
    params2: &IFunctionParams,
    eta: f64,
    mu: f64,
) -> Result<ProductMellin> {
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!("σ must be positive, got {sigma}")));
    }
    if mu < 0.0 {
        return Err(Error::Domain(format!("μ must be nonnegative, got {mu}")));
    }
    if delta == 0.0 || eta == 0.0 {
        return Err(Error::Domain("δ and η must be nonzero".into()));
    }
    let exp_md = mu / sigma;
    let dpow = if delta > 0.0 {
        delta.powf(exp_md)
    } else if (exp_md - exp_md.round()).abs() < 1e-12 {
        let k = exp_md.round() as i32;
        delta.abs().powi(k) * if k % 2 == 0 { 1.0 } else { -1.0 }
    } else {
        return Err(Error::Branch(format!(
            "δ^{{μ/σ}} with δ = {delta} < 0 and non-integer μ/σ = {exp_md}"
        )));
    };
    let argument = eta / dpow;

    // upper row: (c)_{1..l} ++ (1 - b_j - B_j s/σ, μ B_j/σ, β_j)_{1..q} ++ (c)_{l+1..u}
    let l2 = params2.n();
    let k2 = params2.m();
    let mut upper: Vec<STriple> = Vec::with_capacity(params2.p() + params1.q());
    for t in &params2.upper()[..l2] {
        upper.push(STriple::fixed(t.shift, t.scale, t.exponent));
    }
    for t in params1.lower() {
        upper.push(STriple {
            base: 1.0 - t.shift,
            s_coef: -t.scale / sigma,
            scale: mu * t.scale / sigma,
            exponent: t.exponent,
        });
    }
    for t in &params2.upper()[l2..] {
        upper.push(STriple::fixed(t.shift, t.scale, t.exponent));
    }
    // lower row: (d)_{1..k} ++ (1 - a_i - A_i s/σ, μ A_i/σ, α_i)_{1..p} ++ (d)_{k+1..v}
    let mut lower: Vec<STriple> = Vec::with_capacity(params2.q() + params1.p());
    for t in &params2.lower()[..k2] {
        lower.push(STriple::fixed(t.shift, t.scale, t.exponent));
    }
    for t in params1.upper() {
        lower.push(STriple {
            base: 1.0 - t.shift,
            s_coef: -t.scale / sigma,
            scale: mu * t.scale / sigma,
            exponent: t.exponent,
        });
    }
    for t in &params2.lower()[k2..] {
        lower.push(STriple::fixed(t.shift, t.scale, t.exponent));
    }
    let template = KernelTemplate {
        n_upper: params1.m() + l2,
        n_lower: params1.n() + k2,
        upper,
        lower,
    };

    // Strip of the defining integral ∫ x^{s-1} I₁ I₂ dx from the power
    // behavior of each factor at 0 and ∞.
    let (l1s, r1s) = params1.strip();
    let (l2s, r2s) = params2.strip();
    let lo = sigma * l1s + mu * l2s;
    let hi = sigma * r1s + mu * r2s;
    Ok(ProductMellin {
        sigma,
        delta,
        argument,
        template,
        strip: (lo, hi),
    })
}

impl ProductMellin {
    /// Fixed argument η / δ^{μ/σ} of the constructed I-function.
    pub fn argument(&self) -> f64 {
        self.argument
    }

    /// Strip of validity of the product Mellin transform.
    pub fn strip(&self) -> (f64, f64) {
        self.strip
    }

    /// Symbolic prefactor as (base, exponent-is-s): (1/σ) · base^s with
    /// base = δ^{-1/σ}.
    pub fn prefactor(&self) -> (f64, f64) {
        (1.0 / self.sigma, self.delta.powf(-1.0 / self.sigma))
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        self.eval_with(s, &EvalConfig::default())
    }

    pub fn eval_with(&self, s: Complex64, cfg: &EvalConfig) -> Result<Complex64> {
        if self.strip.0.is_finite() && s.re <= self.strip.0 + STRIP_MARGIN
            || self.strip.1.is_finite() && s.re >= self.strip.1 - STRIP_MARGIN
        {
            return Err(Error::Strip {
                re: s.re,
                im: s.im,
                lo: self.strip.0,
                hi: self.strip.1,
            });
        }
        let kernel = self.template.at(s)?;
        let value = eval_kernel(&kernel, Complex64::new(self.argument, 0.0), cfg)?;
        let pref = real_base_pow(self.delta, -s / self.sigma, "product Mellin δ^{-s/σ}")?;
        Ok(value * pref / self.sigma)
    }

    /// Materialize the constructed object at a real s as public parameters
    /// plus the numeric prefactor; needs μ > 0 so every scale is positive.
    pub fn params_at(&self, s: f64) -> Result<(f64, IFunctionParams, f64)> {
        let kernel = self.template.at(Complex64::new(s, 0.0))?;
        let to_triple = |t: &CTriple| crate::params::GammaTriple::new(t.shift.re, t.scale, t.exponent);
        if kernel
            .upper
            .iter()
            .chain(kernel.lower.iter())
            .any(|t| t.scale <= 0.0)
        {
            return Err(Error::Domain(
                "μ = 0 factors collapse to constants and have no public parameter form".into(),
            ));
        }
        let upper = kernel.upper.iter().map(to_triple).collect::<Result<Vec<_>>>()?;
        let lower = kernel.lower.iter().map(to_triple).collect::<Result<Vec<_>>>()?;
        let params = IFunctionParams::new(kernel.n_lower, kernel.n_upper, upper, lower)?;
        let pref =
            real_base_pow(self.delta, Complex64::new(-s / self.sigma, 0.0), "prefactor")?.re
                / self.sigma;
        Ok((pref, params, self.argument))
    }
}

/// Laplace transform of I(δ x^σ) at complex r (principal powers of r):
/// (r^{σ-1}/δ) · I[r^σ/δ] with the argument-flipped parameter lists.
pub fn laplace_ifunction_complex(
    params: &IFunctionParams,
    delta: f64,
    sigma: f64,
    r: Complex64,
) -> Result<Complex64> {
    if !(sigma > 0.0) {
        return Err(Error::Domain(format!("σ must be positive, got {sigma}")));
    }
    if delta == 0.0 {
        return Err(Error::Domain("δ must be nonzero".into()));
    }
    if r == Complex64::new(0.0, 0.0) {
        // r → 0 limit of the transform is the Mellin value at s = 1.
        return mellin_ifunction(params, delta, sigma, Complex64::new(1.0, 0.0));
    }
    let mut upper = Vec::with_capacity(params.q());
    for t in params.lower() {
        upper.push(CTriple::real(1.0 - t.shift - t.scale, t.scale, t.exponent));
    }
    let mut lower = Vec::with_capacity(params.p() + 1);
    lower.push(CTriple::real(1.0 - sigma, sigma, 1.0));
    for t in params.upper() {
        lower.push(CTriple::real(1.0 - t.shift - t.scale, t.scale, t.exponent));
    }
    let kernel = Kernel::new(params.m(), params.n() + 1, upper, lower)?;
    let ln_r = r.ln();
    let argument = (sigma * ln_r).exp() / delta;
    let value = eval_kernel(&kernel, argument, &EvalConfig::default())?;
    let prefactor = ((sigma - 1.0) * ln_r).exp() / delta;
    Ok(prefactor * value)
}

/// Laplace transform at positive real r.
pub fn laplace_ifunction(params: &IFunctionParams, delta: f64, sigma: f64, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("Laplace variable must be positive, got {r}")));
    }
    let v = laplace_ifunction_complex(params, delta, sigma, Complex64::new(r, 0.0))?;
    crate::contour::real_part(v)
}

/// Mellin transform of aX for a > 0: a^{s-1} M(s).
pub fn epstein_scale(m: &MellinFunction, a: f64) -> Result<MellinFunction> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("scale must be positive, got {a}")));
    }
    let inner = m.clone();
    Ok(MellinFunction::new(m.strip(), move |s| {
        Ok(((s - 1.0) * a.ln()).exp() * inner.eval(s)?)
    }))
}

/// Mellin transform of X^r for r ≠ 0: M(rs - r + 1).
pub fn epstein_power(m: &MellinFunction, r: f64) -> Result<MellinFunction> {
    if r == 0.0 || !r.is_finite() {
        return Err(Error::Domain("power must be nonzero".into()));
    }
    let (lo, hi) = m.strip();
    let map = |edge: f64| (edge - 1.0) / r + 1.0;
    let strip = if r > 0.0 {
        (map(lo), map(hi))
    } else {
        (map(hi), map(lo))
    };
    let inner = m.clone();
    Ok(MellinFunction::new(strip, move |s| {
        inner.eval(r * s - r + 1.0)
    }))
}

/// Mellin transform of X₁/X₂: M₁(s) · M₂(2-s).
pub fn epstein_quotient(m1: &MellinFunction, m2: &MellinFunction) -> Result<MellinFunction> {
    let (l1, r1) = m1.strip();
    let (l2, r2) = m2.strip();
    let strip = (l1.max(2.0 - r2), r1.min(2.0 - l2));
    if strip.0 >= strip.1 {
        return Err(Error::Strip {
            re: f64::NAN,
            im: 0.0,
            lo: strip.0,
            hi: strip.1,
        });
    }
    let (a, b) = (m1.clone(), m2.clone());
    Ok(MellinFunction::new(strip, move |s| {
        Ok(a.eval(s)? * b.eval(2.0 - s)?)
    }))
}

/// Mellin transform of a product of independent variates: Π Mⱼ(s).
pub fn epstein_product(ms: &[MellinFunction]) -> Result<MellinFunction> {
    if ms.is_empty() {
        return Err(Error::Domain("product of zero Mellin factors".into()));
    }
    let strip = ms.iter().fold((f64::NEG_INFINITY, f64::INFINITY), |acc, m| {
        (acc.0.max(m.strip().0), acc.1.min(m.strip().1))
    });
    if strip.0 >= strip.1 {
        return Err(Error::Strip {
            re: f64::NAN,
            im: 0.0,
            lo: strip.0,
            hi: strip.1,
        });
    }
    let factors: Vec<MellinFunction> = ms.to_vec();
    Ok(MellinFunction::new(strip, move |s| {
        let mut acc = Complex64::new(1.0, 0.0);
        for f in &factors {
            acc *= f.eval(s)?;
        }
        Ok(acc)
    }))
}
