//! The I-function distribution: densities k₀ · I(δ x^σ) on (0, ∞) (or a
//! declared sub-interval), their normalization, moments, distribution
//! functions, transforms, order statistics, sampling, and the catalog of
//! sixteen classical special cases.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::contour::{eval_kernel, real_part, EvalConfig};
use crate::error::{Error, Result};
use crate::params::{GammaTriple, IFunctionParams};
use crate::special::real_gamma;
use crate::transforms::{laplace_ifunction_complex, mellin_ifunction, MellinFunction};

/// Support interval; `hi = None` means unbounded above.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Support {
    pub lo: f64,
    pub hi: Option<f64>,
}

impl Support {
    pub const POSITIVE: Support = Support { lo: 0.0, hi: None };

    pub fn bounded(lo: f64, hi: f64) -> Support {
        Support { lo, hi: Some(hi) }
    }

    pub fn contains(&self, x: f64) -> bool {
        x > self.lo && self.hi.map_or(true, |h| x < h)
    }
}

/// A normalized I-function distribution.
#[derive(Debug, Clone)]
pub struct IDistribution {
    params: IFunctionParams,
    delta: f64,
    sigma: f64,
    k0: f64,
    support: Support,
}

#[derive(Serialize, Deserialize)]
struct DistJson {
    ifunction: IFunctionParams,
    delta: f64,
    sigma: f64,
    support: (f64, Option<f64>),
}

impl Serialize for IDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DistJson {
            ifunction: self.params.clone(),
            delta: self.delta,
            sigma: self.sigma,
            support: (self.support.lo, self.support.hi),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = DistJson::deserialize(d)?;
        IDistribution::with_support(
            raw.ifunction,
            raw.delta,
            raw.sigma,
            Support {
                lo: raw.support.0,
                hi: raw.support.1,
            },
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Cheaper contour settings for the validation probe grid.
fn probe_config() -> EvalConfig {
    EvalConfig {
        rel_tol: 1e-6,
        tail_tol: 1e-8,
        ..EvalConfig::default()
    }
}

impl IDistribution {
    /// Normalize k₀ = σ δ^{1/σ} / χ(1/σ) and validate nonnegativity on a
    /// 64-point probe grid over the support.
    pub fn new(params: IFunctionParams, delta: f64, sigma: f64) -> Result<Self> {
        Self::with_support(params, delta, sigma, Support::POSITIVE)
    }

    pub fn with_support(
        params: IFunctionParams,
        delta: f64,
        sigma: f64,
        support: Support,
    ) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(Error::Domain(format!("σ must be positive, got {sigma}")));
        }
        if delta == 0.0 || !delta.is_finite() {
            return Err(Error::Domain("δ must be nonzero and finite".into()));
        }
        let inv_sigma = Complex64::new(1.0 / sigma, 0.0);
        let chi = params
            .chi(inv_sigma)
            .map_err(|e| Error::Normalization(format!("χ(1/σ): {e}")))?;
        if chi.norm() < 1e-280 || !chi.is_finite() {
            return Err(Error::Normalization(format!(
                "χ(1/σ) = {chi} is zero or non-finite"
            )));
        }
        if chi.im.abs() > 1e-10 * chi.re.abs() {
            return Err(Error::Normalization(format!("χ(1/σ) = {chi} is not real")));
        }
        let dpow = if delta > 0.0 {
            delta.powf(1.0 / sigma)
        } else if (1.0 / sigma - (1.0 / sigma).round()).abs() < 1e-12 {
            let k = (1.0 / sigma).round() as i32;
            delta.abs().powi(k) * if k % 2 == 0 { 1.0 } else { -1.0 }
        } else {
            return Err(Error::Branch(format!(
                "δ^{{1/σ}} with δ = {delta} < 0 and non-integer 1/σ"
            )));
        };
        let k0 = sigma * dpow / chi.re;
        let dist = IDistribution {
            params,
            delta,
            sigma,
            k0,
            support,
        };
        // Normalization sanity: the zeroth moment must recompute to one.
        let m0 = dist.moment(0.0)?;
        if (m0 - 1.0).abs() > 1e-8 {
            return Err(Error::Normalization(format!(
                "zeroth moment recomputed to {m0}, expected 1"
            )));
        }
        dist.probe_nonnegative()?;
        Ok(dist)
    }

    /// 64-point log-spaced nonnegativity probe. Points the evaluator cannot
    /// resolve (outside its convergence region) are skipped; a definite
    /// negative value fails construction.
    fn probe_nonnegative(&self) -> Result<()> {
        let (lo, hi) = match self.support.hi {
            Some(h) => (self.support.lo.max(1e-4 * h), h),
            None => (self.support.lo.max(1e-4), 1e4),
        };
        let cfg = probe_config();
        let mut worst = 0.0_f64;
        let mut worst_x = lo;
        let mut max_abs = 0.0_f64;
        let mut tail: Vec<f64> = Vec::new();
        for i in 0..64 {
            let t = (i as f64 + 0.5) / 64.0;
            let x = lo * (hi / lo).powf(t);
            if !self.support.contains(x) {
                continue;
            }
            if let Ok(v) = self.pdf_with(x, &cfg) {
                max_abs = max_abs.max(v.abs());
                if v < worst {
                    worst = v;
                    worst_x = x;
                }
                tail.push(v);
                if tail.len() > 2 {
                    tail.remove(0);
                }
            }
        }
        if worst < -1e-9 * max_abs.max(1e-12) {
            return Err(Error::NegativeDensity {
                x: worst_x,
                value: worst,
            });
        }
        // A density that is still growing at the top of an unbounded probe
        // grid cannot integrate to one.
        if self.support.hi.is_none() && tail.len() >= 2 {
            let last = tail[tail.len() - 1];
            let prev = tail[tail.len() - 2];
            if last > prev * (1.0 + 1e-6) && last > 1e-10 * max_abs {
                return Err(Error::Normalization(format!(
                    "density grows at the probe boundary (pdf = {last:.3e} past {prev:.3e})"
                )));
            }
        }
        Ok(())
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
    pub fn k0(&self) -> f64 {
        self.k0
    }
    pub fn support(&self) -> Support {
        self.support
    }

    /// δ^{1/σ} (sign-correct for the integer-exponent cases).
    fn delta_root(&self) -> f64 {
        if self.delta > 0.0 {
            self.delta.powf(1.0 / self.sigma)
        } else {
            let k = (1.0 / self.sigma).round() as i32;
            self.delta.abs().powi(k) * if k % 2 == 0 { 1.0 } else { -1.0 }
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        self.pdf_with(x, &EvalConfig::default())
    }

    pub fn pdf_with(&self, x: f64, cfg: &EvalConfig) -> Result<f64> {
        if !self.support.contains(x) {
            return Ok(0.0);
        }
        let z = Complex64::new(self.delta * x.powf(self.sigma), 0.0);
        let v = eval_kernel(&self.params.kernel(), z, cfg)?;
        Ok(self.k0 * real_part(v)?)
    }

    /// r-th raw moment k₀ χ(σ⁻¹(1+r)) / (σ δ^{(r+1)/σ}); exists exactly when
    /// σ⁻¹(1+r) stays inside the Mellin strip.
    pub fn moment(&self, r: f64) -> Result<f64> {
        let s = (1.0 + r) / self.sigma;
        let (lo, hi) = self.params.strip();
        if s <= lo || s >= hi {
            return Err(Error::MomentDivergence { order: r });
        }
        let chi = self
            .params
            .chi(Complex64::new(s, 0.0))
            .map_err(|_| Error::MomentDivergence { order: r })?;
        let dpow = if self.delta > 0.0 {
            self.delta.powf(-s)
        } else if (s - s.round()).abs() < 1e-12 {
            let k = s.round() as i32;
            self.delta.abs().powi(-k) * if k % 2 == 0 { 1.0 } else { -1.0 }
        } else {
            return Err(Error::Branch(format!(
                "δ^{{(r+1)/σ}} with δ < 0 and non-integer exponent {s}"
            )));
        };
        Ok(self.k0 * chi.re * dpow / self.sigma)
    }

    /// Mellin transform of the density, M(s) = E[X^{s-1}], with its strip.
    pub fn mellin(&self) -> MellinFunction {
        let params = self.params.clone();
        let (l, r) = params.strip();
        let (delta, sigma, k0) = (self.delta, self.sigma, self.k0);
        MellinFunction::new((sigma * l, sigma * r), move |s| {
            Ok(k0 * mellin_ifunction(&params, delta, sigma, s)?)
        })
    }

    /// Parameters of the survival-function I-object: orders (m+1, n),
    /// lengths (p+1, q+1), argument δ^{1/σ} x.
    fn survival_params(&self) -> Result<IFunctionParams> {
        let inv = 1.0 / self.sigma;
        let mut upper: Vec<GammaTriple> = Vec::with_capacity(self.params.p() + 1);
        for t in self.params.upper() {
            upper.push(GammaTriple::new(
                t.shift + inv * t.scale,
                inv * t.scale,
                t.exponent,
            )?);
        }
        upper.push(GammaTriple::new(1.0, 1.0, 1.0)?);
        let mut lower: Vec<GammaTriple> = Vec::with_capacity(self.params.q() + 1);
        lower.push(GammaTriple::new(0.0, 1.0, 1.0)?);
        for t in self.params.lower() {
            lower.push(GammaTriple::new(
                t.shift + inv * t.scale,
                inv * t.scale,
                t.exponent,
            )?);
        }
        IFunctionParams::new(self.params.m() + 1, self.params.n(), upper, lower)
    }

    pub fn survival(&self, x: f64) -> Result<f64> {
        self.survival_with(x, &EvalConfig::default())
    }

    pub fn survival_with(&self, x: f64, cfg: &EvalConfig) -> Result<f64> {
        if x <= self.support.lo {
            return Ok(1.0);
        }
        if let Some(h) = self.support.hi {
            if x >= h {
                return Ok(0.0);
            }
        }
        let sp = self.survival_params()?;
        let z = Complex64::new(self.delta_root() * x, 0.0);
        let v = eval_kernel(&sp.kernel(), z, cfg)?;
        let raw = self.k0 / (self.sigma * self.delta_root()) * real_part(v)?;
        Ok(raw.clamp(0.0, 1.0))
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.cdf_with(x, &EvalConfig::default())
    }

    pub fn cdf_with(&self, x: f64, cfg: &EvalConfig) -> Result<f64> {
        Ok(1.0 - self.survival_with(x, cfg)?)
    }

    /// Hazard rate pdf / survival.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        let s = self.survival(x)?;
        if s <= 1e-300 {
            return Err(Error::Domain(format!(
                "survival vanished at x = {x}: hazard undefined beyond the support"
            )));
        }
        Ok(self.pdf(x)? / s)
    }

    /// Largest t for which E[e^{tX}] is finite, from the exponential-order
    /// of the density tail: σ > ∇ gives +∞, σ < ∇ (or a power tail) gives 0,
    /// σ = ∇ gives ∇ (δ e^{-κ})^{1/∇} with κ the log-radius of the kernel.
    pub fn mgf_upper_limit(&self) -> f64 {
        if self.support.hi.is_some() {
            return f64::INFINITY;
        }
        let nabla = self.params.convergence_report().nabla;
        if nabla <= 1e-12 {
            return 0.0;
        }
        if self.sigma > nabla + 1e-12 {
            f64::INFINITY
        } else if self.sigma < nabla - 1e-12 {
            0.0
        } else {
            let kappa = self.params.kernel().ln_rho();
            nabla * (self.delta * (-kappa).exp()).powf(1.0 / nabla)
        }
    }

    /// Characteristic function φ(t) = k₀ L(-it).
    pub fn characteristic(&self, t: f64) -> Result<Complex64> {
        if t == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        let r = Complex64::new(0.0, -t);
        Ok(self.k0 * laplace_ifunction_complex(&self.params, self.delta, self.sigma, r)?)
    }

    /// Moment generating function E[e^{tX}] = φ(-it) on its existence strip.
    pub fn mgf(&self, t: f64) -> Result<f64> {
        if t == 0.0 {
            return Ok(1.0);
        }
        if t > 0.0 {
            let tmax = self.mgf_upper_limit();
            if t >= tmax {
                return Err(Error::Divergence(format!(
                    "mgf argument {t} at or beyond the existence bound {tmax}"
                )));
            }
        }
        let r = Complex64::new(-t, 0.0);
        let v = laplace_ifunction_complex(&self.params, self.delta, self.sigma, r)?;
        Ok(self.k0 * real_part(v)?)
    }

    /// Density of the j-th order statistic of a sample of size N.
    pub fn order_statistic_pdf(&self, n: usize, j: usize, x: f64) -> Result<f64> {
        if n == 0 || j == 0 || j > n {
            return Err(Error::Domain(format!(
                "order statistic indices need 1 ≤ j ≤ N, got j = {j}, N = {n}"
            )));
        }
        let ln_coef = real_gamma((n + 1) as f64)?.ln()
            - real_gamma(j as f64)?.ln()
            - real_gamma((n - j + 1) as f64)?.ln();
        let pdf = self.pdf(x)?;
        if pdf == 0.0 {
            return Ok(0.0);
        }
        let cdf = self.cdf(x)?;
        let surv = 1.0 - cdf;
        Ok(ln_coef.exp() * pdf * cdf.powi(j as i32 - 1) * surv.powi((n - j) as i32))
    }

    /// Quantile by bracketed bisection on the cdf.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("quantile needs p in (0,1), got {p}")));
        }
        let cfg = EvalConfig {
            rel_tol: 1e-9,
            tail_tol: 1e-11,
            ..EvalConfig::default()
        };
        let mut lo;
        let mut hi;
        match self.support.hi {
            Some(h) => {
                lo = self.support.lo;
                hi = h;
            }
            None => {
                lo = if self.support.lo > 0.0 {
                    self.support.lo
                } else {
                    0.0
                };
                hi = (2.0 * self.support.lo).max(1.0);
                let mut tries = 0;
                while self.cdf_with(hi, &cfg)? < p {
                    hi *= 4.0;
                    tries += 1;
                    if tries > 40 {
                        return Err(Error::Bracket(format!(
                            "cdf({hi:.3e}) still below p = {p}"
                        )));
                    }
                }
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let c = self.cdf_with(mid, &cfg)?;
            if (c - p).abs() < 1e-11 {
                return Ok(mid);
            }
            if c < p {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-10 * (1.0 + mid.abs()) {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Inverse-transform sampling from a seeded uniform stream;
    /// deterministic per seed.
    pub fn sample(&self, count: usize, seed: u64) -> Result<Vec<f64>> {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let mut u: f64 = rng.gen();
            while u <= 0.0 {
                u = rng.gen();
            }
            out.push(self.quantile(u)?);
        }
        Ok(out)
    }
}

/// The sixteen catalog entries, in the order they specialize the family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Catalog {
    Gamma { theta: f64, lambda: f64 },
    Exponential { lambda: f64 },
    ChiSquare { nu: f64 },
    Weibull { theta: f64, lambda: f64 },
    Rayleigh { nu: f64 },
    Maxwell { lambda: f64 },
    HalfNormal { lambda: f64 },
    HalfCauchy { lambda: f64 },
    BetaFirstKind { theta: f64, lambda: f64 },
    BetaSecondKind { theta: f64, lambda: f64 },
    PowerFunction { theta: f64 },
    Uniform,
    Pareto { lambda: f64 },
    HalfStudent { nu: f64 },
    F { theta: f64, lambda: f64 },
    GeneralHypergeometric { alpha: f64, beta: f64, c: f64, d: f64, a: f64 },
}

pub const CATALOG_NAMES: [&str; 16] = [
    "gamma",
    "exponential",
    "chi_square",
    "weibull",
    "rayleigh",
    "maxwell",
    "half_normal",
    "half_cauchy",
    "beta_first_kind",
    "beta_second_kind",
    "power_function",
    "uniform",
    "pareto",
    "half_student",
    "f",
    "general_hypergeometric",
];

impl Catalog {
    pub fn name(&self) -> &'static str {
        match self {
            Catalog::Gamma { .. } => "gamma",
            Catalog::Exponential { .. } => "exponential",
            Catalog::ChiSquare { .. } => "chi_square",
            Catalog::Weibull { .. } => "weibull",
            Catalog::Rayleigh { .. } => "rayleigh",
            Catalog::Maxwell { .. } => "maxwell",
            Catalog::HalfNormal { .. } => "half_normal",
            Catalog::HalfCauchy { .. } => "half_cauchy",
            Catalog::BetaFirstKind { .. } => "beta_first_kind",
            Catalog::BetaSecondKind { .. } => "beta_second_kind",
            Catalog::PowerFunction { .. } => "power_function",
            Catalog::Uniform => "uniform",
            Catalog::Pareto { .. } => "pareto",
            Catalog::HalfStudent { .. } => "half_student",
            Catalog::F { .. } => "f",
            Catalog::GeneralHypergeometric { .. } => "general_hypergeometric",
        }
    }

    fn require_positive(pairs: &[(&str, f64)]) -> Result<()> {
        for (name, v) in pairs {
            if !(*v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// The (params, δ, σ, support) of the printed special case.
    pub fn distribution(&self) -> Result<IDistribution> {
        use crate::params::triple;
        let build = |m, n, upper, lower, delta, support| -> Result<IDistribution> {
            let params = IFunctionParams::new(m, n, upper, lower)?;
            IDistribution::with_support(params, delta, 1.0, support)
        };
        match *self {
            Catalog::Gamma { theta, lambda } => {
                Self::require_positive(&[("theta", theta), ("lambda", lambda)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(theta - 1.0, 1.0, 1.0)],
                    1.0 / lambda,
                    Support::POSITIVE,
                )
            }
            Catalog::Exponential { lambda } => {
                Self::require_positive(&[("lambda", lambda)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(0.0, 1.0, 1.0)],
                    1.0 / lambda,
                    Support::POSITIVE,
                )
            }
            Catalog::ChiSquare { nu } => {
                Self::require_positive(&[("nu", nu)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(nu / 2.0 - 1.0, 1.0, 1.0)],
                    0.5,
                    Support::POSITIVE,
                )
            }
            Catalog::Weibull { theta, lambda } => {
                Self::require_positive(&[("theta", theta), ("lambda", lambda)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(1.0 - 1.0 / theta, 1.0 / theta, 1.0)],
                    lambda.powf(-1.0 / theta),
                    Support::POSITIVE,
                )
            }
            Catalog::Rayleigh { nu } => {
                Self::require_positive(&[("nu", nu)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(0.5, 0.5, 1.0)],
                    1.0 / (nu * std::f64::consts::SQRT_2),
                    Support::POSITIVE,
                )
            }
            Catalog::Maxwell { lambda } => {
                Self::require_positive(&[("lambda", lambda)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(1.0, 0.5, 1.0)],
                    1.0 / lambda,
                    Support::POSITIVE,
                )
            }
            Catalog::HalfNormal { lambda } => {
                Self::require_positive(&[("lambda", lambda)])?;
                build(
                    1,
                    0,
                    vec![],
                    vec![triple(0.0, 0.5, 1.0)],
                    1.0 / (lambda * std::f64::consts::SQRT_2),
                    Support::POSITIVE,
                )
            }
            Catalog::HalfCauchy { lambda } => {
                Self::require_positive(&[("lambda", lambda)])?;
                build(
                    1,
                    1,
                    vec![triple(0.0, 0.5, 1.0)],
                    vec![triple(0.0, 0.5, 1.0)],
                    1.0 / lambda,
                    Support::POSITIVE,
                )
            }
            Catalog::BetaFirstKind { theta, lambda } => {
                Self::require_positive(&[("theta", theta), ("lambda", lambda)])?;
                build(
                    1,
                    0,
                    vec![triple(theta + lambda - 1.0, 1.0, 1.0)],
                    vec![triple(theta - 1.0, 1.0, 1.0)],
                    1.0,
                    Support::bounded(0.0, 1.0),
                )
            }
            Catalog::BetaSecondKind { theta, lambda } => {
                Self::require_positive(&[("theta", theta), ("lambda", lambda)])?;
                build(
                    1,
                    1,
                    vec![triple(-lambda, 1.0, 1.0)],
                    vec![triple(theta - 1.0, 1.0, 1.0)],
                    lambda / theta,
                    Support::POSITIVE,
                )
            }
            Catalog::PowerFunction { theta } => {
                Self::require_positive(&[("theta", theta)])?;
                build(
                    1,
                    0,
                    vec![triple(theta, 1.0, 1.0)],
                    vec![triple(theta - 1.0, 1.0, 1.0)],
                    1.0,
                    Support::bounded(0.0, 1.0),
                )
            }
            Catalog::Uniform => build(
                1,
                0,
                vec![triple(1.0, 1.0, 1.0)],
                vec![triple(0.0, 1.0, 1.0)],
                1.0,
                Support::bounded(0.0, 1.0),
            ),
            Catalog::Pareto { lambda } => {
                Self::require_positive(&[("lambda", lambda)])?;
                build(
                    0,
                    1,
                    vec![triple(-lambda, 1.0, 1.0)],
                    vec![triple(-lambda - 1.0, 1.0, 1.0)],
                    1.0,
                    Support { lo: 1.0, hi: None },
                )
            }
            Catalog::HalfStudent { nu } => {
                Self::require_positive(&[("nu", nu)])?;
                build(
                    1,
                    1,
                    vec![triple((1.0 - nu) / 2.0, 0.5, 1.0)],
                    vec![triple(0.0, 0.5, 1.0)],
                    1.0 / nu.sqrt(),
                    Support::POSITIVE,
                )
            }
            Catalog::F { theta, lambda } => {
                Self::require_positive(&[("theta", theta), ("lambda", lambda)])?;
                build(
                    1,
                    1,
                    vec![triple(-lambda / 2.0, 1.0, 1.0)],
                    vec![triple(theta / 2.0 - 1.0, 1.0, 1.0)],
                    theta / lambda,
                    Support::POSITIVE,
                )
            }
            Catalog::GeneralHypergeometric { alpha, beta, c, d, a } => {
                Self::require_positive(&[
                    ("alpha", alpha),
                    ("beta", beta),
                    ("c", c),
                    ("d", d),
                    ("a", a),
                ])?;
                if beta <= c / d || alpha <= c / d {
                    return Err(Error::Domain(format!(
                        "general hypergeometric needs alpha, beta > c/d = {}",
                        c / d
                    )));
                }
                let cd = (c - 1.0) / d;
                let params = IFunctionParams::new(
                    1,
                    1,
                    vec![triple(1.0 - alpha + cd, 1.0 / d, 1.0)],
                    vec![
                        triple(cd, 1.0 / d, 1.0),
                        triple(1.0 - beta + cd, 1.0 / d, 1.0),
                    ],
                )?;
                IDistribution::with_support(params, a.powf(1.0 / d), 1.0, Support::POSITIVE)
            }
        }
    }
}
