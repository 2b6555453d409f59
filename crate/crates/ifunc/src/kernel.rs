//! Internal χ-kernel representation used by the contour evaluator.
//!
//! Unlike the public parameter object, the kernel allows complex shifts
//! (needed for Mellin-product and I-FIG constructions evaluated at complex
//! transform variables) and zero scales (constant gamma factors, which are
//! folded into a multiplicative constant at construction).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::IFunctionParams;
use crate::special::log_gamma;

#[derive(Debug, Clone, Copy)]
pub(crate) struct CTriple {
    pub shift: Complex64,
    pub scale: f64,
    pub exponent: f64,
}

impl CTriple {
    pub fn real(shift: f64, scale: f64, exponent: f64) -> Self {
        CTriple {
            shift: Complex64::new(shift, 0.0),
            scale,
            exponent,
        }
    }
}

/// χ(s) as four blocks of gamma powers. `n_upper` upper triples and
/// `n_lower` lower triples sit in the numerator; the rest divide.
#[derive(Debug, Clone)]
pub(crate) struct Kernel {
    pub n_upper: usize,
    pub n_lower: usize,
    pub upper: Vec<CTriple>,
    pub lower: Vec<CTriple>,
    /// log of the constant pulled out of zero-scale factors.
    pub log_const: Complex64,
}

impl Kernel {
    pub fn new(
        n_upper: usize,
        n_lower: usize,
        upper: Vec<CTriple>,
        lower: Vec<CTriple>,
    ) -> Result<Kernel> {
        let mut k = Kernel {
            n_upper,
            n_lower,
            upper,
            lower,
            log_const: Complex64::new(0.0, 0.0),
        };
        k.fold_constants()?;
        Ok(k)
    }

    pub fn from_params(p: &IFunctionParams) -> Kernel {
        Kernel {
            n_upper: p.n(),
            n_lower: p.m(),
            upper: p
                .upper()
                .iter()
                .map(|t| CTriple::real(t.shift, t.scale, t.exponent))
                .collect(),
            lower: p
                .lower()
                .iter()
                .map(|t| CTriple::real(t.shift, t.scale, t.exponent))
                .collect(),
            log_const: Complex64::new(0.0, 0.0),
        }
    }

    /// Zero-scale triples do not depend on the integration variable; their
    /// gamma values multiply the kernel as constants.
    fn fold_constants(&mut self) -> Result<()> {
        let mut log_const = self.log_const;
        let mut upper = Vec::with_capacity(self.upper.len());
        let mut n_upper = self.n_upper;
        for (i, t) in self.upper.iter().enumerate() {
            if t.scale == 0.0 {
                let numerator = i < self.n_upper;
                let arg = if numerator {
                    Complex64::new(1.0, 0.0) - t.shift
                } else {
                    t.shift
                };
                let lg = log_gamma(arg).map_err(|_| Error::pole(arg, "constant upper factor"))?;
                if numerator {
                    log_const += t.exponent * lg;
                    n_upper -= 1;
                } else {
                    log_const -= t.exponent * lg;
                }
            } else {
                upper.push(*t);
            }
        }
        let mut lower = Vec::with_capacity(self.lower.len());
        let mut n_lower = self.n_lower;
        for (j, t) in self.lower.iter().enumerate() {
            if t.scale == 0.0 {
                let numerator = j < self.n_lower;
                let arg = if numerator {
                    t.shift
                } else {
                    Complex64::new(1.0, 0.0) - t.shift
                };
                let lg = log_gamma(arg).map_err(|_| Error::pole(arg, "constant lower factor"))?;
                if numerator {
                    log_const += t.exponent * lg;
                    n_lower -= 1;
                } else {
                    log_const -= t.exponent * lg;
                }
            } else {
                lower.push(*t);
            }
        }
        self.upper = upper;
        self.lower = lower;
        self.n_upper = n_upper;
        self.n_lower = n_lower;
        self.log_const = log_const;
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.upper.is_empty() && self.lower.is_empty()
    }

    pub fn is_real(&self) -> bool {
        self.log_const.im == 0.0
            && self
                .upper
                .iter()
                .chain(self.lower.iter())
                .all(|t| t.shift.im == 0.0)
    }

    /// ln χ(s); identifies which block and index hit a gamma pole.
    pub fn log_chi(&self, s: Complex64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        let mut acc = self.log_const;
        for (i, t) in self.upper.iter().enumerate() {
            if i < self.n_upper {
                let arg = one - t.shift - t.scale * s;
                let lg = log_gamma(arg)
                    .map_err(|_| Error::pole(arg, format!("upper[{i}] numerator")))?;
                acc += t.exponent * lg;
            } else {
                let arg = t.shift + t.scale * s;
                let lg = log_gamma(arg)
                    .map_err(|_| Error::pole(arg, format!("upper[{i}] denominator")))?;
                acc -= t.exponent * lg;
            }
        }
        for (j, t) in self.lower.iter().enumerate() {
            if j < self.n_lower {
                let arg = t.shift + t.scale * s;
                let lg = log_gamma(arg)
                    .map_err(|_| Error::pole(arg, format!("lower[{j}] numerator")))?;
                acc += t.exponent * lg;
            } else {
                let arg = one - t.shift - t.scale * s;
                let lg = log_gamma(arg)
                    .map_err(|_| Error::pole(arg, format!("lower[{j}] denominator")))?;
                acc -= t.exponent * lg;
            }
        }
        Ok(acc)
    }

    pub fn chi(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.log_chi(s)?.exp())
    }

    /// ∇ = Σ βB − Σ αA.
    pub fn nabla(&self) -> f64 {
        self.lower.iter().map(|t| t.exponent * t.scale).sum::<f64>()
            - self.upper.iter().map(|t| t.exponent * t.scale).sum::<f64>()
    }

    /// Ω with real parts of the shifts.
    pub fn omega(&self) -> f64 {
        self.upper
            .iter()
            .map(|t| (0.5 - t.shift.re) * t.exponent)
            .sum::<f64>()
            - self
                .lower
                .iter()
                .map(|t| (0.5 - t.shift.re) * t.exponent)
                .sum::<f64>()
    }

    /// Δ: numerator blocks add, denominator blocks subtract.
    pub fn delta(&self) -> f64 {
        let up: f64 = self
            .upper
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let sign = if i < self.n_upper { 1.0 } else { -1.0 };
                sign * t.exponent * t.scale
            })
            .sum();
        let lo: f64 = self
            .lower
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let sign = if j < self.n_lower { 1.0 } else { -1.0 };
                sign * t.exponent * t.scale
            })
            .sum();
        up + lo
    }

    /// ln of the convergence radius separating the left- and right-loop
    /// regimes when ∇ = 0: ρ = Π B^{βB} / Π A^{αA}.
    pub fn ln_rho(&self) -> f64 {
        self.lower
            .iter()
            .map(|t| t.exponent * t.scale * t.scale.ln())
            .sum::<f64>()
            - self
                .upper
                .iter()
                .map(|t| t.exponent * t.scale * t.scale.ln())
                .sum::<f64>()
    }

    /// (left, right) bounds for the vertical contour (real parts).
    pub fn strip(&self) -> (f64, f64) {
        let left = self.lower[..self.n_lower]
            .iter()
            .map(|t| -t.shift.re / t.scale)
            .fold(f64::NEG_INFINITY, f64::max);
        let right = self.upper[..self.n_upper]
            .iter()
            .map(|t| (1.0 - t.shift.re) / t.scale)
            .fold(f64::INFINITY, f64::min);
        (left, right)
    }

    pub fn abscissa(&self) -> Result<f64> {
        let (left, right) = self.strip();
        if left >= right - 1e-14 {
            return Err(Error::EmptyStrip { left, right });
        }
        Ok(match (left.is_finite(), right.is_finite()) {
            (true, true) => 0.5 * (left + right),
            (true, false) => left + 1.0,
            (false, true) => right - 1.0,
            (false, false) => 0.0,
        })
    }

    /// Poles of the numerator factors within |Im| ≤ `im_cap`, `count` per
    /// factor. Left poles come from lower-numerator gammas, right poles from
    /// upper-numerator gammas.
    pub fn poles(&self, count: usize) -> (Vec<Complex64>, Vec<Complex64>) {
        let mut left = Vec::new();
        for t in &self.lower[..self.n_lower] {
            for k in 0..count {
                left.push(-(t.shift + k as f64) / t.scale);
            }
        }
        let mut right = Vec::new();
        for t in &self.upper[..self.n_upper] {
            for k in 0..count {
                right.push((Complex64::new(1.0, 0.0) - t.shift + k as f64 * Complex64::new(1.0, 0.0)) / t.scale);
            }
        }
        (left, right)
    }

    /// Argument-inverted kernel: evaluating it at 1/z reproduces this kernel
    /// at z.
    pub fn reciprocal(&self) -> Kernel {
        let one = Complex64::new(1.0, 0.0);
        let flip = |t: &CTriple| CTriple {
            shift: one - t.shift,
            scale: t.scale,
            exponent: t.exponent,
        };
        Kernel {
            n_upper: self.n_lower,
            n_lower: self.n_upper,
            upper: self.lower.iter().map(flip).collect(),
            lower: self.upper.iter().map(flip).collect(),
            log_const: self.log_const,
        }
    }
}

/// Gamma triple whose shift is affine in the transform variable s; the
/// Lemma-level Mellin constructions and the I-FIG series produce these.
#[derive(Debug, Clone, Copy)]
pub(crate) struct STriple {
    pub base: f64,
    pub s_coef: f64,
    pub scale: f64,
    pub exponent: f64,
}

impl STriple {
    pub fn fixed(shift: f64, scale: f64, exponent: f64) -> Self {
        STriple {
            base: shift,
            s_coef: 0.0,
            scale,
            exponent,
        }
    }

    pub fn at(&self, s: Complex64) -> CTriple {
        CTriple {
            shift: self.base + self.s_coef * s,
            scale: self.scale,
            exponent: self.exponent,
        }
    }
}

/// A kernel whose shifts depend affinely on s; instantiating at a concrete
/// s yields an evaluatable `Kernel`.
#[derive(Debug, Clone)]
pub(crate) struct KernelTemplate {
    pub n_upper: usize,
    pub n_lower: usize,
    pub upper: Vec<STriple>,
    pub lower: Vec<STriple>,
}

impl KernelTemplate {
    pub fn at(&self, s: Complex64) -> Result<Kernel> {
        Kernel::new(
            self.n_upper,
            self.n_lower,
            self.upper.iter().map(|t| t.at(s)).collect(),
            self.lower.iter().map(|t| t.at(s)).collect(),
        )
    }
}
