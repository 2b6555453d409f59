//! Symbolic I-function parameters: the orders (m, n) and the two lists of
//! gamma triples, their convergence classification, the pole-separation
//! abscissa, and the parameter-level transformation identities.
//!
//! The JSON schema is fixed:
//! `{"m":int,"n":int,"upper":[{"a":..,"A":..,"alpha":..}],"lower":[{"b":..,"B":..,"beta":..}]}`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::Kernel;

/// One (shift, scale, exponent) factor of the χ kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaTriple {
    pub shift: f64,
    pub scale: f64,
    pub exponent: f64,
}

impl GammaTriple {
    pub fn new(shift: f64, scale: f64, exponent: f64) -> Result<Self> {
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::Domain(format!(
                "gamma triple scale must be positive, got {scale}"
            )));
        }
        if !(exponent > 0.0) || !exponent.is_finite() {
            return Err(Error::Domain(format!(
                "gamma triple exponent must be positive, got {exponent}"
            )));
        }
        if !shift.is_finite() {
            return Err(Error::Domain("gamma triple shift must be finite".into()));
        }
        Ok(GammaTriple {
            shift,
            scale,
            exponent,
        })
    }
}

/// Shorthand used pervasively in tests and the catalog.
pub fn triple(shift: f64, scale: f64, exponent: f64) -> GammaTriple {
    GammaTriple::new(shift, scale, exponent).expect("valid triple")
}

/// Convergence classification of a parameter set: the three linear
/// combinations of the triples from the defining conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub nabla: f64,
    pub omega: f64,
    pub delta: f64,
    /// The function is analytic when ∇ ≥ 0.
    pub analytic: bool,
    /// Half-opening of the sector of absolute convergence, Δ·π/2.
    pub strict_sector: f64,
}

/// Full symbolic I-function: orders m, n plus the upper (a, A, α) and lower
/// (b, B, β) triple lists. Immutable after construction; construction
/// validates the order bounds and checks numerically that the left and
/// right pole sets do not collide.
#[derive(Debug, Clone, PartialEq)]
pub struct IFunctionParams {
    m: usize,
    n: usize,
    upper: Vec<GammaTriple>,
    lower: Vec<GammaTriple>,
}

#[derive(Serialize, Deserialize)]
struct UpperJson {
    a: f64,
    #[serde(rename = "A")]
    scale: f64,
    alpha: f64,
}

#[derive(Serialize, Deserialize)]
struct LowerJson {
    b: f64,
    #[serde(rename = "B")]
    scale: f64,
    beta: f64,
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    m: usize,
    n: usize,
    upper: Vec<UpperJson>,
    lower: Vec<LowerJson>,
}

impl Serialize for IFunctionParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsJson {
            m: self.m,
            n: self.n,
            upper: self
                .upper
                .iter()
                .map(|t| UpperJson {
                    a: t.shift,
                    scale: t.scale,
                    alpha: t.exponent,
                })
                .collect(),
            lower: self
                .lower
                .iter()
                .map(|t| LowerJson {
                    b: t.shift,
                    scale: t.scale,
                    beta: t.exponent,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IFunctionParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ParamsJson::deserialize(d)?;
        let upper = raw
            .upper
            .iter()
            .map(|t| GammaTriple::new(t.a, t.scale, t.alpha))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        let lower = raw
            .lower
            .iter()
            .map(|t| GammaTriple::new(t.b, t.scale, t.beta))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        IFunctionParams::new(raw.m, raw.n, upper, lower).map_err(serde::de::Error::custom)
    }
}

impl IFunctionParams {
    pub fn new(
        m: usize,
        n: usize,
        upper: Vec<GammaTriple>,
        lower: Vec<GammaTriple>,
    ) -> Result<Self> {
        if n > upper.len() {
            return Err(Error::Domain(format!(
                "order n = {n} exceeds upper list length {}",
                upper.len()
            )));
        }
        if m > lower.len() {
            return Err(Error::Domain(format!(
                "order m = {m} exceeds lower list length {}",
                lower.len()
            )));
        }
        if upper.is_empty() && lower.is_empty() {
            return Err(Error::Domain(
                "empty kernel (p = q = 0) has no decay; rejected".into(),
            ));
        }
        let params = IFunctionParams { m, n, upper, lower };
        params.check_pole_disjointness()?;
        Ok(params)
    }

    /// The left factors Γ^β(b + Bs), j ≤ m have poles at s = -(b+k)/B and the
    /// right factors Γ^α(1-a-As), i ≤ n at s = (1-a+k)/A. The two sets must
    /// not collide (first 50 poles of each, tolerance 1e-10).
    fn check_pole_disjointness(&self) -> Result<()> {
        const COUNT: usize = 50;
        let left: Vec<f64> = self.lower[..self.m]
            .iter()
            .flat_map(|t| (0..COUNT).map(move |k| -(t.shift + k as f64) / t.scale))
            .collect();
        if left.is_empty() {
            return Ok(());
        }
        for t in &self.upper[..self.n] {
            for k in 0..COUNT {
                let pole = (1.0 - t.shift + k as f64) / t.scale;
                if left.iter().any(|&l| (l - pole).abs() < 1e-10) {
                    return Err(Error::Domain(format!(
                        "left and right gamma pole sets collide at s = {pole}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn p(&self) -> usize {
        self.upper.len()
    }
    pub fn q(&self) -> usize {
        self.lower.len()
    }
    pub fn upper(&self) -> &[GammaTriple] {
        &self.upper
    }
    pub fn lower(&self) -> &[GammaTriple] {
        &self.lower
    }

    pub(crate) fn kernel(&self) -> Kernel {
        Kernel::from_params(self)
    }

    /// The four-block gamma ratio χ(s).
    pub fn chi(&self, s: Complex64) -> Result<Complex64> {
        self.kernel().chi(s)
    }

    /// ∇, Ω, Δ and the induced analyticity/sector classification.
    pub fn convergence_report(&self) -> ConvergenceReport {
        let mut nabla = 0.0;
        let mut omega = 0.0;
        let mut delta = 0.0;
        for (i, t) in self.upper.iter().enumerate() {
            nabla -= t.exponent * t.scale;
            omega += (0.5 - t.shift) * t.exponent;
            if i < self.n {
                delta += t.exponent * t.scale;
            } else {
                delta -= t.exponent * t.scale;
            }
        }
        for (j, t) in self.lower.iter().enumerate() {
            nabla += t.exponent * t.scale;
            omega -= (0.5 - t.shift) * t.exponent;
            if j < self.m {
                delta += t.exponent * t.scale;
            } else {
                delta -= t.exponent * t.scale;
            }
        }
        ConvergenceReport {
            nabla,
            omega,
            delta,
            analytic: nabla >= 0.0,
            strict_sector: delta * std::f64::consts::FRAC_PI_2,
        }
    }

    /// Pole-separating strip (left, right); ±∞ when the corresponding order
    /// is zero.
    pub fn strip(&self) -> (f64, f64) {
        self.kernel().strip()
    }

    /// Abscissa of the vertical contour: the strip midpoint, pushed one unit
    /// inside when the strip is half-infinite, zero when unconstrained.
    pub fn contour_abscissa(&self) -> Result<f64> {
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

    /// Argument inversion: I[1/z] of the original equals I[z] of the result.
    pub fn reciprocal_argument(&self) -> IFunctionParams {
        let upper = self
            .lower
            .iter()
            .map(|t| GammaTriple {
                shift: 1.0 - t.shift,
                ..*t
            })
            .collect();
        let lower = self
            .upper
            .iter()
            .map(|t| GammaTriple {
                shift: 1.0 - t.shift,
                ..*t
            })
            .collect();
        IFunctionParams {
            m: self.n,
            n: self.m,
            upper,
            lower,
        }
    }

    /// Argument power absorption: I[z^σ] = (1/σ) · I[z] with every scale
    /// divided by σ. Returns the 1/σ prefactor with the new parameters.
    pub fn argument_power_rescale(&self, sigma: f64) -> Result<(f64, IFunctionParams)> {
        if !(sigma > 0.0) {
            return Err(Error::Domain(format!(
                "argument power rescale needs σ > 0, got {sigma}"
            )));
        }
        let map = |t: &GammaTriple| GammaTriple {
            scale: t.scale / sigma,
            ..*t
        };
        Ok((
            1.0 / sigma,
            IFunctionParams {
                m: self.m,
                n: self.n,
                upper: self.upper.iter().map(map).collect(),
                lower: self.lower.iter().map(map).collect(),
            },
        ))
    }

    /// Power-of-argument absorption: z^σ · I[z] equals I[z] of the result
    /// (all shifts incremented by σ · scale).
    pub fn multiply_by_power(&self, sigma: f64) -> IFunctionParams {
        let map = |t: &GammaTriple| GammaTriple {
            shift: t.shift + sigma * t.scale,
            ..*t
        };
        IFunctionParams {
            m: self.m,
            n: self.n,
            upper: self.upper.iter().map(map).collect(),
            lower: self.lower.iter().map(map).collect(),
        }
    }

    /// H-function parameters: all exponents set to one.
    pub fn from_h_function(
        m: usize,
        n: usize,
        upper_pairs: &[(f64, f64)],
        lower_pairs: &[(f64, f64)],
    ) -> Result<IFunctionParams> {
        let upper = upper_pairs
            .iter()
            .map(|&(a, scale)| GammaTriple::new(a, scale, 1.0))
            .collect::<Result<Vec<_>>>()?;
        let lower = lower_pairs
            .iter()
            .map(|&(b, scale)| GammaTriple::new(b, scale, 1.0))
            .collect::<Result<Vec<_>>>()?;
        IFunctionParams::new(m, n, upper, lower)
    }

    /// Meijer G parameters: all scales and exponents set to one.
    pub fn from_g_function(
        m: usize,
        n: usize,
        upper_shifts: &[f64],
        lower_shifts: &[f64],
    ) -> Result<IFunctionParams> {
        let pairs = |shifts: &[f64]| shifts.iter().map(|&s| (s, 1.0)).collect::<Vec<_>>();
        Self::from_h_function(m, n, &pairs(upper_shifts), &pairs(lower_shifts))
    }

    /// H̄-function parameters: exponents are free for i ≤ n and j > m, and
    /// forced to one for i = n+1..p and j = 1..m.
    pub fn from_hbar(
        m: usize,
        n: usize,
        upper_triples: &[(f64, f64, f64)],
        lower_triples: &[(f64, f64, f64)],
    ) -> Result<IFunctionParams> {
        let upper = upper_triples
            .iter()
            .enumerate()
            .map(|(i, &(a, scale, alpha))| {
                GammaTriple::new(a, scale, if i < n { alpha } else { 1.0 })
            })
            .collect::<Result<Vec<_>>>()?;
        let lower = lower_triples
            .iter()
            .enumerate()
            .map(|(j, &(b, scale, beta))| {
                GammaTriple::new(b, scale, if j < m { 1.0 } else { beta })
            })
            .collect::<Result<Vec<_>>>()?;
        IFunctionParams::new(m, n, upper, lower)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn exponential_params() -> IFunctionParams {
        IFunctionParams::new(1, 0, vec![], vec![triple(0.0, 1.0, 1.0)]).unwrap()
    }

    fn half_cauchy_params() -> IFunctionParams {
        IFunctionParams::new(
            1,
            1,
            vec![triple(0.0, 0.5, 1.0)],
            vec![triple(0.0, 0.5, 1.0)],
        )
        .unwrap()
    }

    fn pareto_params(lambda: f64) -> IFunctionParams {
        IFunctionParams::new(
            0,
            1,
            vec![triple(-lambda, 1.0, 1.0)],
            vec![triple(-lambda - 1.0, 1.0, 1.0)],
        )
        .unwrap()
    }

    #[test]
    fn convergence_report_reference_values() {
        let r = exponential_params().convergence_report();
        assert_eq!((r.nabla, r.delta, r.omega), (1.0, 1.0, -0.5));
        assert!(r.analytic);

        let r = half_cauchy_params().convergence_report();
        assert_eq!((r.nabla, r.delta, r.omega), (0.0, 1.0, 0.0));

        let r = pareto_params(2.0).convergence_report();
        assert_eq!((r.nabla, r.delta, r.omega), (0.0, 0.0, -1.0));
    }

    #[test]
    fn abscissa_midpoint_and_one_sided_rules() {
        assert_eq!(exponential_params().contour_abscissa().unwrap(), 1.0);
        assert_eq!(half_cauchy_params().contour_abscissa().unwrap(), 1.0);
        // Upper (1,1,1) with n=1 puts a right pole at s=0, colliding with the
        // left pole of (0,1,1): empty strip.
        let bad = IFunctionParams::new(
            1,
            1,
            vec![triple(1.0, 1.0, 1.0)],
            vec![triple(0.0, 1.0, 1.0)],
        );
        assert!(matches!(bad, Err(Error::Domain(_))));
        // A genuinely empty strip without pole collision.
        let empty = IFunctionParams::new(
            1,
            1,
            vec![triple(1.7, 1.0, 1.0)],
            vec![triple(0.5, 1.0, 1.0)],
        )
        .unwrap();
        assert!(matches!(
            empty.contour_abscissa(),
            Err(Error::EmptyStrip { .. })
        ));
    }

    #[test]
    fn chi_reference_values() {
        let p = exponential_params();
        let one = p.chi(Complex64::new(1.0, 0.0)).unwrap();
        assert!((one.re - 1.0).abs() < 1e-13 && one.im.abs() < 1e-13);
        let three = p.chi(Complex64::new(3.0, 0.0)).unwrap();
        assert!((three.re - 2.0).abs() < 1e-13);

        let shifted =
            IFunctionParams::new(1, 0, vec![], vec![triple(1.5, 1.0, 1.0)]).unwrap();
        // χ(1) = Γ(2.5)
        let v = shifted.chi(Complex64::new(1.0, 0.0)).unwrap();
        assert!((v.re - 1.3293403881791370).abs() < 1e-12);
    }

    #[test]
    fn chi_pole_identifies_location() {
        let p = exponential_params();
        match p.chi(Complex64::new(0.0, 0.0)) {
            Err(Error::Pole { location, .. }) => {
                assert!(location.contains("lower"), "location = {location}")
            }
            other => panic!("expected pole, got {other:?}"),
        }
    }

    #[test]
    fn reciprocal_is_involution_and_preserves_delta() {
        for p in [exponential_params(), half_cauchy_params(), pareto_params(1.5)] {
            let twice = p.reciprocal_argument().reciprocal_argument();
            assert_eq!(p, twice);
            let d0 = p.convergence_report().delta;
            let d1 = p.reciprocal_argument().convergence_report().delta;
            assert!((d0 - d1).abs() < 1e-14);
        }
        let r = exponential_params().reciprocal_argument();
        assert_eq!((r.m(), r.n(), r.p(), r.q()), (0, 1, 1, 0));
        assert_eq!(r.upper()[0], triple(1.0, 1.0, 1.0));
    }

    #[test]
    fn rescale_and_shift_bookkeeping() {
        let p = exponential_params();
        let (pref, same) = p.argument_power_rescale(1.0).unwrap();
        assert_eq!(pref, 1.0);
        assert_eq!(same, p);
        assert!(p.argument_power_rescale(0.0).is_err());

        let shifted = p.multiply_by_power(0.0);
        assert_eq!(shifted, p);
        let a = p.multiply_by_power(0.7).multiply_by_power(0.5);
        let b = p.multiply_by_power(1.2);
        assert!((a.lower()[0].shift - b.lower()[0].shift).abs() < 1e-15);
    }

    #[test]
    fn conversions() {
        let h = IFunctionParams::from_h_function(1, 0, &[], &[(0.0, 1.0)]).unwrap();
        assert_eq!(h, exponential_params());
        let g = IFunctionParams::from_g_function(1, 0, &[], &[0.0]).unwrap();
        assert_eq!(g, exponential_params());
        let hbar =
            IFunctionParams::from_hbar(1, 0, &[], &[(0.0, 1.0, 1.0)]).unwrap();
        assert_eq!(hbar, exponential_params());
        // H̄ forces exponent 1 on the constrained blocks.
        let hbar2 = IFunctionParams::from_hbar(
            1,
            0,
            &[(2.0, 1.0, 3.0)],
            &[(0.0, 1.0, 5.0)],
        )
        .unwrap();
        assert_eq!(hbar2.upper()[0].exponent, 1.0);
        assert_eq!(hbar2.lower()[0].exponent, 1.0);
    }

    #[test]
    fn json_schema_round_trip() {
        let p = half_cauchy_params();
        let js = serde_json::to_string(&p).unwrap();
        assert!(js.contains("\"upper\":[{\"a\":0.0,\"A\":0.5,\"alpha\":1.0}]"));
        assert!(js.contains("\"lower\":[{\"b\":0.0,\"B\":0.5,\"beta\":1.0}]"));
        let back: IFunctionParams = serde_json::from_str(&js).unwrap();
        assert_eq!(p, back);
        // Invalid scale rejected at parse time.
        let bad = r#"{"m":1,"n":0,"upper":[],"lower":[{"b":0.0,"B":-1.0,"beta":1.0}]}"#;
        assert!(serde_json::from_str::<IFunctionParams>(bad).is_err());
    }
}
