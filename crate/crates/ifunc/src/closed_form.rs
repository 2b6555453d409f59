//! Elementary closed forms for the handful of parameter shapes that reduce
//! to exponentials, binomials and powers. These shortcuts double as oracle
//! patterns for the contour evaluator: wherever `closed_form` returns a
//! value, `evaluate` must reproduce it.

use crate::params::IFunctionParams;

fn all_unit_exponents(p: &IFunctionParams) -> bool {
    p.upper()
        .iter()
        .chain(p.lower().iter())
        .all(|t| t.exponent == 1.0)
}

/// Common scale across every triple, if there is one.
fn uniform_scale(p: &IFunctionParams) -> Option<f64> {
    let mut it = p.upper().iter().chain(p.lower().iter());
    let first = it.next()?.scale;
    it.all(|t| t.scale == first).then_some(first)
}

/// Match the five identity patterns at a real argument:
///
/// 1. `I^{1,0}_{0,1}[z | (b,B,1)] = (1/B) z^{b/B} e^{-z^{1/B}}`
/// 2. `I^{1,1}_{1,1}[z | (b-a+1,..);(b,..)] = Γ(a) z^b (1+z)^{-a}`
/// 3. `I^{0,1}_{1,1}[z | (b+1,..);(b,..)] = z^b` for z > 1 (0 below)
/// 4. `I^{1,0}_{1,1}[z | (a+b+1,..);(b,..)] = z^b (1-z)^a / Γ(a+1)` for z < 1
/// 5. the constant pattern `I^{1,0}_{1,1}[z | (1,1,1);(0,1,1)] = 1`, |z| < 1,
///    which is pattern 4 with a = b = 0.
///
/// All patterns extend to a common scale A = B by the argument-rescale
/// identity. Returns `None` when no pattern matches, the argument is not a
/// positive real, or it sits on a validity boundary.
pub fn closed_form(p: &IFunctionParams, z: f64) -> Option<f64> {
    if !(z > 0.0) || !all_unit_exponents(p) {
        return None;
    }
    let scale = uniform_scale(p)?;
    let shape = (p.m(), p.n(), p.p(), p.q());
    match shape {
        // exponential-type
        (1, 0, 0, 1) => {
            let b = p.lower()[0].shift;
            let w = z.powf(1.0 / scale);
            Some(z.powf(b / scale) * (-w).exp() / scale)
        }
        // binomial-type Γ(a) z^b (1+z)^{-a}
        (1, 1, 1, 1) => {
            let u = p.upper()[0].shift;
            let b = p.lower()[0].shift;
            let a = b + 1.0 - u;
            let gamma_a = crate::special::real_gamma(a).ok()?;
            let w = z.powf(1.0 / scale);
            Some(gamma_a * w.powf(b) * (1.0 + w).powf(-a) / scale)
        }
        // pure power above one
        (0, 1, 1, 1) => {
            let u = p.upper()[0].shift;
            let b = p.lower()[0].shift;
            if (u - b - 1.0).abs() > 1e-12 {
                return None;
            }
            let w = z.powf(1.0 / scale);
            if (w - 1.0).abs() < 1e-12 {
                None
            } else if w > 1.0 {
                Some(w.powf(b) / scale)
            } else {
                Some(0.0)
            }
        }
        // truncated binomial z^b (1-z)^a / Γ(a+1) below one
        (1, 0, 1, 1) => {
            let u = p.upper()[0].shift;
            let b = p.lower()[0].shift;
            let a = u - b - 1.0;
            if a <= -1.0 {
                return None;
            }
            let gamma_a1 = crate::special::real_gamma(a + 1.0).ok()?;
            let w = z.powf(1.0 / scale);
            if (w - 1.0).abs() < 1e-12 {
                None
            } else if w < 1.0 {
                Some(w.powf(b) * (1.0 - w).powf(a) / (gamma_a1 * scale))
            } else {
                Some(0.0)
            }
        }
        _ => None,
    }
}

/// True when the parameters are exactly the constant pattern
/// `I^{1,0}_{1,1}[·|(1,1,1);(0,1,1)]`, whose value is 1 for |z| < 1.
pub fn is_constant_pattern(p: &IFunctionParams) -> bool {
    p.m() == 1
        && p.n() == 0
        && p.p() == 1
        && p.q() == 1
        && p.upper()[0] == crate::params::triple(1.0, 1.0, 1.0)
        && p.lower()[0] == crate::params::triple(0.0, 1.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{triple, IFunctionParams};
    use approx::assert_relative_eq;

    #[test]
    fn exponential_type_with_scale() {
        // I^{1,0}_{0,1}[4 | (1,2,1)] = (1/2)·4^{1/2}·e^{-2} = e^{-2}
        let p = IFunctionParams::new(1, 0, vec![], vec![triple(1.0, 2.0, 1.0)]).unwrap();
        let v = closed_form(&p, 4.0).unwrap();
        assert_relative_eq!(v, (-2.0_f64).exp(), max_relative = 1e-14);
    }

    #[test]
    fn power_pattern_above_one() {
        // I^{0,1}_{1,1}[2 | (4,1,1);(3,1,1)] = 2^3
        let p = IFunctionParams::new(
            0,
            1,
            vec![triple(4.0, 1.0, 1.0)],
            vec![triple(3.0, 1.0, 1.0)],
        )
        .unwrap();
        assert_relative_eq!(closed_form(&p, 2.0).unwrap(), 8.0, max_relative = 1e-14);
        assert_eq!(closed_form(&p, 0.5).unwrap(), 0.0);
    }

    #[test]
    fn truncated_binomial_below_one() {
        // Γ(2)·2^1·I^{1,0}_{1,1}[z/2 | (2,1,1);(0,1,1)] = (2-z) at z = 0.5:
        // the bare pattern value at w = 0.25 is w^0 (1-w)^1 / Γ(2) = 0.75.
        let p = IFunctionParams::new(
            1,
            0,
            vec![triple(2.0, 1.0, 1.0)],
            vec![triple(0.0, 1.0, 1.0)],
        )
        .unwrap();
        let w = closed_form(&p, 0.25).unwrap();
        assert_relative_eq!(w, 0.75, max_relative = 1e-14);
        // assembled (2.6)-style value
        assert_relative_eq!(1.0 * 2.0 * w, 1.5, max_relative = 1e-14);
        assert_eq!(closed_form(&p, 3.0).unwrap(), 0.0);
    }

    #[test]
    fn constant_pattern() {
        let p = IFunctionParams::new(
            1,
            0,
            vec![triple(1.0, 1.0, 1.0)],
            vec![triple(0.0, 1.0, 1.0)],
        )
        .unwrap();
        assert!(is_constant_pattern(&p));
        assert_relative_eq!(closed_form(&p, 0.6).unwrap(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn no_match_returns_none() {
        // exponent != 1 falls outside every pattern
        let p = IFunctionParams::new(
            2,
            0,
            vec![],
            vec![triple(0.0, 1.0, 1.0), triple(0.0, 1.0, 1.0)],
        )
        .unwrap();
        assert!(closed_form(&p, 1.0).is_none());
        let q = IFunctionParams::new(1, 0, vec![], vec![triple(0.0, 1.0, 2.0)]).unwrap();
        assert!(closed_form(&q, 1.0).is_none());
        // negative arguments are not covered
        let e = IFunctionParams::new(1, 0, vec![], vec![triple(0.0, 1.0, 1.0)]).unwrap();
        assert!(closed_form(&e, -1.0).is_none());
    }
}
