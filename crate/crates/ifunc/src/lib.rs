//! Numerics for the I-function — a Mellin-Barnes contour integral whose
//! kernel is a four-block ratio of gamma functions raised to positive real
//! powers, generalizing the Fox H-function — together with the probability
//! distribution it generates on (0, ∞), the closed algebra of products,
//! quotients, scalings and rational powers of independent variates, and the
//! I-function inverse Gaussian family.
//!
//! Layout:
//! * [`special`] — complex log-gamma, gamma powers, Bessel K.
//! * [`params`] — the symbolic parameter object and its §-level identities.
//! * [`contour`] — contour quadrature behind [`contour::evaluate`].
//! * [`closed_form`] — elementary-pattern shortcuts.
//! * [`transforms`] — Mellin/Laplace transforms and Mellin combinators.
//! * [`distribution`] — the I-function distribution and its catalog.
//! * [`algebra`] — products, quotients, scalings, powers, product-form pdfs.
//! * [`ifig`] — the I-function inverse Gaussian family.
//! * [`verify`] — independent oracles (quadrature, convolutions, samplers, KS).
//! * [`cli`] — the `ifunc` command-line surface.

pub mod error;
pub mod special;
pub(crate) mod quad;
pub mod params;
pub(crate) mod kernel;
pub mod contour;
pub mod closed_form;
pub mod transforms;
pub mod distribution;
pub mod algebra;
pub mod ifig;

pub use contour::{evaluate, evaluate_real, EvalConfig};
pub use error::{Error, Result};
pub use params::{ConvergenceReport, GammaTriple, IFunctionParams};
pub use special::Complex;
