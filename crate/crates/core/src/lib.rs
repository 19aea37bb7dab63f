//! Bivariate degenerate Hermite polynomials
//! `H_n(x,y|λ) = Σ_k n!/((n-2k)! k!) Lⁿ⁻ᵏ xⁿ⁻²ᵏ yᵏ` with `L = log(1+λ)/λ`.
//!
//! [`poly`] and [`hermite`] hold the exact rational constructions,
//! [`umbral`] the vacuum formalism, [`numeric`] the floating-point side and
//! [`verify`] a registry of residual checks over all of them.

pub mod error;
pub mod hermite;
pub mod numeric;
pub mod param;
pub mod poly;
pub mod umbral;
pub mod verify;

pub use error::{Error, Result};
pub use hermite::{bvdhp, dhp, HermiteIndex, RodriguesForm, MAX_INDEX};
pub use numeric::{GFPoint, Integral, NodhfKernel, QuadResult, QuadratureConfig};
pub use param::{make_param, DegenerateParam};
pub use poly::{ExactPoly, Monomial, TermRecord, Var};
pub use umbral::{MomentSequence, UmbralExpr};
pub use verify::{CheckReport, Registry, ReportVariant, Status, VariantPolicy};

use serde::{Deserialize, Serialize};

/// Which form of a disputed identity to use: the one as printed, or the
/// one that holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Paper,
    Corrected,
}
