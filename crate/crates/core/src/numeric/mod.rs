//! Double-precision evaluation, quadrature and the analytic identities that
//! need it.

pub mod eval;
pub mod negative;
pub mod ortho;
pub mod quad;
pub mod scaling;
pub mod special;

pub use eval::{
    classical_bivariate, classical_hermite, eval_bvdhp, eval_dhp, even_gf, even_gf_printed_complex, even_series, gf_closed,
    gf_series, GFPoint,
};
pub use negative::{gaussian_quartic, mellin_gauss, nodhf, NodhfKernel};
pub use ortho::{dhp_norm, ortho_dhp, partial_norm, partial_ortho};
pub use quad::{Integral, QuadResult, QuadratureConfig};
pub use scaling::scaling_checks;
pub use special::{erf, erfc, gamma};
