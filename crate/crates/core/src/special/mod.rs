//! Zeta-type functions, digamma, single t/T-values and kernel jets.

pub mod convention;
pub mod kernel;
pub mod tvalues;
pub mod zeta;

pub use convention::ZetaConvention;
pub use kernel::{kernel_jet, kernel_laurent, kernel_value, psi_jet, KernelKind};
pub use tvalues::{
    single_capital_t, single_capital_t_bar, single_t, single_t_bar, ttilde, ttilde_bar,
};
pub use zeta::{
    alt_hurwitz_zeta, alt_zeta, digamma, hurwitz_zeta, hurwitz_zeta1, param_digamma_deriv,
    riemann_zeta,
};
