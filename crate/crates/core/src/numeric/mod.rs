//! Multiprecision scalars, exact Bernoulli tables and truncated jets.

pub mod bernoulli;
pub mod jet;
pub mod real;

pub use bernoulli::{bernoulli, bernoulli_half, boole_coefficient};
pub use jet::{jet_add, jet_mul, jet_recip, jet_residue, JetSeries};
pub use real::{
    binomial, decimal_digits, parse_rational, real_const, real_const_named, to_decimal,
    ulp_distance, working_precision, Constant, Real, MIN_PRECISION,
};
pub use rug::Rational;
