//! Direct high-precision evaluation of harmonic-number series.

mod asymptotic;
pub mod engine;
pub mod harmonic;
pub mod multiple;
pub mod spec;

pub use engine::{euler_t_sum, euler_t_sum_with, evaluate, evaluate_fixed, naive_sum, SeriesResult, SumOptions};
pub use harmonic::{harmonic, odd_harmonic};
pub use multiple::{double_capital_t, double_capital_t_spec, double_t, double_t_spec};
pub use spec::{HarmonicOffset, PartialFractionTerm, SeriesProblem, Sign, SumSpec, Weight};
