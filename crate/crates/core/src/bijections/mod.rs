//! Statistic-preserving bijections between avoidance classes.

mod blocks;
mod classify;
mod recursive;

pub use blocks::{decompose_type_one, decompose_type_two, phi, psi, TypeIDecomposition, TypeIIDecomposition};
pub use classify::{classify, last_descent_before, CaseTag, Landmarks, Side};
pub use recursive::{alpha, alpha_traced, beta, beta_traced, Step, TraceEntry};
