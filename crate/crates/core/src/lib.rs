//! Exact combinatorics for length-5 pattern quadruples: avoidance classes,
//! statistic-preserving bijections, inversion-sequence codings, a generating
//! tree and the associated generating functions.

pub mod bijections;
pub mod classes;
pub mod error;
pub mod genfun;
pub mod invseq;
pub mod permcore;

pub use error::{Error, Result};
pub use permcore::{Pattern, PatternSet, Word};
