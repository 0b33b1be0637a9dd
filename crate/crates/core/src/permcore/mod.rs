//! Words, classical patterns, avoidance classes and permutation statistics.

mod enumerate;
mod pattern;
pub mod stats;
mod word;

pub use enumerate::{collect_class_par, count_class_par, enumerate_class, ClassIter};
pub use pattern::{contains_pattern, Pattern, PatternSet};
pub use stats::{statistics, StatRecord, Statistic};
pub use word::Word;
