//! Inversion sequences, their pattern avoidance and statistics, and two
//! codings of permutations by inversion sequences.

mod coding;
mod sequence;

pub use coding::{lehmer_code, ms_code, ms_decode};
pub use sequence::{
    avoiders_201_210, count_avoiders_201_210, extension_avoids_201_210, inv_statistics, seq_contains,
    InvStatRecord, InversionSequence,
};
