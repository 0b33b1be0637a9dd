use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::Word;

/// All classical statistics of a word.
///
/// `des` holds 1-based positions, `ides` holds values of the standardized
/// word, and the remaining set-valued fields hold the word's own letters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub des: BTreeSet<usize>,
    pub ides: BTreeSet<u32>,
    pub lrmax: BTreeSet<u32>,
    pub lrmin: BTreeSet<u32>,
    pub rlmax: BTreeSet<u32>,
    pub rlmin: BTreeSet<u32>,
    pub iar: BTreeSet<u32>,
    pub pk: BTreeSet<u32>,
    pub br: BTreeSet<u32>,
    pub exc: usize,
    pub lmaxz: usize,
    pub asc: usize,
    pub iasc: usize,
}

pub fn statistics(w: &Word) -> Result<StatRecord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let x = w.letters();
    let n = x.len();
    let lrmax = lrmax_set(x);
    let pk = peaks(x);
    let ides = ides_set(w);
    let min_pos = x.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap();
    let des = descent_positions(x);
    let asc = n - 1 - des.len();
    let iasc = n - 1 - ides.len();
    Ok(StatRecord {
        br: lrmax.intersection(&pk).copied().collect(),
        des,
        lrmin: lrmin_set(x),
        rlmax: rlmax_set(x),
        rlmin: rlmin_set(x),
        iar: iar_set(x),
        exc: excedances(&w.standardize()),
        lmaxz: 1 + lrmax_positions(&x[..min_pos]).len(),
        asc,
        iasc,
        ides,
        pk,
        lrmax,
    })
}

/// A numeric statistic, read off a [`StatRecord`] (set-valued ones by size).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Des,
    Ides,
    Lrmax,
    Lrmin,
    Rlmax,
    Rlmin,
    Iar,
    Pk,
    Br,
    Exc,
    Lmaxz,
    Asc,
    Iasc,
}

impl Statistic {
    pub const ALL: [Statistic; 13] = [
        Statistic::Des,
        Statistic::Ides,
        Statistic::Lrmax,
        Statistic::Lrmin,
        Statistic::Rlmax,
        Statistic::Rlmin,
        Statistic::Iar,
        Statistic::Pk,
        Statistic::Br,
        Statistic::Exc,
        Statistic::Lmaxz,
        Statistic::Asc,
        Statistic::Iasc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Des => "des",
            Statistic::Ides => "ides",
            Statistic::Lrmax => "lrmax",
            Statistic::Lrmin => "lrmin",
            Statistic::Rlmax => "rlmax",
            Statistic::Rlmin => "rlmin",
            Statistic::Iar => "iar",
            Statistic::Pk => "pk",
            Statistic::Br => "br",
            Statistic::Exc => "exc",
            Statistic::Lmaxz => "lmaxz",
            Statistic::Asc => "asc",
            Statistic::Iasc => "iasc",
        }
    }

    pub fn value(self, r: &StatRecord) -> usize {
        match self {
            Statistic::Des => r.des.len(),
            Statistic::Ides => r.ides.len(),
            Statistic::Lrmax => r.lrmax.len(),
            Statistic::Lrmin => r.lrmin.len(),
            Statistic::Rlmax => r.rlmax.len(),
            Statistic::Rlmin => r.rlmin.len(),
            Statistic::Iar => r.iar.len(),
            Statistic::Pk => r.pk.len(),
            Statistic::Br => r.br.len(),
            Statistic::Exc => r.exc,
            Statistic::Lmaxz => r.lmaxz,
            Statistic::Asc => r.asc,
            Statistic::Iasc => r.iasc,
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == key)
            .ok_or_else(|| Error::parse(s, "unknown statistic"))
    }
}

/// 1-based descent positions `i` with `w_i > w_{i+1}`.
pub fn descent_positions(x: &[u32]) -> BTreeSet<usize> {
    x.windows(2).enumerate().filter(|(_, p)| p[0] > p[1]).map(|(i, _)| i + 1).collect()
}

/// Inverse descent set of the standardization: values `i` such that `i + 1`
/// appears to the left of `i`.
pub fn ides_set(w: &Word) -> BTreeSet<u32> {
    let s = w.standardize();
    let mut pos = vec![0usize; s.len() + 1];
    for (i, &v) in s.letters().iter().enumerate() {
        pos[v as usize] = i;
    }
    (1..s.len() as u32).filter(|&i| pos[i as usize] > pos[i as usize + 1]).collect()
}

/// 0-based positions of left-to-right maxima.
pub fn lrmax_positions(x: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best: Option<u32> = None;
    for (i, &v) in x.iter().enumerate() {
        if best.map_or(true, |b| v > b) {
            out.push(i);
            best = Some(v);
        }
    }
    out
}

/// 0-based positions of right-to-left maxima, in increasing position order.
pub fn rlmax_positions(x: &[u32]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best: Option<u32> = None;
    for (i, &v) in x.iter().enumerate().rev() {
        if best.map_or(true, |b| v > b) {
            out.push(i);
            best = Some(v);
        }
    }
    out.reverse();
    out
}

pub fn lrmax_set(x: &[u32]) -> BTreeSet<u32> {
    lrmax_positions(x).into_iter().map(|i| x[i]).collect()
}

pub fn rlmax_set(x: &[u32]) -> BTreeSet<u32> {
    rlmax_positions(x).into_iter().map(|i| x[i]).collect()
}

pub fn lrmin_set(x: &[u32]) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    let mut best: Option<u32> = None;
    for &v in x {
        if best.map_or(true, |b| v < b) {
            out.insert(v);
            best = Some(v);
        }
    }
    out
}

pub fn rlmin_set(x: &[u32]) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    let mut best: Option<u32> = None;
    for &v in x.iter().rev() {
        if best.map_or(true, |b| v < b) {
            out.insert(v);
            best = Some(v);
        }
    }
    out
}

/// Letters of the maximal increasing prefix.
pub fn iar_set(x: &[u32]) -> BTreeSet<u32> {
    x[..iar_len(x)].iter().copied().collect()
}

pub fn iar_len(x: &[u32]) -> usize {
    if x.is_empty() {
        return 0;
    }
    1 + x.windows(2).take_while(|p| p[0] < p[1]).count()
}

/// Letters strictly greater than both neighbours; the boundary acts as a
/// sentinel below every letter.
pub fn peaks(x: &[u32]) -> BTreeSet<u32> {
    (0..x.len())
        .filter(|&i| (i == 0 || x[i - 1] < x[i]) && (i + 1 == x.len() || x[i + 1] < x[i]))
        .map(|i| x[i])
        .collect()
}

/// `|{i in [n-1] : pi_i > i}|` for a permutation.
pub fn excedances(p: &Word) -> usize {
    let x = p.letters();
    x.iter().take(x.len().saturating_sub(1)).enumerate().filter(|&(i, &v)| v as usize > i + 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn block_example_statistics() {
        let w: Word = "2 6 4 7 10 14 9 15 17 20 19 16 18 11 12 13 8 3 5 1".parse().unwrap();
        let s = statistics(&w).unwrap();
        assert_eq!(s.lrmax, set(&[2, 6, 7, 10, 14, 15, 17, 20]));
        assert_eq!(s.iar, set(&[2, 6]));
        assert_eq!(s.br, set(&[6, 14, 20]));
    }

    #[test]
    fn identity_statistics() {
        let s = statistics(&"1 2 3".parse().unwrap()).unwrap();
        assert!(s.des.is_empty());
        assert_eq!(s.lrmax, set(&[1, 2, 3]));
        assert_eq!(s.iar, set(&[1, 2, 3]));
        assert_eq!(s.asc, 2);
    }

    #[test]
    fn coding_example_statistics() {
        let s = statistics(&"5 8 2 9 3 7 4 1 6".parse().unwrap()).unwrap();
        assert_eq!(s.exc, 4);
        assert_eq!(s.lmaxz, 4);
        assert_eq!(s.rlmin, set(&[1, 6]));
    }

    #[test]
    fn empty_word_is_an_error() {
        assert_eq!(statistics(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn zero_letter_can_be_a_peak() {
        // The boundary sentinel sits below 0 as well.
        assert_eq!(peaks(&[0]), set(&[0]));
        assert_eq!(peaks(&[0, 3, 1]), set(&[3]));
    }

    #[test]
    fn ides_on_general_word_uses_standardization() {
        let w: Word = "30 10 20".parse().unwrap();
        // standardized 3 1 2 : 3 precedes 2 => 2 in Ides
        assert_eq!(ides_set(&w), set(&[2]));
    }
}
