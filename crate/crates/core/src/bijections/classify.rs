//! Structural case analysis of non-trivial words on both sides of `alpha`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes;
use crate::error::{Error, Result};
use crate::permcore::stats::{lrmax_positions, rlmax_positions};
use crate::permcore::Word;

/// Which side of `alpha` a word lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `{31245,32145,31254,32154}`-avoiders.
    Source,
    /// `{31425,32415,31524,32514}`-avoiders.
    Target,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "source" => Ok(Side::Source),
            "target" => Ok(Side::Target),
            _ => Err(Error::parse(s, "expected `source` or `target`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CaseTag {
    I1,
    I2,
    I3,
    II1,
    II2,
    II3,
    II4,
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    TrivialLrmax1,
    TrivialRlmax1,
    TrivialLsEqS,
    TrivialS2,
    TrivialH2,
}

impl CaseTag {
    pub const ALL: [CaseTag; 18] = [
        CaseTag::I1,
        CaseTag::I2,
        CaseTag::I3,
        CaseTag::II1,
        CaseTag::II2,
        CaseTag::II3,
        CaseTag::II4,
        CaseTag::A1,
        CaseTag::A2,
        CaseTag::A3,
        CaseTag::B1,
        CaseTag::B2,
        CaseTag::B3,
        CaseTag::TrivialLrmax1,
        CaseTag::TrivialRlmax1,
        CaseTag::TrivialLsEqS,
        CaseTag::TrivialS2,
        CaseTag::TrivialH2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::I1 => "I-1",
            CaseTag::I2 => "I-2",
            CaseTag::I3 => "I-3",
            CaseTag::II1 => "II-1",
            CaseTag::II2 => "II-2",
            CaseTag::II3 => "II-3",
            CaseTag::II4 => "II-4",
            CaseTag::A1 => "A-1",
            CaseTag::A2 => "A-2",
            CaseTag::A3 => "A-3",
            CaseTag::B1 => "B-1",
            CaseTag::B2 => "B-2",
            CaseTag::B3 => "B-3",
            CaseTag::TrivialLrmax1 => "trivial-lrmax1",
            CaseTag::TrivialRlmax1 => "trivial-rlmax1",
            CaseTag::TrivialLsEqS => "trivial-ls-eq-s",
            CaseTag::TrivialS2 => "trivial-s2",
            CaseTag::TrivialH2 => "trivial-h2",
        }
    }

    pub fn is_trivial(self) -> bool {
        matches!(
            self,
            CaseTag::TrivialLrmax1
                | CaseTag::TrivialRlmax1
                | CaseTag::TrivialLsEqS
                | CaseTag::TrivialS2
                | CaseTag::TrivialH2
        )
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Positions driving the case analysis, all 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Landmarks {
    /// Left-to-right maxima positions `l_1 < .. < l_s`.
    pub lrmax: Vec<usize>,
    /// Right-to-left maxima positions `r_1 < .. < r_t`.
    pub rlmax: Vec<usize>,
}

impl Landmarks {
    pub fn of(w: &[u32]) -> Self {
        Landmarks { lrmax: lrmax_positions(w), rlmax: rlmax_positions(w) }
    }

    /// Non-trivial means `lrmax > 1`, `rlmax > 1` and `l_s > s`.
    pub fn is_nontrivial(&self) -> bool {
        let s = self.lrmax.len();
        s > 1 && self.rlmax.len() > 1 && self.lrmax[s - 1] > s - 1
    }

    pub fn last(&self) -> usize {
        self.lrmax[self.lrmax.len() - 1]
    }

    pub fn second_last(&self) -> usize {
        self.lrmax[self.lrmax.len() - 2]
    }

    pub fn r2(&self) -> usize {
        self.rlmax[1]
    }
}

/// 1-based position of the last descent strictly before 0-based `before`,
/// or 0 if there is none.
pub fn last_descent_before(w: &[u32], before: usize) -> usize {
    (0..before).rev().find(|&j| w[j] > w[j + 1]).map_or(0, |j| j + 1)
}

// True iff `xs` is a (possibly empty) run satisfying `first`, then a run
// satisfying `second`, and nothing else.
fn two_runs(xs: &[u32], first: impl Fn(u32) -> bool, second: impl Fn(u32) -> bool) -> bool {
    let split = xs.iter().take_while(|&&y| first(y)).count();
    xs[split..].iter().all(|&y| second(y))
}

fn classify_source(w: &[u32], m: &Landmarks) -> Option<CaseTag> {
    let (ls, prev, r2) = (m.last(), m.second_last(), m.r2());
    let pivot = w[prev];
    if pivot < w[r2] {
        return match ls - prev {
            1 => Some(CaseTag::I1),
            2 => {
                let between = &w[ls + 1..r2];
                if between.iter().all(|&y| y < pivot) {
                    Some(CaseTag::I2)
                } else if two_runs(between, |y| y > pivot, |y| y < pivot) {
                    Some(CaseTag::I3)
                } else {
                    None
                }
            }
            _ => None,
        };
    }
    if m.lrmax.len() == 2 {
        return Some(CaseTag::TrivialS2);
    }
    let x = last_descent_before(w, prev);
    if x == 0 {
        return Some(CaseTag::II1);
    }
    if ls == prev + 1 {
        return Some(CaseTag::II2);
    }
    let wx = w[x - 1];
    let between = &w[prev + 1..ls];
    if between.iter().all(|&y| y < wx) {
        Some(CaseTag::II4)
    } else if two_runs(between, |y| wx < y && y < pivot, |y| y < wx) {
        Some(CaseTag::II3)
    } else {
        None
    }
}

fn classify_target(v: &[u32], m: &Landmarks) -> Option<CaseTag> {
    let (ah, prev, b2) = (m.last(), m.second_last(), m.r2());
    let pivot = v[prev];
    if pivot < v[b2] {
        return if ah == prev + 1 {
            Some(CaseTag::A1)
        } else if b2 == ah + 1 {
            Some(CaseTag::A2)
        } else if v[ah + 1..b2].iter().all(|&y| y > pivot) {
            Some(CaseTag::A3)
        } else {
            None
        };
    }
    if m.lrmax.len() == 2 {
        return Some(CaseTag::TrivialH2);
    }
    let x = last_descent_before(v, prev);
    if x == 0 {
        return Some(CaseTag::B1);
    }
    let vx = v[x - 1];
    let tail_ok = v[b2] < vx || v[ah + 1..b2].iter().all(|&y| vx < y && y < v[b2]);
    if ah == prev + 1 {
        tail_ok.then_some(CaseTag::B2)
    } else {
        (tail_ok && v[prev + 1..ah].iter().all(|&y| vx < y && y < pivot)).then_some(CaseTag::B3)
    }
}

/// Assigns the unique structural case of `w`.
///
/// Trivial cases are tested first, in the order `lrmax = 1`, `l_s = s`,
/// `rlmax = 1`; the remaining words must match one of the lemma types
/// literally, otherwise [`Error::NoCaseApplies`] is returned.
pub fn classify(w: &Word, side: Side) -> Result<CaseTag> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    match side {
        Side::Source => classes::alpha_source().require_avoided(w)?,
        Side::Target => classes::alpha_target().require_avoided(w)?,
    }
    let x = w.letters();
    let m = Landmarks::of(x);
    let s = m.lrmax.len();
    if s == 1 {
        return Ok(CaseTag::TrivialLrmax1);
    }
    if m.last() == s - 1 {
        return Ok(CaseTag::TrivialLsEqS);
    }
    if m.rlmax.len() == 1 {
        return Ok(CaseTag::TrivialRlmax1);
    }
    let tag = match side {
        Side::Source => classify_source(x, &m),
        Side::Target => classify_target(x, &m),
    };
    tag.ok_or_else(|| Error::NoCaseApplies(w.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tag(s: &str, side: Side) -> CaseTag {
        classify(&s.parse().unwrap(), side).unwrap()
    }

    #[test]
    fn trivial_tags() {
        assert_eq!(tag("1 2 3", Side::Source), CaseTag::TrivialLsEqS);
        assert_eq!(tag("3 1 2", Side::Source), CaseTag::TrivialLrmax1);
        assert_eq!(tag("2 1 3", Side::Source), CaseTag::TrivialRlmax1);
        assert_eq!(tag("3 1 4 2", Side::Source), CaseTag::TrivialS2);
        assert_eq!(tag("3 1 4 2", Side::Target), CaseTag::TrivialH2);
    }

    #[test]
    fn nontrivial_tags() {
        assert_eq!(tag("2 1 3 5 4", Side::Source), CaseTag::I1);
        assert_eq!(tag("2 1 3 5 4", Side::Target), CaseTag::A1);
        assert_eq!(tag("1 3 2 5 4", Side::Source), CaseTag::I2);
        assert_eq!(tag("2 4 1 5 3", Side::Source), CaseTag::II1);
        assert_eq!(tag("2 4 1 5 3", Side::Target), CaseTag::B1);
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(classify(&Word::empty(), Side::Source), Err(Error::EmptyWord));
    }
}
