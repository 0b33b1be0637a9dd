//! The recursive bijection `alpha` from `{31245,32145,31254,32154}`-avoiders
//! to `{31425,32415,31524,32514}`-avoiders and its inverse `beta`.
//!
//! Both maps peel off one letter (the maximum, the first letter, or the
//! second-to-last left-to-right maximum), recurse, and put the letter back
//! next to a landmark located afresh in the recursive image.

use std::fmt;

use serde::Serialize;

use super::blocks::{phi_raw, psi_raw};
use crate::classes;
use crate::error::{Error, Result};
use crate::permcore::stats::{lrmax_positions, rlmax_positions};
use crate::permcore::Word;

/// One reinsertion performed while computing `alpha` or `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Step {
    /// The first letter is put back at the front.
    Prepend { letter: u32 },
    /// The maximum is put back at a fixed 1-based position.
    InsertAt { letter: u32, position: usize },
    /// `phi` (or `psi`) was applied to everything but a final maximum.
    BlockMap { length: usize },
    Before { letter: u32, landmark: u32 },
    After { letter: u32, landmark: u32 },
}

/// A [`Step`] together with the word it produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub step: Step,
    pub image: Word,
}

impl Step {
    /// True for the landmark insertions that the worked logs list.
    pub fn is_landmark(&self) -> bool {
        matches!(self, Step::Before { .. } | Step::After { .. })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Prepend { letter } => write!(f, "{letter} at front"),
            Step::InsertAt { letter, position } => write!(f, "{letter} at position {position}"),
            Step::BlockMap { length } => write!(f, "block map on length {length}"),
            Step::Before { letter, landmark } => write!(f, "{letter} before {landmark}"),
            Step::After { letter, landmark } => write!(f, "{letter} after {landmark}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    Forward,
    Backward,
}

fn without(w: &[u32], idx: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(w.len().saturating_sub(1));
    v.extend_from_slice(&w[..idx]);
    v.extend_from_slice(&w[idx + 1..]);
    v
}

fn nth_lrmax(u: &[u32], nth: usize) -> Result<usize> {
    lrmax_positions(u)
        .get(nth)
        .copied()
        .ok_or_else(|| Error::Invariant(format!("recursive image has fewer than {} left-to-right maxima", nth + 1)))
}

// `trace` receives steps outermost first.
fn recurse(w: &[u32], dir: Dir, trace: &mut Option<&mut Vec<TraceEntry>>) -> Result<Vec<u32>> {
    let n = w.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lr = lrmax_positions(w);
    let s = lr.len();
    let slot = trace.as_mut().map(|t| {
        t.push(TraceEntry { step: Step::Prepend { letter: 0 }, image: Word::empty() });
        t.len() - 1
    });
    let record = |trace: &mut Option<&mut Vec<TraceEntry>>, step: Step, image: &[u32]| {
        if let (Some(t), Some(i)) = (trace.as_mut(), slot) {
            t[i] = TraceEntry { step, image: Word::from_vec_unchecked(image.to_vec()) };
        }
    };

    if s == 1 {
        let mut out = vec![w[0]];
        out.extend(recurse(&w[1..], dir, trace)?);
        record(trace, Step::Prepend { letter: w[0] }, &out);
        return Ok(out);
    }
    let ls = lr[s - 1];
    if ls == s - 1 {
        let mut out = recurse(&without(w, ls), dir, trace)?;
        out.insert(ls, w[ls]);
        record(trace, Step::InsertAt { letter: w[ls], position: ls + 1 }, &out);
        return Ok(out);
    }
    let rl = rlmax_positions(w);
    if rl.len() == 1 {
        let mut out = match dir {
            Dir::Forward => phi_raw(&w[..n - 1]),
            Dir::Backward => psi_raw(&w[..n - 1]),
        };
        out.push(w[n - 1]);
        record(trace, Step::BlockMap { length: n - 1 }, &out);
        return Ok(out);
    }
    let r2 = rl[1];
    let prev = lr[s - 2];
    // (b1) peels the maximum, (b2) peels the (s-1)-th left-to-right maximum.
    let (peeled, nth) = if w[prev] < w[r2] {
        (ls, s - 1)
    } else if s > 2 {
        (prev, s - 2)
    } else {
        let mut out = vec![w[0]];
        out.extend(recurse(&w[1..], dir, trace)?);
        record(trace, Step::Prepend { letter: w[0] }, &out);
        return Ok(out);
    };
    let adjacent = lr[nth - 1] + 1 == lr[nth];
    let letter = w[peeled];
    let mut u = recurse(&without(w, peeled), dir, trace)?;
    let (at, step) = match (dir, adjacent) {
        (_, true) => {
            let p = nth_lrmax(&u, nth - 1)?;
            (p + 1, Step::After { letter, landmark: u[p] })
        }
        (Dir::Forward, false) => {
            let p = nth_lrmax(&u, nth)?;
            (p, Step::Before { letter, landmark: u[p] })
        }
        (Dir::Backward, false) => {
            let p = nth_lrmax(&u, nth - 1)? + 1;
            let landmark = *u
                .get(p)
                .ok_or_else(|| Error::Invariant(String::from("no letter follows the landmark maximum")))?;
            (p + 1, Step::After { letter, landmark })
        }
    };
    u.insert(at, letter);
    record(trace, step, &u);
    Ok(u)
}

/// Maps a `{31245,32145,31254,32154}`-avoiding word to a
/// `{31425,32415,31524,32514}`-avoiding word, preserving
/// `(Ides, Lrmax, Lrmin, Rlmax, Iar)`.
pub fn alpha(w: &Word) -> Result<Word> {
    classes::alpha_source().require_avoided(w)?;
    Ok(Word::from_vec_unchecked(recurse(w.letters(), Dir::Forward, &mut None)?))
}

/// Inverse of [`alpha`].
pub fn beta(v: &Word) -> Result<Word> {
    classes::alpha_target().require_avoided(v)?;
    Ok(Word::from_vec_unchecked(recurse(v.letters(), Dir::Backward, &mut None)?))
}

/// [`alpha`] together with every reinsertion, outermost first.
pub fn alpha_traced(w: &Word) -> Result<(Word, Vec<TraceEntry>)> {
    classes::alpha_source().require_avoided(w)?;
    let mut steps = Vec::new();
    let out = recurse(w.letters(), Dir::Forward, &mut Some(&mut steps))?;
    Ok((Word::from_vec_unchecked(out), steps))
}

/// [`beta`] together with every reinsertion, outermost first.
pub fn beta_traced(v: &Word) -> Result<(Word, Vec<TraceEntry>)> {
    classes::alpha_target().require_avoided(v)?;
    let mut steps = Vec::new();
    let out = recurse(v.letters(), Dir::Backward, &mut Some(&mut steps))?;
    Ok((Word::from_vec_unchecked(out), steps))
}
