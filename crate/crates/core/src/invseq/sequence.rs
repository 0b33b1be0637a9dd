use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence `(e_1, .., e_n)` with `0 <= e_i < i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct InversionSequence(Vec<u32>);

impl InversionSequence {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some((i, &v)) = entries.iter().enumerate().find(|&(i, &v)| v as usize > i) {
            return Err(Error::InvalidInversionSequence { index: i + 1, value: v });
        }
        Ok(InversionSequence(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(InversionSequence::new(entries.clone()).is_ok());
        InversionSequence(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(e_1, .., e_n, k)`, checking `k <= n`.
    pub fn extended(&self, k: u32) -> Result<Self> {
        let mut v = self.0.clone();
        v.push(k);
        InversionSequence::new(v)
    }
}

impl TryFrom<Vec<u32>> for InversionSequence {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        InversionSequence::new(v)
    }
}

impl From<InversionSequence> for Vec<u32> {
    fn from(e: InversionSequence) -> Self {
        e.0
    }
}

/// Accepts `(0,0,1)`, `0,0,1` or `0 0 1`.
impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|e| Error::parse(s, format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        InversionSequence::new(entries)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InversionSequence{self}")
    }
}

/// True iff some subsequence of `e` is order-isomorphic to `p`, with strict
/// comparisons: equal entries never play two different pattern letters.
///
/// `p` must have distinct letters, e.g. `[2, 0, 1]`.
pub fn seq_contains(e: &InversionSequence, p: &[u32]) -> Result<bool> {
    let mut sorted = p.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidPattern(format!("{p:?}")));
    }
    let mut chosen = Vec::with_capacity(p.len());
    Ok(extend(e.entries(), p, 0, &mut chosen))
}

fn extend(e: &[u32], p: &[u32], start: usize, chosen: &mut Vec<u32>) -> bool {
    let role = chosen.len();
    if role == p.len() {
        return true;
    }
    let needed = p.len() - role;
    for i in start..(e.len() + 1).saturating_sub(needed) {
        let x = e[i];
        if (0..role).all(|r| (p[r] < p[role]) == (chosen[r] < x) && chosen[r] != x) {
            chosen.push(x);
            let found = extend(e, p, i + 1, chosen);
            chosen.pop();
            if found {
                return true;
            }
        }
    }
    false
}

/// Whether appending `k` to a `(201,210)`-avoiding prefix keeps it avoiding.
///
/// A new occurrence must end at `k`: it needs `i < j` with `e_i > e_j`,
/// `e_i > k` and `e_j != k`.
pub fn extension_avoids_201_210(prefix: &[u32], k: u32) -> bool {
    let mut best: Option<u32> = None;
    for &y in prefix {
        if let Some(b) = best {
            if b > y && b > k && y != k {
                return false;
            }
        }
        best = Some(best.map_or(y, |b| b.max(y)));
    }
    true
}

fn grow(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<InversionSequence>) {
    if prefix.len() == n {
        out.push(InversionSequence::from_vec_unchecked(prefix.clone()));
        return;
    }
    for k in 0..=prefix.len() as u32 {
        if extension_avoids_201_210(prefix, k) {
            prefix.push(k);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
}

fn count_from(prefix: &mut Vec<u32>, n: usize) -> u64 {
    if prefix.len() == n {
        return 1;
    }
    let mut total = 0;
    for k in 0..=prefix.len() as u32 {
        if extension_avoids_201_210(prefix, k) {
            prefix.push(k);
            total += count_from(prefix, n);
            prefix.pop();
        }
    }
    total
}

/// `I_n(201,210)` in lexicographic order, by depth-first growth.
pub fn avoiders_201_210(n: usize) -> Vec<InversionSequence> {
    if n < 2 {
        let mut out = Vec::new();
        grow(&mut Vec::new(), n, &mut out);
        return out;
    }
    // Split on (e_1, e_2) = (0, 0) and (0, 1).
    (0..2u32)
        .into_par_iter()
        .map(|second| {
            let mut out = Vec::new();
            grow(&mut vec![0, second], n, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

/// `|I_n(201,210)|` by depth-first growth, split over the first three entries.
pub fn count_avoiders_201_210(n: usize) -> u64 {
    if n < 3 {
        return count_from(&mut Vec::new(), n);
    }
    let starts: Vec<Vec<u32>> = (0..2).flat_map(|b| (0..3).map(move |c| vec![0, b, c])).collect();
    starts.into_par_iter().map(|mut s| count_from(&mut s, n)).sum()
}

/// Statistics of an inversion sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InvStatRecord {
    /// Distinct positive entries.
    pub dist: usize,
    /// `n - 1 - dist`.
    pub rep: usize,
    /// Strict right-to-left minima: `e_i < e_j` for every `j > i`.
    pub rlmin: usize,
    pub zero: usize,
    /// Saturated entries, `e_i = i - 1`.
    pub satu: usize,
}

pub fn inv_statistics(e: &InversionSequence) -> InvStatRecord {
    let x = e.entries();
    let mut positive: Vec<u32> = x.iter().copied().filter(|&v| v > 0).collect();
    positive.sort_unstable();
    positive.dedup();
    let dist = positive.len();
    let mut rlmin = 0;
    let mut floor: Option<u32> = None;
    for &v in x.iter().rev() {
        if floor.map_or(true, |f| v < f) {
            rlmin += 1;
        }
        floor = Some(floor.map_or(v, |f| f.min(v)));
    }
    InvStatRecord {
        dist,
        rep: x.len().saturating_sub(1 + dist),
        rlmin,
        zero: x.iter().filter(|&&v| v == 0).count(),
        satu: x.iter().enumerate().filter(|&(i, &v)| v as usize == i).count(),
    }
}
