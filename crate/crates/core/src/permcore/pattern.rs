use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permcore::Word;

/// A classical pattern: a permutation of `1..=k`.
///
/// For every role `j` the pattern caches which earlier role holds the next
/// smaller and next larger value, so a partial match can be extended by a
/// single pair of comparisons.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    word: Word,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl Pattern {
    pub fn new(word: Word) -> Result<Self> {
        if word.is_empty() || !word.is_permutation() {
            return Err(Error::InvalidPattern(word.to_string()));
        }
        let p = word.letters();
        let mut below = Vec::with_capacity(p.len());
        let mut above = Vec::with_capacity(p.len());
        for j in 0..p.len() {
            let lower = (0..j).filter(|&i| p[i] < p[j]).max_by_key(|&i| p[i]);
            let upper = (0..j).filter(|&i| p[i] > p[j]).min_by_key(|&i| p[i]);
            below.push(lower);
            above.push(upper);
        }
        Ok(Pattern { word, below, above })
    }

    pub fn from_digits(s: &str) -> Result<Self> {
        Pattern::new(Word::from_digits(s).map_err(|_| Error::InvalidPattern(s.to_string()))?)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// True iff some subsequence of `w` is order-isomorphic to the pattern.
    pub fn is_contained_in(&self, w: &[u32]) -> bool {
        let mut chosen = Vec::with_capacity(self.len());
        self.extend(w, 0, &mut chosen, None)
    }

    /// True iff an occurrence uses `w[end]` as the image of the last pattern letter.
    ///
    /// Since containment only grows when letters are appended, checking the
    /// occurrences that end at a newly appended position is enough to keep a
    /// prefix-closed search honest.
    pub fn has_occurrence_ending_at(&self, w: &[u32], end: usize) -> bool {
        let k = self.len();
        if end + 1 < k {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        self.extend(&w[..end], 0, &mut chosen, Some(w[end]))
    }

    fn fits(&self, role: usize, x: u32, chosen: &[u32]) -> bool {
        self.below[role].map_or(true, |b| chosen[b] < x) && self.above[role].map_or(true, |a| chosen[a] > x)
    }

    // Depth-first extension of a partial occurrence. When `last` is given the
    // final role is pinned to that value and must lie after every chosen letter.
    fn extend(&self, w: &[u32], start: usize, chosen: &mut Vec<u32>, last: Option<u32>) -> bool {
        let role = chosen.len();
        let k = self.len();
        if let Some(v) = last {
            if role + 1 == k {
                return self.fits(role, v, chosen);
            }
        } else if role == k {
            return true;
        }
        let needed = k - role - usize::from(last.is_some());
        if w.len() < start + needed {
            return false;
        }
        let p = self.word.letters();
        for i in start..=(w.len() - needed) {
            let x = w[i];
            if !self.fits(role, x, chosen) {
                continue;
            }
            if let Some(v) = last {
                if (p[role] < p[k - 1]) != (x < v) {
                    continue;
                }
            }
            chosen.push(x);
            let found = self.extend(w, i + 1, chosen, last);
            chosen.pop();
            if found {
                return true;
            }
        }
        false
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts either compact digits (`31245`) or space-separated letters.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.chars().all(|c| c.is_ascii_digit()) {
            Pattern::from_digits(t)
        } else {
            Pattern::new(t.parse::<Word>().map_err(|_| Error::InvalidPattern(s.to_string()))?)
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for x in self.word.letters() {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word)
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

/// A non-empty list of patterns defining an avoidance class.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternSet(Vec<Pattern>);

impl PatternSet {
    pub fn new(patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidPattern(String::from("<empty pattern set>")));
        }
        Ok(PatternSet(patterns))
    }

    /// Builds a set from compact digit strings; panics on malformed input.
    /// Meant for literal pattern tables.
    pub fn from_digit_strs(patterns: &[&str]) -> Self {
        PatternSet::new(patterns.iter().map(|p| Pattern::from_digits(p).expect("valid pattern literal")).collect())
            .expect("non-empty pattern list")
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.0
    }

    pub fn is_avoided_by(&self, w: &[u32]) -> bool {
        self.first_contained(w).is_none()
    }

    pub fn first_contained(&self, w: &[u32]) -> Option<&Pattern> {
        self.0.iter().find(|p| p.is_contained_in(w))
    }

    pub(crate) fn avoided_ending_at(&self, w: &[u32], end: usize) -> bool {
        !self.0.iter().any(|p| p.has_occurrence_ending_at(w, end))
    }

    /// Returns an error naming the first pattern contained in `w`.
    pub fn require_avoided(&self, w: &Word) -> Result<()> {
        match self.first_contained(w.letters()) {
            Some(p) => Err(Error::ContainsPattern { word: w.clone(), pattern: p.clone() }),
            None => Ok(()),
        }
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated patterns, e.g. `31245,32145`.
    fn from_str(s: &str) -> Result<Self> {
        PatternSet::new(s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_>>()?)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet({self})")
    }
}

/// True iff some subsequence of `w` is order-isomorphic to `p`.
///
/// Fails when `p` is not a permutation of `1..=k`.
pub fn contains_pattern(w: &Word, p: &Word) -> Result<bool> {
    Ok(Pattern::new(p.clone())?.is_contained_in(w.letters()))
}
