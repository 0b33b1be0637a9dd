use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of pairwise distinct non-negative integers.
///
/// Permutations of `1..=n` are the special case checked by
/// [`Word::is_permutation`]. Positions are reported 1-based by every public
/// statistic; indexing into [`Word::letters`] is the usual 0-based slice.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if let Some(pair) = sorted.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::RepeatedLetter(pair[0]));
        }
        Ok(Word(letters))
    }

    /// Builds a word without checking distinctness. Callers guarantee it.
    pub(crate) fn from_vec_unchecked(letters: Vec<u32>) -> Self {
        debug_assert!(Word::new(letters.clone()).is_ok());
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The identity permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Word((1..=n as u32).collect())
    }

    /// Parses a compact digit string such as `"31245"`; each character is one letter.
    pub fn from_digits(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::parse(s, format!("`{c}` is not a digit"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn min(&self) -> Option<u32> {
        self.0.iter().copied().min()
    }

    /// 0-based index of `letter`, if present.
    pub fn position_of(&self, letter: u32) -> Option<usize> {
        self.0.iter().position(|&x| x == letter)
    }

    pub fn is_permutation(&self) -> bool {
        let n = self.0.len() as u32;
        let mut seen = vec![false; self.0.len()];
        self.0.iter().all(|&x| {
            if x == 0 || x > n || seen[(x - 1) as usize] {
                return false;
            }
            seen[(x - 1) as usize] = true;
            true
        })
    }

    pub(crate) fn require_permutation(&self) -> Result<()> {
        if self.is_permutation() {
            Ok(())
        } else {
            Err(Error::NotPermutation(self.clone()))
        }
    }

    /// Replaces every letter by its rank, giving a permutation of `1..=n`.
    pub fn standardize(&self) -> Word {
        let mut order: Vec<usize> = (0..self.0.len()).collect();
        order.sort_unstable_by_key(|&i| self.0[i]);
        let mut out = vec![0; self.0.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = rank as u32 + 1;
        }
        Word(out)
    }

    /// Copy of the word with the letter at 0-based index `idx` removed.
    pub fn without_index(&self, idx: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(idx);
        Word(v)
    }

    /// Inserts `letter` so that it ends up at 0-based index `idx`.
    ///
    /// Panics if `letter` already occurs.
    pub fn with_inserted(&self, idx: usize, letter: u32) -> Word {
        assert!(!self.0.contains(&letter), "letter {letter} already present");
        let mut v = self.0.clone();
        v.insert(idx, letter);
        Word(v)
    }

    /// Subword of the letters at the 0-based range.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut v = Vec::new();
        for p in parts {
            v.extend_from_slice(&p.0);
        }
        Word::from_vec_unchecked(v)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn inverse(&self) -> Result<Word> {
        self.require_permutation()?;
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[(x - 1) as usize] = i as u32 + 1;
        }
        Ok(Word(inv))
    }

    pub fn complement(&self) -> Result<Word> {
        self.require_permutation()?;
        let n = self.0.len() as u32;
        Ok(Word(self.0.iter().map(|&x| n + 1 - x).collect()))
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// Space-separated letters, e.g. `"5 8 2 9 3 7 4 1 6"`. Commas are accepted as separators too.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|e| Error::parse(s, format!("`{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{self}]")
    }
}
