use rayon::prelude::*;

use crate::permcore::{PatternSet, Word};

/// Lexicographic depth-first stream of the permutations of `1..=n` avoiding
/// every pattern of a [`PatternSet`].
///
/// Letters are appended one at a time and only occurrences ending at the new
/// letter are checked, so whole subtrees below a bad prefix are skipped.
pub struct ClassIter<'a> {
    n: usize,
    patterns: &'a PatternSet,
    prefix: Vec<u32>,
    next_candidate: Vec<u32>,
    used: Vec<bool>,
    root_depth: usize,
    done: bool,
}

impl<'a> ClassIter<'a> {
    pub fn new(n: usize, patterns: &'a PatternSet) -> Self {
        Self::with_prefix(n, patterns, &[])
    }

    /// Only the permutations starting with `prefix`. An invalid or
    /// pattern-containing prefix yields nothing.
    pub fn with_prefix(n: usize, patterns: &'a PatternSet, prefix: &[u32]) -> Self {
        let mut used = vec![false; n + 1];
        let mut ok = prefix.len() <= n;
        for (i, &v) in prefix.iter().enumerate() {
            if !ok || v == 0 || v as usize > n || used[v as usize] || !patterns.avoided_ending_at(prefix, i) {
                ok = false;
                break;
            }
            used[v as usize] = true;
        }
        let next_candidate = vec![1; n + 1];
        ClassIter {
            n,
            patterns,
            prefix: prefix.to_vec(),
            next_candidate,
            used,
            root_depth: prefix.len(),
            done: !ok,
        }
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used[v as usize] = false;
        }
    }
}

impl Iterator for ClassIter<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            let depth = self.prefix.len();
            if depth == self.n {
                let out = Word::from_vec_unchecked(self.prefix.clone());
                if depth == self.root_depth {
                    self.done = true;
                } else {
                    self.pop();
                }
                return Some(out);
            }
            let mut advanced = false;
            while self.next_candidate[depth] as usize <= self.n {
                let v = self.next_candidate[depth];
                self.next_candidate[depth] += 1;
                if self.used[v as usize] {
                    continue;
                }
                self.prefix.push(v);
                if self.patterns.avoided_ending_at(&self.prefix, depth) {
                    self.used[v as usize] = true;
                    self.next_candidate[depth + 1] = 1;
                    advanced = true;
                    break;
                }
                self.prefix.pop();
            }
            if !advanced {
                if depth == self.root_depth {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}

/// The avoidance class `S_n(patterns)` as a lazy stream.
pub fn enumerate_class(n: usize, patterns: &PatternSet) -> ClassIter<'_> {
    ClassIter::new(n, patterns)
}

/// Collects the class with one task per first letter. The result is in
/// lexicographic order whatever the thread count.
pub fn collect_class_par(n: usize, patterns: &PatternSet) -> Vec<Word> {
    if n == 0 {
        return vec![Word::empty()];
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| ClassIter::with_prefix(n, patterns, &[first]).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// `|S_n(patterns)|`, counted in parallel over first letters.
pub fn count_class_par(n: usize, patterns: &PatternSet) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=n as u32).into_par_iter().map(|first| ClassIter::with_prefix(n, patterns, &[first]).count() as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_class() {
        let ps = PatternSet::from_digit_strs(&["21"]);
        let all: Vec<_> = enumerate_class(1, &ps).collect();
        assert_eq!(all, vec![Word::identity(1)]);
        assert_eq!(enumerate_class(4, &ps).count(), 1);
    }

    #[test]
    fn small_classes() {
        let ps = PatternSet::from_digit_strs(&["3124", "3214"]);
        assert_eq!(enumerate_class(4, &ps).count(), 22);
        let ps = PatternSet::from_digit_strs(&["31245", "32145", "31254", "32154"]);
        assert_eq!(enumerate_class(7, &ps).count(), 3720);
    }

    #[test]
    fn stream_is_lexicographic_and_matches_parallel_collect() {
        let ps = PatternSet::from_digit_strs(&["321"]);
        let seq: Vec<_> = enumerate_class(6, &ps).collect();
        let mut sorted = seq.clone();
        sorted.sort();
        assert_eq!(seq, sorted);
        assert_eq!(seq, collect_class_par(6, &ps));
        assert_eq!(seq.len(), 132);
    }

    #[test]
    fn bad_prefix_yields_nothing() {
        let ps = PatternSet::from_digit_strs(&["21"]);
        assert_eq!(ClassIter::with_prefix(3, &ps, &[2]).count(), 0);
        assert_eq!(ClassIter::with_prefix(3, &ps, &[1, 1]).count(), 0);
        assert_eq!(ClassIter::with_prefix(3, &ps, &[1, 2, 3]).count(), 1);
    }
}
