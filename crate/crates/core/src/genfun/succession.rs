//! The generating tree of `(201,210)`-avoiding inversion sequences.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invseq::{extension_avoids_201_210, seq_contains, InversionSequence};

/// Parameters `(p, q)`: legal next entries above, and at or below, the last entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label {
    pub p: u32,
    pub q: u32,
}

impl Label {
    pub const ROOT: Label = Label { p: 1, q: 1 };

    pub fn new(p: u32, q: u32) -> Self {
        Label { p, q }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Parameters of a non-empty `(201,210)`-avoiding sequence, by testing every
/// one-entry extension.
pub fn parameters(e: &InversionSequence) -> Result<Label> {
    let x = e.entries();
    let Some(&last) = x.last() else {
        return Err(Error::Invariant(String::from("the empty sequence has no parameters")));
    };
    for pattern in [[2, 0, 1], [2, 1, 0]] {
        if seq_contains(e, &pattern)? {
            return Err(Error::SequenceContainsPattern {
                entries: e.to_string(),
                pattern: pattern.iter().map(u32::to_string).collect(),
            });
        }
    }
    let legal = |k: &u32| extension_avoids_201_210(x, *k);
    let p = (last + 1..=x.len() as u32).filter(legal).count() as u32;
    let q = (0..=last).filter(legal).count() as u32;
    Ok(Label { p, q })
}

/// Child labels of `l`: `(p,q+1), (p-1,q+2), .., (1,q+p)`, then `(p+1,q)`
/// and `q-1` copies of `(p+2,1)`.
pub fn successors(l: Label) -> Vec<Label> {
    let mut out: Vec<Label> = (1..=l.p).map(|i| Label::new(l.p + 1 - i, l.q + i)).collect();
    out.push(Label::new(l.p + 1, l.q));
    out.extend(std::iter::repeat(Label::new(l.p + 2, 1)).take(l.q.saturating_sub(1) as usize));
    out
}

/// Label multiplicities at one level of the generating tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelProfile {
    pub level: usize,
    pub counts: HashMap<Label, BigUint>,
}

impl LevelProfile {
    /// Level 1: the single sequence `(0)` with label `(1,1)`.
    pub fn root() -> Self {
        LevelProfile { level: 1, counts: HashMap::from([(Label::ROOT, BigUint::one())]) }
    }

    pub fn next(&self) -> Self {
        let mut counts: HashMap<Label, BigUint> = HashMap::new();
        for (&l, c) in &self.counts {
            for child in successors(l) {
                *counts.entry(child).or_default() += c;
            }
        }
        LevelProfile { level: self.level + 1, counts }
    }

    pub fn at(n: usize) -> Self {
        let mut profile = Self::root();
        while profile.level < n {
            profile = profile.next();
        }
        profile
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }
}

/// `|I_n(201,210)|` from the succession rule.
///
/// Only two vectors per level are kept: `m0[a]`, the number of labels with
/// `p = a`, and `m1[a]`, the sum of their `q`. Both evolve on their own
/// because the children of `(p,q)` depend on `q` linearly.
pub fn count_by_succession(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let (m0, _) = projected_profile(n);
    m0.iter().sum()
}

/// `(m0, m1)` at level `n >= 1`, indexed by `p` (index 0 unused).
pub fn projected_profile(n: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut m0 = vec![BigUint::zero(), BigUint::one()];
    let mut m1 = vec![BigUint::zero(), BigUint::one()];
    for _ in 1..n {
        let top = m0.len() - 1;
        // Suffix sums of m0, m1 and (p+1) m0 over p >= a.
        let mut s0 = vec![BigUint::zero(); top + 2];
        let mut s1 = vec![BigUint::zero(); top + 2];
        let mut sw = vec![BigUint::zero(); top + 2];
        for a in (1..=top).rev() {
            s0[a] = &s0[a + 1] + &m0[a];
            s1[a] = &s1[a + 1] + &m1[a];
            sw[a] = &sw[a + 1] + &m0[a] * BigUint::from(a as u64 + 1);
        }
        let mut n0 = vec![BigUint::zero(); top + 3];
        let mut n1 = vec![BigUint::zero(); top + 3];
        for a in 1..=top + 2 {
            let mut c0 = BigUint::zero();
            let mut c1 = BigUint::zero();
            if a <= top {
                // Children (a, q + p + 1 - a) of every label with p >= a.
                c0 += &s0[a];
                c1 += &s1[a] + &sw[a] - &s0[a] * BigUint::from(a as u64);
            }
            if (1..=top).contains(&(a - 1)) {
                // (p+1, q) from p = a - 1.
                c0 += &m0[a - 1];
                c1 += &m1[a - 1];
            }
            if a >= 3 && a - 2 <= top {
                // q - 1 copies of (p+2, 1) from p = a - 2.
                let extra = &m1[a - 2] - &m0[a - 2];
                c0 += &extra;
                c1 += extra;
            }
            n0[a] = c0;
            n1[a] = c1;
        }
        m0 = n0;
        m1 = n1;
    }
    (m0, m1)
}
