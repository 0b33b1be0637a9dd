use crate::error::{Error, Result};
use crate::invseq::InversionSequence;
use crate::permcore::Word;

/// `e_i = |{j < i : pi_j > pi_i}|`.
pub fn lehmer_code(p: &Word) -> Result<InversionSequence> {
    p.require_permutation()?;
    let x = p.letters();
    let e = (0..x.len()).map(|i| x[..i].iter().filter(|&&y| y > x[i]).count() as u32).collect();
    Ok(InversionSequence::from_vec_unchecked(e))
}

// Multiplicities of the entries seen so far; the k-th smallest is taken
// over distinct values.
struct Seen(Vec<u32>);

impl Seen {
    fn new(n: usize) -> Self {
        Seen(vec![0; n.max(1)])
    }

    fn kth_smallest(&self, k: usize) -> Option<u32> {
        self.0.iter().enumerate().filter(|(_, &c)| c > 0).nth(k.checked_sub(1)?).map(|(v, _)| v as u32)
    }

    fn add(&mut self, v: u32) {
        self.0[v as usize] += 1;
    }

    fn remove(&mut self, v: u32) {
        self.0[v as usize] -= 1;
    }
}

/// The Martinez-Savage coding: `e_n = pi_n - 1`, then from right to left
/// `e_i = pi_i - 1` when `pi_i <= i`, and otherwise `e_i` is the `k`-th
/// smallest value of the set `{e_j : j > i}` where `pi_i` is the `k`-th
/// largest of `{pi_1, .., pi_i}`.
///
/// Repeated values count once; counting them with multiplicity does not give
/// an injective map (`5 8 2 9 3 7 4 1 6` and `8 5 2 9 3 7 4 1 6` would collide).
pub fn ms_code(p: &Word) -> Result<InversionSequence> {
    p.require_permutation()?;
    let x = p.letters();
    let n = x.len();
    let mut e = vec![0u32; n];
    let mut suffix = Seen::new(n);
    for i in (0..n).rev() {
        let pos = i as u32 + 1;
        e[i] = if i + 1 == n || x[i] <= pos {
            x[i] - 1
        } else {
            let k = 1 + x[..i].iter().filter(|&&y| y > x[i]).count();
            suffix.kth_smallest(k).ok_or_else(|| Error::Invariant(format!("no {k}-th entry while coding {p}")))?
        };
        suffix.add(e[i]);
    }
    InversionSequence::new(e).map_err(|err| Error::Invariant(format!("coding of {p} is not an inversion sequence: {err}")))
}

/// Inverse of [`ms_code`], found by a right-to-left search that fixes
/// `pi_n, pi_{n-1}, ..` and keeps only letters reproducing `e_i`.
pub fn ms_decode(e: &InversionSequence) -> Result<Word> {
    let n = e.len();
    let mut remaining: Vec<bool> = vec![true; n + 1];
    let mut out = vec![0u32; n];
    let mut suffix = Seen::new(n);
    if search(e.entries(), n, &mut remaining, &mut out, &mut suffix) {
        let w = Word::new(out).map_err(|err| Error::Invariant(err.to_string()))?;
        debug_assert_eq!(ms_code(&w).as_ref(), Ok(e));
        Ok(w)
    } else {
        Err(Error::Invariant(format!("{e} has no preimage under the coding")))
    }
}

fn search(e: &[u32], i: usize, remaining: &mut [bool], out: &mut [u32], suffix: &mut Seen) -> bool {
    if i == 0 {
        return true;
    }
    let n = e.len();
    let target = e[i - 1];
    let candidates: Vec<u32> = if i == n {
        vec![target + 1]
    } else {
        (1..=n as u32)
            .filter(|&v| remaining[v as usize])
            .filter(|&v| {
                if v as usize <= i {
                    v - 1 == target
                } else {
                    let k = 1 + (v + 1..=n as u32).filter(|&r| remaining[r as usize]).count();
                    suffix.kth_smallest(k) == Some(target)
                }
            })
            .collect()
    };
    for v in candidates {
        if v as usize > n || !remaining[v as usize] {
            continue;
        }
        remaining[v as usize] = false;
        out[i - 1] = v;
        suffix.add(target);
        if search(e, i - 1, remaining, out, suffix) {
            return true;
        }
        suffix.remove(target);
        remaining[v as usize] = true;
    }
    false
}
