//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's own containment, enumeration or statistics code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use quintperm::bijections::CaseTag;
use quintperm::genfun::Label;

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<u32>> {
    (1..=n as u32).permutations(n).collect()
}

fn order_type(xs: &[u32]) -> Vec<u32> {
    xs.iter().map(|&x| 1 + xs.iter().filter(|&&y| y < x).count() as u32).collect()
}

/// Containment by trying every subsequence of the pattern's length.
pub fn naive_contains(w: &[u32], p: &[u32]) -> bool {
    p.len() <= w.len() && w.iter().copied().combinations(p.len()).any(|sub| order_type(&sub) == p)
}

pub fn digits(p: &str) -> Vec<u32> {
    p.chars().map(|c| c.to_digit(10).unwrap()).collect()
}

/// `S_n(patterns)` by filtering all of `S_n`.
pub fn brute_class(n: usize, patterns: &[&str]) -> Vec<Vec<u32>> {
    let ps: Vec<Vec<u32>> = patterns.iter().map(|p| digits(p)).collect();
    all_perms(n).into_iter().filter(|w| ps.iter().all(|p| !naive_contains(w, p))).collect()
}

/// Every inversion sequence of length `n`.
pub fn all_inversion_sequences(n: usize) -> Vec<Vec<u32>> {
    (0..n).map(|i| 0..=i as u32).multi_cartesian_product().collect()
}

/// Sequence containment with strictly ordered witnesses; `p` has distinct letters.
pub fn naive_seq_contains(e: &[u32], p: &[u32]) -> bool {
    e.iter().copied().combinations(p.len()).any(|sub| {
        (0..p.len()).all(|i| (0..p.len()).all(|j| (p[i] < p[j]) == (sub[i] < sub[j]) && (p[i] == p[j]) == (sub[i] == sub[j])))
    })
}

pub fn avoids_201_210(e: &[u32]) -> bool {
    !naive_seq_contains(e, &[2, 0, 1]) && !naive_seq_contains(e, &[2, 1, 0])
}

/// `I_n(201,210)` by filtering every inversion sequence.
pub fn brute_avoiders(n: usize) -> Vec<Vec<u32>> {
    all_inversion_sequences(n).into_iter().filter(|e| avoids_201_210(e)).collect()
}

/// `(p,q)` of a non-empty avoider, by trying every next entry.
pub fn naive_parameters(e: &[u32]) -> Label {
    let last = *e.last().unwrap();
    let legal: Vec<u32> = (0..=e.len() as u32)
        .filter(|&k| {
            let mut longer = e.to_vec();
            longer.push(k);
            avoids_201_210(&longer)
        })
        .collect();
    Label::new(legal.iter().filter(|&&k| k > last).count() as u32, legal.iter().filter(|&&k| k <= last).count() as u32)
}

/// Set statistics of a word, computed straight from the definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quintuple {
    pub ides: BTreeSet<u32>,
    pub lrmax: BTreeSet<u32>,
    pub lrmin: BTreeSet<u32>,
    pub rlmax: BTreeSet<u32>,
    pub iar: BTreeSet<u32>,
    pub br: BTreeSet<u32>,
}

pub fn quintuple(w: &[u32]) -> Quintuple {
    let n = w.len();
    let pick = |keep: &dyn Fn(usize) -> bool| -> BTreeSet<u32> { (0..n).filter(|&i| keep(i)).map(|i| w[i]).collect() };
    let lrmax = pick(&|i| w[..i].iter().all(|&y| y < w[i]));
    let lrmin = pick(&|i| w[..i].iter().all(|&y| y > w[i]));
    let rlmax = pick(&|i| w[i + 1..].iter().all(|&y| y < w[i]));
    let iar = pick(&|i| (0..i).all(|j| w[j] < w[j + 1]));
    let peak = |i: usize| (i == 0 || w[i - 1] < w[i]) && (i + 1 == n || w[i + 1] < w[i]);
    let br = pick(&|i| peak(i) && w[..i].iter().all(|&y| y < w[i]));
    // Ides of the standardization: rank r is an inverse descent when the
    // letter of rank r+1 sits further left than the letter of rank r.
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let pos = |letter: u32| w.iter().position(|&y| y == letter).unwrap();
    let ides = (1..n as u32).filter(|&r| pos(sorted[r as usize]) < pos(sorted[r as usize - 1])).collect();
    Quintuple { ides, lrmax, lrmin, rlmax, iar, br }
}

fn position(w: &[u32], letter: u32) -> usize {
    w.iter().position(|&y| y == letter).unwrap()
}

fn lr_positions(w: &[u32]) -> Vec<usize> {
    (0..w.len()).filter(|&i| w[..i].iter().all(|&y| y < w[i])).collect()
}

fn rl_positions(w: &[u32]) -> Vec<usize> {
    (0..w.len()).filter(|&i| w[i + 1..].iter().all(|&y| y < w[i])).collect()
}

fn adjacent_in_order(v: &[u32], a: u32, b: u32) -> bool {
    position(v, a) + 1 == position(v, b)
}

fn adjacent(v: &[u32], a: u32, b: u32) -> bool {
    position(v, a).abs_diff(position(v, b)) == 1
}

/// A failed structure claim for `w -> alpha(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `w_{l_i} w_{l_i + 1}` (1-based `i`) is not adjacent in the image.
    Split { i: usize, descent: bool },
    LandmarkOrder,
    Adjacency(&'static str),
    SideClaim,
}

/// Checks, for a source word `w` of case `tag` and its image `v`: relative
/// order of the three landmark letters, the adjacency characterization,
/// left-to-right-maximum adjacency, and the side claims attached to the
/// second structure lemma.
///
/// Descents are checked at `l_1..l_{s-2}` for II-4 and at `l_1..l_{s-1}`
/// for every other case, ascents at `l_1..l_{s-2}`.
pub fn alpha_structure(w: &[u32], v: &[u32], tag: CaseTag) -> Vec<Violation> {
    let lr = lr_positions(w);
    let rl = rl_positions(w);
    let s = lr.len();
    let mut out = Vec::new();

    let desc_top = if tag == CaseTag::II4 { s.saturating_sub(2) } else { s.saturating_sub(1) };
    for (i, &l) in lr.iter().enumerate() {
        if l + 1 >= w.len() {
            continue;
        }
        let (a, b) = (w[l], w[l + 1]);
        let descent = a > b;
        let in_range = if descent { i + 1 <= desc_top } else { i + 1 <= s.saturating_sub(2) };
        if in_range && !adjacent_in_order(v, a, b) {
            out.push(Violation::Split { i: i + 1, descent });
        }
    }

    let nontrivial = s > 1 && rl.len() > 1 && lr[s - 1] > s - 1;
    if !nontrivial {
        return out;
    }
    let (ls, prev, r2) = (lr[s - 1], lr[s - 2], rl[1]);
    let letters = [w[prev], w[ls], w[r2]];
    let order = |x: &[u32]| {
        let mut ls = letters;
        ls.sort_by_key(|&c| position(x, c));
        ls
    };
    if order(w) != order(v) {
        out.push(Violation::LandmarkOrder);
    }
    if w[prev] < w[r2] {
        if (prev + 1 == ls) != adjacent(v, w[prev], w[ls]) {
            out.push(Violation::Adjacency("last two maxima"));
        }
    } else if s > 2 {
        let pp = lr[s - 3];
        if (pp + 1 == prev) != adjacent(v, w[pp], w[prev]) {
            out.push(Violation::Adjacency("maxima s-2 and s-1"));
        }
        // Side claims of the II-3 and II-4 shapes.
        let x = (0..prev).rev().find(|&j| w[j] > w[j + 1]);
        if let Some(x) = x {
            if ls > prev + 1 {
                let between = &w[prev + 1..ls];
                let k = (prev + 1..ls).rev().find(|&i| w[x] < w[i] && w[i] < w[prev]);
                let claim = match k {
                    Some(k) => k + 1 < ls,
                    None => between.iter().all(|&y| y < w[x]),
                };
                if claim && w[x] < w[r2] {
                    out.push(Violation::SideClaim);
                }
            }
        }
    }
    out
}

/// Number of left-to-right maxima.
pub fn lrmax_count(w: &[u32]) -> usize {
    lr_positions(w).len()
}

/// Descents `w_i w_{i+1}` left of the maximum stay glued under the block map.
pub fn phi_descents_glued(w: &[u32], v: &[u32]) -> Result<(), String> {
    let Some(x) = w.iter().position(|&y| Some(&y) == w.iter().max()) else { return Ok(()) };
    for i in 0..x {
        if i + 1 < w.len() && w[i] > w[i + 1] && !adjacent_in_order(v, w[i], w[i + 1]) {
            return Err(format!("descent {} {} split: {w:?} -> {v:?}", w[i], w[i + 1]));
        }
    }
    Ok(())
}

/// Every pattern of length `1..=kmax` that `w` contains.
pub fn contained_patterns(w: &[u32], kmax: usize) -> BTreeSet<Vec<u32>> {
    (1..=kmax.min(w.len())).flat_map(|k| w.iter().copied().combinations(k).map(|sub| order_type(&sub))).collect()
}

/// Numeric permutation statistics, straight from the definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Counts {
    pub exc: usize,
    pub lrmax: usize,
    pub lrmin: usize,
    pub rlmax: usize,
    pub rlmin: usize,
    pub lmaxz: usize,
    pub asc: usize,
    pub iasc: usize,
}

pub fn counts(p: &[u32]) -> Counts {
    let n = p.len();
    let count = |keep: &dyn Fn(usize) -> bool| (0..n).filter(|&i| keep(i)).count();
    let one = p.iter().position(|&y| y == 1).unwrap();
    let ascents = |q: &[u32]| (1..q.len()).filter(|&i| q[i - 1] < q[i]).count();
    let mut inv = vec![0u32; n];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    Counts {
        exc: count(&|i| p[i] as usize > i + 1),
        lrmax: count(&|i| p[..i].iter().all(|&y| y < p[i])),
        lrmin: count(&|i| p[..i].iter().all(|&y| y > p[i])),
        rlmax: count(&|i| p[i + 1..].iter().all(|&y| y < p[i])),
        rlmin: count(&|i| p[i + 1..].iter().all(|&y| y > p[i])),
        lmaxz: 1 + count(&|i| i < one && p[..i].iter().all(|&y| y < p[i])),
        asc: ascents(p),
        iasc: ascents(&inv),
    }
}

/// `(dist, rep, rlmin, zero, satu)` of an inversion sequence.
pub fn seq_counts(e: &[u32]) -> (usize, usize, usize, usize, usize) {
    let n = e.len();
    let dist = e.iter().filter(|&&v| v > 0).collect::<BTreeSet<_>>().len();
    let rlmin = (0..n).filter(|&i| e[i + 1..].iter().all(|&y| e[i] < y)).count();
    let zero = e.iter().filter(|&&v| v == 0).count();
    let satu = (0..n).filter(|&i| e[i] as usize == i).count();
    (dist, n.saturating_sub(1) - dist, rlmin, zero, satu)
}

/// The Martinez-Savage coding, written out independently: the `k`-th
/// smallest is taken over the distinct later entries.
pub fn naive_ms_code(p: &[u32]) -> Vec<u32> {
    let n = p.len();
    let mut e = vec![0u32; n];
    for i in (0..n).rev() {
        let pos = i as u32 + 1;
        if p[i] <= pos {
            e[i] = p[i] - 1;
        } else {
            let k = p[..=i].iter().filter(|&&y| y >= p[i]).count();
            let later: BTreeSet<u32> = e[i + 1..].iter().copied().collect();
            e[i] = *later.iter().nth(k - 1).unwrap();
        }
    }
    e
}
