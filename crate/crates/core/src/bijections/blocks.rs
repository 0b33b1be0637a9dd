//! Floor structure of `{3124,3214}`- and `{3142,3241}`-avoiding words and the
//! bijection `phi` between them, with its inverse `psi`.

use serde::Serialize;

use crate::classes;
use crate::error::{Error, Result};
use crate::permcore::stats::lrmax_positions;
use crate::permcore::Word;

/// Parse of a `{3124,3214}`-avoiding word
/// `w_1..w_{i_1} | w_{i_1+1}..w_{i_2} | ... | w_{i_k+1}..w_x | b b_k .. b_1`
/// where `w_x` is the maximum and the `i_j` are the descents before it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeIDecomposition {
    /// 1-based descent positions `i_1 < .. < i_k` left of the maximum.
    pub run_ends: Vec<usize>,
    /// 1-based position `x` of the maximum; 0 for the empty word.
    pub max_position: usize,
    /// Letters after the maximum lying above `w_{i_k}`.
    pub top_block: Word,
    /// `b_1, .., b_k`: `b_j` holds the letters between `w_{i_{j-1}}` and `w_{i_j}`.
    pub floor_blocks: Vec<Word>,
}

impl TypeIDecomposition {
    pub fn k(&self) -> usize {
        self.run_ends.len()
    }

    /// Number of blocks, which equals `|Br(w)|` for non-empty words.
    pub fn block_count(&self) -> usize {
        self.k() + 1
    }

    /// Rebuilds the word from the parse and the original prefix `w_1..w_x`.
    pub fn reassemble(&self, prefix: &[u32]) -> Word {
        let mut v = prefix.to_vec();
        v.extend_from_slice(self.top_block.letters());
        for b in self.floor_blocks.iter().rev() {
            v.extend_from_slice(b.letters());
        }
        Word::from_vec_unchecked(v)
    }
}

/// Parse of a `{3142,3241}`-avoiding word into maximal runs of consecutive
/// left-to-right maxima, each followed by its gap block:
/// `v_{j_1}..v_{j_1+l_1} d_1 .. v_{j_{k+1}}..v_{j_{k+1}+l_{k+1}} d_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeIIDecomposition {
    /// `(j_s, l_s + 1)`: 1-based start and length of each run.
    pub runs: Vec<(usize, usize)>,
    /// `d_1, .., d_{k+1}`; only the last one may be empty.
    pub gap_blocks: Vec<Word>,
}

impl TypeIIDecomposition {
    pub fn k(&self) -> usize {
        self.runs.len().saturating_sub(1)
    }
}

fn descents_before(w: &[u32], x: usize) -> Vec<usize> {
    (0..x).filter(|&i| w[i] > w[i + 1]).collect()
}

fn argmax(w: &[u32]) -> usize {
    w.iter().enumerate().max_by_key(|(_, &v)| v).map(|(i, _)| i).expect("non-empty word")
}

// Floor of a letter after the maximum: 0 for b_1, .., k-1 for b_k and k for b.
fn floor_of(y: u32, thresholds: &[u32]) -> usize {
    thresholds.iter().take_while(|&&t| t < y).count()
}

/// Type I parse of a `{3124,3214}`-avoiding word.
pub fn decompose_type_one(w: &Word) -> Result<TypeIDecomposition> {
    classes::type_one().require_avoided(w)?;
    let x = w.letters();
    if x.is_empty() {
        return Ok(TypeIDecomposition {
            run_ends: vec![],
            max_position: 0,
            top_block: Word::empty(),
            floor_blocks: vec![],
        });
    }
    let m = argmax(x);
    let descents = descents_before(x, m);
    let thresholds: Vec<u32> = descents.iter().map(|&i| x[i]).collect();
    let k = descents.len();
    let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    let mut last_floor = k;
    for &y in &x[m + 1..] {
        let f = floor_of(y, &thresholds);
        if f > last_floor {
            return Err(Error::Invariant(format!("floors of `{w}` are not stacked top to bottom")));
        }
        last_floor = f;
        blocks[f].push(y);
    }
    let top_block = Word::from_vec_unchecked(blocks.pop().unwrap_or_default());
    Ok(TypeIDecomposition {
        run_ends: descents.iter().map(|&i| i + 1).collect(),
        max_position: m + 1,
        top_block,
        floor_blocks: blocks.into_iter().map(Word::from_vec_unchecked).collect(),
    })
}

fn lrmax_runs(v: &[u32]) -> Vec<(usize, usize)> {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for p in lrmax_positions(v) {
        match runs.last_mut() {
            Some((start, len)) if *start + *len == p => *len += 1,
            _ => runs.push((p, 1)),
        }
    }
    runs
}

/// Type II parse of a `{3142,3241}`-avoiding word.
pub fn decompose_type_two(v: &Word) -> Result<TypeIIDecomposition> {
    classes::type_two().require_avoided(v)?;
    let x = v.letters();
    let runs = lrmax_runs(x);
    let mut gap_blocks = Vec::with_capacity(runs.len());
    for (s, &(start, len)) in runs.iter().enumerate() {
        let end = runs.get(s + 1).map_or(x.len(), |r| r.0);
        gap_blocks.push(Word::from_vec_unchecked(x[start + len..end].to_vec()));
    }
    Ok(TypeIIDecomposition { runs: runs.iter().map(|&(s, l)| (s + 1, l)).collect(), gap_blocks })
}

pub(crate) fn phi_raw(w: &[u32]) -> Vec<u32> {
    if w.is_empty() {
        return Vec::new();
    }
    let m = argmax(w);
    let descents = descents_before(w, m);
    if descents.is_empty() {
        let mut rest = w.to_vec();
        let top = rest.remove(m);
        let mut out = phi_raw(&rest);
        out.insert(m, top);
        return out;
    }
    let thresholds: Vec<u32> = descents.iter().map(|&i| w[i]).collect();
    let k = descents.len();
    let mut pieces: Vec<Vec<u32>> = Vec::with_capacity(k + 1);
    let mut start = 0;
    for &d in &descents {
        pieces.push(w[start..=d + 1].to_vec());
        start = d + 2;
    }
    pieces.push(w[start..=m].to_vec());
    for &y in &w[m + 1..] {
        pieces[floor_of(y, &thresholds)].push(y);
    }
    pieces.iter().flat_map(|p| phi_raw(p)).collect()
}

pub(crate) fn psi_raw(v: &[u32]) -> Vec<u32> {
    if v.is_empty() {
        return Vec::new();
    }
    let runs = lrmax_runs(v);
    if runs.len() == 1 {
        let m = runs[0].0 + runs[0].1 - 1;
        let mut rest = v.to_vec();
        let top = rest.remove(m);
        let mut out = psi_raw(&rest);
        out.insert(m, top);
        return out;
    }
    let mut heads: Vec<u32> = Vec::with_capacity(v.len());
    let mut tails: Vec<Vec<u32>> = Vec::with_capacity(runs.len());
    for (s, &(start, len)) in runs.iter().enumerate() {
        let end = runs.get(s + 1).map_or(v.len(), |r| r.0);
        let image = psi_raw(&v[start..end]);
        let cut = if s + 1 == runs.len() { image.len() } else { len + 1 };
        heads.extend_from_slice(&image[..cut]);
        tails.push(image[cut..].to_vec());
    }
    for t in tails.iter().rev() {
        heads.extend_from_slice(t);
    }
    heads
}

/// Maps a `{3124,3214}`-avoiding word to a `{3142,3241}`-avoiding word,
/// preserving `(Br, Ides, Lrmax, Lrmin, Iar)`.
pub fn phi(w: &Word) -> Result<Word> {
    classes::type_one().require_avoided(w)?;
    Ok(Word::from_vec_unchecked(phi_raw(w.letters())))
}

/// Inverse of [`phi`].
pub fn psi(v: &Word) -> Result<Word> {
    classes::type_two().require_avoided(v)?;
    Ok(Word::from_vec_unchecked(psi_raw(v.letters())))
}
