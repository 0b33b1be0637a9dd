//! Distribution series over avoidance classes and the type II
//! decomposition equations for `S_n(3142,3241)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::poly::ExactPoly;
use crate::classes;
use crate::error::Result;
use crate::permcore::{collect_class_par, statistics, PatternSet, StatRecord, Statistic, Word};

/// `sum_{n=1..n_max} z^n sum_{pi in S_n(ps)} prod_k s_k^{stat_k(pi)}` over
/// the variables `z, s_1, ..` named after the statistics.
pub fn class_distribution_series(ps: &PatternSet, stats: &[Statistic], n_max: usize) -> Result<ExactPoly> {
    distribution_where(ps, stats, n_max, |_, _| true)
}

fn distribution_where(
    ps: &PatternSet,
    stats: &[Statistic],
    n_max: usize,
    keep: impl Fn(&Word, &StatRecord) -> bool + Sync,
) -> Result<ExactPoly> {
    let mut vars = vec!["z"];
    vars.extend(stats.iter().map(|s| s.name()));
    let mut tally: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for n in 1..=n_max {
        let level = collect_class_par(n, ps)
            .par_iter()
            .map(|w| -> Result<Option<Vec<u32>>> {
                let r = statistics(w)?;
                if !keep(w, &r) {
                    return Ok(None);
                }
                let mut e = vec![n as u32];
                e.extend(stats.iter().map(|s| s.value(&r) as u32));
                Ok(Some(e))
            })
            .try_fold(BTreeMap::new, |mut acc: BTreeMap<Vec<u32>, u64>, e| {
                if let Some(e) = e? {
                    *acc.entry(e).or_default() += 1;
                }
                Ok(acc)
            })
            .try_reduce(BTreeMap::new, |mut a, b| {
                for (e, c) in b {
                    *a.entry(e).or_default() += c;
                }
                Ok(a)
            })?;
        for (e, c) in level {
            *tally.entry(e).or_default() += c;
        }
    }
    let mut out = ExactPoly::zero(&vars);
    for (e, c) in tally {
        out.add_term(e, BigInt::from(c));
    }
    Ok(out)
}

/// `I = xpqz / (1 - xpz)` through `z^n_max`: the identity permutations.
pub fn identity_series(n_max: usize) -> ExactPoly {
    let mut out = ExactPoly::zero(&VARS);
    for n in 1..=n_max as u32 {
        out.add_term(vec![n, n, 0, n, 1], BigInt::from(1));
    }
    out
}

/// Outcome of the type II checks; every field is an exact identity through
/// `z^n_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypeTwoReport {
    /// `S = I + B (S(1,t,p,1) + 1)`.
    pub eq_s: bool,
    /// The equation for `B`, with the correction term `t q p^2 x^2 z^2 / (1-pxz)`.
    pub eq_b: bool,
    /// The combined algebraic equation for `S`, same correction term.
    pub combined: bool,
    /// The equation for `B` with the correction term lacking the factor `q`.
    pub eq_b_printed: bool,
    /// The combined equation with the correction term lacking the factor `q`.
    pub combined_printed: bool,
}

impl TypeTwoReport {
    pub fn holds(&self) -> bool {
        self.eq_s && self.eq_b && self.combined
    }
}

const VARS: [&str; 5] = ["z", "x", "t", "p", "q"];

/// Builds `S` and `B` over `S_n(3142,3241)` by enumeration (weights
/// `x^iar t^ides p^lrmax q^lrmin`) and checks the three identities with all
/// denominators cleared.
pub fn type_two_report(n_max: usize) -> Result<TypeTwoReport> {
    let stats = [Statistic::Iar, Statistic::Ides, Statistic::Lrmax, Statistic::Lrmin];
    let ps = classes::type_two();
    let s = class_distribution_series(ps, &stats, n_max)?.with_var_names(&VARS);
    let b = distribution_where(ps, &stats, n_max, |w, r| {
        let id = w.letters().iter().enumerate().all(|(i, &v)| v as usize == i + 1);
        !id && r.iar.len() == r.lrmax.len()
    })?
    .with_var_names(&VARS);

    let var = |name: &str| ExactPoly::var(&VARS, name).expect("known variable");
    let c = |k: i64| ExactPoly::constant(&VARS, k);
    let (z, x, t, p, q) = (var("z"), var("x"), var("t"), var("p"), var("q"));
    let n = n_max as u32;
    let m = |a: &ExactPoly, b: &ExactPoly| a.mul_truncated(b, 0, n);
    let prod = |fs: &[&ExactPoly]| fs.iter().fold(c(1), |acc, f| m(&acc, f));

    let (xi, pi, qi) = (1, 3, 4);
    let s_1tp1 = s.evaluate(xi, 1).evaluate(qi, 1);
    let s_1t1q = s.evaluate(xi, 1).evaluate(pi, 1);
    let s_pxt1q = s.evaluate(pi, 1).substitute(xi, &(&p * &x));

    let px = &p * &x;
    let pxz = &px * &z;
    let one_px = &c(1) - &px;
    let one_pxz = &c(1) - &pxz;
    let tpxz = &t * &pxz;
    let p2x2 = &px * &px;

    // S (1 - pxz) = xpqz + B (1 - pxz) (S(1,t,p,1) + 1)
    let s_cleared = &m(&s, &one_pxz) - &prod(&[&x, &p, &q, &z]);
    let eq_s = (&s_cleared - &prod(&[&b, &one_pxz, &(&s_1tp1 + &c(1))])).truncate(0, n).is_zero();

    // Right side of the B equation without its B term, times (1-px)(1-pxz).
    let bracket = |with_q: bool| {
        let lead = &tpxz + &prod(&[&tpxz, &(&q - &c(1)), &one_px]);
        let corr = if with_q { prod(&[&t, &q, &p2x2, &z, &z, &one_px]) } else { prod(&[&t, &p2x2, &z, &z, &one_px]) };
        &(&prod(&[&lead, &one_pxz, &s_1t1q]) - &prod(&[&t, &p2x2, &z, &one_pxz, &s_pxt1q])) - &corr
    };
    let b_term = prod(&[&(&c(1) - &t), &pxz, &one_px, &one_pxz, &b]);
    let eq_b_with = |with_q: bool| {
        (&(&prod(&[&one_px, &one_pxz, &b]) - &bracket(with_q)) - &b_term).truncate(0, n).is_zero()
    };
    // (S(1-pxz) - xpqz)(1 - (1-t)pxz)(1-px) = (1 + S(1,t,p,1)) * bracket
    let lhs = prod(&[&s_cleared, &(&c(1) - &m(&(&c(1) - &t), &pxz)), &one_px]);
    let combined_with = |with_q: bool| (&lhs - &m(&(&c(1) + &s_1tp1), &bracket(with_q))).truncate(0, n).is_zero();

    Ok(TypeTwoReport {
        eq_s,
        eq_b: eq_b_with(true),
        combined: combined_with(true),
        eq_b_printed: eq_b_with(false),
        combined_printed: combined_with(false),
    })
}

/// Whether eq. S, the B equation and the combined equation all hold through `z^n_max`.
pub fn verify_type_two_equations(n_max: usize) -> Result<bool> {
    Ok(type_two_report(n_max)?.holds())
}
