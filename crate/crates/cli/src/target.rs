//! What a `--class` / `--patterns` pair names, and enumeration over it.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;

use quintperm::classes::{self, NamedClass};
use quintperm::invseq::{avoiders_201_210, count_avoiders_201_210, inv_statistics, InvStatRecord};
use quintperm::permcore::{collect_class_par, count_class_par, statistics, Statistic};
use quintperm::PatternSet;

use crate::ClassArgs;

#[derive(Debug, Clone)]
pub enum Target {
    Sequences,
    Permutations { label: String, patterns: PatternSet },
}

impl Target {
    pub fn resolve(args: &ClassArgs) -> Result<Self> {
        match (&args.class, &args.patterns) {
            (Some(alias), _) => match classes::resolve(alias) {
                Some(NamedClass::InversionSequences) => Ok(Target::Sequences),
                Some(NamedClass::Permutations(patterns)) => {
                    Ok(Target::Permutations { label: alias.trim().to_string(), patterns })
                }
                None => bail!("unknown class alias `{alias}`; `quintperm classes` lists them"),
            },
            (None, Some(p)) => {
                let patterns = PatternSet::from_str(p).with_context(|| format!("bad pattern list `{p}`"))?;
                Ok(Target::Permutations { label: format!("S_n({patterns})"), patterns })
            }
            (None, None) => bail!("give --class or --patterns"),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Target::Sequences => String::from("I201210"),
            Target::Permutations { label, .. } => label.clone(),
        }
    }

    pub fn count(&self, n: usize) -> u64 {
        match self {
            Target::Sequences => count_avoiders_201_210(n),
            Target::Permutations { patterns, .. } => count_class_par(n, patterns),
        }
    }

    /// Joint statistic counts at length `n`, keyed by the value tuple.
    pub fn distribution(&self, n: usize, stats: &[Stat]) -> Result<BTreeMap<Vec<usize>, u64>> {
        let rows: Vec<Vec<usize>> = match self {
            Target::Sequences => avoiders_201_210(n)
                .par_iter()
                .map(|e| {
                    let r = inv_statistics(e);
                    stats.iter().map(|s| s.of_sequence(&r)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?,
            Target::Permutations { patterns, .. } => collect_class_par(n, patterns)
                .par_iter()
                .map(|w| {
                    if w.is_empty() {
                        return Ok(vec![0; stats.len()]);
                    }
                    let r = statistics(w)?;
                    stats.iter().map(|s| s.of_permutation(&r)).collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?,
        };
        let mut table = BTreeMap::new();
        for r in rows {
            *table.entry(r).or_insert(0) += 1;
        }
        Ok(table)
    }
}

/// A statistic name, for permutations or for inversion sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stat {
    Perm(Statistic),
    Dist,
    Rep,
    SeqRlmin,
    Zero,
    Satu,
}

impl Stat {
    pub fn parse(name: &str, target: &Target) -> Result<Self> {
        match target {
            Target::Permutations { .. } => Statistic::from_str(name)
                .map(Stat::Perm)
                .map_err(|_| anyhow!("unknown permutation statistic `{name}`; known: {}", perm_names())),
            Target::Sequences => match name.trim().to_ascii_lowercase().as_str() {
                "dist" => Ok(Stat::Dist),
                "rep" => Ok(Stat::Rep),
                "rlmin" => Ok(Stat::SeqRlmin),
                "zero" => Ok(Stat::Zero),
                "satu" => Ok(Stat::Satu),
                _ => bail!("unknown inversion sequence statistic `{name}`; known: dist, rep, rlmin, zero, satu"),
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Stat::Perm(s) => s.name(),
            Stat::Dist => "dist",
            Stat::Rep => "rep",
            Stat::SeqRlmin => "rlmin",
            Stat::Zero => "zero",
            Stat::Satu => "satu",
        }
    }

    fn of_permutation(self, r: &quintperm::permcore::StatRecord) -> Result<usize> {
        match self {
            Stat::Perm(s) => Ok(s.value(r)),
            other => bail!("`{}` is an inversion sequence statistic", other.name()),
        }
    }

    fn of_sequence(self, r: &InvStatRecord) -> Result<usize> {
        Ok(match self {
            Stat::Dist => r.dist,
            Stat::Rep => r.rep,
            Stat::SeqRlmin => r.rlmin,
            Stat::Zero => r.zero,
            Stat::Satu => r.satu,
            Stat::Perm(s) => bail!("`{s}` is a permutation statistic"),
        })
    }
}

fn perm_names() -> String {
    Statistic::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}
