//! Exhaustive check suites. Each check reports how many cases it saw, how
//! many failed, and the first failure in enumeration order.

use std::io::Write;

use anyhow::Result;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use quintperm::bijections::{alpha, beta, phi, psi};
use quintperm::classes;
use quintperm::genfun::{
    algebraic_residual, closed_form_series, count_by_succession, parameters, satu_residual, type_two_report,
    successors, SatuForm,
};
use quintperm::invseq::{avoiders_201_210, count_avoiders_201_210, extension_avoids_201_210, inv_statistics, ms_code};
use quintperm::permcore::{collect_class_par, count_class_par, statistics};
use quintperm::{PatternSet, Word};

use crate::render::json_line;
use crate::{check_limit, Format, Suite};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
    pub reproduce: Option<String>,
}

impl Check {
    fn passed(&self) -> bool {
        self.failures == 0
    }

    fn single(name: &str, ok: bool, what: impl FnOnce() -> String, reproduce: Option<String>) -> Check {
        Check {
            name: name.to_string(),
            checked: 1,
            failures: u64::from(!ok),
            counterexample: (!ok).then(what),
            reproduce: if ok { None } else { reproduce },
        }
    }
}

fn map_command(bijection: &str, w: &Word) -> String {
    format!("quintperm map --bijection {bijection} --input \"{w}\"")
}

/// Runs `ok` on every word of the class for `n = 1..=n_max`.
fn sweep(name: &str, n_max: usize, ps: &PatternSet, bijection: &str, ok: impl Fn(&Word) -> bool + Sync) -> Check {
    let mut check = Check { name: name.to_string(), checked: 0, failures: 0, counterexample: None, reproduce: None };
    for n in 1..=n_max {
        let words = collect_class_par(n, ps);
        let bad: Vec<usize> = (0..words.len()).into_par_iter().filter(|&i| !ok(&words[i])).collect();
        check.checked += words.len() as u64;
        check.failures += bad.len() as u64;
        if check.counterexample.is_none() {
            if let Some(&i) = bad.first() {
                check.counterexample = Some(words[i].to_string());
                check.reproduce = Some(map_command(bijection, &words[i]));
            }
        }
    }
    check
}

fn roundtrip(n: usize) -> Vec<Check> {
    vec![
        sweep("beta after alpha", n, classes::alpha_source(), "alpha", |w| {
            alpha(w).and_then(|v| beta(&v)).ok().as_ref() == Some(w)
        }),
        sweep("alpha after beta", n, classes::alpha_target(), "beta", |v| {
            beta(v).and_then(|w| alpha(&w)).ok().as_ref() == Some(v)
        }),
        sweep("psi after phi", n, classes::type_one(), "phi", |w| phi(w).and_then(|v| psi(&v)).ok().as_ref() == Some(w)),
        sweep("phi after psi", n, classes::type_two(), "psi", |v| psi(v).and_then(|w| phi(&w)).ok().as_ref() == Some(v)),
    ]
}

fn statistic_preservation(n: usize) -> Vec<Check> {
    vec![
        sweep("alpha keeps (Ides,Lrmax,Lrmin,Rlmax,Iar)", n, classes::alpha_source(), "alpha", |w| {
            let (Ok(v), Ok(a)) = (alpha(w), statistics(w)) else { return false };
            let Ok(b) = statistics(&v) else { return false };
            (a.ides, a.lrmax, a.lrmin, a.rlmax, a.iar) == (b.ides, b.lrmax, b.lrmin, b.rlmax, b.iar)
        }),
        sweep("phi keeps (Br,Ides,Lrmax,Lrmin,Iar)", n, classes::type_one(), "phi", |w| {
            let (Ok(v), Ok(a)) = (phi(w), statistics(w)) else { return false };
            let Ok(b) = statistics(&v) else { return false };
            (a.br, a.ides, a.lrmax, a.lrmin, a.iar) == (b.br, b.ides, b.lrmax, b.lrmin, b.iar)
        }),
        sweep("ms takes (exc,rlmin,lmaxz) to (rep,rlmin,zero)", n, classes::ms_class(), "ms", |w| {
            let (Ok(e), Ok(a)) = (ms_code(w), statistics(w)) else { return false };
            let b = inv_statistics(&e);
            (a.exc, a.rlmin.len(), a.lmaxz) == (b.rep, b.rlmin, b.zero)
        }),
    ]
}

fn succession(n: usize) -> Result<Vec<Check>> {
    let mut counts = Check { name: "rule counts = enumeration".into(), checked: 0, failures: 0, counterexample: None, reproduce: None };
    for k in 1..=n {
        counts.checked += 1;
        let (rule, brute) = (count_by_succession(k), count_avoiders_201_210(k));
        if rule != brute.into() {
            counts.failures += 1;
            if counts.counterexample.is_none() {
                counts.counterexample = Some(format!("n = {k}: rule {rule}, enumeration {brute}"));
                counts.reproduce = Some(format!("quintperm count --class I201210 --n {k}"));
            }
        }
    }
    let mut labels = Check { name: "child labels follow the rule".into(), checked: 0, failures: 0, counterexample: None, reproduce: None };
    for k in 1..n {
        let seqs = avoiders_201_210(k);
        let bad: Vec<usize> = (0..seqs.len())
            .into_par_iter()
            .filter(|&i| {
                let e = &seqs[i];
                let Ok(label) = parameters(e) else { return true };
                let mut children = Vec::new();
                for x in 0..=k as u32 {
                    if extension_avoids_201_210(e.entries(), x) {
                        match e.extended(x).and_then(|longer| parameters(&longer)) {
                            Ok(l) => children.push(l),
                            Err(_) => return true,
                        }
                    }
                }
                let mut rule = successors(label);
                children.sort();
                rule.sort();
                children != rule
            })
            .collect();
        labels.checked += seqs.len() as u64;
        labels.failures += bad.len() as u64;
        if labels.counterexample.is_none() {
            labels.counterexample = bad.first().map(|&i| seqs[i].to_string());
        }
    }
    Ok(vec![counts, labels])
}

fn algebraic(n: usize) -> Result<Vec<Check>> {
    let a = closed_form_series(n)?;
    let mut agree = Check { name: "closed form = succession".into(), checked: 0, failures: 0, counterexample: None, reproduce: None };
    for k in 1..=n {
        agree.checked += 1;
        let rule = BigInt::from(count_by_succession(k));
        if a.coeffs[k] != rule {
            agree.failures += 1;
            if agree.counterexample.is_none() {
                agree.counterexample = Some(format!("t^{k}: closed form {}, rule {rule}", a.coeffs[k]));
                agree.reproduce = Some(format!("quintperm series --n-max {n} --method closed-form"));
            }
        }
    }
    let residual = algebraic_residual(&a.coeffs, n);
    let first = residual.iter().position(|c| !c.is_zero());
    let eq = Check::single(
        "quadratic equation",
        first.is_none(),
        || format!("residual nonzero at t^{}", first.unwrap_or_default()),
        None,
    );
    Ok(vec![agree, eq])
}

fn saturated(n: usize) -> Result<Vec<Check>> {
    let r = satu_residual(n, SatuForm::Derived)?;
    let low = r.terms().map(|(e, _)| e[0]).min();
    Ok(vec![Check::single(
        "saturated-entry equation",
        r.is_zero(),
        || format!("residual nonzero from t^{}", low.unwrap_or_default()),
        None,
    )])
}

fn thirteen(n: usize) -> Vec<Check> {
    let sets = classes::thirteen();
    let mut check = Check { name: "13 classes agree".into(), checked: 0, failures: 0, counterexample: None, reproduce: None };
    for k in 1..=n {
        let counts: Vec<u64> = sets.iter().map(|ps| count_class_par(k, ps)).collect();
        check.checked += 1;
        if let Some(j) = counts.iter().position(|&c| c != counts[0]) {
            check.failures += 1;
            if check.counterexample.is_none() {
                check.counterexample = Some(format!("n = {k}: K01 has {}, K{:02} has {}", counts[0], j + 1, counts[j]));
                check.reproduce = Some(format!("quintperm count --class K{:02} --n {k}", j + 1));
            }
        }
    }
    vec![check]
}

fn type_two(n: usize) -> Result<Vec<Check>> {
    let r = type_two_report(n)?;
    let single = |name: &str, ok: bool| Check::single(name, ok, || format!("identity fails through z^{n}"), None);
    Ok(vec![
        single("S = I + B (S(1,t,p,1) + 1)", r.eq_s),
        single("equation for B", r.eq_b),
        single("combined equation for S", r.combined),
    ])
}

fn suite_checks(suite: Suite, n: usize, limit: usize) -> Result<Vec<(Suite, Vec<Check>)>> {
    let enumerating = !matches!(suite, Suite::Algebraic);
    if enumerating {
        check_limit(n, limit)?;
    }
    Ok(match suite {
        Suite::Roundtrip => vec![(suite, roundtrip(n))],
        Suite::StatisticPreservation => vec![(suite, statistic_preservation(n))],
        Suite::Succession => vec![(suite, succession(n)?)],
        Suite::Algebraic => vec![(suite, algebraic(n)?)],
        Suite::Saturated => vec![(suite, saturated(n)?)],
        Suite::Thirteen => vec![(suite, thirteen(n))],
        Suite::TypeTwo => vec![(suite, type_two(n)?)],
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Roundtrip,
                Suite::StatisticPreservation,
                Suite::Succession,
                Suite::Algebraic,
                Suite::Saturated,
                Suite::Thirteen,
                Suite::TypeTwo,
            ] {
                all.extend(suite_checks(s, n, limit)?);
            }
            all
        }
    })
}

fn suite_name(s: Suite) -> String {
    use clap::ValueEnum;
    s.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// Prints one line per check and returns whether all passed.
pub fn run(out: &mut impl Write, suite: Suite, n: usize, format: Format, limit: usize) -> Result<bool> {
    let results = suite_checks(suite, n, limit)?;
    let pass = results.iter().all(|(_, cs)| cs.iter().all(Check::passed));
    match format {
        Format::Json => {
            let suites: Vec<_> =
                results.iter().map(|(s, cs)| json!({"suite": suite_name(*s), "checks": cs})).collect();
            json_line(out, &json!({"n": n, "pass": pass, "suites": suites}))?;
        }
        _ => {
            for (s, checks) in &results {
                for c in checks {
                    let verdict = if c.passed() { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{verdict} {} / {} (n <= {n}): {} cases, {} counterexamples",
                        suite_name(*s),
                        c.name,
                        c.checked,
                        c.failures
                    )?;
                    if let Some(x) = &c.counterexample {
                        writeln!(out, "  first counterexample: {x}")?;
                    }
                    if let Some(cmd) = &c.reproduce {
                        writeln!(out, "  reproduce: {cmd}")?;
                    }
                }
            }
        }
    }
    Ok(pass)
}
