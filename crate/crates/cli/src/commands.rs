use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use serde_json::json;

use quintperm::bijections::{alpha, beta, phi, psi};
use quintperm::classes;
use quintperm::genfun::{closed_form_series, count_by_succession, Series};
use quintperm::invseq::{inv_statistics, lehmer_code, ms_code};
use quintperm::permcore::statistics;
use quintperm::Word;

use crate::render::{json_line, record_line, table};
use crate::target::{Stat, Target};
use crate::{check_limit, Bijection, ClassArgs, Format, Method};

pub fn count(out: &mut impl Write, class: &ClassArgs, lengths: RangeInclusive<usize>, format: Format, limit: usize) -> Result<()> {
    let target = Target::resolve(class)?;
    check_limit(*lengths.end(), limit)?;
    let counts: Vec<(usize, u64)> = lengths.map(|n| (n, target.count(n))).collect();
    match format {
        Format::Json => {
            let rows: Vec<_> = counts.iter().map(|(n, c)| json!({"n": n, "count": c})).collect();
            json_line(out, &json!({"class": target.label(), "counts": rows}))?;
        }
        Format::Bfile => {
            for (n, c) in &counts {
                writeln!(out, "{n} {c}")?;
            }
        }
        Format::Text if counts.len() == 1 => writeln!(out, "{}", counts[0].1)?,
        _ => {
            let rows: Vec<Vec<String>> = counts.iter().map(|(n, c)| vec![n.to_string(), c.to_string()]).collect();
            table(out, &["n", "count"], &rows, format)?;
        }
    }
    Ok(())
}

pub fn distribution(
    out: &mut impl Write,
    class: &ClassArgs,
    lengths: RangeInclusive<usize>,
    names: &[String],
    format: Format,
    limit: usize,
) -> Result<()> {
    let target = Target::resolve(class)?;
    check_limit(*lengths.end(), limit)?;
    let stats: Vec<Stat> = names.iter().map(|s| Stat::parse(s, &target)).collect::<Result<_>>()?;
    let mut rows: Vec<(usize, Vec<usize>, u64)> = Vec::new();
    for n in lengths {
        for (values, c) in target.distribution(n, &stats)? {
            rows.push((n, values, c));
        }
    }
    let stat_names: Vec<&str> = stats.iter().map(|s| s.name()).collect();
    match format {
        Format::Json => {
            let rs: Vec<_> = rows.iter().map(|(n, v, c)| json!({"n": n, "values": v, "count": c})).collect();
            json_line(out, &json!({"class": target.label(), "stats": stat_names, "rows": rs}))?;
        }
        Format::Bfile => bail!("a distribution has no b-file form"),
        _ => {
            let mut header = vec!["n"];
            header.extend(&stat_names);
            header.push("count");
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, v, c)| {
                    let mut r = vec![n.to_string()];
                    r.extend(v.iter().map(usize::to_string));
                    r.push(c.to_string());
                    r
                })
                .collect();
            table(out, &header, &cells, format)?;
        }
    }
    Ok(())
}

pub fn map(out: &mut impl Write, bijection: Bijection, input: &str, format: Format) -> Result<()> {
    let w: Word = input.parse().with_context(|| format!("malformed permutation `{input}`"))?;
    if w.is_empty() {
        bail!("empty input");
    }
    let input_stats = statistics(&w)?;
    let name = format!("{bijection:?}").to_lowercase();
    let (image, image_json, image_line, image_record) = match bijection {
        Bijection::Phi | Bijection::Psi | Bijection::Alpha | Bijection::Beta => {
            let f = match bijection {
                Bijection::Phi => phi,
                Bijection::Psi => psi,
                Bijection::Alpha => alpha,
                _ => beta,
            };
            let v = f(&w).with_context(|| format!("{name} is undefined on `{w}`"))?;
            let r = statistics(&v)?;
            (v.to_string(), json!(v.letters()), record_line(&r)?, serde_json::to_value(&r)?)
        }
        Bijection::Lehmer | Bijection::Ms => {
            let code = if bijection == Bijection::Lehmer { lehmer_code(&w) } else { ms_code(&w) };
            let e = code.with_context(|| format!("{name} needs a permutation of 1..n"))?;
            let r = inv_statistics(&e);
            (e.to_string(), json!(e.entries()), record_line(&r)?, serde_json::to_value(r)?)
        }
    };
    match format {
        Format::Json => json_line(
            out,
            &json!({
                "bijection": name,
                "input": w.letters(),
                "image": image_json,
                "input_statistics": input_stats,
                "image_statistics": image_record,
            }),
        )?,
        Format::Text => {
            writeln!(out, "{image}")?;
            writeln!(out, "input statistics: {}", record_line(&input_stats)?)?;
            writeln!(out, "image statistics: {image_line}")?;
        }
        other => bail!("map prints text or json, not {other:?}"),
    }
    Ok(())
}

fn counting_series(n_max: usize, method: Method) -> Result<Series> {
    Ok(match method {
        Method::ClosedForm => closed_form_series(n_max)?,
        Method::Succession => {
            Series::new("t", (0..=n_max).map(|n| if n == 0 { BigInt::from(0) } else { count_by_succession(n).into() }).collect())
        }
    })
}

pub fn series(out: &mut impl Write, n_max: usize, method: Method, format: Format) -> Result<()> {
    let s = counting_series(n_max, method)?;
    match format {
        Format::Json => writeln!(out, "{}", s.to_json())?,
        Format::Bfile => write!(out, "{}", s.to_bfile())?,
        Format::Csv => {
            writeln!(out, "n,a(n)")?;
            for (n, c) in s.coeffs.iter().enumerate().skip(1) {
                writeln!(out, "{n},{c}")?;
            }
        }
        Format::Text => {
            let cs: Vec<String> = s.coeffs.iter().skip(1).map(BigInt::to_string).collect();
            writeln!(out, "{}", cs.join(", "))?;
        }
    }
    Ok(())
}

pub fn export(class: &ClassArgs, n_max: usize, output: &Path, limit: usize) -> Result<()> {
    let target = if class.class.is_none() && class.patterns.is_none() { Target::Sequences } else { Target::resolve(class)? };
    let body = match target {
        Target::Sequences => counting_series(n_max, Method::Succession)?.to_bfile(),
        Target::Permutations { .. } => {
            check_limit(n_max, limit)?;
            (1..=n_max).map(|n| format!("{n} {}\n", target.count(n))).collect()
        }
    };
    fs::write(output, body).with_context(|| format!("cannot write {}", output.display()))?;
    eprintln!("wrote {n_max} terms to {}", output.display());
    Ok(())
}

pub fn classes(out: &mut impl Write) -> Result<()> {
    for (alias, description) in classes::aliases() {
        writeln!(out, "{alias:<10} {description}")?;
    }
    Ok(())
}
