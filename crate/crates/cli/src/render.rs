use std::io::Write;

use anyhow::{bail, Result};
use serde::Serialize;
use serde_json::Value;

use crate::Format;

/// `key=value` pairs of a statistic record on one line; sets print as `{a,b}`.
pub fn record_line<T: Serialize>(record: &T) -> Result<String> {
    let Value::Object(map) = serde_json::to_value(record)? else { bail!("statistic record is not an object") };
    let parts: Vec<String> = map
        .iter()
        .map(|(k, v)| match v {
            Value::Array(xs) => {
                let xs: Vec<String> = xs.iter().map(Value::to_string).collect();
                format!("{k}={{{}}}", xs.join(","))
            }
            other => format!("{k}={other}"),
        })
        .collect();
    Ok(parts.join(" "))
}

/// A table of rows under a header, as aligned text or CSV.
pub fn table(out: &mut impl Write, header: &[&str], rows: &[Vec<String>], format: Format) -> Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for r in rows {
                writeln!(out, "{}", r.join(","))?;
            }
        }
        Format::Text => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for r in rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                padded.join("  ")
            };
            writeln!(out, "{}", line(header.to_vec()))?;
            for r in rows {
                writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
            }
        }
        other => bail!("format {other:?} does not apply to tables"),
    }
    Ok(())
}

pub fn json_line(out: &mut impl Write, v: &Value) -> Result<()> {
    writeln!(out, "{v}")?;
    Ok(())
}
