use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

use crate::canonical::{CanonicalColumn, HVector};
use crate::error::Result;
use crate::fock_space::{FockVector, Laurent};
use crate::partition_core::Partition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
    Csv,
}

fn latex_poly(p: &Laurent) -> String {
    let s = p.to_string();
    // `v^-1` -> `v^{-1}`
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            let mut exp = String::new();
            while let Some(&d) = chars.peek() {
                if (d == '-' && exp.is_empty()) || d.is_ascii_digit() {
                    exp.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let _ = write!(out, "{{{exp}}}");
        }
    }
    out
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\varnothing".into()
    } else {
        format!("({p})")
    }
}

/// One `tabular` per column, rows ordered lexicographically largest first.
pub fn latex_column(mu: &Partition, vector: &FockVector) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% G{}", latex_partition(mu));
    out.push_str("\\begin{tabular}{l|l}\n");
    let _ = writeln!(out, "$\\lambda$ & $d_{{\\lambda{}}}(v)$ \\\\ \\hline", latex_partition(mu));
    for (lam, c) in vector.iter().rev() {
        let _ = writeln!(out, "${}$ & ${}$ \\\\", latex_partition(lam), latex_poly(c));
    }
    out.push_str("\\end{tabular}\n");
    out
}

pub fn csv_rows(rows: &[(Partition, &FockVector)]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::Error::Io(std::io::Error::other(e));
    w.write_record(["mu", "lambda", "coefficient"]).map_err(io)?;
    for (mu, vector) in rows {
        for (lam, c) in vector.iter().rev() {
            w.write_record([mu.to_string(), lam.to_string(), c.to_string()]).map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render_columns(cols: &[CanonicalColumn], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = cols
                .iter()
                .map(|c| json!({ "mu": c.mu.parts(), "e": c.e, "vector": c.vector.to_json() }))
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        Format::Text => cols.iter().map(|c| format!("G({}) = {}\n", c.mu, c.vector)).collect(),
        Format::Latex => cols.iter().map(|c| latex_column(&c.mu, &c.vector)).collect(),
        Format::Csv => {
            let rows: Vec<(Partition, &FockVector)> = cols.iter().map(|c| (c.mu.clone(), &c.vector)).collect();
            csv_rows(&rows)?
        }
    })
}

pub fn render_hvector(h: &HVector, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(h)?),
        Format::Text => format!("H({}) = {}\n", h.mu, h.vector),
        Format::Latex => latex_column(&h.mu, &h.vector),
        Format::Csv => csv_rows(&[(h.mu.clone(), &h.vector)])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::llt_canonical;
    use crate::partition_core::pt;

    #[test]
    fn latex_exponents_are_braced() {
        assert_eq!(latex_poly(&Laurent::from_terms([(2, 1), (-1, 3)])), "v^{2} + 3v^{-1}");
        assert_eq!(latex_poly(&Laurent::monomial(1, 1)), "v");
    }

    #[test]
    fn csv_quotes_partitions() {
        let cols = llt_canonical(2, 2).unwrap();
        let text = render_columns(&cols, Format::Csv).unwrap();
        assert_eq!(text, "mu,lambda,coefficient\n2,2,1\n2,\"1,1\",v\n");
    }

    #[test]
    fn text_and_latex_render() {
        let cols = llt_canonical(2, 2).unwrap();
        assert_eq!(render_columns(&cols, Format::Text).unwrap(), "G(2) = (2) + (v)(1,1)\n");
        let tex = render_columns(&cols, Format::Latex).unwrap();
        assert!(tex.contains("$(1,1)$ & $v$ \\\\"));
        assert_eq!(pt("2"), cols[0].mu);
    }
}
