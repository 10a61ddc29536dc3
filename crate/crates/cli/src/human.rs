//! Plain-text rendering behind `--human`. Tables for the commands that
//! have a natural one, indented JSON otherwise.

use std::fmt::Write;

use brpic::cyclo::Cyclotomic;
use serde_json::Value;

use crate::report::{pretty, Report};

fn cyclo(v: &Value) -> String {
    serde_json::from_value::<Cyclotomic>(v.clone()).map_or_else(|_| v.to_string(), |c| c.to_string())
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).expect("writing to a String");
    }
    out
}

fn chartable(r: &Value) -> String {
    let empty = Vec::new();
    let classes = r["classes"].as_array().unwrap_or(&empty);
    let mut rows = vec![std::iter::once(String::new()).chain(classes.iter().map(|c| c["name"].as_str().unwrap_or("?").to_string())).collect()];
    rows.push(std::iter::once("size".to_string()).chain(classes.iter().map(|c| c["size"].to_string())).collect());
    for (i, chi) in r["characters"].as_array().unwrap_or(&empty).iter().enumerate() {
        let vals = chi.as_array().map(|vs| vs.iter().map(cyclo).collect::<Vec<_>>()).unwrap_or_default();
        rows.push(std::iter::once(format!("X.{i}")).chain(vals).collect());
    }
    table(&rows)
}

fn center(r: &Value) -> String {
    let mut rows = vec![vec!["#".to_string(), "object".into(), "qdim".into()]];
    for o in r["objects"].as_array().into_iter().flatten() {
        rows.push(vec![o["index"].to_string(), o["label"].as_str().unwrap_or("?").to_string(), o["qdim"].to_string()]);
    }
    if let Some(t) = r["t"].as_array() {
        rows[0].push("T".into());
        for (row, v) in rows.iter_mut().skip(1).zip(t) {
            row.push(cyclo(v));
        }
    }
    table(&rows)
}

pub fn render(report: &Report) -> String {
    let body = match report.command() {
        "chartable" => chartable(&report.result),
        "center" => center(&report.result),
        _ => pretty(&report.result) + "\n",
    };
    let notes: String = report.notes.iter().map(|n| format!("note: {n}\n")).collect();
    format!("{body}{notes}")
}
