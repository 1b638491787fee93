//! JSON, markdown and CSV renderings of a pair report.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{OrbitVerdict, PairReport, Status};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Md,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Md),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

pub const COLUMNS: [&str; 6] = ["orbit", "rank", "index/bounds", "status", "mode", "ms"];

fn bounds(v: &OrbitVerdict) -> String {
    if v.lower_bound == v.index {
        v.index.to_string()
    } else {
        format!("[{}, {}]", v.lower_bound, v.index)
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::EqualCertified => "equal-certified",
        Status::UnequalCertified => "unequal-certified",
        Status::Inconclusive => "inconclusive",
    }
}

fn row(v: &OrbitVerdict) -> [String; 6] {
    [
        v.orbit.clone(),
        v.rank.to_string(),
        bounds(v),
        status(v.status).to_string(),
        v.report.certificate.mode.to_string(),
        v.ms.to_string(),
    ]
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render(r: &PairReport, format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = serde_json::to_string_pretty(r)?;
            out.push('\n');
        }
        Format::Md => {
            writeln!(out, "## {} (rank {}): {}\n", r.pair, r.rank, r.overall).unwrap();
            writeln!(out, "| {} |", COLUMNS.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(COLUMNS.len())).unwrap();
            for v in &r.orbits {
                writeln!(out, "| {} |", row(v).join(" | ")).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "{}", COLUMNS.join(",")).unwrap();
            for v in &r.orbits {
                let cells: Vec<String> = row(v).iter().map(|c| csv_field(c)).collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
        }
    }
    Ok(out)
}
