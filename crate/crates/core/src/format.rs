//! Text renderings behind the command-line subcommands: tables, CSV, JSON
//! and PBM.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize, Serializer};

use crate::array::{row, BigEntry, TriangleSpec};
use crate::error::{Error, Result};
use crate::lattice::{enumerate_admissible_capped, DEFAULT_ENUMERATION_CAP};
use crate::operator::{extract_d, inverse_power_expansion};
use crate::parity::{
    is_power_of_two, predicted_odd_count, truncated_row_odd_count, OddCountMethod,
};
use crate::tableaux::enumerate_tableaux_capped;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
    Pbm,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "pbm" => Ok(OutputFormat::Pbm),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

impl FromStr for OddCountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(OddCountMethod::Exact),
            "lucas" => Ok(OddCountMethod::Lucas),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

pub(crate) fn ser_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn ser_opt_decimal<S: Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn decimals(entries: &[BigEntry]) -> Vec<String> {
    entries.iter().map(|e| e.to_string()).collect()
}

fn no_pbm(format: OutputFormat) -> Result<()> {
    if format == OutputFormat::Pbm {
        return Err(Error::UnsupportedFormat("pbm".into()));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable value")
}

/// JSON form of one row; entries are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub t: u32,
    pub n: u64,
    pub entries: Vec<String>,
}

impl RowJson {
    pub fn parse_entries(&self) -> Result<Vec<BigEntry>> {
        self.entries
            .iter()
            .map(|e| e.parse().map_err(|_| Error::Parse(format!("bad entry {e:?}"))))
            .collect()
    }
}

pub fn render_row(spec: TriangleSpec, n: i64, format: OutputFormat) -> Result<String> {
    no_pbm(format)?;
    let r = row(spec, n)?;
    let entries = decimals(&r.entries);
    Ok(match format {
        OutputFormat::Table => entries.join(" ") + "\n",
        OutputFormat::Csv => entries.join(",") + "\n",
        _ => {
            to_json(&RowJson {
                t: spec.t(),
                n: r.n,
                entries,
            }) + "\n"
        }
    })
}

pub fn render_triangle(spec: TriangleSpec, rows: i64, format: OutputFormat) -> Result<String> {
    no_pbm(format)?;
    if rows < 1 {
        return Err(Error::InvalidRowCount(rows));
    }
    let all: Vec<Vec<String>> = spec
        .rows()
        .take(rows as usize)
        .map(|r| decimals(&r.entries))
        .collect();
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            for r in &all {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            let rows: Vec<RowJson> = all
                .into_iter()
                .enumerate()
                .map(|(n, entries)| RowJson {
                    t: spec.t(),
                    n: n as u64,
                    entries,
                })
                .collect();
            out = to_json(&rows) + "\n";
        }
        _ => {
            // Staggered rows: an even cell pitch keeps every
            // row offset by exactly half a cell.
            let width = all.iter().flatten().map(String::len).max().unwrap_or(1);
            let pitch = if width % 2 == 0 { width + 2 } else { width + 1 };
            let last = all.len() - 1;
            for (n, r) in all.iter().enumerate() {
                let mut line = " ".repeat((last - n) * pitch / 2);
                for (k, e) in r.iter().enumerate() {
                    let cell = if k == 0 { width } else { pitch };
                    let _ = write!(line, "{e:>cell$}");
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EnumerationKind {
    Paths,
    Tableaux,
}

impl FromStr for EnumerationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "paths" => Ok(EnumerationKind::Paths),
            "tableaux" => Ok(EnumerationKind::Tableaux),
            other => Err(Error::Parse(format!("unknown enumeration kind {other:?}"))),
        }
    }
}

#[derive(Debug, Serialize)]
struct EnumerationJson<'a> {
    kind: EnumerationKind,
    t: u32,
    n: i64,
    k: i64,
    count: usize,
    items: &'a [String],
}

/// Objects in canonical order followed by their total. `limit` caps the
/// number printed; `force` lifts the enumeration cap.
pub fn render_enumeration(
    kind: EnumerationKind,
    spec: TriangleSpec,
    n: i64,
    k: i64,
    format: OutputFormat,
    limit: Option<usize>,
    force: bool,
) -> Result<String> {
    no_pbm(format)?;
    let cap = (!force).then_some(DEFAULT_ENUMERATION_CAP);
    let items: Vec<String> = match kind {
        EnumerationKind::Paths => enumerate_admissible_capped(spec, n, k, cap)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        EnumerationKind::Tableaux => enumerate_tableaux_capped(spec, n, k, cap)?
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    let count = items.len();
    let shown = &items[..limit.unwrap_or(count).min(count)];
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            out = to_json(&EnumerationJson {
                kind,
                t: spec.t(),
                n,
                k,
                count,
                items: shown,
            }) + "\n";
        }
        OutputFormat::Csv => {
            for item in shown {
                out.push_str(item);
                out.push('\n');
            }
            let _ = writeln!(out, "count,{count}");
        }
        _ => {
            for item in shown {
                out.push_str(item);
                out.push('\n');
            }
            if shown.len() < count {
                let _ = writeln!(out, "... ({} more)", count - shown.len());
            }
            let _ = writeln!(out, "count: {count}");
        }
    }
    Ok(out)
}

#[derive(Debug, Serialize)]
struct OperatorJson {
    t: u32,
    #[serde(rename = "N")]
    exponent: i64,
    polynomial: String,
    d: Vec<String>,
}

pub fn render_operator(spec: TriangleSpec, exponent: i64, format: OutputFormat) -> Result<String> {
    no_pbm(format)?;
    let poly = inverse_power_expansion(spec, exponent)?.to_string();
    let d = decimals(&extract_d(spec, exponent)?);
    Ok(match format {
        OutputFormat::Json => {
            to_json(&OperatorJson {
                t: spec.t(),
                exponent,
                polynomial: poly,
                d,
            }) + "\n"
        }
        OutputFormat::Csv => format!("{poly}\n{}\n", d.join(",")),
        _ => format!("{poly}\nd = [{}]\n", d.join(", ")),
    })
}

#[derive(Debug, Serialize)]
struct OddCountJson {
    t: u32,
    n: i64,
    method: OddCountMethod,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted: Option<String>,
}

pub fn render_oddcount(
    spec: TriangleSpec,
    n: i64,
    method: OddCountMethod,
    format: OutputFormat,
) -> Result<String> {
    no_pbm(format)?;
    let count = truncated_row_odd_count(spec, n, method)?.to_string();
    let predicted = is_power_of_two(spec.t() as u64)
        .then(|| predicted_odd_count(spec, n as u64).to_string());
    Ok(match format {
        OutputFormat::Json => {
            to_json(&OddCountJson {
                t: spec.t(),
                n,
                method,
                count,
                predicted,
            }) + "\n"
        }
        OutputFormat::Csv => match predicted {
            Some(p) => format!("{count},{p}\n"),
            None => format!("{count}\n"),
        },
        _ => match predicted {
            Some(p) => format!("{count}\npredicted: {p}\n"),
            None => format!("{count}\n"),
        },
    })
}
