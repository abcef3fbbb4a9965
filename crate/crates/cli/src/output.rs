//! Output records (JSON) and tables (CSV).

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::CliError;

/// Decimal expansion of `x` with `decimals` places, rounding half away from zero.
pub fn format_fixed(x: f64, decimals: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    // Long enough that the digit after the cut is exact for any energy-sized value.
    let exact = format!("{:.*}", decimals + 40, x.abs());
    let (int_part, frac) = exact.split_once('.').expect("fixed format has a point");
    let mut digits: Vec<u8> = int_part.bytes().chain(frac[..decimals].bytes()).collect();
    if frac.as_bytes()[decimals] >= b'5' {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, b'1');
                break;
            }
            i -= 1;
            if digits[i] == b'9' {
                digits[i] = b'0';
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let split = digits.len() - decimals;
    let mut out = String::with_capacity(digits.len() + 2);
    if x.is_sign_negative() && digits.iter().any(|&d| d != b'0') {
        out.push('-');
    }
    out.push_str(std::str::from_utf8(&digits[..split]).unwrap());
    if decimals > 0 {
        out.push('.');
        out.push_str(std::str::from_utf8(&digits[split..]).unwrap());
    }
    out
}

/// `x` rounded to nine decimals, as the nearest `f64`.
pub fn round9(x: f64) -> f64 {
    format_fixed(x, 9).parse().unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scopes: Vec<String>,
}

/// One row of the extremal table for the symmetric and fixed-end families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRow {
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u64>,
    pub r: f64,
    pub s: f64,
    pub z: u64,
    /// `RE(T_{z−1})`, absent when `z − 1` is outside the family.
    pub energy_before: Option<f64>,
    pub energy: f64,
    pub energy_after: Option<f64>,
    pub extremal_graph: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub p: u64,
    pub graph: String,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Results {
    Spectrum { spectrum: Vec<f64> },
    Energy { energy: f64 },
    ExtremalTable { rows: Vec<ExtremalRow> },
    FamilyTable { rows: Vec<FamilyRow> },
    Verify { passed: bool, checks: Vec<CheckLine> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Inputs,
    pub results: Results,
    pub provenance: String,
    pub version: String,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Inputs, results: Results, provenance: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs,
            results,
            provenance: provenance.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

pub fn write_json(record: &OutputRecord, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, record)?;
    out.write_all(b"\n").map_err(CliError::Output)?;
    Ok(())
}

fn opt(x: Option<f64>, decimals: usize) -> String {
    x.map(|x| format_fixed(x, decimals)).unwrap_or_default()
}

pub fn write_csv(record: &OutputRecord, out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    match &record.results {
        Results::Spectrum { spectrum } => {
            w.write_record(["eigenvalue"])?;
            for x in spectrum {
                w.write_record([format_fixed(*x, 9)])?;
            }
        }
        Results::Energy { energy } => {
            w.write_record(["graph", "method", "energy"])?;
            let graph = record.inputs.graph.clone().unwrap_or_default();
            w.write_record([graph, record.provenance.clone(), format_fixed(*energy, 9)])?;
        }
        Results::ExtremalTable { rows } => {
            let with_b = rows.iter().any(|r| r.b.is_some());
            let mut header = vec!["n"];
            if with_b {
                header.push("b");
            }
            header.extend(["r", "s", "z", "RE(T_{z-1})", "RE(T_z)", "RE(T_{z+1})", "extremal_graph"]);
            w.write_record(&header)?;
            for row in rows {
                let mut rec = vec![row.n.to_string()];
                if with_b {
                    rec.push(row.b.map(|b| b.to_string()).unwrap_or_default());
                }
                rec.extend([
                    format_fixed(row.r, 6),
                    format_fixed(row.s, 6),
                    row.z.to_string(),
                    opt(row.energy_before, 9),
                    format_fixed(row.energy, 9),
                    opt(row.energy_after, 9),
                    row.extremal_graph.clone(),
                ]);
                w.write_record(&rec)?;
            }
        }
        Results::FamilyTable { rows } => {
            w.write_record(["p", "graph", "RE"])?;
            for row in rows {
                w.write_record([row.p.to_string(), row.graph.clone(), format_fixed(row.energy, 9)])?;
            }
        }
        Results::Verify { checks, .. } => {
            w.write_record(["check", "passed", "detail"])?;
            for c in checks {
                w.write_record([c.name.as_str(), if c.passed { "true" } else { "false" }, c.detail.as_str()])?;
            }
        }
    }
    w.flush().map_err(CliError::Output)?;
    Ok(())
}

/// Plain per-check report lines for `verify`.
pub fn write_report(checks: &[CheckLine], out: &mut dyn Write) -> Result<(), CliError> {
    for c in checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "[{tag}] {}: {}", c.name, c.detail).map_err(CliError::Output)?;
    }
    Ok(())
}
