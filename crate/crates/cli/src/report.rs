//! Report serialization: JSON and CSV rows with identical columns.
//!
//! Big values are rendered in full decimal and never truncated; a FAIL row
//! carries both sides verbatim. The JSON shape is pinned by
//! `docs/report.schema.json`, shipped in-repo.

use crate::CliError;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::Path;
use supercong_core::check::{CheckResult, CheckStatus};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(CliError::BadArgs(format!("unknown format {other}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extra: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportRow {
    pub check_id: String,
    pub params: Params,
    pub modulus: String,
    pub lhs: String,
    pub rhs: String,
    pub status: String,
    pub elapsed_ms: u64,
    pub anchor: String,
}

impl From<&CheckResult> for ReportRow {
    fn from(r: &CheckResult) -> ReportRow {
        ReportRow {
            check_id: r.id.clone(),
            params: Params { p: r.p, a: r.a, d: r.d, extra: r.extra.clone() },
            modulus: r.modulus.clone(),
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            status: r.status.as_str().to_string(),
            elapsed_ms: r.elapsed_ms,
            anchor: r.anchor.clone(),
        }
    }
}

pub fn to_rows(results: &[CheckResult]) -> Vec<ReportRow> {
    results.iter().map(ReportRow::from).collect()
}

/// Serialize rows to bytes in the requested format.
pub fn render(rows: &[ReportRow], format: ReportFormat) -> Result<Vec<u8>, CliError> {
    match format {
        ReportFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(rows)
                .map_err(|e| CliError::Io(format!("json: {e}")))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "check_id", "p", "a", "d", "extra", "modulus", "lhs", "rhs", "status",
                "elapsed_ms", "anchor",
            ])
            .map_err(|e| CliError::Io(format!("csv: {e}")))?;
            let opt = |v: Option<String>| v.unwrap_or_default();
            for r in rows {
                w.write_record([
                    r.check_id.clone(),
                    opt(r.params.p.map(|v| v.to_string())),
                    opt(r.params.a.map(|v| v.to_string())),
                    opt(r.params.d.map(|v| v.to_string())),
                    opt(r.params.extra.clone()),
                    r.modulus.clone(),
                    r.lhs.clone(),
                    r.rhs.clone(),
                    r.status.clone(),
                    r.elapsed_ms.to_string(),
                    r.anchor.clone(),
                ])
                .map_err(|e| CliError::Io(format!("csv: {e}")))?;
            }
            w.into_inner().map_err(|e| CliError::Io(format!("csv: {e}")))
        }
    }
}

/// Serialize and write a report to a file path, or stdout when `dest` is `None`.
pub fn emit_report(
    results: &[CheckResult],
    format: ReportFormat,
    dest: Option<&Path>,
) -> Result<(), CliError> {
    if results.is_empty() {
        return Err(CliError::BadArgs("nothing to report: no instances ran".into()));
    }
    let bytes = render(&to_rows(results), format)?;
    match dest {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

/// Process exit status: 0 when no non-experimental FAIL, 1 otherwise.
/// SKIP rows and experimental rows never affect it.
pub fn exit_status(results: &[CheckResult]) -> u8 {
    let failing = results.iter().any(|r| {
        r.failed()
            && !crate::registry::find(&r.id).is_some_and(|s| s.experimental)
    });
    u8::from(failing)
}

/// One PASS/FAIL/SKIP count summary line for stderr.
pub fn summary(results: &[CheckResult]) -> String {
    let count = |s: CheckStatus| results.iter().filter(|r| r.status == s).count();
    format!(
        "{} rows: {} PASS, {} FAIL, {} SKIP",
        results.len(),
        count(CheckStatus::Pass),
        count(CheckStatus::Fail),
        count(CheckStatus::Skip)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CheckResult {
        CheckResult::compared("p^2", "98", "0", true)
            .with_id("THM-ADAMCHUK")
            .with_anchor("anchor text")
            .with_p(7)
            .with_a(1)
    }

    #[test]
    fn json_roundtrip() {
        let rows = to_rows(&[sample()]);
        let bytes = render(&rows, ReportFormat::Json).unwrap();
        let parsed: Vec<ReportRow> = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(parsed, rows);
    }

    #[test]
    fn csv_has_identical_columns() {
        let bytes = render(&to_rows(&[sample()]), ReportFormat::Csv).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "check_id,p,a,d,extra,modulus,lhs,rhs,status,elapsed_ms,anchor"
        );
        assert!(lines.next().unwrap().starts_with("THM-ADAMCHUK,7,1,,"));
    }

    #[test]
    fn fail_rows_flip_exit_status_unless_experimental() {
        let pass = sample();
        let mut fail = sample();
        fail.status = CheckStatus::Fail;
        assert_eq!(exit_status(std::slice::from_ref(&pass)), 0);
        assert_eq!(exit_status(&[pass.clone(), fail.clone()]), 1);
        let mut exp = fail.clone();
        exp.id = "CONJ-EVEN-A".to_string();
        assert_eq!(exit_status(&[pass, exp]), 0);
    }
}
