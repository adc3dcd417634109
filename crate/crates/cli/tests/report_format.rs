//! Report schema conformance, catalog sync, and CLI surface behavior.

use std::path::{Path, PathBuf};
use std::process::Command;
use supercong_cli::{profiles, registry, report, runner, ReportFormat};

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").canonicalize().unwrap()
}

#[test]
fn suite_json_validates_against_published_schema() {
    let schema_text =
        std::fs::read_to_string(repo_root().join("docs/report.schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();

    let rows = runner::run_suite(&profiles::quick(), None, true).unwrap();
    let bytes = report::render(&report::to_rows(&rows), ReportFormat::Json).unwrap();
    let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn report_rows_roundtrip_and_preserve_both_sides() {
    let rows = runner::run_sweep(
        "THM-ADAMCHUK",
        &runner::SweepOptions { p: Some(7), a: Some(1), p_max: None, class_mod3: None },
    )
    .unwrap();
    let json = report::render(&report::to_rows(&rows), ReportFormat::Json).unwrap();
    let parsed: Vec<report::ReportRow> = serde_json::from_slice(&json).unwrap();
    assert_eq!(parsed, report::to_rows(&rows));
    assert_eq!(parsed[0].lhs, "0");
    assert_eq!(parsed[0].rhs, "0");

    // a FAIL row keeps both sides verbatim: fabricate one via the scan shape
    let mut forged = rows.clone();
    forged[0].status = supercong_core::check::CheckStatus::Fail;
    forged[0].lhs = "123456789012345678901234567890".into();
    let csv = report::render(&report::to_rows(&forged), ReportFormat::Csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    assert!(text.contains("123456789012345678901234567890"));
    assert!(text.contains("FAIL"));
}

#[test]
fn catalog_lists_every_anchor() {
    let catalog = std::fs::read_to_string(repo_root().join("docs/checks.md")).unwrap();
    for spec in registry::SPECS {
        assert!(catalog.contains(spec.id), "catalog is missing id {}", spec.id);
        assert!(
            catalog.contains(spec.anchor),
            "catalog is missing the anchor of {}: {}",
            spec.id,
            spec.anchor
        );
    }
}

#[test]
fn cli_exit_codes_and_formats() {
    let exe = env!("CARGO_BIN_EXE_verify");
    // exit 0 on a passing run, report on stdout
    let out = Command::new(exe)
        .args(["run", "--check", "THM-3K1", "--p", "13"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<report::ReportRow> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].status, "PASS");

    // csv format
    let out = Command::new(exe)
        .args(["run", "--check", "PAN-SUN", "--p", "5", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check_id,p,a,d,extra,modulus,lhs,rhs,status,elapsed_ms,anchor"));
    assert_eq!(text.lines().count(), 1 + 6); // header + d = 0..=5

    // SKIP result still exits 0
    let out = Command::new(exe)
        .args(["run", "--check", "THM-ADAMCHUK", "--p", "5", "--a", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<report::ReportRow> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows[0].status, "SKIP");

    // usage errors exit 2
    let out = Command::new(exe).args(["run", "--check", "NO-SUCH"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(exe)
        .args(["run", "--check", "THM-3K1", "--p", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(exe)
        .args(["scan", "--p-max", "11", "--a", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(exe).args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // class filter: sweeping SUN-1.1 over p = 2 (mod 3) only
    let out = Command::new(exe)
        .args(["run", "--check", "SUN-1.1", "--p-max", "31", "--class", "2mod3", "--a", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<report::ReportRow> = serde_json::from_slice(&out.stdout).unwrap();
    let swept: Vec<u64> = rows.iter().map(|r| r.params.p.unwrap()).collect();
    assert_eq!(swept, vec![5, 11, 17, 23, 29]);

    // scan writes the report to --out and labels rows experimental
    let tmp = repo_root().join("target/scan_test.json");
    let out = Command::new(exe)
        .args(["scan", "--p-max", "11", "--a", "2,4", "--out", tmp.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<report::ReportRow> =
        serde_json::from_slice(&std::fs::read(&tmp).unwrap()).unwrap();
    assert_eq!(rows.len(), 4); // (5,2), (5,4), (11,2), (11,4)
    assert!(rows.iter().all(|r| r.params.extra.as_deref().unwrap().contains("EXPERIMENTAL")));
    std::fs::remove_file(tmp).ok();
}

#[test]
fn config_file_overrides_sweep_ranges() {
    let exe = env!("CARGO_BIN_EXE_verify");
    let dir = repo_root().join("target/config_test");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("verify.toml"),
        "[quick]\np_max_main = 7\np_max_3k1 = 7\np_max_harmonic = 7\np_max_pan_sun = 5\n\
         p_max_mt = 7\np_max_chain = 7\nadamchuk_primes = [7]\nconj_p_max = 5\ncomb_cases = 2\n\
         lem2f1_n = 5\nlem2f1_rec_n = 5\n",
    )
    .unwrap();
    let out = Command::new(exe)
        .args(["suite", "--profile", "quick"])
        .current_dir(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<report::ReportRow> = serde_json::from_slice(&out.stdout).unwrap();
    // narrowed ranges: no prime above 7 anywhere in the report
    assert!(rows.iter().all(|r| r.params.p.unwrap_or(3) <= 7));
    assert!(rows.len() < 120, "narrowed suite should be small, got {}", rows.len());
    std::fs::remove_file(dir.join("verify.toml")).unwrap();
}
