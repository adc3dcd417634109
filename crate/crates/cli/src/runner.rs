//! Instance expansion and suite execution.
//!
//! Instances are embarrassingly parallel pure functions of `(check, p, a, d)`.
//! The runner expands sweeps deterministically (a plain sieve in ascending
//! order), evaluates them on a bounded worker pool, and keeps the row order
//! independent of scheduling, so a suite report is byte-identical across runs
//! and across worker counts. `VERIFY_WORKERS` caps the pool; it is the only
//! environment knob.

use crate::profiles::Profile;
use crate::registry::{self, CheckSpec, Instance, Kind, PrimeClass};
use crate::CliError;
use rayon::prelude::*;
use std::time::Instant;
use supercong_core::check::{CheckResult, CheckStatus};
use supercong_core::modcore::is_prime_u64;
use supercong_core::proofchain::ChainError;

/// Ascending primes in `[from, to]`, optionally restricted to a residue class
/// mod 3.
pub fn primes_in(from: u64, to: u64, class_mod3: Option<u64>) -> Vec<u64> {
    (from..=to)
        .filter(|&n| n % 2 == 1 && is_prime_u64(n))
        .filter(|&n| class_mod3.is_none_or(|c| n % 3 == c))
        .collect()
}

fn class_filter(class: PrimeClass) -> Option<u64> {
    match class {
        PrimeClass::OneMod3 => Some(1),
        PrimeClass::TwoMod3 => Some(2),
        PrimeClass::Odd | PrimeClass::None => None,
    }
}

/// The default sweep of one check under a profile, in canonical order.
pub fn default_instances(spec: &CheckSpec, profile: &Profile) -> Vec<Instance> {
    let mut out = Vec::new();
    let prime_sweep = |p_max: u64, a_values: &[u32]| -> Vec<Instance> {
        let mut v = Vec::new();
        for p in primes_in(spec.p_min, p_max, class_filter(spec.class)) {
            for &a in a_values {
                if spec.applicable(p, a) {
                    v.push(Instance { p: Some(p), a: Some(a), ..Default::default() });
                }
            }
        }
        v
    };
    match spec.kind {
        Kind::ThmAdamchuk => {
            out = prime_sweep(profile.p_max_main, &profile.main_a);
            for &(p, a) in &profile.main_extra {
                if spec.applicable(p, a) {
                    out.push(Instance { p: Some(p), a: Some(a), ..Default::default() });
                }
            }
            out.sort();
        }
        Kind::Sun => out = prime_sweep(profile.p_max_main, &profile.main_a),
        Kind::Thm3k1 => out = prime_sweep(profile.p_max_3k1, &[1]),
        Kind::LemHarmonic => out = prime_sweep(profile.p_max_harmonic, &[1]),
        Kind::Mt => out = prime_sweep(profile.p_max_mt, &[1]),
        Kind::PanSun => {
            for p in primes_in(spec.p_min, profile.p_max_pan_sun, None) {
                for d in 0..=p {
                    out.push(Instance {
                        p: Some(p),
                        a: Some(1),
                        d: Some(d),
                        ..Default::default()
                    });
                }
            }
        }
        Kind::Lem2f1 => out.push(Instance {
            n_max: Some(profile.lem2f1_n),
            ..Default::default()
        }),
        Kind::Lem2f1Rec => {
            for side in ["left", "right"] {
                out.push(Instance {
                    n_max: Some(profile.lem2f1_rec_n),
                    side: Some(side),
                    ..Default::default()
                });
            }
        }
        Kind::ConjEvenA => {
            for p in primes_in(spec.p_min, profile.conj_p_max, Some(2)) {
                out.push(Instance { p: Some(p), a: Some(2), ..Default::default() });
            }
            for &p in &profile.conj_extra_a4 {
                if spec.applicable(p, 4) {
                    out.push(Instance { p: Some(p), a: Some(4), ..Default::default() });
                }
            }
            out.sort();
        }
        Kind::Transform(_) | Kind::Gamma(_) | Kind::Chain3k1(_) => {
            out = prime_sweep(profile.p_max_chain, &[1]);
        }
        Kind::Adamchuk(_) => {
            for &p in &profile.adamchuk_primes {
                for &a in &profile.main_a {
                    if spec.applicable(p, a) {
                        out.push(Instance { p: Some(p), a: Some(a), ..Default::default() });
                    }
                }
            }
            out.sort();
        }
        Kind::Comb(_) => {
            out.push(Instance {
                random: Some((profile.comb_cases, profile.comb_seed)),
                ..Default::default()
            });
            for &p in &profile.adamchuk_primes {
                for &a in &profile.main_a {
                    if spec.applicable(p, a) {
                        out.push(Instance { p: Some(p), a: Some(a), ..Default::default() });
                    }
                }
            }
        }
    }
    out
}

fn finish(spec: &CheckSpec, inst: &Instance, result: CheckResult, elapsed_ms: u64) -> CheckResult {
    let mut r = result.with_id(spec.id).with_anchor(spec.anchor);
    r.p = inst.p;
    r.a = if inst.p.is_some() { inst.a.or(Some(1)) } else { None };
    r.d = inst.d;
    r.elapsed_ms = elapsed_ms;
    if let Some(side) = inst.side {
        let note = format!("side={side}");
        r.extra = match r.extra.take() {
            Some(e) if !e.contains(&note) => Some(format!("{note}; {e}")),
            other => other.or(Some(note)),
        };
    }
    if spec.experimental {
        let tag = "EXPERIMENTAL";
        r.extra = match r.extra.take() {
            Some(e) if !e.contains(tag) => Some(format!("{tag}; {e}")),
            other => other.or(Some(tag.to_string())),
        };
    }
    r
}

/// Evaluate one instance, mapping precondition violations to SKIP and
/// genuine evaluator errors to FAIL (errors are data, never exceptions).
pub fn evaluate_instance(spec: &CheckSpec, inst: &Instance) -> CheckResult {
    let start = Instant::now();
    if let (Some(p), Some(a)) = (inst.p, inst.a) {
        if !spec.applicable(p, a) {
            let r = CheckResult::skipped(format!(
                "not applicable: requires {}",
                spec.applicability_str()
            ));
            return finish(spec, inst, r, start.elapsed().as_millis() as u64);
        }
    }
    let result = match registry::evaluate(spec, inst) {
        Ok(r) => r,
        Err(ChainError::PrecondViolation(msg)) => CheckResult::skipped(msg),
        Err(e) => CheckResult::compared("", "", "", false)
            .with_extra(format!("evaluator error: {e}")),
    };
    finish(spec, inst, result, start.elapsed().as_millis() as u64)
}

fn worker_pool() -> rayon::ThreadPool {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(n) = std::env::var("VERIFY_WORKERS") {
        if let Ok(n) = n.parse::<usize>() {
            builder = builder.num_threads(n.max(1));
        }
    }
    builder.build().expect("worker pool")
}

/// Run every applicable registry entry over the profile's ranges.
///
/// Rows come back canonically sorted (check id, then p, a, d); with
/// `zero_elapsed` the timing column is normalized to 0 so that consecutive
/// runs emit byte-identical reports.
pub fn run_suite(
    profile: &Profile,
    id_filter: Option<&str>,
    zero_elapsed: bool,
) -> Result<Vec<CheckResult>, CliError> {
    let mut work: Vec<(&CheckSpec, Instance)> = Vec::new();
    let mut specs: Vec<&CheckSpec> = registry::SPECS.iter().collect();
    specs.sort_by_key(|s| s.id);
    for spec in specs {
        if let Some(f) = id_filter {
            if spec.id != f {
                continue;
            }
        }
        for inst in default_instances(spec, profile) {
            work.push((spec, inst));
        }
    }
    if work.is_empty() {
        return Err(CliError::UnknownCheck(id_filter.unwrap_or("<none>").to_string()));
    }
    let mut rows: Vec<CheckResult> = worker_pool().install(|| {
        work.par_iter()
            .map(|(spec, inst)| evaluate_instance(spec, inst))
            .collect()
    });
    if zero_elapsed {
        for r in &mut rows {
            r.elapsed_ms = 0;
        }
    }
    Ok(rows)
}

/// One check at explicit parameters, aggregated the way the CLI's `run
/// --check X --p N` reports it: shifted sums sweep their `d` internally,
/// the recurrence runs both sides, everything else is a single instance.
pub fn run_check(id: &str, p: u64, a: u32) -> Result<CheckResult, CliError> {
    let spec = registry::find(id).ok_or_else(|| CliError::UnknownCheck(id.to_string()))?;
    if spec.class != PrimeClass::None && !is_prime_u64(p) {
        return Err(CliError::NotPrime(p));
    }
    if spec.class != PrimeClass::None && !spec.applicable(p, a) {
        return Ok(CheckResult::skipped(format!(
            "not applicable: requires {}",
            spec.applicability_str()
        ))
        .with_id(spec.id)
        .with_anchor(spec.anchor)
        .with_p(p)
        .with_a(a));
    }
    let full = crate::profiles::full();
    let rows = match spec.kind {
        Kind::PanSun => (0..=p)
            .map(|d| {
                evaluate_instance(
                    spec,
                    &Instance { p: Some(p), a: Some(1), d: Some(d), ..Default::default() },
                )
            })
            .collect::<Vec<_>>(),
        Kind::Lem2f1 | Kind::Lem2f1Rec | Kind::Comb(_) if spec.class == PrimeClass::None => {
            default_instances(spec, &full)
                .iter()
                .map(|inst| evaluate_instance(spec, inst))
                .collect()
        }
        _ => {
            let mut inst = Instance { p: Some(p), a: Some(a), ..Default::default() };
            if spec.class == PrimeClass::None {
                inst = default_instances(spec, &full).remove(0);
            }
            vec![evaluate_instance(spec, &inst)]
        }
    };
    Ok(aggregate(spec, p, a, rows))
}

fn aggregate(spec: &CheckSpec, p: u64, a: u32, rows: Vec<CheckResult>) -> CheckResult {
    if rows.len() == 1 {
        return rows.into_iter().next().unwrap();
    }
    let n = rows.len();
    let failed = rows.iter().find(|r| r.failed());
    let all_skip = rows.iter().all(|r| r.status == CheckStatus::Skip);
    let template = failed.cloned().unwrap_or_else(|| rows.last().unwrap().clone());
    let mut out = template;
    out.p = Some(p);
    out.a = Some(a);
    if all_skip {
        out.status = CheckStatus::Skip;
    }
    let note = match (failed.is_some(), spec.kind) {
        (true, _) => format!("aggregate of {n} instances; rendering first failure"),
        (false, Kind::PanSun) => format!("aggregate of {n} shifts d in [0, p]; rendering d={}", n - 1),
        (false, _) => format!("aggregate of {n} instances; rendering last"),
    };
    out.extra = match out.extra.take() {
        Some(e) => Some(format!("{note}; {e}")),
        None => Some(note),
    };
    out
}

/// Sweep options for `verify run`.
pub struct SweepOptions {
    /// Explicit prime list; reproduces single report rows exactly.
    pub p: Vec<u64>,
    pub a: Option<u32>,
    pub p_max: Option<u64>,
    /// Restriction of the sweep: Some(1) or Some(2) for a class mod 3.
    pub class_mod3: Option<u64>,
}

/// Expand a `verify run` invocation into rows (real timings kept).
pub fn run_sweep(id: &str, opts: &SweepOptions) -> Result<Vec<CheckResult>, CliError> {
    let spec = registry::find(id).ok_or_else(|| CliError::UnknownCheck(id.to_string()))?;
    let profile = crate::config::configured_profile(crate::profiles::full())?;
    if spec.class == PrimeClass::None {
        return Ok(default_instances(spec, &profile)
            .iter()
            .map(|i| evaluate_instance(spec, i))
            .collect());
    }
    let a_values: Vec<u32> = match opts.a {
        Some(a) => vec![a],
        None => profile.main_a.clone(),
    };
    let primes: Vec<u64> = if !opts.p.is_empty() {
        if let Some(&bad) = opts.p.iter().find(|&&p| !is_prime_u64(p)) {
            return Err(CliError::NotPrime(bad));
        }
        opts.p.clone()
    } else if let Some(p_max) = opts.p_max {
        let class = opts.class_mod3.or(class_filter(spec.class));
        primes_in(spec.p_min.min(3), p_max, class)
    } else {
        return run_suite(&profile, Some(id), false);
    };
    let mut work = Vec::new();
    for &p in &primes {
        match spec.kind {
            Kind::PanSun => {
                for d in 0..=p {
                    work.push(Instance { p: Some(p), a: Some(1), d: Some(d), ..Default::default() });
                }
            }
            _ => {
                // implicit exponent sweeps only generate applicable pairs;
                // explicitly requested parameters keep their SKIP answer
                let applicable: Vec<u32> = a_values
                    .iter()
                    .copied()
                    .filter(|&a| opts.a == Some(a) || spec.applicable(p, a))
                    .collect();
                if applicable.is_empty() {
                    work.push(Instance {
                        p: Some(p),
                        a: Some(a_values[0]),
                        ..Default::default()
                    });
                } else {
                    for a in applicable {
                        work.push(Instance { p: Some(p), a: Some(a), ..Default::default() });
                    }
                }
            }
        }
    }
    Ok(worker_pool()
        .install(|| work.par_iter().map(|i| evaluate_instance(spec, i)).collect()))
}

/// The experimental even-exponent scan: primes `p = 2 (mod 3)` up to `p_max`,
/// each even exponent in `a_set`. Odd exponents are a usage error.
pub fn scan_conjecture(p_max: u64, a_set: &[u32]) -> Result<Vec<CheckResult>, CliError> {
    if a_set.is_empty() {
        return Err(CliError::BadArgs("scan requires at least one exponent".into()));
    }
    if let Some(odd) = a_set.iter().find(|a| *a % 2 == 1) {
        return Err(CliError::BadArgs(format!(
            "scan exponents must be even (the open branch), got {odd}"
        )));
    }
    let spec = registry::find("CONJ-EVEN-A").expect("registered");
    let mut work = Vec::new();
    for p in primes_in(spec.p_min, p_max, Some(2)) {
        for &a in a_set {
            work.push(Instance { p: Some(p), a: Some(a), ..Default::default() });
        }
    }
    Ok(worker_pool()
        .install(|| work.par_iter().map(|i| evaluate_instance(spec, i)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skip_example() {
        let r = run_check("THM-ADAMCHUK", 5, 1).unwrap();
        assert_eq!(r.status, CheckStatus::Skip);
        assert_eq!(r.p, Some(5));
    }

    #[test]
    fn pass_examples() {
        assert!(run_check("THM-ADAMCHUK", 7, 1).unwrap().passed());
        assert!(run_check("THM-3K1", 13, 1).unwrap().passed());
        let mt = run_check("MT", 5, 1).unwrap();
        assert!(mt.passed());
        assert_eq!(mt.modulus, "p^3");
        let ps = run_check("PAN-SUN", 5, 1).unwrap();
        assert!(ps.passed());
        assert!(ps.extra.unwrap().contains("aggregate of 6 shifts"));
    }

    #[test]
    fn unknown_and_composite_rejected() {
        assert!(matches!(run_check("NOPE", 7, 1), Err(CliError::UnknownCheck(_))));
        assert!(matches!(run_check("THM-3K1", 9, 1), Err(CliError::NotPrime(9))));
    }

    #[test]
    fn scan_guards() {
        assert!(matches!(scan_conjecture(31, &[3]), Err(CliError::BadArgs(_))));
        let rows = scan_conjecture(11, &[2]).unwrap();
        assert_eq!(rows.len(), 2); // p = 5, 11
        assert!(rows.iter().all(|r| r.passed()));
        assert!(rows.iter().all(|r| r.extra.as_deref().unwrap().contains("EXPERIMENTAL")));
    }

    #[test]
    fn instances_deterministic() {
        let profile = crate::profiles::quick();
        for spec in registry::SPECS {
            assert_eq!(
                default_instances(spec, &profile),
                default_instances(spec, &profile)
            );
        }
    }
}
