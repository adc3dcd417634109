//! `verify`: batch CLI over the congruence check registry.

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use supercong_cli::{
    config, profiles, registry, report, runner, CliError, ReportFormat, SweepOptions,
};

#[derive(Parser)]
#[command(
    name = "verify",
    version,
    about = "Exact verification of central binomial coefficient congruences modulo prime powers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    #[value(name = "1mod3")]
    OneMod3,
    #[value(name = "2mod3")]
    TwoMod3,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every registered check with its applicability and statement.
    List,
    /// Run one check, either at explicit parameters or swept over primes.
    Run {
        /// Check id, e.g. THM-ADAMCHUK or 3K1.AFLQ.
        #[arg(long)]
        check: String,
        /// Single prime to check.
        #[arg(long)]
        p: Option<u64>,
        /// Exponent (with --p); default sweeps the check's exponent range.
        #[arg(long)]
        a: Option<u32>,
        /// Sweep all applicable primes up to this bound instead of --p.
        #[arg(long = "p-max")]
        p_max: Option<u64>,
        /// Restrict a --p-max sweep to a residue class mod 3.
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every registered check over a profile's sweep ranges.
    Suite {
        #[arg(long, value_enum)]
        profile: ProfileArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Experimental even-exponent scan on the open branch p = 2 (mod 3).
    Scan {
        #[arg(long = "p-max")]
        p_max: u64,
        /// Comma-separated even exponents, e.g. --a 2,4.
        #[arg(long = "a", value_delimiter = ',', required = true)]
        a: Vec<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn list() {
    println!("{:<24} {:<12} APPLICABILITY", "ID", "KIND");
    for spec in registry::SPECS {
        let kind = if spec.experimental { "experimental" } else { "check" };
        println!("{:<24} {:<12} {}", spec.id, kind, spec.applicability_str());
        println!("{:<24} {:<12} {}", "", "", spec.anchor);
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.cmd {
        Cmd::List => {
            list();
            Ok(0)
        }
        Cmd::Run { check, p, a, p_max, class, format, out } => {
            let opts = SweepOptions {
                p,
                a,
                p_max,
                class_mod3: match class {
                    ClassArg::OneMod3 => Some(1),
                    ClassArg::TwoMod3 => Some(2),
                    ClassArg::All => None,
                },
            };
            let results = runner::run_sweep(&check, &opts)?;
            report::emit_report(&results, format.into(), out.as_deref())?;
            eprintln!("{}", report::summary(&results));
            Ok(report::exit_status(&results))
        }
        Cmd::Suite { profile, format, out } => {
            let profile = config::configured_profile(match profile {
                ProfileArg::Quick => profiles::quick(),
                ProfileArg::Full => profiles::full(),
            })?;
            let started = std::time::Instant::now();
            let results = runner::run_suite(&profile, None, true)?;
            report::emit_report(&results, format.into(), out.as_deref())?;
            eprintln!(
                "suite {} in {:.1}s: {}",
                profile.name,
                started.elapsed().as_secs_f64(),
                report::summary(&results)
            );
            Ok(report::exit_status(&results))
        }
        Cmd::Scan { p_max, a, format, out } => {
            let results = runner::scan_conjecture(p_max, &a)?;
            report::emit_report(&results, format.into(), out.as_deref())?;
            eprintln!("{}", report::summary(&results));
            // experimental rows are quarantined from the exit status
            Ok(report::exit_status(&results))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
