//! `qfithermo` command line: `bounds`, `rabi`, `dicke` and `erasure-scan`.
//!
//! Exit codes: 0 success, 2 configuration or validation error, 3 numerical
//! guard (Fock truncation, bound violation, failed `--verify` audit).

pub mod config;
pub mod emit;

use std::f64::consts::LN_2;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dickelab::{fit_log, saturation_check, sweep, LogFit, SweepRecord, FIT_MIN_N};
use crate::error::Error;
use crate::metro::{entropy_bound_eq7, BoundReport, Generator};
use crate::qstates::DickeFamily;
use crate::rabi::{find_erasure_time, run_figure2, ErasureScan, RabiOutcome};
use config::{load, BoundsConfig, DickeConfig, ErasureScanConfig, RabiRunConfig};
use emit::{csv, fmt_num, Block};

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "qfithermo",
    version,
    about = "Heat cost of quantum Fisher information: bounds and erasure experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Entropy chain and heat floors for one probe state
    Bounds(CommonArgs),
    /// Qubit erasure by a thermal mode, one row per c0
    Rabi(CommonArgs),
    /// Entropy and weighted QFI sweeps of the symmetric-state families
    Dicke(CommonArgs),
    /// Erasure quality against erasure time
    ErasureScan(CommonArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// JSON configuration file
    #[arg(long)]
    config: PathBuf,
    /// Write here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Re-check the reported inequalities before writing
    #[arg(long)]
    verify: bool,
    /// Report entropies in bits instead of nats
    #[arg(long)]
    bits: bool,
    /// Worker threads (default: all cores); output does not depend on it
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Failure with its exit code and a one-line message.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn config(message: impl Into<String>) -> Self {
        Self { code: EXIT_CONFIG, message: message.into() }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Self { code: EXIT_NUMERICAL, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::TruncationTail { .. }
            | Error::NoConvergence { .. }
            | Error::BoundViolation(_)
            | Error::HookNotDominant { .. }
            | Error::NotUnitary { .. } => Self::numerical(e.to_string()),
            _ => Self::config(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message.replace('\n', " "));
            e.code
        }
    }
}

fn execute(command: &Command) -> CliResult<()> {
    let (args, render): (&CommonArgs, fn(&CommonArgs) -> CliResult<String>) = match command {
        Command::Bounds(a) => (a, cmd_bounds),
        Command::Rabi(a) => (a, cmd_rabi),
        Command::Dicke(a) => (a, cmd_dicke),
        Command::ErasureScan(a) => (a, cmd_erasure_scan),
    };
    let text = match args.threads {
        None => render(args)?,
        Some(0) => return Err(CliError::config("--threads must be at least 1")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::config(format!("cannot start thread pool: {e}")))?
            .install(|| render(args))?,
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read<T: serde::de::DeserializeOwned>(args: &CommonArgs) -> CliResult<T> {
    load(&args.config).map_err(CliError::config)
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::numerical(format!("cannot serialize output: {e}")))
}

fn check(ok: bool, what: impl FnOnce() -> String) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::numerical(format!("verify failed: {}", what())))
    }
}

fn entropy_unit(bits: bool) -> f64 {
    if bits {
        1.0 / LN_2
    } else {
        1.0
    }
}

fn cmd_bounds(args: &CommonArgs) -> CliResult<String> {
    let cfg: BoundsConfig = read(args)?;
    let psi = cfg.state.build()?;
    let g = Generator::new(cfg.generator.build(psi.dim())?, cfg.t)?;
    let mut r = entropy_bound_eq7(&psi, &g, cfg.kbt)?;
    if args.verify {
        check(r.record_entropy >= r.entropy_rho_s - 1e-12, || {
            format!("record entropy {} below S(rho_s) {}", r.record_entropy, r.entropy_rho_s)
        })?;
        check(r.entropy_rho_s >= r.rhs_eq7 - 1e-10, || {
            format!("S(rho_s) {} below log2 F_Q/t^2 {}", r.entropy_rho_s, r.rhs_eq7)
        })?;
        check(
            (r.heat_floor - r.kbt * (r.rhs_eq7 - r.entropy_final)).abs() <= 1e-12 * r.heat_floor.abs().max(1.0),
            || format!("heat floor {} inconsistent with kbt * deficit", r.heat_floor),
        )?;
    }
    let u = entropy_unit(args.bits);
    r.entropy_rho_s *= u;
    r.record_entropy *= u;
    r.entropy_final *= u;
    r.rhs_eq7 *= u;
    if args.format == Format::Json {
        return to_json(&r);
    }
    let BoundReport { t, fq, fq_over_t2, entropy_rho_s, record_entropy, entropy_final, rhs_eq7, heat_floor, kbt } = r;
    let mut b = Block::new(&[
        "t",
        "fq",
        "fq_over_t2",
        "entropy_rho_s",
        "record_entropy",
        "entropy_final",
        "rhs_eq7",
        "heat_floor",
        "kbt",
    ]);
    b.push(
        [t, fq, fq_over_t2, entropy_rho_s, record_entropy, entropy_final, rhs_eq7, heat_floor, kbt]
            .iter()
            .map(|&x| fmt_num(x))
            .collect(),
    );
    Ok(csv(&[b]))
}

#[derive(Serialize)]
struct RabiReport {
    rows: Vec<RabiOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scan: Option<ScanSummary>,
}

#[derive(Serialize)]
struct ScanSummary {
    tau_star: f64,
    erasure_quality: f64,
}

fn cmd_rabi(args: &CommonArgs) -> CliResult<String> {
    let cfg: RabiRunConfig = read(args)?;
    cfg.validate()?;
    let mut model = cfg.model.clone();
    let scan = match cfg.scan {
        Some(s) => {
            let found = find_erasure_time(&model, s.tau_min, s.tau_max, s.steps)?;
            model.tau = found.tau_star;
            Some(ScanSummary { tau_star: found.tau_star, erasure_quality: found.quality })
        }
        None => None,
    };
    let mut rows = run_figure2(&model, &cfg.c0_grid)?;
    if args.verify {
        let kbt = model.kbt();
        for o in &rows {
            check(o.audit_passes(kbt), || format!("erasure bound audit fails at c0 = {}", o.c0))?;
            check((0.0..=1.0 + 1e-12).contains(&o.erasure_quality), || {
                format!("erasure quality {} outside [0, 1]", o.erasure_quality)
            })?;
            let fq = 4.0 * o.c0 * o.c0 * (1.0 - o.c0 * o.c0);
            check((o.fq_over_t2 - fq).abs() < 1e-12, || format!("fq_over_t2 {} differs from {fq}", o.fq_over_t2))?;
            check(o.energy_drift < 1e-9, || format!("energy drift {} at c0 = {}", o.energy_drift, o.c0))?;
        }
    }
    let u = entropy_unit(args.bits);
    for o in &mut rows {
        o.entropy_final_avg *= u;
        o.entropy_of_avg *= u;
    }
    if args.format == Format::Json {
        return to_json(&RabiReport { rows, scan });
    }
    let mut b = Block::new(&[
        "c0",
        "fq_over_t2",
        "heat_avg",
        "entropy_final_avg",
        "entropy_of_avg",
        "bound_floor",
        "erasure_quality",
    ]);
    for o in &rows {
        b.push(
            [o.c0, o.fq_over_t2, o.heat_avg, o.entropy_final_avg, o.entropy_of_avg, o.bound_floor, o.erasure_quality]
                .iter()
                .map(|&x| fmt_num(x))
                .collect(),
        );
    }
    let mut blocks = vec![b];
    if let Some(s) = &scan {
        let mut sb = Block::new(&["tau_star", "erasure_quality"]);
        sb.push(vec![fmt_num(s.tau_star), fmt_num(s.erasure_quality)]);
        blocks.push(sb);
    }
    Ok(csv(&blocks))
}

#[derive(Serialize)]
struct FitRow {
    family: String,
    #[serde(flatten)]
    fit: LogFit,
}

#[derive(Serialize)]
struct SaturationRow {
    family: String,
    n_low: usize,
    n_high: usize,
    entropy_change_nats: f64,
}

#[derive(Serialize)]
struct DickeReport {
    records: Vec<SweepRecord>,
    fits: Vec<FitRow>,
    saturation: Vec<SaturationRow>,
}

fn cmd_dicke(args: &CommonArgs) -> CliResult<String> {
    let cfg: DickeConfig = read(args)?;
    cfg.validate()?;
    let mut distinct = cfg.n_list.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut report = DickeReport { records: Vec::new(), fits: Vec::new(), saturation: Vec::new() };
    for family in &cfg.families {
        let records = sweep(family, &cfg.n_list)?;
        if matches!(family, DickeFamily::GhzLike { .. }) {
            if let [.., n_low, n_high] = distinct[..] {
                report.saturation.push(SaturationRow {
                    family: family.name().to_string(),
                    n_low,
                    n_high,
                    entropy_change_nats: saturation_check(family, (n_low, n_high))?,
                });
            }
        } else if distinct.iter().filter(|&&n| n >= FIT_MIN_N).count() >= 3 {
            let unique: Vec<SweepRecord> =
                distinct.iter().map(|&n| records.iter().find(|r| r.n == n).expect("swept").clone()).collect();
            report.fits.push(FitRow { family: family.name().to_string(), fit: fit_log(&unique)? });
        }
        report.records.extend(records);
    }
    if args.verify {
        for r in &report.records {
            check(r.weighted_fq_nats <= r.entropy_nats + 1e-12, || {
                format!(
                    "{} N={}: weighted QFI {} exceeds entropy {}",
                    r.family, r.n, r.weighted_fq_nats, r.entropy_nats
                )
            })?;
            check(r.entropy_nats <= ((r.n + 1) as f64).ln() + 1e-12, || {
                format!("{} N={}: entropy {} above log(N+1)", r.family, r.n, r.entropy_nats)
            })?;
            check((r.sql_ratio * r.n as f64 - r.fq_over_t2).abs() <= 1e-12 * r.fq_over_t2.max(1.0), || {
                format!("{} N={}: sql_ratio inconsistent", r.family, r.n)
            })?;
        }
        for f in &report.fits {
            check(f.fit.rms_residual >= 0.0, || format!("{}: negative residual", f.family))?;
        }
    }
    let u = entropy_unit(args.bits);
    for r in &mut report.records {
        r.entropy_nats *= u;
        r.weighted_fq_nats *= u;
    }
    for f in &mut report.fits {
        f.fit.alpha *= u;
        f.fit.beta *= u;
        f.fit.rms_residual *= u;
    }
    for s in &mut report.saturation {
        s.entropy_change_nats *= u;
    }
    if args.format == Format::Json {
        return to_json(&report);
    }
    let mut rows = Block::new(&["family", "N", "entropy_nats", "weighted_fq_nats", "fq_over_t2", "sql_ratio"]);
    for r in &report.records {
        rows.push(vec![
            r.family.clone(),
            r.n.to_string(),
            fmt_num(r.entropy_nats),
            fmt_num(r.weighted_fq_nats),
            fmt_num(r.fq_over_t2),
            fmt_num(r.sql_ratio),
        ]);
    }
    let mut fits = Block::new(&["family", "alpha", "beta", "rms_residual"]);
    for f in &report.fits {
        fits.push(vec![f.family.clone(), fmt_num(f.fit.alpha), fmt_num(f.fit.beta), fmt_num(f.fit.rms_residual)]);
    }
    let mut sat = Block::new(&["family", "n_low", "n_high", "entropy_change_nats"]);
    for s in &report.saturation {
        sat.push(vec![s.family.clone(), s.n_low.to_string(), s.n_high.to_string(), fmt_num(s.entropy_change_nats)]);
    }
    let blocks: Vec<Block> = [rows, fits, sat].into_iter().filter(|b| !b.is_empty()).collect();
    Ok(csv(&blocks))
}

#[derive(Serialize)]
struct ScanReport {
    profile: Vec<ScanPoint>,
    tau_star: f64,
    erasure_quality: f64,
}

#[derive(Serialize)]
struct ScanPoint {
    tau: f64,
    erasure_quality: f64,
}

fn cmd_erasure_scan(args: &CommonArgs) -> CliResult<String> {
    let cfg: ErasureScanConfig = read(args)?;
    cfg.validate()?;
    let ErasureScan { tau_star, quality, profile } =
        find_erasure_time(&cfg.model, cfg.scan.tau_min, cfg.scan.tau_max, cfg.scan.steps)?;
    if args.verify {
        for &(tau, q) in &profile {
            check((0.0..=1.0 + 1e-12).contains(&q), || format!("quality {q} outside [0, 1] at tau = {tau}"))?;
            check(q >= quality - 1e-12, || format!("tau = {tau} beats the reported optimum"))?;
        }
    }
    if args.format == Format::Json {
        let profile = profile.into_iter().map(|(tau, erasure_quality)| ScanPoint { tau, erasure_quality }).collect();
        return to_json(&ScanReport { profile, tau_star, erasure_quality: quality });
    }
    let mut rows = Block::new(&["tau", "erasure_quality"]);
    for (tau, q) in &profile {
        rows.push(vec![fmt_num(*tau), fmt_num(*q)]);
    }
    let mut best = Block::new(&["tau_star", "erasure_quality"]);
    best.push(vec![fmt_num(tau_star), fmt_num(quality)]);
    Ok(csv(&[rows, best]))
}
