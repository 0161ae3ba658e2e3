//! `hyperlog` — run theorem-keyed verification suites over parameter grids,
//! solve for named roots, and emit JSON reports (plus CSV for sweeps).
//!
//! Exit codes: 0 all requested reports Pass/Exploratory; 1 any Fail;
//! 2 usage error (unknown id, bad parameters); 3 root bracketing failure;
//! 4 unwritable output path.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hyperlog::analysis::{beta_root, gamma_root, x0_root};
use hyperlog::logtype::{PhiExponents, ZeroBalancedPair};
use hyperlog::verify::{check_ids, run_check, run_sweep, CheckConfig, Status, VerificationReport};
use hyperlog::Error;

#[derive(Parser)]
#[command(
    name = "hyperlog",
    version,
    about = "Special-function inequality verification over parameter grids"
)]
struct Cli {
    /// TOML key=value file predefining parameters (flags override it).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct ParamFlags {
    /// First pair parameter c.
    #[arg(long)]
    c: Option<f64>,
    /// Second pair parameter d.
    #[arg(long)]
    d: Option<f64>,
    /// Lower envelope exponent a.
    #[arg(long)]
    a: Option<f64>,
    /// Upper envelope exponent b.
    #[arg(long)]
    b: Option<f64>,
    /// Power parameter p.
    #[arg(long)]
    p: Option<f64>,
    /// Main grid resolution.
    #[arg(long = "grid-n")]
    grid_n: Option<usize>,
    /// Absolute tolerance on inequality margins.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one theorem-keyed check (or `all`) and print a JSON report.
    Check {
        /// Theorem id (see `--list`), or `all`.
        id: String,
        /// List the known ids and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Solve for a named root (gamma, x0, beta) and print it as JSON.
    Root {
        /// One of: gamma, x0, beta.
        name: String,
        #[command(flatten)]
        params: ParamFlags,
    },
    /// Run a named sweep (myq3, my44, my46), write CSV, print the summary.
    Sweep {
        /// Sweep name.
        name: String,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        params: ParamFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Ok(threads) = std::env::var("HYPERLOG_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }

    let defaults = match cli.config.as_deref().map(load_config).transpose() {
        Ok(cfg) => cfg.unwrap_or_default(),
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };

    match cli.command {
        Command::Check { id, list, params } => {
            if list {
                for known in check_ids() {
                    println!("{known}");
                }
                return ExitCode::SUCCESS;
            }
            run_check_cmd(&id, merge(&defaults, &params))
        }
        Command::Root { name, params } => run_root_cmd(&name, merge(&defaults, &params)),
        Command::Sweep { name, out, params } => {
            run_sweep_cmd(&name, &out, merge(&defaults, &params))
        }
    }
}

/// Parse a flat TOML table of defaults; keys mirror the flags
/// (`c`, `d`, `a`, `b`, `p`, `grid_n`, `tol`).
fn load_config(path: &std::path::Path) -> Result<CheckConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let table: toml::Table = text
        .parse()
        .map_err(|e| format!("cannot parse config {}: {e}", path.display()))?;
    let number = |key: &str| -> Result<Option<f64>, String> {
        match table.get(key) {
            None => Ok(None),
            Some(v) => v
                .as_float()
                .or_else(|| v.as_integer().map(|i| i as f64))
                .map(Some)
                .ok_or_else(|| format!("config key `{key}` must be a number")),
        }
    };
    Ok(CheckConfig {
        c: number("c")?,
        d: number("d")?,
        a: number("a")?,
        b: number("b")?,
        p: number("p")?,
        grid_n: number("grid_n")?.map(|v| v as usize),
        tol: number("tol")?,
    })
}

fn merge(defaults: &CheckConfig, flags: &ParamFlags) -> CheckConfig {
    CheckConfig {
        c: flags.c.or(defaults.c),
        d: flags.d.or(defaults.d),
        a: flags.a.or(defaults.a),
        b: flags.b.or(defaults.b),
        p: flags.p.or(defaults.p),
        grid_n: flags.grid_n.or(defaults.grid_n),
        tol: flags.tol.or(defaults.tol),
    }
}

#[derive(Serialize)]
struct Summary {
    pass: usize,
    fail: usize,
    exploratory: usize,
}

#[derive(Serialize)]
struct Envelope<'a> {
    reports: &'a [VerificationReport],
    summary: Summary,
}

fn print_reports(reports: &[VerificationReport]) {
    let doc = Envelope {
        reports,
        summary: Summary {
            pass: reports.iter().filter(|r| r.status == Status::Pass).count(),
            fail: reports.iter().filter(|r| r.status == Status::Fail).count(),
            exploratory: reports
                .iter()
                .filter(|r| r.status == Status::Exploratory)
                .count(),
        },
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("serializable report")
    );
}

fn exit_for(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().any(|r| r.status == Status::Fail) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_check_cmd(id: &str, cfg: CheckConfig) -> ExitCode {
    let result = if id == "all" {
        hyperlog::verify::run_all(&cfg)
    } else {
        run_check(id, &cfg).map(|rep| vec![rep])
    };
    match result {
        Ok(reports) => {
            print_reports(&reports);
            exit_for(&reports)
        }
        Err(Error::UnknownId(other)) => {
            eprintln!(
                "error: unknown theorem id `{other}` (known: {}, all)",
                check_ids().join(", ")
            );
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run_root_cmd(name: &str, cfg: CheckConfig) -> ExitCode {
    const ROOT_TOL: f64 = 1e-10;
    let pair = |what: &str| -> Result<ZeroBalancedPair, String> {
        match (cfg.c, cfg.d) {
            (Some(c), Some(d)) => ZeroBalancedPair::new(c, d).map_err(|e| e.to_string()),
            _ => Err(format!("root `{what}` needs --c and --d")),
        }
    };
    let exps = |what: &str| -> Result<PhiExponents, String> {
        match (cfg.a, cfg.b) {
            (Some(a), Some(b)) => PhiExponents::new(a, b).map_err(|e| e.to_string()),
            _ => Err(format!("root `{what}` needs --a and --b")),
        }
    };

    let mut params = BTreeMap::new();
    let value = match name {
        "x0" => x0_root(),
        "gamma" => match pair("gamma") {
            Ok(p) => {
                params.insert("c", p.c());
                params.insert("d", p.d());
                gamma_root(&p)
            }
            Err(msg) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        "beta" => match (pair("beta"), exps("beta")) {
            (Ok(p), Ok(e)) => {
                params.insert("c", p.c());
                params.insert("d", p.d());
                params.insert("a", e.a());
                params.insert("b", e.b());
                beta_root(&p, &e)
            }
            (Err(msg), _) | (_, Err(msg)) => {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
        },
        other => {
            eprintln!("error: unknown root `{other}` (known: gamma, x0, beta)");
            return ExitCode::from(2);
        }
    };

    match value {
        Ok(root) => {
            eprintln!("{name} = {root:.10}");
            #[derive(Serialize)]
            struct RootDoc<'a> {
                root: &'a str,
                params: BTreeMap<&'a str, f64>,
                value: f64,
                tolerance: f64,
            }
            let doc = RootDoc {
                root: name,
                params,
                value: root,
                tolerance: ROOT_TOL,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable root")
            );
            ExitCode::SUCCESS
        }
        Err(err @ (Error::Bracket { .. } | Error::Contract(_))) => {
            eprintln!("error: {err}");
            ExitCode::from(3)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run_sweep_cmd(name: &str, out: &std::path::Path, cfg: CheckConfig) -> ExitCode {
    match run_sweep(name, &cfg) {
        Ok(output) => {
            if let Err(err) = std::fs::write(out, &output.csv) {
                eprintln!("error: cannot write {}: {err}", out.display());
                return ExitCode::from(4);
            }
            let reports = vec![output.report];
            print_reports(&reports);
            exit_for(&reports)
        }
        Err(Error::UnknownId(other)) => {
            eprintln!(
                "error: unknown sweep `{other}` (known: {})",
                hyperlog::verify::sweep_ids().join(", ")
            );
            ExitCode::from(2)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
