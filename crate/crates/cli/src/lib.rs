//! Command-line front end: validate a category file, compute 𝔽-groups,
//! realize classes, run the axiom suite and replay its failures.

pub mod config;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use extri_core::axiomlab::{replay, run_suite, Report, Suite};
use extri_core::karoubi::Completion;
use extri_core::quiverrep::Search;
use extri_core::weakcomp::WeakCompletion;

pub use config::{load, CategoryConfig, Loaded};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Semantic(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Semantic(_) => EXIT_SEMANTIC,
            CliError::Failed(_) => EXIT_CHECK_FAILED,
        }
    }
}

impl From<extri_core::Error> for CliError {
    fn from(e: extri_core::Error) -> Self {
        CliError::Semantic(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "extri", version, about = "Idempotent completions of extriangulated quiver categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a category file is well formed.
    Validate { config: PathBuf },
    /// Dimension and basis of 𝔽((Z,p),(X,q)).
    Ext {
        config: PathBuf,
        quotient: String,
        sub: String,
        /// Idempotent on the quotient.
        #[arg(long)]
        idem_p: Option<String>,
        /// Idempotent on the sub.
        #[arg(long)]
        idem_q: Option<String>,
    },
    /// Realize a class given by coordinates in the 𝔽-basis; prints the triangle as JSON.
    Realize {
        config: PathBuf,
        quotient: String,
        sub: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coords: Vec<i64>,
        #[arg(long)]
        idem_p: Option<String>,
        #[arg(long)]
        idem_q: Option<String>,
    },
    /// Run the randomized axiom suite and write a JSON report.
    Check {
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<u64>,
        /// base, karoubi, weak or all.
        #[arg(long)]
        suite: Option<String>,
        /// Corrupt the witness of this check (repeatable, or "all").
        #[arg(long)]
        tamper: Vec<String>,
        #[arg(long, default_value = "extri-report.json")]
        report: PathBuf,
    },
    /// Rerun every failure recorded in a report.
    Replay { report: PathBuf },
}

/// Runs a parsed command; the returned code is the process exit status.
pub fn run(cli: Cli, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let result = match cli.command {
        Command::Validate { config } => cmd_validate(&config, out),
        Command::Ext {
            config,
            quotient,
            sub,
            idem_p,
            idem_q,
        } => cmd_ext(&config, &quotient, &sub, idem_p.as_deref(), idem_q.as_deref(), out),
        Command::Realize {
            config,
            quotient,
            sub,
            coords,
            idem_p,
            idem_q,
        } => cmd_realize(&config, &quotient, &sub, &coords, idem_p.as_deref(), idem_q.as_deref(), out),
        Command::Check {
            config,
            seed,
            trials,
            suite,
            tamper,
            report,
        } => cmd_check(&config, seed, trials, suite.as_deref(), &tamper, &report, out),
        Command::Replay { report } => cmd_replay(&report, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "extri: {e}");
            e.exit_code()
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Failed(format!("write failed: {e}"))
}

fn dims(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn cmd_validate(path: &Path, out: &mut impl Write) -> Result<i32, CliError> {
    let l = load(path)?;
    let q = l.category.quiver();
    let backend = match &l.config.backend {
        config::BackendSpec::Balanced { weights } => {
            let w: Vec<String> = weights.iter().map(i64::to_string).collect();
            format!("balanced ({})", w.join(","))
        }
        config::BackendSpec::Formal { generators } => format!("formal [{}]", generators.join(", ")),
    };
    writeln!(
        out,
        "ok: F_{}, {} vertices, {} arrows, {backend}",
        l.config.prime,
        q.vertices(),
        q.arrows().len()
    )
    .map_err(io)?;
    for (name, rep) in &l.objects {
        writeln!(out, "object {name} dims {}", dims(rep.dims())).map_err(io)?;
    }
    let weak = WeakCompletion::new(l.category.clone());
    for (name, k) in &l.idempotents {
        let verdict = match weak.splits_in_base(k.rep(), k.idem())? {
            Search::Found(_) => "yes",
            Search::NotFound => "no",
            Search::Unknown => "unknown",
        };
        let on = &l.config.idempotents[name].object;
        writeln!(
            out,
            "idempotent {name} on {on} image {} splits in base: {verdict}",
            dims(&k.image_dims())
        )
        .map_err(io)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_ext(
    path: &Path,
    quotient: &str,
    sub: &str,
    idem_p: Option<&str>,
    idem_q: Option<&str>,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let l = load(path)?;
    let (zp, xq) = (l.kar_object(quotient, idem_p)?, l.kar_object(sub, idem_q)?);
    let tilde = Completion::new(l.category.clone());
    let space = tilde.f_space(&zp, &xq);
    writeln!(out, "dim {}", space.dim()).map_err(io)?;
    writeln!(out, "ambient dim {}", space.ambient().dim()).map_err(io)?;
    for (i, b) in space.basis().iter().enumerate() {
        writeln!(out, "basis[{i}] {:?}", space.ambient().coords(b.cocycle())).map_err(io)?;
    }
    Ok(EXIT_OK)
}

pub fn cmd_realize(
    path: &Path,
    quotient: &str,
    sub: &str,
    coords: &[i64],
    idem_p: Option<&str>,
    idem_q: Option<&str>,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let l = load(path)?;
    let (zp, xq) = (l.kar_object(quotient, idem_p)?, l.kar_object(sub, idem_q)?);
    let tilde = Completion::new(l.category.clone());
    let space = tilde.f_space(&zp, &xq);
    if coords.len() != space.dim() {
        return Err(CliError::Semantic(format!(
            "coords: {} given for a group of dimension {}",
            coords.len(),
            space.dim()
        )));
    }
    let f = l.category.field();
    let c: Vec<u32> = coords.iter().map(|&x| f.from_i64(x)).collect();
    let tri = tilde.r_realize(&space.element(&c))?;
    let json = serde_json::to_string_pretty(&tri).map_err(|e| CliError::Failed(e.to_string()))?;
    writeln!(out, "{json}").map_err(io)?;
    Ok(EXIT_OK)
}

pub fn cmd_check(
    path: &Path,
    seed: Option<u64>,
    trials: Option<u64>,
    suite: Option<&str>,
    tamper: &[String],
    report_path: &Path,
    out: &mut impl Write,
) -> Result<i32, CliError> {
    let l = load(path)?;
    let spec = l.config.check.clone().unwrap_or_else(|| config::CheckSpec {
        primes: Some(vec![l.config.prime]),
        quivers: Some(vec![l.config.quiver.clone()]),
        ..Default::default()
    });
    let mut cfg = config::trial_config(&spec)?;
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if let Some(t) = trials {
        cfg.trials = t;
    }
    if let Some(s) = suite {
        cfg.suite = s
            .parse::<Suite>()
            .map_err(|e| CliError::Semantic(format!("--suite: {e}")))?;
    }
    cfg.tamper.extend(tamper.iter().cloned());
    cfg.validate().map_err(|e| CliError::Semantic(format!("--tamper: {e}")))?;

    let report = run_suite(&cfg);
    std::fs::write(report_path, report.to_json()).map_err(io)?;
    for c in &report.checks {
        let verdict = if c.failed == 0 { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} {} {}/{}", c.name, c.passed, c.passed + c.failed).map_err(io)?;
        if let Some(f) = c.failures.first() {
            writeln!(out, "  trial {}: {}", f.trial, f.message).map_err(io)?;
        }
    }
    writeln!(out, "passed {} failed {}", report.passed, report.failed).map_err(io)?;
    writeln!(out, "digest {}", report.digest).map_err(io)?;
    writeln!(out, "report {}", report_path.display()).map_err(io)?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_replay(path: &Path, out: &mut impl Write) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let report: Report = serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut all_same = true;
    let mut count = 0;
    for p in report.checks.iter().flat_map(|c| &c.failures) {
        count += 1;
        let again = replay(p)?;
        let same = again.as_deref() == Some(p.message.as_str());
        all_same &= same;
        let verdict = if same { "REPRODUCED" } else { "DIFFERS" };
        writeln!(out, "{verdict} {} trial {}: {}", p.check, p.trial, again.unwrap_or_else(|| "passes".into()))
            .map_err(io)?;
    }
    writeln!(out, "replayed {count} failures").map_err(io)?;
    Ok(if all_same { EXIT_OK } else { EXIT_CHECK_FAILED })
}
