use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

mod commands;
mod output;

#[derive(Parser, Debug)]
#[command(name = "groupcodes", version, about = "Dihedral and quaternion group codes: decompositions, duals, counts and quantum codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Block list and generator images of F_q[G]
    Decompose,
    /// Dual of the code given by --spec
    Dual,
    /// Parameters, duality flags and quantum code of --spec
    Classify,
    /// Number of self-orthogonal group codes
    Count {
        /// also count by checking every ideal directly
        #[arg(long)]
        oracle: bool,
    },
    /// List ideals of F_q[G]
    Enumerate {
        /// only self-orthogonal codes under --metric
        #[arg(long)]
        self_orthogonal: bool,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Quantum codes from every hermitian self-orthogonal dihedral code
    CssSearch {
        /// keep only quantum dimension k_q
        #[arg(long)]
        kq: Option<usize>,
        /// keep the best N after ranking
        #[arg(long)]
        top: Option<usize>,
    },
    /// Check decompositions and duals against brute-force oracles
    Verify {
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// order of the coefficient field (codes over F_q)
    #[arg(long, global = true)]
    q: Option<u64>,
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = GroupArg::Dihedral)]
    group: GroupArg,
    /// defaults to hermitian when q is a square, euclidean otherwise
    #[arg(long, global = true, value_enum)]
    metric: Option<MetricArg>,
    #[arg(long, global = true, default_value_t = 1 << 24)]
    budget_exhaustive: u64,
    /// number of information sets (default n / gcd(n, k))
    #[arg(long, global = true)]
    isd_sets: Option<usize>,
    /// highest information weight to enumerate
    #[arg(long, global = true)]
    isd_weight: Option<usize>,
    /// ceiling on enumerated codewords per distance computation
    #[arg(long, global = true, default_value_t = 1 << 34)]
    isd_work: u64,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    /// include wall-clock timings in the output
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupArg {
    Dihedral,
    Quaternion,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricArg {
    Euclidean,
    Hermitian,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub struct Report {
    pub config: Value,
    pub results: Vec<Value>,
    pub timings: Map<String, Value>,
    pub warnings: Vec<String>,
    pub failed: bool,
    record_timings: bool,
}

impl Report {
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = std::time::Instant::now();
        let out = f();
        if self.record_timings {
            let ms = start.elapsed().as_secs_f64() * 1000.0;
            self.timings.insert(phase.into(), json!((ms * 1000.0).round() / 1000.0));
        }
        out
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Decompose => "decompose",
        Command::Dual => "dual",
        Command::Classify => "classify",
        Command::Count { .. } => "count",
        Command::Enumerate { .. } => "enumerate",
        Command::CssSearch { .. } => "css-search",
        Command::Verify { .. } => "verify",
    }
}

fn config_json(cli: &Cli) -> Value {
    let r = &cli.run;
    let p = r.q.and_then(|q| groupcodes::poly::prime_power(q).ok()).map(|(p, _)| p);
    json!({
        "command": command_name(&cli.command),
        "p": p,
        "q": r.q,
        "n": r.n,
        "group": format!("{:?}", r.group).to_lowercase(),
        "metric": r.metric.map(|m| format!("{m:?}").to_lowercase()),
        "budget_exhaustive": r.budget_exhaustive,
        "isd_sets": r.isd_sets,
        "isd_weight": r.isd_weight,
        "isd_work": r.isd_work,
        "seed": r.seed,
        "format": format!("{:?}", r.format).to_lowercase(),
        "spec": r.spec.as_ref().map(|p| p.display().to_string()),
    })
}

fn run(cli: &Cli) -> Result<Report> {
    let mut report = Report {
        config: config_json(cli),
        results: vec![],
        timings: Map::new(),
        warnings: vec![],
        failed: false,
        record_timings: cli.run.timings,
    };
    match &cli.command {
        Command::Decompose => commands::decompose(&cli.run, &mut report)?,
        Command::Dual => commands::dual(&cli.run, &mut report)?,
        Command::Classify => commands::classify(&cli.run, &mut report)?,
        Command::Count { oracle } => commands::count(&cli.run, *oracle, &mut report)?,
        Command::Enumerate { self_orthogonal, dim, limit } => {
            commands::enumerate(&cli.run, *self_orthogonal, *dim, *limit, &mut report)?
        }
        Command::CssSearch { kq, top } => commands::css_search(&cli.run, *kq, *top, &mut report)?,
        Command::Verify { samples } => commands::verify(&cli.run, *samples, &mut report)?,
    }
    Ok(report)
}

impl RunArgs {
    pub fn require_qn(&self) -> Result<(u64, usize)> {
        match (self.q, self.n) {
            (Some(q), Some(n)) if n >= 1 => Ok((q, n)),
            (Some(_), Some(_)) => bail!("--n must be at least 1"),
            _ => bail!("--q and --n are required"),
        }
    }

    pub fn read_spec(&self) -> Result<String> {
        let path = self.spec.as_ref().context("--spec <file> is required")?;
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", output::render(&report, cli.run.format));
            for w in &report.warnings {
                if cli.run.format != Format::Json {
                    eprintln!("warning: {w}");
                }
            }
            if report.failed { ExitCode::from(1) } else { ExitCode::SUCCESS }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
