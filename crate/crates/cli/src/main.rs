//! `hyperbounds`: degree-sequence spectral bounds for k-uniform hypergraphs,
//! power-iteration spectral radii, exact identity sweeps, and randomized
//! bound-validation campaigns.
//!
//! Exit codes: 0 success, 1 identity-sweep failure, 2 input or usage error,
//! 3 non-converged spectral estimate, 4 campaign with violations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperbounds::bounds::{self, BoundKind};
use hyperbounds::exact;
use hyperbounds::spectral::{self, Operator, SpectralConfig};
use hyperbounds::Hypergraph;
use hyperbounds_cli::campaign::{self, CampaignConfig, InstanceSource};
use hyperbounds_cli::identities;
use hyperbounds_cli::output;

#[derive(Parser)]
#[command(name = "hyperbounds", version, about = "Degree-sequence spectral bounds for uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Adjacency,
    Signless,
}

impl From<KindArg> for BoundKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Adjacency => BoundKind::Adjacency,
            KindArg::Signless => BoundKind::Signless,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKindArg {
    Complete,
    SingleEdge,
    RandomM,
}

#[derive(Subcommand)]
enum Command {
    /// Per-s degree bounds for a hypergraph file, with the minimum over s
    Bounds {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adjacency spectral radius by bracketing power iteration
    Rho {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 1_000_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 1.0)]
        shift: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Signless Laplacian spectral radius by bracketing power iteration
    Q {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 1_000_000)]
        max_iter: usize,
        #[arg(long, default_value_t = 1.0)]
        shift: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check bound >= spectral radius over random connected instances (or
    /// one fixed instance), reporting every violation
    Validate {
        #[arg(long, value_enum, default_value_t = KindArg::Adjacency)]
        kind: KindArg,
        /// Fixed instance file; replaces random generation (one trial)
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Inclusive edge-count range `LO..HI` (default: connectivity
        /// threshold up to half density)
        #[arg(long = "m-range")]
        m_range: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 1_000_000)]
        max_iter: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact combinatorial identity sweep over 3 <= s < n <= n-max
    Identities {
        #[arg(long = "n-max", default_value_t = 25)]
        n_max: i64,
        #[arg(long = "k-max", default_value_t = 8)]
        k_max: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a hypergraph file in canonical form
    Gen {
        #[arg(long, value_enum)]
        kind: GenKindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Edge count (random-m only)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample until connected (random-m only; caps at 1000 attempts)
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Bounds {
            file,
            kind,
            format,
            out,
        } => cmd_bounds(&file, kind.into(), format, out.as_deref()),
        Command::Rho {
            file,
            tol,
            max_iter,
            shift,
            out,
        } => cmd_spectral(&file, Operator::Adjacency, tol, max_iter, shift, out.as_deref()),
        Command::Q {
            file,
            tol,
            max_iter,
            shift,
            out,
        } => cmd_spectral(&file, Operator::Signless, tol, max_iter, shift, out.as_deref()),
        Command::Validate {
            kind,
            file,
            n,
            k,
            m_range,
            trials,
            seed,
            tol,
            max_iter,
            out,
        } => cmd_validate(
            kind.into(),
            file.as_deref(),
            n,
            k,
            m_range.as_deref(),
            trials,
            seed,
            tol,
            max_iter,
            out.as_deref(),
        ),
        Command::Identities {
            n_max,
            k_max,
            format,
            out,
        } => cmd_identities(n_max, k_max, format, out.as_deref()),
        Command::Gen {
            kind,
            n,
            k,
            m,
            seed,
            connected,
            out,
        } => cmd_gen(kind, n, k, m, seed, connected, out.as_deref()),
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Hypergraph::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Full output is assembled before anything is written, so errors never
/// leave partial files behind.
fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn cmd_bounds(
    file: &Path,
    kind: BoundKind,
    format: FormatArg,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    let h = read_hypergraph(file)?;
    let degrees = h.degree_sequence();
    let report = match kind {
        BoundKind::Adjacency => bounds::adjacency_bound(degrees.degrees(), h.uniformity()),
        BoundKind::Signless => bounds::signless_bound(degrees.degrees(), h.uniformity()),
    }
    .map_err(|e| e.to_string())?;
    let text = match format {
        FormatArg::Json => output::bound_report_json(&h, &report),
        FormatArg::Csv => output::bound_report_csv(&report),
    };
    emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_spectral(
    file: &Path,
    operator: Operator,
    tol: f64,
    max_iter: usize,
    shift: f64,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    let h = read_hypergraph(file)?;
    let config = SpectralConfig {
        tolerance: tol,
        max_iterations: max_iter,
        shift,
    };
    let estimate =
        spectral::spectral_radius(&h, operator, &config).map_err(|e| e.to_string())?;
    let text = output::estimate_json(&h, operator, &estimate);
    emit(out, &text)?;
    Ok(if estimate.converged {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn parse_m_range(text: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("invalid m-range {text:?}: expected LO..HI"))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid m-range lower bound {lo:?}"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid m-range upper bound {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty m-range {text:?}"));
    }
    Ok((lo, hi))
}

#[allow(clippy::too_many_arguments)]
fn cmd_validate(
    kind: BoundKind,
    file: Option<&Path>,
    n: Option<usize>,
    k: Option<usize>,
    m_range: Option<&str>,
    trials: usize,
    seed: u64,
    tol: f64,
    max_iter: usize,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    let (source, trials) = match file {
        Some(path) => (InstanceSource::Fixed(read_hypergraph(path)?), 1),
        None => {
            let n = n.ok_or("--n is required unless --file is given")?;
            let k = k.ok_or("--k is required unless --file is given")?;
            if k < 2 || n < k {
                return Err(format!("need n >= k >= 2, got n = {n}, k = {k}"));
            }
            if trials < 1 {
                return Err("--trials must be at least 1".into());
            }
            let m_range = match m_range {
                Some(text) => parse_m_range(text)?,
                None => default_m_range(n, k),
            };
            (InstanceSource::Random { n, k, m_range }, trials)
        }
    };
    let config = CampaignConfig {
        kind,
        trials,
        seed,
        spectral: SpectralConfig {
            tolerance: tol,
            max_iterations: max_iter,
            shift: 1.0,
        },
        source,
    };
    let result = campaign::run_campaign(&config).map_err(|e| e.to_string())?;
    let text = output::campaign_json(&result);
    emit(out, &text)?;
    Ok(if result.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    })
}

/// Connectivity threshold up to half of the edge space.
fn default_m_range(n: usize, k: usize) -> (usize, usize) {
    let total = usize::try_from(&exact::binom(n as i64, k as i64)).unwrap_or(usize::MAX);
    let lo = (n - 1).div_ceil(k - 1).min(total);
    let hi = (total / 2).clamp(lo, total);
    (lo, hi)
}

fn cmd_identities(
    n_max: i64,
    k_max: i64,
    format: FormatArg,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    if n_max < 4 {
        return Err(format!("--n-max must be at least 4, got {n_max}"));
    }
    if k_max < 2 {
        return Err(format!("--k-max must be at least 2, got {k_max}"));
    }
    let rows = identities::sweep(n_max, k_max);
    let text = match format {
        FormatArg::Csv => output::identities_csv(&rows),
        FormatArg::Json => output::identities_json(n_max, k_max, &rows),
    };
    emit(out, &text)?;
    Ok(if identities::all_pass(&rows) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_gen(
    kind: GenKindArg,
    n: usize,
    k: usize,
    m: Option<usize>,
    seed: u64,
    connected: bool,
    out: Option<&Path>,
) -> Result<ExitCode, String> {
    let h = match kind {
        GenKindArg::Complete => Hypergraph::complete(n, k),
        GenKindArg::SingleEdge => Hypergraph::single_edge(n, k),
        GenKindArg::RandomM => {
            let m = m.ok_or("--m is required for random-m")?;
            if connected {
                Hypergraph::random_connected(n, k, m, seed)
            } else {
                Hypergraph::random_m(n, k, m, seed)
            }
        }
    }
    .map_err(|e| e.to_string())?;
    emit(out, &h.to_string())?;
    Ok(ExitCode::SUCCESS)
}
