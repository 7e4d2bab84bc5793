//! Thin command-line front end: reproducible experiment runner over the
//! library. Human-readable summaries go to stdout; machine artifacts are
//! written only through `--out`. Exit codes: 0 on success, 1 on a property
//! or runtime failure, 2 on usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use subsetlab::lab::{self, named_map, EstimateReport, SearchConfig};
use subsetlab::subset::FiniteSubset;
use subsetlab::suites;
use subsetlab::{Error, Space};

#[derive(Parser)]
#[command(
    name = "subsetlab",
    version,
    about = "Finite subset spaces under the Hausdorff metric: verification suites, bound tables, and a Lipschitz lab"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SamplerArg {
    Uniform,
    Clustered,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a named property suite (metric, hausdorff, lemma31, lemma32,
    /// lemma33, lemma42, john, pipeline, hadamard).
    Verify {
        /// Suite name.
        suite: String,
        /// Seed for every sampled check.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Absolute tolerance for the checks.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Cap on per-check sample counts (default: the documented counts).
        #[arg(long)]
        trials: Option<usize>,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the theoretical bound table over a range of n.
    Bounds {
        #[arg(long = "n-min", default_value_t = 4)]
        n_min: usize,
        #[arg(long = "n-max", default_value_t = 16)]
        n_max: usize,
        /// Emit every 1 ≤ k ≤ n−1 instead of only k = n−1.
        #[arg(long)]
        all_k: bool,
        /// Output format for --out.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for a Lipschitz lower-bound certificate for a named map
    /// (identity, scale:<f>, radial:<rho>, merge, transfer:clamp).
    Estimate {
        /// Map name from the registry.
        #[arg(long)]
        map: String,
        /// Space descriptor as JSON, e.g. '{"kind":"interval","a":0,"b":1}'.
        #[arg(long)]
        space: Option<String>,
        /// Domain cardinality cap (also the sampled cardinality).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Domain sampler.
        #[arg(long, value_enum, default_value_t = SamplerArg::Uniform)]
        sampler: SamplerArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of search trials.
        #[arg(long)]
        trials: Option<usize>,
        /// Hill-climbing steps per perturbation scale.
        #[arg(long)]
        steps: Option<usize>,
        /// Write the certificate JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cover a circular point set by at most k arc midpoints.
    Cover {
        /// Path to a FiniteSubset JSON file over the arclength circle.
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimal-radius centers for a line or circle point set.
    Kcenter {
        /// Path to a FiniteSubset JSON file.
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn command_echo() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn write_artifact(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    if let Some(path) = out {
        std::fs::write(path, content)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn load_subset(path: &PathBuf) -> Result<FiniteSubset, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Verify {
            suite,
            seed,
            tol,
            trials,
            out,
        } => {
            let mut report = suites::run_suite(&suite, seed, tol, trials)?;
            report.command = command_echo();
            if let Some(path) = &out {
                report.artifacts.push(path.display().to_string());
            }
            print!("{}", report.summary());
            write_artifact(&out, &serde_json::to_string_pretty(&report)?)?;
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                for failure in report.failures() {
                    eprintln!(
                        "failed check {}: {}",
                        failure.name,
                        serde_json::to_string(&failure.witness)?
                    );
                }
                Ok(ExitCode::from(1))
            }
        }
        Cmd::Bounds {
            n_min,
            n_max,
            all_k,
            format,
            out,
        } => {
            let rows = lab::bound_table(n_min, n_max, all_k)?;
            let rendered = match format {
                Format::Csv => lab::bounds_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows)?,
            };
            println!("{} rows for n in [{n_min}, {n_max}]", rows.len());
            match &out {
                Some(_) => write_artifact(&out, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Estimate {
            map,
            space,
            n,
            sampler,
            seed,
            trials,
            steps,
            out,
        } => {
            let space = match space {
                Some(text) => {
                    let s: Space = serde_json::from_str(&text)
                        .map_err(|e| Error::InvalidInput(format!("bad --space descriptor: {e}")))?;
                    s.validate()?;
                    Some(s)
                }
                None => None,
            };
            let clustered = sampler == SamplerArg::Clustered;
            let (map, domain) = named_map(&map, space, n, clustered)?;
            let mut config = SearchConfig::with_seed(seed);
            if let Some(t) = trials {
                config.trials = t;
            }
            if let Some(s) = steps {
                config.steps_per_scale = s;
            }
            let certificate = lab::estimate_lipschitz(map.as_ref(), &domain, &config)?;
            println!(
                "map {}: certified ratio {} (input distance {}, output distance {})",
                certificate.map,
                certificate.ratio,
                certificate.input_distance,
                certificate.output_distance
            );
            let record = EstimateReport {
                certificate,
                config,
            };
            write_artifact(&out, &serde_json::to_string_pretty(&record)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cover { points, k, out } => {
            let a = load_subset(&points)?;
            let cover = a.circle_k_cover(k)?;
            let n = a.len();
            let bound = if n <= k {
                0.0
            } else {
                std::f64::consts::PI * (n as f64 - 1.0) / (k as f64 * n as f64)
            };
            let achieved = a.hausdorff(&cover)?;
            println!(
                "covered {n} points by {} midpoints: d_H = {achieved} (bound {bound})",
                cover.len()
            );
            let payload = serde_json::json!({
                "input": a,
                "k": k,
                "cover": cover,
                "bound": bound,
                "hausdorff": achieved,
            });
            write_artifact(&out, &serde_json::to_string_pretty(&payload)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Kcenter { points, k, out } => {
            let a = load_subset(&points)?;
            let result = a.exact_kcenter(k)?;
            println!(
                "optimal radius {} with {} centers",
                result.radius,
                result.centers.len()
            );
            write_artifact(&out, &serde_json::to_string_pretty(&result)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e @ Error::InvalidInput(_)) => {
            eprintln!("usage error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
