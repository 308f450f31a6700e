use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::RngCore;
use serde_json::json;

use catalan_burnside::burnside::{kernel, lumped_kernel};
use catalan_burnside::diagnostics::{mixing_time_bound, Distance, TvCurve};
use catalan_burnside::output::{collect_samples, render_samples, start_label, Format, Metadata, SampleKind};
use catalan_burnside::rational::format_rational;
use catalan_burnside::verify::{run_suite, Suite};
use catalan_burnside::{Error, ParkingFunction};

/// Burnside-process sampling of parking functions and Catalan structures.
#[derive(Parser)]
#[command(name = "burnside", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// csv or json
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run independent chains and print one sample per replica.
    Sample {
        /// pf, ipf, dyck, labeled-dyck or triangulation
        kind: SampleKind,
        #[arg(long)]
        n: usize,
        /// Defaults to the step count that guarantees distance 0.01.
        #[arg(long)]
        steps: Option<usize>,
        /// Defaults to a fresh value from the OS, echoed in the metadata.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1)]
        replicas: usize,
        /// Start state, e.g. 1,2,1; defaults to 1,2,...,n.
        #[arg(long)]
        start: Option<ParkingFunction>,
        /// Worker threads; defaults to available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact worst-case distance to stationarity against the bound.
    TvCurve {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t_max: usize,
        /// Follow a single start state instead of the worst case.
        #[arg(long)]
        start: Option<ParkingFunction>,
        /// Add the exact rational distance as a `tv_exact` column.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a named invariant suite exhaustively up to --n-max.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the exact transition probability K(x, y).
    Kernel {
        x: ParkingFunction,
        y: ParkingFunction,
        /// Treat x and y as orbits and print the lumped kernel.
        #[arg(long)]
        lumped: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(meta: &Metadata, format: Format, csv_body: String, json_body: serde_json::Value) -> String {
    match format {
        Format::Csv => format!("{}\n{csv_body}", meta.csv_comment()),
        Format::Json => {
            let mut doc = json!({ "metadata": meta.to_json() });
            doc.as_object_mut()
                .unwrap()
                .extend(json_body.as_object().expect("object body").clone());
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    }
}

fn start_state(n: usize, start: Option<ParkingFunction>) -> Result<ParkingFunction, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("--n must be at least 1".into()));
    }
    match start {
        Some(x) if x.len() != n => Err(Error::InvalidInput(format!("--start has length {}, expected {n}", x.len()))),
        Some(x) => Ok(x),
        None => Ok(ParkingFunction::identity(n)),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Sample {
            kind,
            n,
            steps,
            seed,
            replicas,
            start,
            jobs,
            output,
        } => {
            let start = start_state(n, start)?;
            let steps = match steps {
                Some(s) => s,
                None => mixing_time_bound(n, 0.01)?,
            };
            let seed = seed.unwrap_or_else(|| rand::rngs::OsRng.next_u64());
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::InvalidInput(format!("--jobs: {e}")))?;
            let samples = pool.install(|| collect_samples(kind, &start, steps, seed, replicas))?;
            let meta = Metadata {
                kind: Some(kind.to_string()),
                t: Some(steps),
                replicas: Some(replicas),
                seed: Some(seed),
                start_state: Some(start_label(&start)),
                ..Metadata::new("sample", n)
            };
            emit(&output, &render_samples(&meta, &samples, output.format))
        }
        Command::TvCurve {
            n,
            t_max,
            start,
            exact,
            output,
        } => {
            let curve = match start {
                Some(x) => {
                    start_state(n, Some(x.clone()))?;
                    TvCurve::from_start(&x, t_max)?
                }
                None => TvCurve::worst_case(n, t_max)?,
            };
            let meta = Metadata {
                t: Some(t_max),
                start_state: Some(curve.start_label()),
                ..Metadata::new("tv-curve", n)
            };
            let rows: Vec<_> = curve
                .rows
                .iter()
                .map(|r| {
                    let tv_exact = match &r.tv {
                        Distance::Exact(q) => format_rational(q),
                        Distance::Approx(_) => String::new(),
                    };
                    json!({ "t": r.t, "tv": r.tv.to_f64(), "bound": r.bound, "tv_exact": tv_exact })
                })
                .collect();
            let text = render(&meta, output.format, curve.to_csv(exact), json!({ "rows": rows }));
            emit(&output, &text)
        }
        Command::Verify { suite, n_max, output } => {
            let report = run_suite(suite, n_max)?;
            let meta = Metadata::new("verify", n_max);
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "suite": c.suite.to_string(),
                        "identity": c.identity,
                        "n_checked": c.n_checked,
                        "passed": c.passed(),
                        "failure": c.failure,
                    })
                })
                .collect();
            let body = json!({ "suite": suite.to_string(), "passed": report.passed(), "checks": checks });
            emit(&output, &render(&meta, output.format, format!("{report}\n"), body))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Kernel { x, y, lumped, output } => {
            let value = if lumped {
                lumped_kernel(&x.sorted(), &y.sorted())?
            } else {
                kernel(&x, &y)?
            };
            let meta = Metadata {
                kind: Some(if lumped { "lumped" } else { "full" }.to_string()),
                ..Metadata::new("kernel", x.len())
            };
            let value = format_rational(&value);
            let csv = format!("x,y,kernel\n\"{x}\",\"{y}\",{value}\n");
            let body = json!({ "x": x.entries(), "y": y.entries(), "lumped": lumped, "kernel": value });
            emit(&output, &render(&meta, output.format, csv, body))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidInput(_) => 2,
                Error::ResourceLimit { .. } => 3,
                Error::NotReached(_) => 1,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
