use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use tsi_bench::harness::{cmd_build, cmd_report, cmd_run, cmd_score, cmd_verify, VerifyOptions};
use tsi_bench::llm::ModelEndpoint;
use tsi_bench::plan::ExperimentMatrix;
use tsi_bench::render::RenderStyle;

#[derive(Parser)]
#[command(version, about = "Build, query and score time-series image anomaly benchmarks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate series, inject anomalies, render images and write a manifest.
    Build {
        /// Matrix TOML file, or `full` for the full matrix.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the matrix seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Query an endpoint with every image of a manifest. Resumable.
    Run {
        #[arg(long)]
        manifest: PathBuf,
        /// Endpoint TOML file, or `mock:oracle|empty|runaway|random:N|off-by-k:N`.
        #[arg(long)]
        endpoint: String,
        #[arg(long)]
        run_id: String,
        #[arg(long, default_value = "runs")]
        runs_dir: PathBuf,
        #[arg(long, default_value_t = 4)]
        concurrency: usize,
        /// Requests per minute; overrides the endpoint file.
        #[arg(long)]
        rate_limit: Option<f64>,
    },
    /// Score a run and write its report.
    Score {
        #[arg(long)]
        run_id: String,
        #[arg(long, default_value = "runs")]
        runs_dir: PathBuf,
    },
    /// Check every sample of a manifest against its provenance and validators.
    Verify {
        #[arg(long)]
        manifest: PathBuf,
        /// Skip decoding images.
        #[arg(long)]
        no_images: bool,
    },
    /// Combine scored runs into one report.
    Report {
        #[arg(long = "run-id", required = true)]
        run_ids: Vec<String>,
        #[arg(long, default_value = "runs")]
        runs_dir: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.cmd {
        Cmd::Build { matrix, out, seed } => {
            let mut m = if matrix == "full" {
                ExperimentMatrix::full()
            } else {
                ExperimentMatrix::load(matrix.as_ref()).with_context(|| format!("loading {matrix}"))?
            };
            if let Some(s) = seed {
                m.seed = s;
            }
            let summary = cmd_build(&m, &out, &RenderStyle::default())?;
            print!("{}", summary.census);
            println!("manifest: {}", summary.manifest.display());
        }
        Cmd::Run {
            manifest,
            endpoint,
            run_id,
            runs_dir,
            concurrency,
            rate_limit,
        } => {
            let mut ep = ModelEndpoint::resolve(&endpoint)?;
            if rate_limit.is_some() {
                ep.rate_limit_rpm = rate_limit;
            }
            let s = cmd_run(&manifest, ep, &runs_dir.join(&run_id), concurrency)?;
            println!(
                "{} samples: {} from cache, {} queried, {} permanent errors, {} transient errors",
                s.total, s.cached, s.fresh, s.permanent_errors, s.transient_errors
            );
            for f in &s.failures {
                println!("  {f}");
            }
            if s.permanent_errors > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Score { run_id, runs_dir } => {
            let dir = runs_dir.join(&run_id);
            let s = cmd_score(&dir)?;
            println!(
                "scored {} predictions ({} samples unanswered); report in {}",
                s.scored,
                s.unanswered,
                dir.join("report.md").display()
            );
        }
        Cmd::Verify { manifest, no_images } => {
            let opts = VerifyOptions {
                check_images: !no_images,
                ..VerifyOptions::default()
            };
            let r = cmd_verify(&manifest, &opts)?;
            for v in &r.violations {
                println!("{} #{} [{}] {}", v.dataset, v.index, v.check, v.detail);
            }
            println!("{} samples, {} violations", r.samples, r.violations.len());
            if !r.ok() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Report { run_ids, runs_dir, out } => {
            let dirs: Vec<PathBuf> = run_ids.iter().map(|r| runs_dir.join(r)).collect();
            let refs: Vec<&std::path::Path> = dirs.iter().map(PathBuf::as_path).collect();
            let rows = cmd_report(&refs, &out)?;
            println!("{} rows; report in {}", rows.len(), out.join("report.md").display());
        }
    }
    Ok(ExitCode::SUCCESS)
}
