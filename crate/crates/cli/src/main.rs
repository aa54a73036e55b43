//! `pairgraph`: build, analyze and certify group-subgroup pair graphs.

mod error;
mod job;
mod reproduce;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pairgraph_core::actions::automorphism_group;
use pairgraph_core::export::{analyze, graph_json, ramanujan_text, spectral_report, spectrum_csv, to_dot};
use pairgraph_core::search::{compare_classes, search_ramanujan};
use pairgraph_core::spectral::{compute_spectrum_with_tolerance, is_ramanujan_with_tolerance, DEFAULT_TOLERANCE};
use pairgraph_core::{SearchConfig, SearchMode};
use serde::Serialize;

use error::{CliError, CliResult};
use job::{InstanceArgs, SubjectArgs};

#[derive(Debug, Parser)]
#[command(name = "pairgraph", version, about = "Group-subgroup pair graphs: structure, spectra and Ramanujan certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Random,
    Exhaustive,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the graph and write it as JSON (or DOT)
    Build {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a DOT rendering to this file
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Degrees, components (BFS and formula), connectivity and bipartiteness
    Analyze {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Adjacency spectrum with clustered multiplicities
    Spectrum {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Clustering tolerance on the degree-scaled spectrum
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ramanujan test for a connected regular pair graph
    Ramanujan {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search k-subsets of G - H for Ramanujan pair graphs ([G:H] = 2)
    Search {
        #[command(flatten)]
        subject: SubjectArgs,
        /// Size of the generating sets
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "random")]
        mode: Mode,
        /// Number of random candidates
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Seed for random mode (required there)
        #[arg(long)]
        seed: Option<u64>,
        /// Only test connectivity, skip spectra
        #[arg(long)]
        no_certify: bool,
        #[arg(long)]
        tolerance: Option<f64>,
        /// `json` writes one JSON object per trial
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rerun the worked examples and compare against expected values
    Reproduce {
        /// Run a single check; see --list
        id: Option<String>,
        /// List the available checks
        #[arg(long)]
        list: bool,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count orbit, spectral and isomorphism classes of k-sets and (n-k)-sets
    Classes {
        #[command(flatten)]
        subject: SubjectArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn unsupported(command: &str, format: Format) -> CliError {
    CliError::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn tolerance(flag: Option<f64>, job: Option<f64>) -> CliResult<f64> {
    let tau = flag.or(job).unwrap_or(DEFAULT_TOLERANCE);
    if !(tau.is_finite() && tau > 0.0) {
        return Err(CliError::Usage(format!("--tolerance must be positive, got {tau}")));
    }
    Ok(tau)
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Build { instance, format, out, dot } => {
            let pg = instance.job_spec()?.build()?;
            let text = match format {
                Format::Json => to_json(&graph_json(&pg)),
                Format::Dot => to_dot(&pg),
                other => return Err(unsupported("build", other)),
            };
            if let Some(path) = dot {
                write_file(&path, &to_dot(&pg))?;
            }
            emit(out.as_deref(), &text)
        }
        Command::Analyze { instance, format, out, dot } => {
            let pg = instance.job_spec()?.build()?;
            let report = analyze(&pg);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => to_json(&report),
                Format::Dot => to_dot(&pg),
                other => return Err(unsupported("analyze", other)),
            };
            if let Some(path) = dot {
                write_file(&path, &to_dot(&pg))?;
            }
            emit(out.as_deref(), &text)
        }
        Command::Spectrum { instance, tolerance: tol, format, out } => {
            let job = instance.job_spec()?;
            let tau = tolerance(tol, job.tolerance)?;
            let pg = job.build()?;
            let text = match format {
                Format::Csv => spectrum_csv(&compute_spectrum_with_tolerance(&pg, tau)?),
                Format::Text => spectral_report(&pg, tau)?.to_text(),
                Format::Json => to_json(&spectral_report(&pg, tau)?),
                other => return Err(unsupported("spectrum", other)),
            };
            emit(out.as_deref(), &text)
        }
        Command::Ramanujan { instance, tolerance: tol, format, out } => {
            let job = instance.job_spec()?;
            let tau = tolerance(tol, job.tolerance)?;
            let report = is_ramanujan_with_tolerance(&job.build()?, tau)?;
            let text = match format {
                Format::Text => ramanujan_text(&report),
                Format::Json => to_json(&report),
                other => return Err(unsupported("ramanujan", other)),
            };
            emit(out.as_deref(), &text)
        }
        Command::Search { subject, k, mode, trials, seed, no_certify, tolerance: tol, format, out } => {
            let h = subject.subgroup()?;
            let mode = match mode {
                Mode::Random => SearchMode::Random,
                Mode::Exhaustive => SearchMode::Exhaustive,
            };
            let seed = match (mode, seed) {
                (SearchMode::Random, None) => return Err(CliError::Usage("random search needs --seed".into())),
                (_, s) => s.unwrap_or(0),
            };
            let config = SearchConfig { k, mode, trials, seed, certify: !no_certify, tolerance: tolerance(tol, None)? };
            let outcome = search_ramanujan(&h, &config)?;
            let summary = format!(
                "{} candidates, {} connected, {} certified Ramanujan; |S| = {} {} the size bound {:.4}; {} bound violations\n",
                outcome.results.len(),
                outcome.connected,
                outcome.certified,
                k,
                if outcome.size_bound.satisfied { "meets" } else { "is below" },
                outcome.size_bound.bound,
                outcome.bound_violations.len()
            );
            let text = match format {
                Format::Json => {
                    eprint!("{summary}");
                    outcome.to_jsonl()
                }
                Format::Text => {
                    let mut s = String::new();
                    for r in &outcome.results {
                        let verdict = match r.ramanujan {
                            Some(true) => "ramanujan",
                            Some(false) if r.connected => "not ramanujan",
                            Some(false) => "disconnected",
                            None => "connected, not certified",
                        };
                        s.push_str(&format!("trial {:>4}  {:?}  {verdict}\n", r.trial, r.set));
                    }
                    s.push_str(&summary);
                    s
                }
                other => return Err(unsupported("search", other)),
            };
            emit(out.as_deref(), &text)
        }
        Command::Reproduce { id, list, tolerance: tol, format, out } => {
            if list {
                let text: String = reproduce::CHECKS.iter().map(|c| format!("{:<20} {}\n", c.id, c.description)).collect();
                return emit(out.as_deref(), &text);
            }
            let tau = tolerance(tol, None)?;
            let checks: Vec<&reproduce::Check> = match &id {
                Some(id) => vec![reproduce::find(id)
                    .ok_or_else(|| CliError::Usage(format!("unknown example id {id:?}; see `reproduce --list`")))?],
                None => reproduce::CHECKS.iter().collect(),
            };
            let verdicts = checks.iter().map(|c| c.run(tau)).collect::<Result<Vec<_>, _>>()?;
            let failed = verdicts.iter().filter(|v| !v.passed).count();
            let text = match format {
                Format::Json => to_json(&verdicts),
                Format::Text => {
                    let mut s = String::new();
                    for v in &verdicts {
                        s.push_str(&format!("{} {:<20} {}\n", if v.passed { "PASS" } else { "FAIL" }, v.id, v.description));
                        for c in v.comparisons.iter().filter(|c| !c.ok) {
                            s.push_str(&format!("     {}: expected {}, got {}\n", c.what, c.expected, c.actual));
                        }
                    }
                    s.push_str(&format!("{} of {} checks passed\n", verdicts.len() - failed, verdicts.len()));
                    s
                }
                other => return Err(unsupported("reproduce", other)),
            };
            emit(out.as_deref(), &text)?;
            if failed > 0 {
                return Err(CliError::Mismatch(failed));
            }
            Ok(())
        }
        Command::Classes { subject, k, format, out } => {
            let h = subject.subgroup()?;
            let autos = automorphism_group(h.parent())?;
            let counts = compare_classes(&h, k, &autos)?;
            let text = match format {
                Format::Json => to_json(&counts),
                Format::Text => {
                    let iso = counts
                        .isomorphism_classes
                        .map(|(a, b)| format!("{a} / {b}"))
                        .unwrap_or_else(|| "not computed (|G| > 24)".into());
                    format!(
                        "k = {} / {}\nsubsets: {} / {}\norbits: {} / {}\nspectral classes: {} / {}\nisomorphism classes: {iso}\n",
                        counts.k,
                        counts.complement_k,
                        counts.subsets.0,
                        counts.subsets.1,
                        counts.orbits.0,
                        counts.orbits.1,
                        counts.spectral_classes.0,
                        counts.spectral_classes.1
                    )
                }
                other => return Err(unsupported("classes", other)),
            };
            emit(out.as_deref(), &text)
        }
    }
}
