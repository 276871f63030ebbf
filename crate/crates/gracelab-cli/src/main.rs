//! Command-line front end: enumeration, labeling search, certificate
//! evaluation, graph export, and the exhaustive verification suites.
//!
//! Exit codes: 0 = verified/found, 1 = counterexample/not found, 2 = usage
//! error. All file output is UTF-8 JSON, JSON lines, or DOT.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gracelab::certificate;
use gracelab::endograph::EndoFunction;
use gracelab::labeling::{self, EdgeLabelSequence, SearchOptions, WitnessRecord};
use gracelab::monoid::{self, Permutation};
use gracelab::verify::{run_suite, SampleSpec, Suite, SuiteConfig, VerificationReport};

#[derive(Parser)]
#[command(
    name = "gracelab",
    version,
    about = "Exact engine for graceful labelings of functional directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumKind {
    /// Tree functions: f(0) = 0 and f(i) < i.
    Trees,
    /// Forest functions: f(i) <= i.
    Forests,
    /// Gracefully labeled conjugates of a given function.
    Grl,
    /// Submonoid census of Z_n^Z_n (counts, closure, union size).
    Census,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance family as JSON lines and report its size.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumKind,
        #[arg(long)]
        n: usize,
        /// Base function for `grl` (JSON array); defaults to the constant 0.
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for a graceful labeling, or for a prescribed label sequence.
    Search {
        /// Function as a JSON array, e.g. "[0,0,1,2]".
        #[arg(long)]
        f: String,
        /// Target label multiset as a JSON array; graceful when omitted.
        #[arg(long)]
        sequence: Option<String>,
        /// Visit the whole space; reports the lex-least witness and count.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a verification suite and write its report.
    Verify {
        /// One of: glc, strong-glc, composition, strong-composition,
        /// center-sums, monoid, bounds, theorem6, lex, all.
        suite: String,
        /// Smallest n (also the largest unless --n-max is given).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        /// Band width for strong-composition.
        #[arg(long, default_value_t = 1)]
        ell: usize,
        /// Worker count; defaults to all cores.
        #[arg(long, env = "GRACELAB_JOBS")]
        jobs: Option<usize>,
        /// Sampled relabelings per instance (theorem6 only, enables n = 7).
        #[arg(long)]
        samples: Option<u64>,
        /// Seed for sampled modes.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extract and verify the graceful-expansion data of a labeling.
    Expand {
        #[arg(long)]
        f: String,
        /// Relabeling as a JSON array.
        #[arg(long)]
        sigma: String,
    },
    /// Evaluate certificates: the center-sums identity by default, or the
    /// banded certificate / its composition implication with --ell.
    Certify {
        #[arg(long)]
        f: String,
        /// Right composition factor; defaults to the constant-zero map.
        #[arg(long)]
        g: Option<String>,
        /// Composition exponent for the center-sums identity.
        #[arg(long, default_value_t = 0)]
        t: u8,
        /// Band width; switches to the banded certificate.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export a functional graph as DOT or JSON.
    Export {
        #[arg(long)]
        f: String,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Enumerate { kind, n, f, output } => enumerate(kind, n, f.as_deref(), output),
        Command::Search {
            f,
            sequence,
            exhaustive,
            output,
        } => search(&f, sequence.as_deref(), exhaustive, output),
        Command::Verify {
            suite,
            n,
            n_max,
            ell,
            jobs,
            samples,
            seed,
            output,
        } => verify(&suite, n, n_max, ell, jobs, samples, seed, output),
        Command::Expand { f, sigma } => expand(&f, &sigma),
        Command::Certify {
            f,
            g,
            t,
            ell,
            output,
        } => certify(&f, g.as_deref(), t, ell, output),
        Command::Export { f, format, output } => export(&f, format, output),
    }
}

fn parse_function(text: &str) -> Result<EndoFunction, String> {
    if let Ok(values) = serde_json::from_str::<Vec<u8>>(text) {
        return EndoFunction::new(values).map_err(|e| e.to_string());
    }
    serde_json::from_str::<EndoFunction>(text)
        .map_err(|e| format!("invalid function {text:?}: {e}"))
}

fn parse_permutation(text: &str) -> Result<Permutation, String> {
    let image = serde_json::from_str::<Vec<u8>>(text)
        .map_err(|e| format!("invalid permutation {text:?}: {e}"))?;
    Permutation::from_image(image).map_err(|e| e.to_string())
}

/// Writes to the path when given, otherwise to stdout.
fn emit(output: Option<&Path>, content: &str) -> Result<(), String> {
    match output {
        Some(path) => {
            let file = File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let mut writer = BufWriter::new(file);
            writer
                .write_all(content.as_bytes())
                .and_then(|_| writer.flush())
                .map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn enumerate(
    kind: EnumKind,
    n: usize,
    f: Option<&str>,
    output: Option<PathBuf>,
) -> Result<u8, String> {
    if !(1..=12).contains(&n) {
        return Err(format!("n = {n} outside the supported range [1, 12]"));
    }
    let mut lines = String::new();
    let count = match kind {
        EnumKind::Trees => {
            let mut count = 0u64;
            for f in monoid::tree_functions(n) {
                lines.push_str(&serde_json::to_string(&f).expect("serializable"));
                lines.push('\n');
                count += 1;
            }
            count
        }
        EnumKind::Forests => {
            let mut count = 0u64;
            for f in monoid::forest_functions(n) {
                lines.push_str(&serde_json::to_string(&f).expect("serializable"));
                lines.push('\n');
                count += 1;
            }
            count
        }
        EnumKind::Grl => {
            let base = match f {
                Some(text) => parse_function(text)?,
                None => EndoFunction::constant(n, 0),
            };
            if base.n() != n {
                return Err(format!("--f has {} vertices but --n is {n}", base.n()));
            }
            let grl = labeling::enumerate_grl(&base).map_err(|e| e.to_string())?;
            for (graph, witness) in grl.graphs.iter().zip(&grl.witnesses) {
                let record = serde_json::json!({ "f": graph, "witness": witness });
                lines.push_str(&serde_json::to_string(&record).expect("serializable"));
                lines.push('\n');
            }
            grl.count() as u64
        }
        EnumKind::Census => {
            let census = monoid::census(n).map_err(|e| e.to_string())?;
            lines.push_str(&serde_json::to_string(&census).expect("serializable"));
            lines.push('\n');
            census.union_count
        }
    };
    emit(output.as_deref(), &lines)?;
    eprintln!("{count} records");
    Ok(0)
}

fn search(
    f_text: &str,
    sequence: Option<&str>,
    exhaustive: bool,
    output: Option<PathBuf>,
) -> Result<u8, String> {
    let f = parse_function(f_text)?;
    let options = SearchOptions { exhaustive };
    let target = match sequence {
        None => EdgeLabelSequence::graceful(f.n()),
        Some(text) => {
            let labels = serde_json::from_str::<Vec<u8>>(text)
                .map_err(|e| format!("invalid sequence {text:?}: {e}"))?;
            EdgeLabelSequence::new(labels).map_err(|e| e.to_string())?
        }
    };
    let result = match labeling::realizes_sequence(&f, &target, options) {
        Ok(result) => result,
        // Shapes outside the backtracker's rooted-tree model fall back to the
        // exhaustive relabeling scan.
        Err(gracelab::Error::UnsupportedSearchInput) => {
            labeling::exhaustive_sequence_scan(&f, &target).map_err(|e| e.to_string())?
        }
        Err(e) => return Err(e.to_string()),
    };

    let labels = result
        .witness
        .as_ref()
        .map(|w| labeling::edge_labels(&f, w).expect("witness matches dimension"));
    let record = WitnessRecord {
        f,
        witness: result.witness.clone(),
        labels,
        nodes_explored: result.nodes_explored,
    };
    let mut line = serde_json::to_string(&record).expect("serializable");
    line.push('\n');
    emit(output.as_deref(), &line)?;
    if output.is_some() {
        println!("{}", line.trim_end());
    }
    Ok(u8::from(!result.found))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite_name: &str,
    n: Option<usize>,
    n_max: Option<usize>,
    ell: usize,
    jobs: Option<usize>,
    samples: Option<u64>,
    seed: u64,
    output: Option<PathBuf>,
) -> Result<u8, String> {
    let suites: Vec<Suite> = if suite_name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(suite_name).ok_or_else(|| format!("unknown suite {suite_name:?}"))?]
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for suite in &suites {
        let mut config = SuiteConfig::for_suite(*suite);
        // --n pins the lower end (and the upper, unless --n-max widens it).
        if let Some(n) = n {
            config.n_min = n;
            config.n_max = n;
        }
        if let Some(n_max) = n_max {
            config.n_max = n_max;
        }
        config.ell = ell;
        config.jobs = jobs;
        config.samples = samples.map(|s| SampleSpec { samples: s, seed });
        let report = run_suite(*suite, config).map_err(|e| e.to_string())?;
        eprintln!(
            "suite={} n={}..{} instances={} failures={} elapsed={:.2?} {}",
            report.suite,
            report.n_range.0,
            report.n_range.1,
            report.instances_checked,
            report.failures.len(),
            report.elapsed,
            if report.passed() { "PASS" } else { "FAIL" }
        );
        for failure in report.failures.iter().take(5) {
            eprintln!(
                "  counterexample: {}",
                serde_json::to_string(failure).expect("serializable")
            );
        }
        reports.push(report);
    }

    let body = if suite_name == "all" {
        serde_json::to_string_pretty(&reports).expect("serializable")
    } else {
        serde_json::to_string_pretty(&reports[0]).expect("serializable")
    } + "\n";
    if output.is_some() {
        emit(output.as_deref(), &body)?;
    } else {
        print!("{body}");
    }
    Ok(u8::from(!reports.iter().all(VerificationReport::passed)))
}

fn expand(f_text: &str, sigma_text: &str) -> Result<u8, String> {
    let f = parse_function(f_text)?;
    let sigma = parse_permutation(sigma_text)?;
    match certificate::extract_expansion(&f, &sigma) {
        Ok(expansion) => {
            let verified = certificate::verify_expansion(&expansion, &f);
            let body = serde_json::json!({
                "gamma": expansion.gamma,
                "sign": expansion.sign,
                "sigma_gamma": expansion.sigma_gamma,
                "verified": verified,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
            Ok(u8::from(!verified))
        }
        Err(gracelab::Error::NotGraceful) => {
            eprintln!("the relabeling is not graceful for this function");
            Ok(1)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn certify(
    f_text: &str,
    g_text: Option<&str>,
    t: u8,
    ell: Option<usize>,
    output: Option<PathBuf>,
) -> Result<u8, String> {
    let f = parse_function(f_text)?;
    let g = match g_text {
        Some(text) => Some(parse_function(text)?),
        None => None,
    };
    if t > 1 {
        return Err("--t must be 0 or 1".to_string());
    }
    let (body, ok) = match ell {
        None => {
            let g = g.unwrap_or_else(|| EndoFunction::constant(f.n(), 0));
            let report = certificate::center_sums_check(&f, &g, t).map_err(|e| e.to_string())?;
            (
                serde_json::to_string_pretty(&report).expect("serializable"),
                report.matches,
            )
        }
        Some(ell) => match g {
            Some(g) => {
                let check = certificate::strong_composition_check(&f, &g, ell)
                    .map_err(|e| e.to_string())?;
                (
                    serde_json::to_string_pretty(&check).expect("serializable"),
                    check.holds,
                )
            }
            None => {
                let value = certificate::strong_certificate(&f, ell).map_err(|e| e.to_string())?;
                let body = serde_json::json!({
                    "n": f.n(),
                    "f": f,
                    "ell": ell,
                    "certificate": value.to_string(),
                });
                (
                    serde_json::to_string_pretty(&body).expect("serializable"),
                    true,
                )
            }
        },
    };
    let body = body + "\n";
    if output.is_some() {
        emit(output.as_deref(), &body)?;
    }
    print!("{body}");
    Ok(u8::from(!ok))
}

fn export(f_text: &str, format: ExportFormat, output: Option<PathBuf>) -> Result<u8, String> {
    let f = parse_function(f_text)?;
    let body = match format {
        ExportFormat::Dot => f.to_dot(),
        ExportFormat::Json => serde_json::to_string_pretty(&f).expect("serializable") + "\n",
    };
    emit(output.as_deref(), &body)?;
    Ok(0)
}
