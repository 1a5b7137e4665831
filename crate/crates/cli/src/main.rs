use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use flawless_core::constructions::Family;
use flawless_core::flawless::{Lemma, Predicate};
use flawless_core::{Label, LinearOrder, Matroid};

mod input;
mod report;

use input::{CircuitsDocument, Format};
use report::{digest, Report, Timings};

/// Batch computations on broken circuit complexes of matroids.
#[derive(Parser)]
#[command(name = "flawless", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    no_timings: bool,
    /// Worker threads for verify and sweep.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// f-, h-, hbar- and g-vectors, characteristic and Tutte polynomials.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        /// Linear order for broken circuits, as comma-separated labels.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<String>>,
        /// A series class to report minors and identity checks for.
        #[arg(long, value_delimiter = ',', requires = "at")]
        series: Option<Vec<String>>,
        /// The element of `--series` to contract around.
        #[arg(long, requires = "series")]
        at: Option<String>,
    },
    /// Evaluate predicates on the trimmed h-vector.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', value_parser = parse_predicate, default_value = "strongly-flawless")]
        predicates: Vec<Predicate>,
    },
    /// Run identity checks over a family.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_delimiter = ',', value_parser = parse_lemma, required = true)]
        lemmas: Vec<Lemma>,
    },
    /// Evaluate predicates (and optionally checks) over a family.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_delimiter = ',', value_parser = parse_predicate, default_value = "strongly-flawless")]
        predicates: Vec<Predicate>,
        #[arg(long, value_delimiter = ',', value_parser = parse_lemma)]
        lemmas: Vec<Lemma>,
    },
    /// Emit the input as a circuits document.
    Circuits {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    input: PathBuf,
    /// Input format; sniffed from the extension when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Graphic,
    Uniform,
    Wheel,
    Complete,
    CompleteBipartite,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Edge bound for the graphic family.
    #[arg(long)]
    max_edges: Option<usize>,
    /// Size bound for the other families.
    #[arg(long)]
    max_n: Option<usize>,
}

fn parse_predicate(s: &str) -> Result<Predicate, String> {
    s.parse().map_err(|e: flawless_core::Error| e.to_string())
}

fn parse_lemma(s: &str) -> Result<Lemma, String> {
    s.parse().map_err(|e: flawless_core::Error| e.to_string())
}

impl FamilyArgs {
    fn family(&self) -> anyhow::Result<Family> {
        let need =
            |v: Option<usize>, flag: &str| v.ok_or_else(|| anyhow!("this family needs {flag}"));
        Ok(match self.family {
            FamilyName::Graphic => Family::Graphic {
                max_edges: need(self.max_edges, "--max-edges")?,
            },
            FamilyName::Uniform => Family::Uniform {
                max_n: need(self.max_n, "--max-n")?,
            },
            FamilyName::Wheel => Family::Wheel {
                max_n: need(self.max_n, "--max-n")?,
            },
            FamilyName::Complete => Family::Complete {
                max_n: need(self.max_n, "--max-n")?,
            },
            FamilyName::CompleteBipartite => Family::CompleteBipartite {
                max_n: need(self.max_n, "--max-n")?,
            },
        })
    }
}

fn read_input(args: &InputArgs) -> anyhow::Result<(Matroid, String)> {
    let bytes =
        fs::read(&args.input).with_context(|| format!("reading {}", args.input.display()))?;
    let text = String::from_utf8(bytes.clone()).context("input is not UTF-8")?;
    let format = match args.format.or_else(|| Format::sniff(&args.input)) {
        Some(f) => f,
        None => bail!(
            "cannot tell the format of {}; pass --format",
            args.input.display()
        ),
    };
    let m = input::parse(&text, format).map_err(|e| anyhow!("{}:{e}", args.input.display()))?;
    Ok((m, digest(&bytes)))
}

fn labels(items: &[String]) -> Vec<Label> {
    items.iter().map(|s| Label::from(s.as_str())).collect()
}

fn emit<T: Serialize>(out: Option<&Path>, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

/// Runs the command; `Ok(false)` means a check failed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| anyhow!("--jobs: {e}"))?;
    }
    let start = Instant::now();
    let timings = |phases_ms: BTreeMap<String, f64>, items_us: Vec<u64>| {
        (!cli.no_timings).then(|| Timings {
            total_ms: start.elapsed().as_secs_f64() * 1e3,
            phases_ms,
            items_us,
        })
    };
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Invariants {
            input,
            order,
            series,
            at,
        } => {
            let (m, dig) = read_input(input)?;
            let order = match order {
                Some(o) => LinearOrder::from_labels(m.ground(), &labels(o))?,
                None => LinearOrder::natural(m.len()),
            };
            let mut phases = BTreeMap::new();
            let (mut result, warnings) = report::invariants(&m, &order, &mut phases)?;
            let mut ok = true;
            if let (Some(s), Some(e)) = (series, at) {
                let sr = report::series_result(&m, &labels(s), &Label::from(e.as_str()))?;
                ok = !sr.series1.failed() && !sr.series2.failed();
                result.series = Some(sr);
            }
            let mut r = Report::new("invariants", dig, result);
            r.warnings = warnings;
            r.timings = timings(phases, Vec::new());
            warn(&r.warnings);
            emit(out, &r)?;
            Ok(ok)
        }
        Command::Check { input, predicates } => {
            let (m, dig) = read_input(input)?;
            let (result, warnings) = report::check(&m, predicates)?;
            let ok = result.passed;
            let mut r = Report::new("check", dig, result);
            r.warnings = warnings;
            r.timings = timings(BTreeMap::new(), Vec::new());
            warn(&r.warnings);
            emit(out, &r)?;
            Ok(ok)
        }
        Command::Verify { family, lemmas } => {
            let family = family.family()?;
            let members = family.members()?;
            let (result, items_us) = report::verify(&family, &members, lemmas);
            let ok = result.passed;
            let key = format!(
                "verify {} {:?} {:?}",
                family.name(),
                report::parameters(&family),
                lemmas
            );
            let mut r = Report::new("verify", digest(key.as_bytes()), result);
            r.timings = timings(BTreeMap::new(), items_us);
            emit(out, &r)?;
            Ok(ok)
        }
        Command::Sweep {
            family,
            predicates,
            lemmas,
        } => {
            let family = family.family()?;
            let members = family.members()?;
            let (result, items_us) = report::sweep_family(&family, &members, predicates, lemmas);
            let ok = result.clean;
            if let Some(c) = &result.first_counterexample {
                eprintln!("counterexample candidate: {}", c.id);
            }
            let key = format!(
                "sweep {} {:?} {predicates:?} {lemmas:?}",
                family.name(),
                report::parameters(&family)
            );
            let mut r = Report::new("sweep", digest(key.as_bytes()), result);
            r.timings = timings(BTreeMap::new(), items_us);
            emit(out, &r)?;
            Ok(ok)
        }
        Command::Circuits { input } => {
            let (m, _) = read_input(input)?;
            emit(out, &CircuitsDocument::of(&m))?;
            Ok(true)
        }
    }
}

fn warn(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
