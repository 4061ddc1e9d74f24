//! Command-line interface: argument definitions and command dispatch.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parameter
//! error.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use eulerian_core::families::Family;
use eulerian_core::forest::{linear_extensions_labeled, LabelingFamily, PlaneForest, SignedLabeling};
use eulerian_core::inversion::{InversionSequences, SRule};
use eulerian_core::signedperm::{EvenSignedPermutations, SignedFamily, SignedWords};

use crate::parallel::{par_family_polynomial, with_jobs};
use crate::report::coeff_strings;
use crate::suites::{run_suite, validate, Suite, SuiteOptions, DEFAULT_SEED, MULTISET_GUARD, SEQUENCE_GUARD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "eulerian", version, about = "Enumerate and verify Eulerian-type polynomial identities")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "EULERIAN_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the coefficients of a named polynomial, lowest degree first.
    Poly {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Plain)]
        format: PolyFormat,
        /// Lift the size guards.
        #[arg(long)]
        allow_huge: bool,
    },
    /// Run a verification suite and stream JSON-lines reports.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        /// Series truncation degree (defaults depend on the check).
        #[arg(long = "truncation", short = 'T')]
        truncation: Option<u64>,
        /// Seed for the random forest samples.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        allow_huge: bool,
    },
    /// Stream combinatorial objects, one per line.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// s-rule for `invseq`: natural, doubled, paper-I, paper-Iprime,
        /// halved-Iprime or explicit:s1,s2,...
        #[arg(long, value_parser = parse_rule)]
        rule: Option<SRule>,
        /// Class for `signedword`: P, U, V or D.
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Forest for `extension`, e.g. "(()())".
        #[arg(long)]
        forest: Option<String>,
        /// Signed labels for `extension`, in preorder, e.g. "2,-1,3".
        #[arg(long, allow_hyphen_values = true)]
        labels: Option<String>,
        /// Labeling family for `labeling`: F, Fprime or G.
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
        format: ListFormat,
        #[arg(long)]
        allow_huge: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Plain,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Invseq,
    Signedword,
    Extension,
    Labeling,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family `{s}` (expected one of {})", names.join(", "))
    })
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_rule(s: &str) -> Result<SRule, String> {
    s.parse().map_err(|e: eulerian_core::Error| e.to_string())
}

enum Outcome {
    Ok,
    Failed,
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut (dyn Write + Send), err: &mut dyn Write) -> i32 {
    let jobs = cli.jobs.map(usize::from);
    let result = with_jobs(jobs, move || dispatch(cli.command, out));
    match result {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        // a closed pipe (e.g. `| head`) is not an error
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn core_usage(e: eulerian_core::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn guard(family: Family, n: usize, allow_huge: bool) -> Result<(), Failure> {
    let limit = if family.is_multiset_based() { MULTISET_GUARD } else { SEQUENCE_GUARD };
    if n > limit && !allow_huge {
        return Err(usage(format!(
            "{family}_{n} exceeds the default size limit n <= {limit}; pass --allow-huge to compute it"
        )));
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut (dyn Write + Send)) -> Result<Outcome, Failure> {
    match command {
        Command::Poly { family, n, format, allow_huge } => {
            if n == 0 {
                return Err(usage("--n must be at least 1"));
            }
            guard(family, n, allow_huge)?;
            let p = par_family_polynomial(family, n).map_err(core_usage)?;
            let coeffs = coeff_strings(&p);
            match format {
                PolyFormat::Plain => writeln!(out, "{}", coeffs.join(" "))?,
                PolyFormat::Json => {
                    let line = PolyLine { family: family.name(), n, coeffs };
                    writeln!(out, "{}", serde_json::to_string(&line).expect("serializable"))?
                }
                PolyFormat::Csv => {
                    writeln!(out, "degree,coefficient")?;
                    for (k, c) in coeffs.iter().enumerate() {
                        writeln!(out, "{k},{c}")?;
                    }
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Verify { suite, n_max, truncation, seed, allow_huge } => {
            let opts = SuiteOptions { n_max, truncation, allow_huge, seed };
            validate(suite, &opts).map_err(usage)?;
            let mut all_passed = true;
            let mut io_error = None;
            run_suite(suite, &opts, &mut |report| {
                all_passed &= report.passed();
                if io_error.is_none() {
                    if let Err(e) = writeln!(out, "{}", report.to_json_line()).and_then(|_| out.flush()) {
                        io_error = Some(e);
                    }
                }
            });
            if let Some(e) = io_error {
                return Err(e.into());
            }
            Ok(if all_passed { Outcome::Ok } else { Outcome::Failed })
        }
        Command::Enumerate { kind, rule, class, n, forest, labels, family, limit, format, allow_huge } => {
            let mut sink = LineSink { out, format, remaining: limit };
            match kind {
                Kind::Invseq => {
                    let rule = rule.ok_or_else(|| usage("--kind invseq needs --rule"))?;
                    let n = n.ok_or_else(|| usage("--kind invseq needs --n"))?;
                    if n > SEQUENCE_GUARD && !allow_huge {
                        return Err(usage(format!(
                            "n = {n} exceeds the default limit {SEQUENCE_GUARD}; pass --allow-huge"
                        )));
                    }
                    let mut it = InversionSequences::new(rule, n).map_err(core_usage)?;
                    while let Some(e) = it.advance() {
                        if !sink.emit(e)? {
                            break;
                        }
                    }
                }
                Kind::Signedword => {
                    let class = class.ok_or_else(|| usage("--kind signedword needs --class"))?;
                    let n = n.ok_or_else(|| usage("--kind signedword needs --n"))?;
                    let (family, signed) = match class.as_str() {
                        "P" => (Family::P, SignedFamily::P),
                        "U" => (Family::U, SignedFamily::U),
                        "V" => (Family::V, SignedFamily::V),
                        "D" => (Family::D, SignedFamily::D),
                        other => return Err(usage(format!("unknown class `{other}` (expected P, U, V or D)"))),
                    };
                    guard(family, n, allow_huge)?;
                    match signed.spec(n).map_err(core_usage)? {
                        Some(spec) => {
                            let mut it = SignedWords::new(spec);
                            while let Some(w) = it.advance() {
                                if !sink.emit(w)? {
                                    break;
                                }
                            }
                        }
                        None => {
                            let mut it = EvenSignedPermutations::new(n).map_err(core_usage)?;
                            while let Some(w) = it.advance() {
                                if !sink.emit(w)? {
                                    break;
                                }
                            }
                        }
                    }
                }
                Kind::Extension => {
                    let text = forest.ok_or_else(|| usage("--kind extension needs --forest"))?;
                    let forest: PlaneForest = text.parse().map_err(core_usage)?;
                    match labels {
                        None => {
                            let mut it = forest.linear_extensions();
                            while let Some(order) = it.advance() {
                                if !sink.emit(order)? {
                                    break;
                                }
                            }
                        }
                        Some(text) => {
                            let labels = parse_labels(&text)?;
                            let w = SignedLabeling::new(&forest, labels).map_err(core_usage)?;
                            let mut it = linear_extensions_labeled(&forest, &w).map_err(core_usage)?;
                            while let Some(word) = it.advance() {
                                if !sink.emit(word)? {
                                    break;
                                }
                            }
                        }
                    }
                }
                Kind::Labeling => {
                    let family = family.ok_or_else(|| usage("--kind labeling needs --family (F, Fprime or G)"))?;
                    let n = n.ok_or_else(|| usage("--kind labeling needs --n"))?;
                    let lf = match family {
                        Family::F => LabelingFamily::Pairs,
                        Family::Fprime => LabelingFamily::PairsNegativeSingleton,
                        Family::G => LabelingFamily::PairsSignedSingleton,
                        other => return Err(usage(format!("{other} is not a labeling family (expected F, Fprime or G)"))),
                    };
                    guard(family, n, allow_huge)?;
                    for w in lf.labelings(n).map_err(core_usage)? {
                        if !sink.emit(w.labels())? {
                            break;
                        }
                    }
                }
            }
            Ok(Outcome::Ok)
        }
    }
}

#[derive(serde::Serialize)]
struct PolyLine {
    family: &'static str,
    n: usize,
    coeffs: Vec<String>,
}

fn parse_labels(text: &str) -> Result<Vec<i32>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i32>().map_err(|_| usage(format!("invalid label `{s}`"))))
        .collect()
}

struct LineSink<'a> {
    out: &'a mut (dyn Write + Send),
    format: ListFormat,
    remaining: Option<u64>,
}

impl LineSink<'_> {
    /// Writes one object; returns false once the limit is reached.
    fn emit<T: ToString + serde::Serialize>(&mut self, items: &[T]) -> Result<bool, Failure> {
        if self.remaining == Some(0) {
            return Ok(false);
        }
        match self.format {
            ListFormat::Plain => {
                let line: Vec<String> = items.iter().map(ToString::to_string).collect();
                writeln!(self.out, "{}", line.join(" "))?;
            }
            ListFormat::Json => writeln!(self.out, "{}", serde_json::to_string(items).expect("serializable"))?,
        }
        if let Some(r) = self.remaining.as_mut() {
            *r -= 1;
        }
        Ok(self.remaining != Some(0))
    }
}
