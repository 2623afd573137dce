use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use resilat::corpus;
use resilat::enumerate::{self, EnumerationError, Kind, SizeCaps};
use resilat::format::{self, FileKind, FormatError, Structure};
use resilat::report::{self, CongruenceReport, ReportError};
use resilat::transform::{self, TransformError};

/// Workbench for finite residuated l-groupoids, sectioned lattices and basic algebras.
///
/// Exit codes: 0 ok, 1 validation failure, 2 usage, 3 I/O.
#[derive(Parser)]
#[command(name = "resilat", version)]
struct Cli {
    /// Worker threads for enumeration and congruence search.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Algebra file, `-` for stdin, or the name of a built-in example.
    file: String,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a file, optionally as another kind.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long = "as")]
        as_kind: Option<FileKind>,
    },
    /// Report every known property.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Convert to another kind along the shortest route.
    Transform {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        to: FileKind,
        /// Output path, `-` for stdout.
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Run every round trip that applies and compare bit for bit.
    Roundtrip {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Congruence lattice and its properties.
    Congruence {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "all")]
        report: CongruenceReport,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate structures up to isomorphism.
    Enumerate {
        #[arg(long)]
        kind: Kind,
        /// A size `N` or a range `A..B` (inclusive).
        #[arg(long)]
        size: String,
        /// Per-flag counts as CSV (JSON with --json).
        #[arg(long)]
        census: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in examples, or print one.
    Examples { name: Option<String> },
}

enum Failure {
    Validation(String),
    Usage(String),
    Io(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<TransformError> for Failure {
    fn from(e: TransformError) -> Self {
        match e {
            TransformError::UnreachableTarget { .. } | TransformError::NoRoundTrip(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Validation(e.to_string()),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    match std::fs::read_to_string(arg) {
        Ok(s) => Ok(s),
        Err(e) => match corpus::get(arg) {
            Some(s) => Ok(s.to_json()),
            None => Err(Failure::Io(format!("{arg}: {e}"))),
        },
    }
}

fn load(input: &Input) -> Result<Structure, Failure> {
    Ok(Structure::parse(&read_source(&input.file)?)?)
}

fn write_out(path: &str, text: &str) -> Result<(), Failure> {
    if path == "-" {
        io::stdout().write_all(text.as_bytes())?;
    } else {
        std::fs::write(path, text).map_err(|e| Failure::Io(format!("{path}: {e}")))?;
    }
    Ok(())
}

fn emit(value: &Value, json: bool) -> Result<(), Failure> {
    let text = if json {
        format::to_json(value)
    } else {
        report::render_text(value)
    };
    write_out("-", &text)
}

fn sizes(spec: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad size `{spec}`; expected N or A..B"));
    match spec.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![spec.trim().parse().map_err(|_| bad())?]),
    }
}

fn enumerate_files(
    kind: Kind,
    n: usize,
    caps: &SizeCaps,
) -> Result<Vec<format::AlgebraFile>, Failure> {
    Ok(match kind {
        Kind::Lattice => enumerate::enumerate_lattices(n, caps)?
            .into_iter()
            .map(|l| Structure::Lattice(l, None).to_file())
            .collect(),
        Kind::RrlGroupoid => enumerate::enumerate_groupoids(n, caps)?
            .into_iter()
            .map(|g| Structure::Groupoid(g).to_file())
            .collect(),
        Kind::BasicAlgebra => enumerate::enumerate_basic_algebras(n, caps)?
            .into_iter()
            .map(|a| Structure::Basic(a).to_file())
            .collect(),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Check { input, as_kind } => {
            let text = read_source(&input.file)?;
            let s = match as_kind {
                Some(k) => Structure::parse_as(&text, k)?,
                None => Structure::parse(&text)?,
            };
            println!("valid {} on {} elements", s.kind(), s.names().len());
        }
        Command::Classify { input, json } => emit(&report::classify(&load(&input)?), json)?,
        Command::Transform { input, to, output } => {
            let s = load(&input)?;
            let (out, provenance) = transform::transform(&s, to)?;
            let mut file = out.to_file();
            file.provenance = Some(provenance);
            write_out(&output, &format::to_json(&file))?;
        }
        Command::Roundtrip { input, json } => {
            let trips = transform::roundtrip(&load(&input)?)?;
            let exact = trips.iter().all(|t| t.exact);
            if json {
                write_out(
                    "-",
                    &format::to_json(&json!({ "exact": exact, "trips": trips })),
                )?;
            } else {
                for t in &trips {
                    println!("{}: {}", t.route, if t.exact { "exact" } else { "differs" });
                }
            }
            if !exact {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Congruence {
            input,
            report: which,
            json,
        } => {
            emit(&report::congruence(&load(&input)?, which)?, json)?;
        }
        Command::Enumerate {
            kind,
            size,
            census,
            count_only,
            json,
        } => {
            let caps = SizeCaps::from_env();
            let sizes = sizes(&size)?;
            if census {
                let rows = enumerate::census(kind, sizes, &caps)?;
                let text = if json {
                    format::to_json(&rows)
                } else {
                    enumerate::census_csv(&rows)
                };
                write_out("-", &text)?;
            } else if count_only {
                let mut rows = Vec::new();
                for n in sizes {
                    rows.push(json!({ "kind": kind.as_str(), "size": n, "count": enumerate_files(kind, n, &caps)?.len() }));
                }
                if json {
                    write_out("-", &format::to_json(&rows))?;
                } else {
                    for r in rows {
                        println!(
                            "{} {} {}",
                            r["kind"].as_str().unwrap_or_default(),
                            r["size"],
                            r["count"]
                        );
                    }
                }
            } else {
                let mut files = Vec::new();
                for n in sizes {
                    files.extend(enumerate_files(kind, n, &caps)?);
                }
                write_out("-", &format::to_json(&files))?;
            }
        }
        Command::Examples { name: None } => {
            for n in corpus::NAMES {
                println!("{n}");
            }
        }
        Command::Examples { name: Some(name) } => {
            let s = corpus::get(&name).ok_or_else(|| {
                Failure::Usage(format!(
                    "no built-in example `{name}`; try one of: {}",
                    corpus::NAMES.join(", ")
                ))
            })?;
            write_out("-", &s.to_json())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Validation(m)) => {
            eprintln!("invalid: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
