use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperring::analysis::RingAnalysis;
use hyperring::classify::PrimeMode;
use hyperring::construct::{self, GammaReading};
use hyperring::corpus::{self, CorpusSpec};
use hyperring::harness::{self, Caps, Reading, SuiteOptions};
use hyperring::{io, ElementSubset, Error, HyperRing};

#[derive(Parser)]
#[command(name = "hyperring", version, about = "Finite multiplicative hyperrings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a definition file against the hyperring axioms.
    Validate { file: PathBuf },
    /// Classify the hyperideals of a hyperring (JSON on stdout).
    Classify {
        file: PathBuf,
        /// Only report these hyperideals, e.g. `--ideal 0,2`.
        #[arg(long, value_name = "ELEMENTS")]
        ideal: Vec<String>,
        #[arg(long, value_enum, default_value_t = Mode::Relaxed)]
        prime: Mode,
        #[arg(long, default_value_t = hyperring::ideal::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// List every hyperideal, one per line.
    Ideals {
        file: PathBuf,
        #[arg(long, default_value_t = hyperring::ideal::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// The theorem registry.
    #[command(subcommand)]
    Theorems(TheoremsCommand),
    /// Write a corpus (one file per ring, manifest.json, log.json).
    Generate {
        /// `default` or a JSON corpus spec.
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a derived hyperring.
    #[command(subcommand)]
    Construct(ConstructCommand),
}

#[derive(Subcommand)]
enum TheoremsCommand {
    /// Run the registry over a corpus and print a table.
    Run(RunArgs),
    /// Print the registry.
    List,
}

#[derive(Args)]
struct RunArgs {
    /// `default` or a JSON corpus spec.
    #[arg(long, default_value = "default")]
    corpus: String,
    /// Run over these definition files instead of a generated corpus.
    #[arg(long = "ring", value_name = "FILE")]
    rings: Vec<PathBuf>,
    /// Comma-separated theorem ids.
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Fix the reading, e.g. `regular=vnr,prime=strict`; unnamed flags keep
    /// their defaults.
    #[arg(long)]
    reading: Option<String>,
    /// Write the verdicts as a JSON array.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    fail_fast: bool,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// R/J for a hyperideal J.
    Quotient {
        file: PathBuf,
        #[arg(long, value_name = "ELEMENTS")]
        ideal: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// R1 × R2.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The hypermatrices M_d(R).
    Matrix {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 256)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The fundamental ring R/γ*.
    GammaStar {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Gamma::Repetition)]
        reading: Gamma,
        #[arg(long, default_value_t = construct::DEFAULT_GAMMA_CAP)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Relaxed,
    Strict,
}

impl From<Mode> for PrimeMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Relaxed => PrimeMode::Relaxed,
            Mode::Strict => PrimeMode::Strict,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Gamma {
    Repetition,
    DistinctFactors,
}

impl From<Gamma> for GammaReading {
    fn from(g: Gamma) -> Self {
        match g {
            Gamma::Repetition => GammaReading::Repetition,
            Gamma::DistinctFactors => GammaReading::DistinctFactors,
        }
    }
}

/// Exit statuses.
const OK: u8 = 0;
const COUNTEREXAMPLE: u8 = 1;
const FAILURE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(FAILURE)
        }
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Validate { file } => {
            let ring = io::load_ring(&file)?;
            let flags = ring.classify();
            println!("{}: valid hyperring of size {}", ring.name(), ring.size());
            println!("{}", serde_json::to_string(&flags)?);
            Ok(OK)
        }
        Command::Classify {
            file,
            ideal,
            prime,
            cap,
        } => {
            let ring = io::load_ring(&file)?;
            let a = RingAnalysis::new(&ring, cap)?;
            let mut report = a.report(prime.into());
            if !ideal.is_empty() {
                let wanted = ideal
                    .iter()
                    .map(|s| parse_subset(s, ring.size()))
                    .collect::<Result<Vec<_>, _>>()?;
                for w in &wanted {
                    if !a.is_ideal(w) {
                        return Err(Error::NotHyperideal(w.to_string()));
                    }
                }
                report.ideals.retain(|e| wanted.contains(&e.members));
            }
            print_json(&report)?;
            Ok(OK)
        }
        Command::Ideals { file, cap } => {
            let ring = io::load_ring(&file)?;
            for i in hyperring::ideal::enumerate_hyperideal_sets(&ring, cap)? {
                println!("{i}");
            }
            Ok(OK)
        }
        Command::Theorems(TheoremsCommand::List) => {
            for e in harness::registry() {
                let flags: Vec<&str> = e.flags.iter().map(|f| f.name()).collect();
                println!("{:<5} {}  [{}]", e.id, e.name, flags.join(","));
                println!("      {}", e.statement);
            }
            Ok(OK)
        }
        Command::Theorems(TheoremsCommand::Run(args)) => theorems_run(args),
        Command::Generate { spec, out } => {
            let spec = CorpusSpec::from_arg(&spec)?;
            let corpus = corpus::generate_corpus(&spec);
            std::fs::create_dir_all(&out)?;
            for ring in &corpus.rings {
                io::save(ring, None, &out.join(corpus::file_name(ring.name())))?;
            }
            write_json(&out.join("manifest.json"), &corpus.manifest())?;
            write_json(&out.join("log.json"), &corpus.log)?;
            eprintln!(
                "{} rings written to {} ({} rejected, {} duplicates)",
                corpus.rings.len(),
                out.display(),
                corpus.log.rejected.len(),
                corpus.log.duplicates.len()
            );
            Ok(OK)
        }
        Command::Construct(c) => construct_cmd(c),
    }
}

fn theorems_run(args: RunArgs) -> Result<u8, Error> {
    let rings = if args.rings.is_empty() {
        corpus::generate_corpus(&CorpusSpec::from_arg(&args.corpus)?).rings
    } else {
        args.rings.iter().map(|p| io::load_ring(p)).collect::<Result<Vec<_>, _>>()?
    };
    let known: Vec<&str> = harness::registry().iter().map(|e| e.id).collect();
    if let Some(bad) = args.only.iter().find(|id| !known.contains(&id.as_str())) {
        return Err(Error::Format(format!("unknown theorem id {bad:?}")));
    }
    let only: Vec<&str> = args.only.iter().map(String::as_str).collect();
    let opts = SuiteOptions {
        caps: Caps::default(),
        fixed_reading: args.reading.as_deref().map(Reading::parse).transpose()?,
        fail_fast: args.fail_fast,
    };
    let report = harness::run_suite(&rings, &only, &opts);
    print!("{}", harness::render_table(&report));
    if let Some(path) = args.json {
        write_json(&path, &report.verdicts)?;
    }
    Ok(if report.has_failures() { COUNTEREXAMPLE } else { OK })
}

fn construct_cmd(c: ConstructCommand) -> Result<u8, Error> {
    let (ring, out) = match c {
        ConstructCommand::Quotient { file, ideal, out } => {
            let ring = io::load_ring(&file)?;
            let j = parse_subset(&ideal, ring.size())?;
            (construct::quotient(&ring, &j)?.ring, out)
        }
        ConstructCommand::Product { left, right, out } => {
            let (l, r) = (io::load_ring(&left)?, io::load_ring(&right)?);
            (construct::direct_product(&l, &r)?, out)
        }
        ConstructCommand::Matrix { file, dim, cap, out } => {
            let ring = io::load_ring(&file)?;
            (construct::matrix_hyperring(&ring, dim, cap)?.ring, out)
        }
        ConstructCommand::GammaStar {
            file,
            reading,
            cap,
            out,
        } => {
            let ring = io::load_ring(&file)?;
            let image = construct::fundamental_ring(&ring, cap, reading.into())?;
            eprintln!("classes:");
            for (k, class) in image.classes.iter().enumerate() {
                eprintln!("  {k}: {class}");
            }
            (image.ring, out)
        }
    };
    emit_ring(&ring, out.as_deref())?;
    Ok(OK)
}

fn emit_ring(ring: &HyperRing, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => io::save(ring, None, path),
        None => {
            print!("{}", io::to_json(ring, None));
            Ok(())
        }
    }
}

/// Parses `0,2`, `{0, 2}` or `[0,2]`.
fn parse_subset(text: &str, size: usize) -> Result<ElementSubset, Error> {
    let inner = text.trim().trim_matches(|c| matches!(c, '{' | '}' | '[' | ']'));
    let mut set = ElementSubset::empty();
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let x: usize = part
            .parse()
            .map_err(|_| Error::Format(format!("not an element index: {part:?}")))?;
        if x >= size {
            return Err(Error::IndexOutOfRange {
                field: "subset argument".into(),
                index: x,
                size,
            });
        }
        set.insert(x);
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(set)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
