use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ndcurves_core::enumerate::{enumerate_by_genus, format_moduli_table, moduli_table_with_progress, Method};
use ndcurves_core::io::{parse_polygon, to_json, write_corpus};
use ndcurves_core::loops::loop_of_polytope;
use ndcurves_core::nondeg::{conic_ea, is_nondegenerate, ConicCoefficients, ConicDeterminant};
use ndcurves_core::{analyze, Error, LaurentPolynomial, LegalLoop, PolygonReport, PrimeField, TwelveCheck};

/// Lattice polygons, moduli bounds and nondegeneracy of curves in toric surfaces.
#[derive(Parser)]
#[command(name = "ndcurves", version)]
struct Cli {
    #[command(flatten)]
    output: OutputFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputFlags {
    /// Compact JSON on stdout (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON on stdout.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomized work; every current command is deterministic, so it is accepted and ignored.
    #[allow(dead_code)]
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Report on a polygon given as {"vertices": [[x,y], ...]} ("-" reads stdin).
    Analyze { file: PathBuf },
    /// Write the equivalence classes of a genus as JSON lines.
    Enumerate {
        #[arg(long)]
        genus: usize,
        #[arg(long, default_value_t = Method::HullRecursion)]
        method: Method,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide nondegeneracy of a polynomial such as "p=7; 1:0,0; 1:1,0; 1:0,1" (or a file holding one).
    Check { polynomial: String },
    /// Dual loop and twelve check for {"vectors": ...} or for the loop of a polygon {"vertices": ...}.
    Loop { file: PathBuf },
    /// Maximal m(Δ) per genus next to the claimed moduli dimensions.
    ModuliTable {
        #[arg(long, default_value_t = 7)]
        gmax: usize,
    },
    /// Principal determinant of c00 + c10 x + c01 y + c20 x² + c11 xy + c02 y².
    ConicEa {
        #[arg(long)]
        p: u64,
        c00: i64,
        c10: i64,
        c01: i64,
        c20: i64,
        c11: i64,
        c02: i64,
    },
}

#[derive(Serialize)]
struct AnalyzeOutput {
    #[serde(flatten)]
    report: PolygonReport,
    #[serde(rename = "loop", skip_serializing_if = "Option::is_none")]
    legal_loop: Option<LegalLoop>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_loop: Option<LegalLoop>,
    #[serde(skip_serializing_if = "Option::is_none")]
    twelve: Option<TwelveCheck>,
}

#[derive(Serialize)]
struct LoopOutput {
    #[serde(rename = "loop")]
    legal_loop: LegalLoop,
    dual_loop: LegalLoop,
    twelve: TwelveCheck,
}

#[derive(Serialize)]
struct ConicOutput {
    #[serde(flatten)]
    determinant: ConicDeterminant,
    nondegenerate: bool,
}

/// Bad input; reported on stderr with exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
    }
}

fn emit<T: Serialize>(value: &T, flags: &OutputFlags) {
    println!("{}", to_json(value, flags.pretty && !flags.json));
}

/// Runs a command and returns whether its verdict was positive.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let flags = &cli.output;
    match &cli.command {
        Command::Analyze { file } => {
            let poly = parse_polygon(&read_input(file)?)?;
            let report = analyze(&poly);
            let legal_loop = match (report.is_maximal, report.interior_hull.dimension()) {
                (Some(true), Some(2)) => Some(loop_of_polytope(&poly)?),
                _ => None,
            };
            let dual_loop = legal_loop.as_ref().map(|l| l.dual()).transpose()?;
            let twelve = legal_loop.as_ref().map(|l| l.verify_twelve()).transpose()?;
            emit(&AnalyzeOutput { report, legal_loop, dual_loop, twelve }, flags);
            Ok(true)
        }
        Command::Enumerate { genus, method, out } => {
            let corpus = enumerate_by_genus(*genus, *method)?;
            eprintln!("genus {genus}: {} classes ({method})", corpus.classes.len());
            match out {
                Some(path) => {
                    let file = fs::File::create(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    write_corpus(io::BufWriter::new(file), &corpus.classes)?;
                }
                None => write_corpus(io::stdout().lock(), &corpus.classes)?,
            }
            Ok(true)
        }
        Command::Check { polynomial } => {
            let text = match fs::read_to_string(polynomial) {
                Ok(contents) => contents,
                Err(_) => polynomial.clone(),
            };
            let f: LaurentPolynomial = text.parse()?;
            let report = is_nondegenerate(&f)?;
            emit(&report, flags);
            Ok(report.nondegenerate)
        }
        Command::Loop { file } => {
            let text = read_input(file)?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure(format!("parse error: {e}")))?;
            let legal_loop = if value.get("vertices").is_some() {
                loop_of_polytope(&parse_polygon(&text)?)?
            } else {
                ndcurves_core::io::parse_loop(&text)?
            };
            let dual_loop = legal_loop.dual()?;
            let twelve = legal_loop.verify_twelve()?;
            let holds = twelve.holds;
            emit(&LoopOutput { legal_loop, dual_loop, twelve }, flags);
            Ok(holds)
        }
        Command::ModuliTable { gmax } => {
            let rows = moduli_table_with_progress(*gmax, |g| eprintln!("genus {g} done"))?;
            eprint!("{}", format_moduli_table(&rows));
            emit(&rows, flags);
            Ok(rows.iter().all(|r| r.is_consistent()))
        }
        Command::ConicEa { p, c00, c10, c01, c20, c11, c02 } => {
            let field = PrimeField::new(*p)?;
            let r = |c: i64| field.reduce(c);
            let coefficients =
                ConicCoefficients { c00: r(*c00), c10: r(*c10), c01: r(*c01), c20: r(*c20), c11: r(*c11), c02: r(*c02) };
            let determinant = conic_ea(field, coefficients)?;
            let nondegenerate = determinant.value != 0;
            emit(&ConicOutput { determinant, nondegenerate }, flags);
            Ok(nondegenerate)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    };
    io::stdout().flush().ok();
    code
}
