//! `hyperhopf`: per-instance computations and the small-instance verifier.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hyperhopf_core::complexes::{self, SimplicialComplex};
use hyperhopf_core::error::Error;
use hyperhopf_core::euler;
use hyperhopf_core::hopf::{self, AntipodeMethod, ZetaInverseMethod};
use hyperhopf_core::io::{self as records, ComplexRecord, HypergraphRecord, Instance, Kind};
use hyperhopf_core::setfam::{Clutter, Hypergraph};
use hyperhopf_core::symfun;
use hyperhopf_core::verify::{self, Check};

const EXIT_INPUT: u8 = 2;
const EXIT_BOUND: u8 = 3;
const EXIT_VIOLATION: u8 = 4;

#[derive(Parser)]
#[command(name = "hyperhopf", version, about = "Hopf algebras of hypergraphs, clutters and simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Powersum,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Instance file; standard input when absent.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Instance kind: hypergraph, clutter or complex.
    #[arg(long)]
    kind: Option<String>,

    /// Vertices in the file are numbered from 1.
    #[arg(long)]
    one_based: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Ψ in the monomial or power-sum basis.
    Psi {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Basis::Monomial)]
        basis: Basis,
    },
    /// Chromatic polynomial, or partition polynomial of a complex.
    Chrompoly {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Möbius character ζ⁻¹.
    Zinv {
        #[command(flatten)]
        input: InputArgs,
        /// takeuchi-sum, deletion-contraction or antipode-then-zeta.
        #[arg(long, default_value = "deletion-contraction")]
        method: String,
    },
    /// Antipode expansion.
    Antipode {
        #[command(flatten)]
        input: InputArgs,
        /// takeuchi or recursive.
        #[arg(long, default_value = "takeuchi")]
        method: String,
    },
    /// Eulerian test with witness, Euler character and ζ⁻¹.
    Euler {
        #[command(flatten)]
        input: InputArgs,
    },
    /// All structural predicates of a clutter.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Nerve complex of a clutter.
    Nerve {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Independence complex of a clutter.
    Ind {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Minimal nonfaces of a complex.
    Nonfaces {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Checks the structural implications on every clutter class (up to 5
    /// vertices) or on seeded random clutters (6 to 8 vertices).
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
        /// Comma-separated subset of prop, hc, clique, converse, coincide, odd-image.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Random clutters per vertex count in sampling mode.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_resource_bound() { EXIT_BOUND } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Structured payload, an optional text rendering and whether a check failed.
struct Outcome {
    output: Value,
    text: String,
    violation: bool,
}

impl Outcome {
    fn new(output: impl Serialize, text: impl Into<String>) -> Self {
        Outcome {
            output: serde_json::to_value(output).expect("serializable output"),
            text: text.into(),
            violation: false,
        }
    }
}

fn read_input(args: &InputArgs) -> Result<(Vec<u8>, Instance), Failure> {
    let bytes = match &args.input {
        Some(path) => std::fs::read(path)
            .map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| input_failure(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    let text = std::str::from_utf8(&bytes).map_err(|e| input_failure(e.to_string()))?;
    let kind = args.kind.as_deref().map(str::parse::<Kind>).transpose()?;
    let instance = records::parse_instance(text, kind, args.one_based)?;
    Ok((bytes, instance))
}

fn as_hypergraph(instance: &Instance) -> Result<Hypergraph, Failure> {
    match instance {
        Instance::Hypergraph(h) => Ok(h.clone()),
        Instance::Clutter(c) => Ok(c.as_hypergraph().clone()),
        Instance::Complex(_) => Err(input_failure("this command takes a hypergraph or clutter")),
    }
}

fn as_clutter(instance: &Instance) -> Result<Clutter, Failure> {
    match instance {
        Instance::Clutter(c) => Ok(c.clone()),
        Instance::Hypergraph(h) => Ok(Clutter::try_from(h.clone())?),
        Instance::Complex(_) => Err(input_failure("this command takes a clutter")),
    }
}

fn as_complex(instance: &Instance) -> Result<SimplicialComplex, Failure> {
    match instance {
        Instance::Complex(k) => Ok(k.clone()),
        _ => Err(input_failure("this command takes a simplicial complex")),
    }
}

/// Hypergraph input as given; complexes through their minimal nonfaces.
fn hypergraph_or_nonfaces(instance: &Instance) -> Result<Hypergraph, Failure> {
    match instance {
        Instance::Complex(k) => Ok(complexes::nonface_hypergraph(k)?),
        other => as_hypergraph(other),
    }
}

fn cmd_psi(instance: &Instance, basis: Basis) -> Result<Outcome, Failure> {
    let h = hypergraph_or_nonfaces(instance)?;
    Ok(match basis {
        Basis::Monomial => {
            let f = symfun::psi(&h)?;
            Outcome::new(
                json!({"basis": "monomial", "terms": records::qsym_records(&f)}),
                records::render_qsym(&f),
            )
        }
        Basis::Powersum => {
            let f = symfun::psi_powersum(&h.minimal_edges())?;
            Outcome::new(
                json!({"basis": "powersum", "terms": records::sym_records(&f)}),
                records::render_sym(&f),
            )
        }
    })
}

fn cmd_chrompoly(instance: &Instance) -> Result<Outcome, Failure> {
    let p = match instance {
        Instance::Complex(k) => complexes::partition_polynomial(k)?,
        other => symfun::chromatic_polynomial(&as_hypergraph(other)?)?,
    };
    Ok(Outcome::new(records::PolynomialRecord::from(&p), p.to_string()))
}

fn cmd_zinv(instance: &Instance, method: &str) -> Result<Outcome, Failure> {
    let method: ZetaInverseMethod = method.parse()?;
    let value = hopf::zeta_inverse(&hypergraph_or_nonfaces(instance)?, method)?;
    Ok(Outcome::new(
        json!({"method": method.name(), "zeta_inverse": value}),
        value.to_string(),
    ))
}

fn cmd_antipode(instance: &Instance, method: &str) -> Result<Outcome, Failure> {
    let method: AntipodeMethod = method.parse()?;
    let s = hopf::antipode(&as_hypergraph(instance)?, method)?;
    let terms = records::linear_combo_records(&s);
    let text = terms
        .iter()
        .map(|t| format!("{:+} {:?}", t.coefficient, t.tensor[0].edges))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome::new(json!({"terms": terms}), text))
}

fn cmd_euler(instance: &Instance) -> Result<Outcome, Failure> {
    let (eulerian, witness, chi, zinv) = match instance {
        Instance::Complex(k) => {
            let verdict = complexes::is_eulerian_complex(k)?;
            let chi = complexes::euler_char_complex(k)?;
            let zinv = hopf::zeta_inverse(&complexes::nonface_hypergraph(k)?, ZetaInverseMethod::default())?;
            (verdict.holds(), verdict.witness.map(|w| json!({"subset": w.to_vec()})), chi, zinv)
        }
        other => {
            let h = as_hypergraph(other)?;
            let verdict = euler::is_eulerian(&h)?;
            let chi = hopf::euler_character(&h)?;
            let zinv = hopf::zeta_inverse(&h, ZetaInverseMethod::default())?;
            let witness = verdict
                .witness
                .map(|w| json!({"subset": w.subset.to_vec(), "zeta_inverse": w.zeta_inverse}));
            (verdict.holds(), witness, chi, zinv)
        }
    };
    let text = format!("eulerian: {eulerian}\neuler character: {chi}\nzeta inverse: {zinv}");
    Ok(Outcome::new(
        json!({"eulerian": eulerian, "witness": witness, "euler_character": chi, "zeta_inverse": zinv}),
        text,
    ))
}

fn cmd_classify(instance: &Instance) -> Result<Outcome, Failure> {
    let report = euler::classify(&as_clutter(instance)?)?;
    let violation = !report.implications.all_hold();
    let mut outcome = Outcome::new(&report, "");
    outcome.text = flag_lines(&outcome.output);
    outcome.violation = violation;
    Ok(outcome)
}

fn flag_lines(report: &Value) -> String {
    report
        .as_object()
        .map(|fields| {
            fields
                .iter()
                .filter(|(_, v)| v.is_boolean())
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("\n")
        })
        .unwrap_or_default()
}

fn complex_text(k: &SimplicialComplex) -> String {
    format!("{} vertices, facets {:?}", k.vertex_count(), ComplexRecord::from(k).facets)
}

fn cmd_nerve(instance: &Instance) -> Result<Outcome, Failure> {
    let k = complexes::nerve(&as_clutter(instance)?)?;
    Ok(Outcome::new(ComplexRecord::from(&k), complex_text(&k)))
}

fn cmd_ind(instance: &Instance) -> Result<Outcome, Failure> {
    let k = complexes::independence_complex(&as_clutter(instance)?)?;
    Ok(Outcome::new(ComplexRecord::from(&k), complex_text(&k)))
}

fn cmd_nonfaces(instance: &Instance) -> Result<Outcome, Failure> {
    let c = complexes::minimal_nonfaces(&as_complex(instance)?)?;
    let record = HypergraphRecord::from(c.as_hypergraph());
    let text = format!("{} vertices, minimal nonfaces {:?}", record.vertices, record.edges);
    Ok(Outcome::new(record, text))
}

fn cmd_enumerate(max_vertices: usize, checks: &[String], samples: usize, seed: u64) -> Result<Outcome, Failure> {
    let checks: Vec<Check> = if checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        checks.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
    };
    let report = if max_vertices <= verify::EXHAUSTIVE_MAX_VERTICES {
        verify::enumerate(max_vertices, &checks)?
    } else {
        verify::sample(
            verify::EXHAUSTIVE_MAX_VERTICES + 1,
            max_vertices,
            samples,
            seed,
            &checks,
        )?
    };
    let mut text: Vec<String> = report
        .levels
        .iter()
        .map(|l| {
            format!(
                "n={}: {} clutters, {} eulerian, {} satisfy the Dehn–Sommerville relations without being eulerian",
                l.vertices, l.clutters, l.eulerian, l.gds_not_eulerian
            )
        })
        .collect();
    if report.hypergraphs_checked > 0 {
        text.push(format!("labeled hypergraphs checked: {}", report.hypergraphs_checked));
    }
    text.push(format!("violations: {}", report.violations.len()));
    let violation = !report.violations.is_empty();
    let mut outcome = Outcome::new(&report, text.join("\n"));
    outcome.violation = violation;
    Ok(outcome)
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn run(cli: &Cli) -> Result<(&'static str, String, Outcome), Failure> {
    let with_input = |args: &InputArgs,
                      name: &'static str,
                      f: &dyn Fn(&Instance) -> Result<Outcome, Failure>|
     -> Result<(&'static str, String, Outcome), Failure> {
        let (bytes, instance) = read_input(args)?;
        Ok((name, digest(&bytes), f(&instance)?))
    };
    match &cli.command {
        Command::Psi { input, basis } => with_input(input, "psi", &|i| cmd_psi(i, *basis)),
        Command::Chrompoly { input } => with_input(input, "chrompoly", &cmd_chrompoly),
        Command::Zinv { input, method } => with_input(input, "zinv", &|i| cmd_zinv(i, method)),
        Command::Antipode { input, method } => {
            with_input(input, "antipode", &|i| cmd_antipode(i, method))
        }
        Command::Euler { input } => with_input(input, "euler", &cmd_euler),
        Command::Classify { input } => with_input(input, "classify", &cmd_classify),
        Command::Nerve { input } => with_input(input, "nerve", &cmd_nerve),
        Command::Ind { input } => with_input(input, "ind", &cmd_ind),
        Command::Nonfaces { input } => with_input(input, "nonfaces", &cmd_nonfaces),
        Command::Enumerate {
            max_vertices,
            checks,
            samples,
            seed,
        } => {
            let arguments = format!("max_vertices={max_vertices};checks={};samples={samples};seed={seed}", checks.join(","));
            Ok((
                "enumerate",
                digest(arguments.as_bytes()),
                cmd_enumerate(*max_vertices, checks, *samples, *seed)?,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok((command, input_digest, outcome)) => {
            match cli.output {
                Format::Json => {
                    let record = json!({
                        "command": command,
                        "input_digest": input_digest,
                        "output": outcome.output,
                    });
                    println!("{}", serde_json::to_string_pretty(&record).expect("valid json"));
                }
                Format::Text => println!("{}", outcome.text),
            }
            if outcome.violation {
                eprintln!("verification violation");
                ExitCode::from(EXIT_VIOLATION)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
