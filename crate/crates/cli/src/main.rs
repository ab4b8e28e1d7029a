use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use goodcubic::{parse_graph, parse_many, summary_table, sweep, to_dot, write_edge_list};
use goodcubic::{Certificate, GraphFormat, OracleJson, Refusal, ReportJson};
use goodcubic_core::generators::{gen_named, GenSpec};
use goodcubic_core::oracle::oracle_decompose_with;
use goodcubic_core::{decompose_with, graph6, verify, DecomposeOptions, Error, Graph};

#[derive(Parser)]
#[command(name = "goodcubic", version, about = "Tree, matching and cycle decompositions of claw-free cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a connected claw-free cubic graph.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = CertOutput::Json)]
        output: CertOutput,
        /// Print the reduction steps to stderr.
        #[arg(long)]
        trace: bool,
        /// Verify the partial labeling after every lift.
        #[arg(long)]
        debug_verify: bool,
    },
    /// Check a certificate and print a report.
    Verify {
        /// Certificate JSON file, or `-` for stdin.
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
    /// Exhaustive search over spanning trees.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Require a nonempty 2-regular part; `--strict-oracle=false` drops it.
        #[arg(long, num_args = 0..=1, default_value_t = true, default_missing_value = "true", require_equals = true)]
        strict_oracle: bool,
    },
    /// Emit a generated graph.
    Gen {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Replace every vertex by a triangle.
        #[arg(long)]
        inflate: bool,
        #[arg(long, value_enum, default_value_t = GraphOutput::Graph6)]
        output: GraphOutput,
    },
    /// Check many graphs and print a summary table.
    Sweep {
        #[command(flatten)]
        input: Input,
        /// Run the oracle on graphs with at most this many vertices.
        #[arg(long, default_value_t = 14)]
        oracle_threshold: usize,
    },
}

#[derive(Args)]
struct Input {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CertOutput {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOutput {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    K4,
    Prism,
    Necklace,
    Bracelet,
    Chain,
    DoubleBracelet,
    RandomCubic,
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn format_of(f: InputFormat) -> Option<GraphFormat> {
    match f {
        InputFormat::Auto => None,
        InputFormat::Graph6 => Some(GraphFormat::Graph6),
        InputFormat::Edgelist => Some(GraphFormat::EdgeList),
    }
}

/// A certificate is accepted wherever a graph is expected.
fn load_graph(input: &Input) -> Result<Graph> {
    let text = read_input(&input.input)?;
    if matches!(input.format, InputFormat::Auto) && text.trim_start().starts_with('{') {
        let cert: Certificate = serde_json::from_str(&text).context("parsing certificate JSON")?;
        return Ok(cert.parts()?.0);
    }
    parse_graph(&text, format_of(input.format))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

enum Failure {
    /// Structured refusal from the library.
    Refused(Error),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        match e.downcast::<Error>() {
            Ok(e) => Failure::Refused(e),
            Err(e) => Failure::Other(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Refused(e)
    }
}

fn gen_spec(family: Family, k: Option<usize>, j: Option<usize>, n: Option<usize>, seed: u64) -> Result<GenSpec> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--family needs --{flag}"));
    Ok(match family {
        Family::K4 => GenSpec::K4,
        Family::Prism => GenSpec::Prism,
        Family::Necklace => GenSpec::Necklace(need(k, "k")?),
        Family::Bracelet => GenSpec::BraceletGadget(need(k, "k")?),
        Family::Chain => GenSpec::ChainGadget(need(k, "k")?),
        Family::DoubleBracelet => GenSpec::DoubleBracelet(need(k, "k")?, need(j, "j")?),
        Family::RandomCubic => GenSpec::RandomCubic { n: need(n, "n")?, seed },
    })
}

/// Ok(false) means the command ran but its answer is negative.
fn run(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Decompose {
            input,
            output,
            trace,
            debug_verify,
        } => {
            let g = load_graph(&input)?;
            let opts = DecomposeOptions {
                verify_each_step: debug_verify,
                harvest_reroutes: false,
            };
            let out = decompose_with(&g, opts)?;
            if trace {
                let mut err = io::stderr().lock();
                for step in &out.steps {
                    writeln!(err, "{step}").map_err(anyhow::Error::from)?;
                }
            }
            match output {
                CertOutput::Json => print_json(&Certificate::new(&g, &out.decomposition))?,
                CertOutput::Dot => print!("{}", to_dot(&g, &out.decomposition)),
            }
            Ok(true)
        }
        Command::Verify { input } => {
            let text = read_input(&input)?;
            let cert: Certificate = serde_json::from_str(&text)
                .context("parsing certificate JSON")
                .map_err(Failure::Other)?;
            let (g, d) = cert.parts()?;
            let report = ReportJson::from(&verify(&g, &d));
            print_json(&report)?;
            Ok(report.pass)
        }
        Command::Oracle { input, strict_oracle } => {
            let g = load_graph(&input)?;
            let r = oracle_decompose_with(&g, strict_oracle)?;
            let json = OracleJson::new(&g, &r);
            print_json(&json)?;
            Ok(r.found().is_some())
        }
        Command::Gen {
            family,
            k,
            j,
            n,
            seed,
            inflate,
            output,
        } => {
            let mut g = gen_named(&gen_spec(family, k, j, n, seed)?)?;
            if inflate {
                g = gen_named(&GenSpec::Inflate(g))?;
            }
            match output {
                GraphOutput::Graph6 => println!("{}", graph6::encode(&g)),
                GraphOutput::Edgelist => print!("{}", write_edge_list(&g)),
            }
            Ok(true)
        }
        Command::Sweep { input, oracle_threshold } => {
            let text = read_input(&input.input)?;
            let graphs = parse_many(&text, format_of(input.format))?;
            let rows = sweep(&graphs, oracle_threshold);
            print!("{}", summary_table(&rows));
            Ok(!rows.iter().any(|r| r.failed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(f) => {
            let refusal = match f {
                Failure::Refused(e) => Refusal::from(&e),
                Failure::Other(e) => Refusal {
                    error: "input".into(),
                    message: format!("{e:#}"),
                },
            };
            eprintln!("{}", serde_json::to_string(&refusal).expect("refusal serializes"));
            ExitCode::FAILURE
        }
    }
}
