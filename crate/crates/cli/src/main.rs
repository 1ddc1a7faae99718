use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use leinster_cli::config::{MAX_ARITY_CAP, MAX_LENGTH_CAP, MAX_WEIGHT_CAP};
use leinster_cli::schema::{schema, SchemaKind};
use leinster_cli::{catalog, homology, run, CliError, ComplexKind, InputSource, NegativeControl, RunConfig, Target};

#[derive(Parser)]
#[command(name = "leinster", version, about = "Exact verification of Leinster monoids, bar/cobar and the shuffle map")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Built-in example (see `catalog`).
    #[arg(long)]
    catalog: Option<String>,
    /// JSON dg algebra, or monoid tables when the document has `components`.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl InputArgs {
    fn source(&self) -> InputSource {
        match (&self.catalog, &self.input) {
            (Some(name), _) => InputSource::Catalog(name.clone()),
            (None, Some(path)) => InputSource::Json(path.clone()),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites and emit a JSON report.
    Verify {
        /// `all` or suite names.
        #[arg(required = true, value_name = "SUITE")]
        targets: Vec<Target>,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 4, help = format!("Weight truncation N (1..={MAX_WEIGHT_CAP})"))]
        max_weight: usize,
        #[arg(long, default_value_t = 4, help = format!("Highest A∞ arity checked (1..={MAX_ARITY_CAP})"))]
        max_arity: usize,
        #[arg(long, default_value_t = 3, help = format!("Longest B∞ word checked (1..={MAX_LENGTH_CAP})"))]
        max_length: usize,
        /// Swap in a deliberately broken convention.
        #[arg(long, value_enum)]
        negative_control: Option<NegativeControl>,
        /// Write the JSON report here and print a summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print homology dimensions of a complex built from the input.
    Homology {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "algebra")]
        complex: ComplexKind,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        /// Emit JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// List built-in examples as JSON.
    Catalog,
    /// Print a JSON Schema.
    Schema {
        #[arg(value_enum)]
        kind: SchemaKind,
    },
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify {
            targets,
            input,
            max_weight,
            max_arity,
            max_length,
            negative_control,
            out,
            jobs,
        } => {
            let mut cfg = RunConfig::new(input.source(), &targets);
            cfg.max_weight = max_weight;
            cfg.max_arity = max_arity;
            cfg.max_length = max_length;
            cfg.negative_control = negative_control;
            cfg.out = out.clone();
            cfg.jobs = jobs;
            let report = run(&cfg)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, report.to_json()).map_err(|source| CliError::Io { path, source })?;
                    print!("{}", report.summary());
                }
                None => print!("{}", report.to_json()),
            }
            Ok(report.exit_code())
        }
        Command::Homology {
            input,
            complex,
            max_weight,
            json,
        } => {
            let h = homology(&input.source(), complex, max_weight)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&h).expect("serializes"));
            } else {
                print!("{}", h.table());
            }
            Ok(0)
        }
        Command::Catalog => {
            println!("{}", serde_json::to_string_pretty(&catalog::catalog()).expect("serializes"));
            Ok(0)
        }
        Command::Schema { kind } => {
            println!("{}", serde_json::to_string_pretty(&schema(kind)).expect("serializes"));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
