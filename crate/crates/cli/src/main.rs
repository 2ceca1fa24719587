mod commands;
mod error;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{CliError, EXIT_CODE_HELP, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "fsp", version, about = "Rank alternatives graded as a fuzzy soft set", after_help = EXIT_CODE_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank the alternatives of an assessment by a decision measure
    Rank(RankArgs),
    /// Show the comparison sets, scores and measures of one alternative
    Explain(ExplainArgs),
    /// Run the seeded random-scenario study
    Simulate(SimulateArgs),
    /// Serve the HTTP API
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Assessment file (CSV or JSON), or `-` for standard input. Relative
    /// paths not found in the working directory are looked up in $FSP_FIXTURE_DIR.
    input: String,
    /// Input encoding; guessed from the file extension when omitted
    #[arg(long, value_parser = ["csv", "json"])]
    input_format: Option<String>,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "g1", value_parser = ["g1", "g2", "g3"])]
    measure: String,
    /// Output: table on a terminal, csv otherwise
    #[arg(long, value_parser = ["csv", "json", "table"])]
    format: Option<String>,
    /// Keep only these attributes (comma separated)
    #[arg(long, value_delimiter = ',')]
    keep: Vec<String>,
    /// Drop these attributes (comma separated)
    #[arg(long, value_delimiter = ',')]
    eliminate: Vec<String>,
}

#[derive(Debug, Args)]
struct ExplainArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Alternative id
    alternative: String,
    /// Output: table on a terminal, csv otherwise
    #[arg(long, value_parser = ["csv", "json", "table"])]
    format: Option<String>,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// JSON file with a simulation config; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    scenarios: Option<u64>,
    #[arg(long)]
    alternatives: Option<usize>,
    #[arg(long)]
    attributes: Option<usize>,
    /// Grade grid spacing; its reciprocal must be an integer
    #[arg(long)]
    grid_step: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Measures to evaluate (comma separated)
    #[arg(long, value_delimiter = ',', value_parser = ["g1", "g2", "g3"])]
    measures: Vec<String>,
    /// Output: text histogram on a terminal, csv otherwise
    #[arg(long, value_parser = ["csv", "json", "text"])]
    format: Option<String>,
}

#[derive(Debug, Args)]
struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: String,
    /// Directory for session snapshots; in-memory only when unset
    #[arg(long, env = "FSP_STATE_DIR")]
    state_dir: Option<PathBuf>,
    /// Allowed CORS origin (any when unset)
    #[arg(long)]
    cors_origin: Option<String>,
}

fn output_format(explicit: Option<String>, terminal_default: &str) -> String {
    explicit.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            terminal_default.to_string()
        } else {
            "csv".to_string()
        }
    })
}

fn run(cli: Cli) -> Result<Option<Vec<u8>>, CliError> {
    match cli.command {
        Command::Rank(args) => commands::rank(&commands::RankRequest {
            input: args.input.input,
            input_format: args.input.input_format,
            measure: args.measure,
            format: output_format(args.format, "table"),
            keep: args.keep,
            eliminate: args.eliminate,
        })
        .map(Some),
        Command::Explain(args) => commands::explain(
            &args.input.input,
            args.input.input_format.as_deref(),
            &args.alternative,
            &output_format(args.format, "table"),
        )
        .map(Some),
        Command::Simulate(args) => commands::simulate(&commands::SimulateRequest {
            config: args.config,
            scenarios: args.scenarios,
            alternatives: args.alternatives,
            attributes: args.attributes,
            grid_step: args.grid_step,
            seed: args.seed,
            measures: args.measures,
            format: output_format(args.format, "text"),
        })
        .map(Some),
        Command::Serve(args) => {
            commands::serve(&args.host, args.port, args.state_dir, args.cors_origin)?;
            Ok(None)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                std::process::exit(EXIT_OK);
            }
            let rendered = err.render().to_string();
            // clap's summary runs up to the first blank line
            let summary = rendered
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            let e = CliError::Usage(summary.trim_start_matches("error: ").to_string());
            eprintln!("{}", e.render());
            std::process::exit(e.exit_code());
        }
    };
    match run(cli) {
        Ok(Some(bytes)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(&bytes).and_then(|_| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    let e = CliError::Write(e);
                    eprintln!("{}", e.render());
                    std::process::exit(e.exit_code());
                }
            }
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("{}", e.render());
            std::process::exit(e.exit_code());
        }
    }
}
