use clap::Parser;
use voisearch_cli::{args::Cli, run, CliError};

fn main() {
    // Invalid flags exit 2 via clap's own error path.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Runtime(err)) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
