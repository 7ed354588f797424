use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = ramsey56::cli::Cli::parse();
    ramsey56::cli::run(cli)
}
