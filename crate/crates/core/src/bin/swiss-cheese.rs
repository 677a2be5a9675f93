use std::io;
use std::process::ExitCode;

use clap::Parser;
use swiss_cheese::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(run(cli, &mut io::stdout(), &mut io::stderr()))
}
