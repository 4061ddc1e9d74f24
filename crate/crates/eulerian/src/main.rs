use std::io;
use std::process::ExitCode;

use clap::Parser;
use eulerian::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::BufWriter::new(io::stdout());
    let code = run(cli, &mut out, &mut io::stderr());
    ExitCode::from(code as u8)
}
