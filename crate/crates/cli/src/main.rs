use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use qspec_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    match run(cli, io::BufWriter::new(stdout), &mut stderr) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            ExitCode::from(2)
        }
    }
}
