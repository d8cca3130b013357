use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use t2weights_cli::{run, Cli, EXIT_FAILURE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_FAILURE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = run(&cli, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code)
}
