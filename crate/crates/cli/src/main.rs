use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use wgeom_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let result = run(&cli, &mut out, &mut err);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(outcome), Ok(())) => ExitCode::from(outcome.code()),
        (Err(e), _) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(1)
        }
        (_, Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            ExitCode::from(1)
        }
    }
}
