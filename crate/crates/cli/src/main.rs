use std::io;
use std::process::ExitCode;

use clap::Parser;
use hirzewahl::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match hirzewahl::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let closed = e
                .downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe);
            if closed {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
