use clap::Parser;
use qch::cli::{self, Cli};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli::execute(cli) {
        Ok(output) => {
            if !output.rendered.is_empty() {
                print!("{}", output.rendered);
                if !output.rendered.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::from(output.exit_code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
