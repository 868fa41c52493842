use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(tuttice::cli::run(std::env::args()) as u8)
}
