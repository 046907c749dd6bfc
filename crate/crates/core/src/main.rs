use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(powergraph::cli::run() as u8)
}
