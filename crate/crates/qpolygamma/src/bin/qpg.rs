use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qpolygamma::cli::run(std::env::args()) as u8)
}
