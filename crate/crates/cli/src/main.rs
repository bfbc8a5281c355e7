use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(mdgauge_cli::run(std::env::args_os()))
}
