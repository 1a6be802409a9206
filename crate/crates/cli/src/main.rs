use std::process::ExitCode;

fn main() -> ExitCode {
    fvmlf_cli::run(std::env::args_os())
}
