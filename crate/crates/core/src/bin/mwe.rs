use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(mwe_compound::cli::main_from_env())
}
