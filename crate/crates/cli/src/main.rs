use std::process::ExitCode;

fn main() -> ExitCode {
    let result = hermangle::run_args(std::env::args_os());
    if let Some(out) = result.stdout {
        println!("{out}");
    }
    if let Some(err) = result.stderr {
        eprintln!("{err}");
    }
    ExitCode::from(result.code)
}
