use std::process::ExitCode;

use fundamental_bases::cli;

fn main() -> ExitCode {
    let (code, out) = cli::run(std::env::args_os());
    if code == cli::EXIT_PARSE || code == cli::EXIT_DOMAIN {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
