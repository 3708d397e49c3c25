use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = ncpoisson_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
