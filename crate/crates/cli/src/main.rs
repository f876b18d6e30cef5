use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let report = fuzzysoft_cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(report.payload.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    for d in &report.diagnostics {
        eprintln!("{d}");
    }
    ExitCode::from(report.status)
}
