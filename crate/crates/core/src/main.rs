use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = wolof_spell::cli::run(
        std::env::args_os(),
        &|key| std::env::var(key).ok(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
