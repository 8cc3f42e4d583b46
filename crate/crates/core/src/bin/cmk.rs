use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_tol = std::env::var(cmk::cli::TOL_ENV).ok();
    let out = cmk::cli::run(
        std::env::args_os(),
        &mut std::io::stdin(),
        env_tol.as_deref(),
    );
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
