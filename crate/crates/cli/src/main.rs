use std::io::Write;

fn main() {
    let eps = std::env::var(triprep_cli::EPS_ENV).ok();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = triprep_cli::run(std::env::args_os(), eps.as_deref(), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
