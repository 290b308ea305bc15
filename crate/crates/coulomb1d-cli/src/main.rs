use std::io::Write;
use std::path::PathBuf;

use coulomb1d_cli::{run, CONFIG_ENV};

fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), std::env::var_os(CONFIG_ENV).map(PathBuf::from), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
