use std::io;

use tropigraph::cli::{run, LIMIT_ENV};

fn main() {
    let code = run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        std::env::var(LIMIT_ENV).ok(),
    );
    std::process::exit(code);
}
