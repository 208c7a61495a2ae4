use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let outcome = a1_weyl::cli::run(&args);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(outcome.code);
}
