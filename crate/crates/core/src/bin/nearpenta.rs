use clap::Parser;
use nearpenta::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = run(cli, &mut stdout) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}
