use clap::Parser;
use weakstar::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let report = run(&cli, std::env::args().collect());
    println!("{}", report.to_json());
    std::process::exit(report.outcome.exit_code());
}
