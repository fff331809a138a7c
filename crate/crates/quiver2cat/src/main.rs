use clap::Parser;
use quiver2cat::cli::{finish, run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    std::process::exit(finish(&cli, &outcome));
}
