use clap::Parser;

use germ_bounds::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
