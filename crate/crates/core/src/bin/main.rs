use clap::Parser;

use cantor_dihedral::cli::{execute, Cli};

fn main() {
    std::process::exit(execute(&Cli::parse()));
}
