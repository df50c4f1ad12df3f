use clap::Parser;

fn main() {
    // Usage errors exit 2 (clap's convention); --help/--version exit 0.
    let cli = nckg::cli::Cli::parse();
    std::process::exit(nckg::cli::run(cli));
}
