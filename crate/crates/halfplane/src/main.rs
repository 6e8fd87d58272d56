use clap::Parser;

fn main() {
    let cli = halfplane::commands::Cli::parse();
    std::process::exit(halfplane::commands::main_with(cli));
}
