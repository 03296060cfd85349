use clap::Parser;

fn main() {
    let cli = balcox::Cli::parse();
    std::process::exit(balcox::run(cli));
}
