use clap::Parser;
use p2r_cli::Cli;

fn main() {
    let cli = Cli::parse();
    let code = p2r_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
