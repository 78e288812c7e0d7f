use clap::Parser;

fn main() {
    let cli = extri_cli::Cli::parse();
    let code = extri_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
