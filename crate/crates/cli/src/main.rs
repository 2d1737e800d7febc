use clap::Parser;
use pml_cli::args::{Cli, Command};
use pml_cli::commands;

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Serve(args) => pml_cli::server::serve_blocking(args),
        command => commands::run(command).map(|out| print!("{}", out.render(cli.format))),
    };
    if let Err(e) = result {
        eprintln!("error[{}]: {e}", e.kind());
        std::process::exit(e.exit_code());
    }
}
