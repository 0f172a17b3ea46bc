use clap::error::ErrorKind;
use clap::Parser;
use mqwidth::Cli;

fn main() {
    // exit codes: 0 success, 1 validation error, 2 numerical failure
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            std::process::exit(0);
        }
        Err(e) => {
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    if let Err(e) = mqwidth::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
