use clap::Parser;

use qtraj::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(false) => {}
        Ok(true) => {
            eprintln!("qtraj: one or more rows failed; see the diagnostic column");
            std::process::exit(2);
        }
        Err(e) => {
            eprintln!("qtraj: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
