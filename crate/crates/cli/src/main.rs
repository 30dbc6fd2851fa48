use std::process::ExitCode;

fn main() -> ExitCode {
    let code = match landau_cli::parse_args(std::env::args_os()) {
        Ok(cfg) => landau_cli::dispatch(&cfg),
        Err(e) => {
            if e.code == landau_cli::EXIT_OK {
                print!("{e}");
            } else {
                eprint!("{e}");
                if !e.message.ends_with('\n') {
                    eprintln!();
                }
            }
            e.code
        }
    };
    ExitCode::from(code as u8)
}
