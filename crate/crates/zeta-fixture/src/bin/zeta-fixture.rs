//! `zeta-fixture COUNT OUT` writes the first COUNT zero ordinates to OUT.

use std::path::PathBuf;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (Some(count), Some(out)) = (args.first().and_then(|s| s.parse::<usize>().ok()), args.get(1)) else {
        eprintln!("usage: zeta-fixture COUNT OUT");
        return ExitCode::from(2);
    };
    let gammas = match zeta_fixture::generate_ordinates(count) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("zeta-fixture: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = zeta_fixture::write_ordinates(&PathBuf::from(out), &gammas) {
        eprintln!("zeta-fixture: {out}: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
