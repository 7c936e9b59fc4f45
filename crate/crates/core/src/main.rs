use std::process::ExitCode;

use nokwidth::cli::run_from;

fn main() -> ExitCode {
    match run_from(std::env::args_os()) {
        Ok((outcome, pretty)) => {
            println!("{}", outcome.render(pretty));
            if let Some(err) = outcome.document.get("error") {
                eprintln!("error: {}", err["message"].as_str().unwrap_or_default());
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
