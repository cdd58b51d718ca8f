use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match fpa_cli::run_args(std::env::args_os()) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|()| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err((message, code)) => {
            eprint!("{message}");
            ExitCode::from(code as u8)
        }
    }
}
