use std::process::ExitCode;

fn main() -> ExitCode {
    match webcoord::dispatch(std::env::args_os()) {
        Ok(outcome) => {
            println!("{}", outcome.report.to_json());
            ExitCode::from(outcome.code)
        }
        Err(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}
