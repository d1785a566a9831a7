use std::process::ExitCode;

use clap::Parser;
use heis_cli::config::RunConfig;

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    if let Some(n) = cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("heis: cannot set up {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let result = heis_cli::run(&cfg).and_then(|out| {
        heis_cli::output::emit(&out.bytes, cfg.out.as_deref())?;
        Ok(out.exit_code)
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("heis: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
