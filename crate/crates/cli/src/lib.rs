//! Library side of the `heis` command-line tool.

pub mod commands;
pub mod config;
pub mod error;
pub mod input;
pub mod output;
pub mod verify;

use config::{Command, Format, RunConfig};
use error::CliError;

/// Output bytes and the exit code of one run.
pub struct RunOutput {
    pub bytes: Vec<u8>,
    pub exit_code: i32,
}

pub fn run(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    match &cfg.command {
        Command::Density { spec, center } | Command::Expand { spec, center } => {
            let case = input::prepare(input::load(spec)?, center.as_deref(), cfg.tol)?;
            let ladder = cfg.radii.unwrap_or_else(|| commands::default_ladder(&case));
            let format = cfg.format.unwrap_or(Format::Csv);
            let bytes = match cfg.command {
                Command::Density { .. } => commands::density(&case, ladder, format)?,
                _ => commands::expand(&case, ladder, cfg.order, format)?,
            };
            Ok(RunOutput { bytes, exit_code: 0 })
        }
        Command::Verify { suite, perturb_b2 } => {
            let report = verify::run(*suite, cfg.seed, verify::Mutation { b2_numerator: perturb_b2.unwrap_or(0) });
            let bytes = match cfg.format.unwrap_or(Format::Json) {
                Format::Json => output::json(&report)?,
                Format::Csv => {
                    let rows: Vec<Vec<String>> = report
                        .groups
                        .iter()
                        .flat_map(|g| {
                            g.invariants.iter().map(move |i| {
                                let status = if i.status == verify::Status::Pass { "pass" } else { "fail" };
                                vec![g.name.clone(), i.name.clone(), status.into(), i.detail.clone()]
                            })
                        })
                        .collect();
                    output::csv_table(&["group", "invariant", "status", "detail"], &rows)?
                }
            };
            Ok(RunOutput { bytes, exit_code: report.exit_code() })
        }
        Command::Table => Ok(RunOutput { bytes: commands::table(cfg.format.unwrap_or(Format::Csv))?, exit_code: 0 }),
    }
}
