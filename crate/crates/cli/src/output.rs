//! CSV and JSON writers. Floats use the shortest representation that
//! round-trips; missing values are empty CSV fields or JSON nulls.

use std::io::Write;
use std::path::Path;

use crate::error::CliError;

pub fn num(x: f64) -> String {
    format!("{x:?}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn csv_table(header: &[&str], rows: &[Vec<String>]) -> Result<Vec<u8>, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    w.write_record(header).map_err(|e| CliError::Output(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| CliError::Output(e.to_string()))?;
    }
    w.into_inner().map_err(|e| CliError::Output(e.to_string()))
}

pub fn json<T: serde::Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut v = serde_json::to_vec_pretty(value).map_err(|e| CliError::Output(e.to_string()))?;
    v.push(b'\n');
    Ok(v)
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::Output(format!("{}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(bytes).and_then(|_| so.flush()).map_err(|e| CliError::Output(e.to_string()))
        }
    }
}
