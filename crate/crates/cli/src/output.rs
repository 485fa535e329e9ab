//! Result tables and their CSV/JSON serializations. Every artifact embeds
//! the full invocation and the crate version, and rendering is fully
//! deterministic so reruns with identical flags are byte-identical.

use crate::{CliError, CliResult};
use serde::Serialize;
use std::path::{Path, PathBuf};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub condition: String,
    pub param: String,
    pub measure: String,
    pub mean: f64,
    pub sd: f64,
    pub n: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultTable {
    pub invocation: String,
    pub version: String,
    pub rows: Vec<Row>,
}

impl ResultTable {
    pub fn new(invocation: &str) -> Self {
        Self {
            invocation: invocation.to_string(),
            version: VERSION.to_string(),
            rows: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        condition: impl Into<String>,
        param: impl Into<String>,
        measure: impl Into<String>,
        samples: &[f64],
    ) {
        let n = samples.len();
        let mean = samples.iter().sum::<f64>() / n as f64;
        let sd = if n > 1 {
            (samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n as f64 - 1.0))
                .sqrt()
        } else {
            0.0
        };
        self.rows.push(Row {
            condition: condition.into(),
            param: param.into(),
            measure: measure.into(),
            mean,
            sd,
            n,
        });
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(self).map_err(CliError::runtime)?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut buf = Vec::new();
                {
                    use std::io::Write;
                    writeln!(buf, "# invocation: {}", self.invocation)
                        .map_err(CliError::runtime)?;
                    writeln!(buf, "# version: {}", VERSION).map_err(CliError::runtime)?;
                }
                let mut w = csv::Writer::from_writer(buf);
                w.write_record(["condition", "param", "measure", "mean", "sd", "n"])
                    .map_err(CliError::runtime)?;
                for row in &self.rows {
                    w.write_record([
                        row.condition.as_str(),
                        row.param.as_str(),
                        row.measure.as_str(),
                        &format!("{}", row.mean),
                        &format!("{}", row.sd),
                        &format!("{}", row.n),
                    ])
                    .map_err(CliError::runtime)?;
                }
                let buf = w.into_inner().map_err(CliError::runtime)?;
                String::from_utf8(buf).map_err(CliError::runtime)
            }
        }
    }
}

/// Wraps any serializable payload with the invocation envelope.
pub fn json_artifact<T: Serialize>(
    invocation: &str,
    key: &str,
    payload: &T,
) -> CliResult<String> {
    let mut map = serde_json::Map::new();
    map.insert("invocation".into(), invocation.into());
    map.insert("version".into(), VERSION.into());
    map.insert(
        key.into(),
        serde_json::to_value(payload).map_err(CliError::runtime)?,
    );
    let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(map))
        .map_err(CliError::runtime)?;
    s.push('\n');
    Ok(s)
}

/// Writes to the path, or stdout when no path was given.
pub fn emit(out: Option<&PathBuf>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => write_file(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

pub fn write_file(path: &Path, content: &str) -> CliResult<()> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Runtime(format!("writing {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_render_is_stable() {
        let mut t = ResultTable::new("mbn test --flag");
        t.push("rn", "0.2", "motif_8", &[1.0, 2.0, 3.0]);
        let a = t.render(Format::Csv).unwrap();
        let b = t.render(Format::Csv).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("# invocation: mbn test --flag\n"));
        assert!(a.contains("rn,0.2,motif_8,2,1,3"));
    }

    #[test]
    fn json_render_has_envelope() {
        let t = ResultTable::new("mbn x");
        let s = t.render(Format::Json).unwrap();
        assert!(s.contains("\"invocation\": \"mbn x\""));
        assert!(s.contains("\"version\""));
    }
}
