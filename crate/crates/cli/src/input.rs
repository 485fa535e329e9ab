//! Flag-value parsers shared across subcommands: weight sources, in-degree
//! specifications, and numeric grids.

use crate::{CliError, CliResult};
use mbn_core::catalog::MotifSize;
use mbn_core::graph::InDegreeSpec;
use mbn_core::optimizer::preset_by_name;
use std::path::PathBuf;
use std::str::FromStr;

/// Weight source: `delta:<id>`, `preset:<name>`, `file:<path>`, or `zero`.
#[derive(Debug, Clone)]
pub enum WeightSource {
    Delta(usize),
    Preset(String),
    File(PathBuf),
    Zero,
}

impl FromStr for WeightSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "zero" {
            return Ok(WeightSource::Zero);
        }
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| format!("weight source `{s}` is not delta:<id>, preset:<name>, file:<path>, or zero"))?;
        match kind {
            "delta" => value
                .parse()
                .map(WeightSource::Delta)
                .map_err(|_| format!("delta weight id `{value}` is not an integer")),
            "preset" => Ok(WeightSource::Preset(value.to_string())),
            "file" => Ok(WeightSource::File(PathBuf::from(value))),
            other => Err(format!("unknown weight source kind `{other}`")),
        }
    }
}

impl WeightSource {
    pub fn resolve(&self, size: MotifSize) -> CliResult<Vec<f64>> {
        let n_mot = size.class_count();
        match self {
            WeightSource::Zero => Ok(vec![0.0; n_mot]),
            WeightSource::Delta(id) => {
                mbn_core::delta_weights(size, *id).map_err(CliError::validation)
            }
            WeightSource::Preset(name) => {
                let w = preset_by_name(name).ok_or_else(|| {
                    CliError::Validation(format!(
                        "unknown preset `{name}` (available: smallworld, modularity)"
                    ))
                })?;
                if w.len() != n_mot {
                    return Err(CliError::Validation(format!(
                        "preset `{name}` is a {}-class vector, motif size {} needs {n_mot}",
                        w.len(),
                        size.nodes()
                    )));
                }
                Ok(w)
            }
            WeightSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(CliError::runtime)?;
                let w = parse_weight_json(&text).map_err(CliError::Validation)?;
                if w.len() != n_mot {
                    return Err(CliError::Validation(format!(
                        "weight file holds {} entries, motif size {} needs {n_mot}",
                        w.len(),
                        size.nodes()
                    )));
                }
                Ok(w)
            }
        }
    }

    /// Stable label for result tables.
    pub fn label(&self) -> String {
        match self {
            WeightSource::Zero => "zero".into(),
            WeightSource::Delta(id) => format!("delta:{id}"),
            WeightSource::Preset(name) => format!("preset:{name}"),
            WeightSource::File(path) => format!("file:{}", path.display()),
        }
    }
}

/// Accepts a bare JSON array, an object carrying `wtilde` or `best_wtilde`,
/// or the optimize command's artifact (same keys under its envelope).
fn parse_weight_json(text: &str) -> Result<Vec<f64>, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("weight file is not JSON: {e}"))?;
    let lookup = |map: &serde_json::Map<String, serde_json::Value>| {
        map.get("wtilde").or_else(|| map.get("best_wtilde")).cloned()
    };
    let array = match &value {
        serde_json::Value::Array(a) => Some(serde_json::Value::Array(a.clone())),
        serde_json::Value::Object(map) => lookup(map).or_else(|| {
            map.get("optimize")
                .and_then(|v| v.as_object())
                .and_then(lookup)
        }),
        _ => None,
    };
    let array = array
        .and_then(|v| v.as_array().cloned())
        .ok_or("weight file needs an array, or `wtilde`/`best_wtilde` in the object")?;
    array
        .iter()
        .map(|v| v.as_f64().ok_or_else(|| format!("non-numeric weight {v}")))
        .collect()
}

/// In-degree source: `binomial:<p>`, `delta:<K>`, or `file:<path>` (JSON
/// array of per-node targets).
#[derive(Debug, Clone)]
pub enum InDegreeSource {
    Binomial(f64),
    Delta(usize),
    File(PathBuf),
}

impl FromStr for InDegreeSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, value) = s
            .split_once(':')
            .ok_or_else(|| format!("in-degree `{s}` is not binomial:<p>, delta:<K>, or file:<path>"))?;
        match kind {
            "binomial" => value
                .parse()
                .map(InDegreeSource::Binomial)
                .map_err(|_| format!("binomial probability `{value}` is not a number")),
            "delta" => value
                .parse()
                .map(InDegreeSource::Delta)
                .map_err(|_| format!("delta in-degree `{value}` is not an integer")),
            "file" => Ok(InDegreeSource::File(PathBuf::from(value))),
            other => Err(format!("unknown in-degree kind `{other}`")),
        }
    }
}

impl InDegreeSource {
    pub fn resolve(&self, n: usize) -> CliResult<InDegreeSpec> {
        let spec = match self {
            InDegreeSource::Binomial(p) => InDegreeSpec::Binomial { p: *p },
            InDegreeSource::Delta(k) => InDegreeSpec::Delta { k: *k },
            InDegreeSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(CliError::runtime)?;
                let targets: Vec<usize> = serde_json::from_str(&text).map_err(|e| {
                    CliError::Validation(format!("in-degree file is not a JSON integer array: {e}"))
                })?;
                InDegreeSpec::Explicit(targets)
            }
        };
        spec.validate(n).map_err(CliError::validation)?;
        Ok(spec)
    }
}

/// Comma-separated list or `start:end[:step]` range (inclusive) of floats.
pub fn parse_f64_grid(s: &str) -> Result<Vec<f64>, String> {
    parse_grid(s, 1.0)
}

/// Newtype so a whole grid arrives as one flag value under clap derive.
#[derive(Debug, Clone)]
pub struct F64Grid(pub Vec<f64>);

impl FromStr for F64Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_f64_grid(s).map(F64Grid)
    }
}

#[derive(Debug, Clone)]
pub struct UsizeGrid(pub Vec<usize>);

impl FromStr for UsizeGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_usize_grid(s).map(UsizeGrid)
    }
}

fn parse_grid(s: &str, default_step: f64) -> Result<Vec<f64>, String> {
    if s.contains(',') || !s.contains(':') {
        return s
            .split(',')
            .map(|v| v.trim().parse::<f64>().map_err(|_| format!("bad number `{v}`")))
            .collect();
    }
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(format!("range `{s}` is not start:end[:step]"));
    }
    let start: f64 = parts[0].parse().map_err(|_| format!("bad number `{}`", parts[0]))?;
    let end: f64 = parts[1].parse().map_err(|_| format!("bad number `{}`", parts[1]))?;
    let step: f64 = if parts.len() == 3 {
        parts[2].parse().map_err(|_| format!("bad number `{}`", parts[2]))?
    } else {
        default_step
    };
    if step <= 0.0 || end < start {
        return Err(format!("range `{s}` must ascend with a positive step"));
    }
    let mut values = Vec::new();
    let mut i = 0usize;
    loop {
        // Snap accumulated steps to 9 decimals so grid labels stay clean.
        let v = ((start + step * i as f64) * 1e9).round() / 1e9;
        if v > end + step * 1e-9 {
            break;
        }
        values.push(v.min(end));
        i += 1;
    }
    Ok(values)
}

/// Comma-separated list or `start:end` range (inclusive) of integers.
pub fn parse_usize_grid(s: &str) -> Result<Vec<usize>, String> {
    let floats = parse_grid(s, 1.0)?;
    floats
        .into_iter()
        .map(|f| {
            if f.fract() == 0.0 && f >= 0.0 {
                Ok(f as usize)
            } else {
                Err(format!("`{f}` is not a non-negative integer"))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_sources_parse() {
        assert!(matches!("zero".parse::<WeightSource>().unwrap(), WeightSource::Zero));
        assert!(matches!(
            "delta:8".parse::<WeightSource>().unwrap(),
            WeightSource::Delta(8)
        ));
        assert!(matches!(
            "preset:smallworld".parse::<WeightSource>().unwrap(),
            WeightSource::Preset(_)
        ));
        assert!("delta:x".parse::<WeightSource>().is_err());
        assert!("nonsense".parse::<WeightSource>().is_err());
    }

    #[test]
    fn indegree_sources_parse_and_validate() {
        let spec = "binomial:0.25".parse::<InDegreeSource>().unwrap();
        assert!(matches!(
            spec.resolve(10).unwrap(),
            InDegreeSpec::Binomial { .. }
        ));
        let spec = "delta:3".parse::<InDegreeSource>().unwrap();
        assert!(spec.resolve(3).is_err());
        assert!("poisson:3".parse::<InDegreeSource>().is_err());
    }

    #[test]
    fn grids_parse() {
        assert_eq!(parse_f64_grid("0.1,0.2,0.3").unwrap(), vec![0.1, 0.2, 0.3]);
        assert_eq!(parse_f64_grid("0.1:0.5:0.2").unwrap(), vec![0.1, 0.3, 0.5]);
        assert_eq!(parse_usize_grid("2:6").unwrap(), vec![2, 3, 4, 5, 6]);
        assert_eq!(parse_usize_grid("7").unwrap(), vec![7]);
        assert!(parse_usize_grid("2.5").is_err());
        assert!(parse_f64_grid("5:1").is_err());
    }
}
