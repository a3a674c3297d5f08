//! The `pointconfig/1` JSON file format and construction report sidecars.
//!
//! Coordinates are written in scientific notation with 17 significant
//! digits, which round-trips every `f64`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::ConstructionReport;
use crate::geom::PointConfig;

pub const SCHEMA: &str = "pointconfig/1";

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: schema violation: {message}")]
    Schema { path: PathBuf, message: String },
}

/// On-disk form of a [`PointConfig`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFileV1 {
    pub schema: String,
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl ConfigFileV1 {
    /// Checks the schema tag and shape and converts to a configuration.
    pub fn into_config(self) -> Result<PointConfig, String> {
        if self.schema != SCHEMA {
            return Err(format!("schema is {:?}, expected {SCHEMA:?}", self.schema));
        }
        let mut config = PointConfig::new(self.dim, self.points).map_err(|e| e.to_string())?;
        config.meta = self.meta;
        Ok(config)
    }
}

fn coord(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serialises `config` as `pointconfig/1`, one point per line.
pub fn config_to_string(config: &PointConfig) -> String {
    let mut s = String::new();
    let quote = |v: &str| serde_json::to_string(v).expect("strings always serialise");
    let _ = write!(
        s,
        "{{\n  \"schema\": \"{SCHEMA}\",\n  \"dim\": {},\n  \"points\": [",
        config.dim
    );
    for (i, p) in config.points.iter().enumerate() {
        let row: Vec<String> = p.iter().map(|&x| coord(x)).collect();
        let sep = if i + 1 < config.len() { "," } else { "" };
        let _ = write!(s, "\n    [{}]{sep}", row.join(", "));
    }
    s.push_str(if config.is_empty() {
        "],\n"
    } else {
        "\n  ],\n"
    });
    s.push_str("  \"meta\": {");
    for (i, (k, v)) in config.meta.iter().enumerate() {
        let sep = if i + 1 < config.meta.len() { "," } else { "" };
        let _ = write!(s, "\n    {}: {}{sep}", quote(k), quote(v));
    }
    s.push_str(if config.meta.is_empty() {
        "}\n}\n"
    } else {
        "\n  }\n}\n"
    });
    s
}

pub fn config_from_str(text: &str, path: &Path) -> Result<PointConfig, FileError> {
    let file: ConfigFileV1 = serde_json::from_str(text).map_err(|source| {
        if source.is_data() {
            FileError::Schema {
                path: path.to_path_buf(),
                message: source.to_string(),
            }
        } else {
            FileError::Json {
                path: path.to_path_buf(),
                source,
            }
        }
    })?;
    file.into_config().map_err(|message| FileError::Schema {
        path: path.to_path_buf(),
        message,
    })
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), FileError> {
    fs::write(path, text).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_config(path: &Path) -> Result<PointConfig, FileError> {
    config_from_str(&read(path)?, path)
}

pub fn write_config(path: &Path, config: &PointConfig) -> Result<(), FileError> {
    write(path, &config_to_string(config))
}

/// `<out>.report.json` next to a point file.
pub fn sidecar_path(config_path: &Path) -> PathBuf {
    let mut name = config_path.as_os_str().to_owned();
    name.push(".report.json");
    PathBuf::from(name)
}

pub fn write_report(path: &Path, report: &ConstructionReport) -> Result<(), FileError> {
    let mut text = serde_json::to_string_pretty(report).expect("reports always serialise");
    text.push('\n');
    write(path, &text)
}

pub fn read_report(path: &Path) -> Result<ConstructionReport, FileError> {
    serde_json::from_str(&read(path)?).map_err(|e| FileError::Schema {
        path: path.to_path_buf(),
        message: format!("not a construction report: {e}"),
    })
}
