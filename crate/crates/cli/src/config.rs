//! Flat key=value config files with '#' comments. Command-line flags
//! override config entries, which override built-in defaults.

use crate::CliError;
use std::collections::HashMap;
use std::path::Path;

#[derive(Clone, Debug, Default)]
pub struct Config {
    entries: HashMap<String, String>,
}

impl Config {
    /// Load a config file, or an empty config when no path is given.
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        match path {
            None => Ok(Self::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| {
                    CliError::Validation(format!("cannot read config {}: {e}", p.display()))
                })?;
                Self::parse(&text)
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Validation(format!(
                    "config line {}: expected key=value, got {raw:?}",
                    idx + 1
                ))
            })?;
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn get_f64(&self, key: &str, unit: &str) -> Result<Option<f64>, CliError> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<f64>().map(Some).map_err(|_| {
                CliError::Validation(format!(
                    "config key '{key}': expected a number ({unit}), got {v:?}"
                ))
            }),
        }
    }

    fn get_usize(&self, key: &str) -> Result<Option<usize>, CliError> {
        match self.entries.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<usize>().map(Some).map_err(|_| {
                CliError::Validation(format!(
                    "config key '{key}': expected a nonnegative integer, got {v:?}"
                ))
            }),
        }
    }

    /// Flag > config > default resolution for a float-valued setting.
    pub fn resolve_f64(
        &self,
        flag: Option<f64>,
        key: &str,
        unit: &str,
        default: f64,
    ) -> Result<f64, CliError> {
        if let Some(v) = flag {
            return Ok(v);
        }
        Ok(self.get_f64(key, unit)?.unwrap_or(default))
    }

    pub fn resolve_usize(
        &self,
        flag: Option<usize>,
        key: &str,
        default: usize,
    ) -> Result<usize, CliError> {
        if let Some(v) = flag {
            return Ok(v);
        }
        Ok(self.get_usize(key)?.unwrap_or(default))
    }

    pub fn resolve_str(&self, flag: Option<&str>, key: &str, default: &str) -> String {
        flag.map(str::to_string)
            .or_else(|| self.entries.get(key).cloned())
            .unwrap_or_else(|| default.to_string())
    }
}

/// Parse a comma-separated list of numbers, e.g. "0.05,0.1,0.2".
pub fn parse_f64_list(text: &str, what: &str) -> Result<Vec<f64>, CliError> {
    let values: Result<Vec<f64>, _> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect();
    let values = values.map_err(|_| {
        CliError::Validation(format!("{what}: expected comma-separated numbers, got {text:?}"))
    })?;
    if values.is_empty() {
        return Err(CliError::Validation(format!("{what}: empty list")));
    }
    Ok(values)
}

/// Build an inclusive uniform grid 0, step, 2 step, ... up to `max`.
pub fn uniform_grid(max: f64, step: f64, what: &str) -> Result<Vec<f64>, CliError> {
    if !(step > 0.0 && max >= 0.0) {
        return Err(CliError::Validation(format!(
            "{what}: need max >= 0 and step > 0, got max = {max}, step = {step}"
        )));
    }
    let count = (max / step + 0.5).floor() as usize;
    Ok((0..=count).map(|i| i as f64 * step).collect())
}
