//! Optional configuration file, pointed to by `CHORDBRAID_CONFIG`.
//!
//! The file holds `key = value` lines; `#` starts a comment. Recognized
//! keys: `max_n`, `oracle_cap`, `iteration_cap`, `format`, `catalog`.
//! Unknown keys are rejected so typos do not silently fall back to the
//! defaults.

use std::path::PathBuf;

use chordbraid::Limits;

/// Output mode shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Human-readable lines.
    Text,
    /// One JSON object on stdout.
    Json,
}

/// Settings merged from the config file; flags override them.
#[derive(Debug, Clone, Default)]
pub struct Config {
    /// Computation caps handed to the library.
    pub limits: Limits,
    /// Default output format, when no `--format` flag is given.
    pub format: Option<OutputFormat>,
    /// Default catalog path for `enumerate --catalog`.
    pub catalog: Option<PathBuf>,
}

/// Loads the file named by `CHORDBRAID_CONFIG`, if the variable is set.
pub fn load() -> Result<Config, String> {
    let mut cfg = Config::default();
    let path = match std::env::var("CHORDBRAID_CONFIG") {
        Ok(p) if !p.trim().is_empty() => p,
        _ => return Ok(cfg),
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read config file {path}: {e}"))?;
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!("{path}:{lineno}: expected key = value"));
        };
        let (key, value) = (key.trim(), value.trim());
        match key {
            "max_n" => cfg.limits.enumerate_max_chords = positive(&path, lineno, key, value)?,
            "oracle_cap" => cfg.limits.oracle_max_chords = positive(&path, lineno, key, value)?,
            "iteration_cap" => {
                cfg.limits.one_block_iteration_cap = positive(&path, lineno, key, value)?
            }
            "format" => {
                cfg.format = Some(match value {
                    "text" => OutputFormat::Text,
                    "json" => OutputFormat::Json,
                    other => {
                        return Err(format!(
                            "{path}:{lineno}: format must be text or json, got '{other}'"
                        ))
                    }
                })
            }
            "catalog" => cfg.catalog = Some(PathBuf::from(value)),
            other => return Err(format!("{path}:{lineno}: unknown config key '{other}'")),
        }
    }
    Ok(cfg)
}

fn positive(path: &str, lineno: usize, key: &str, value: &str) -> Result<usize, String> {
    match value.parse::<usize>() {
        Ok(v) if v > 0 => Ok(v),
        _ => Err(format!(
            "{path}:{lineno}: {key} must be a positive integer, got '{value}'"
        )),
    }
}
