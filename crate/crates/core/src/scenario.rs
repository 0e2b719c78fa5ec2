//! Scenario JSON loading, validation, and atomic file writing.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::model::Scenario;
use crate::Result;

/// Reads and validates a scenario. Unknown keys are rejected by the
/// schema (typo safety) and every validation violation is reported.
pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text = fs::read_to_string(path)?;
    let scenario: Scenario = serde_json::from_str(&text)?;
    scenario.validate()?;
    Ok(scenario)
}

/// Pretty JSON rendering with stable key order (struct order).
pub fn scenario_to_json(scenario: &Scenario) -> Result<String> {
    Ok(serde_json::to_string_pretty(scenario)?)
}

pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let scenario: Scenario = serde_json::from_str(text)?;
    scenario.validate()?;
    Ok(scenario)
}

/// Writes bytes atomically: temp file in the target directory, then
/// rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match dir {
        Some(d) => {
            fs::create_dir_all(d)?;
            tempfile::NamedTempFile::new_in(d)?
        }
        None => tempfile::NamedTempFile::new_in(".")?,
    };
    tmp.write_all(bytes)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

pub fn save_scenario(path: &Path, scenario: &Scenario) -> Result<()> {
    let mut text = scenario_to_json(scenario)?;
    text.push('\n');
    write_atomic(path, text.as_bytes())
}
