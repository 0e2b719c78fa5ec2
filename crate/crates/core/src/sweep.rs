//! Parameter sweeps: one scenario, one dotted parameter path, many values,
//! one CSV per value.
//!
//! Workers run in parallel (capped by `EXCIDYN_THREADS`), each owning its
//! run; files are written atomically so the output set is identical
//! whatever the completion order.

use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde_json::Value;

use crate::dynamics::integrate;
use crate::model::Scenario;
use crate::output::write_trajectory;
use crate::{Error, Result};

/// Derived-parameter rules tying preset conventions together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lock {
    /// Keep `hbar * delta' = -eps`, the resonant-pump convention for
    /// unbalanced-dimer scans. Applied after each value is set.
    DetuningTracksEps,
}

impl Lock {
    pub fn parse(s: &str) -> Option<Lock> {
        match s {
            "detuning-tracks-eps" => Some(Lock::DetuningTracksEps),
            _ => None,
        }
    }

    fn apply(&self, scenario: &mut Scenario) {
        match self {
            Lock::DetuningTracksEps => {
                scenario.pulse.delta_prime = -scenario.dimer.eps / scenario.constants.hbar;
            }
        }
    }
}

/// One sweep request.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    /// Dotted key into the scenario JSON, e.g. `dimer.J` or `noise.ns`.
    pub param: String,
    /// Values as given on the command line; the original spelling names
    /// the output files.
    pub values: Vec<String>,
    pub lock: Option<Lock>,
}

/// Applies one scalar value at a dotted path, re-validating the result.
pub fn set_parameter(base: &Scenario, param: &str, value: f64) -> Result<Scenario> {
    let mut json = serde_json::to_value(base)?;
    let parts: Vec<&str> = param.split('.').collect();
    let (last, path) = parts.split_last().expect("non-empty path");
    let mut node = &mut json;
    for key in path {
        node = node
            .get_mut(*key)
            .ok_or_else(|| Error::BadSweepPath(param.to_string()))?;
    }
    let obj = node
        .as_object_mut()
        .ok_or_else(|| Error::BadSweepPath(param.to_string()))?;
    match obj.get(*last) {
        Some(Value::Number(_)) => {
            obj.insert((*last).to_string(), serde_json::json!(value));
        }
        _ => return Err(Error::BadSweepPath(param.to_string())),
    }
    let scenario: Scenario = serde_json::from_value(json)?;
    scenario.validate()?;
    Ok(scenario)
}

fn worker_count(jobs: usize) -> usize {
    let cap = std::env::var("EXCIDYN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0);
    let hw = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    cap.unwrap_or(hw).min(jobs).max(1)
}

/// Output file for one sweep point.
pub fn sweep_file(out_dir: &Path, param: &str, value: &str) -> PathBuf {
    out_dir.join(format!("{param}={value}.csv"))
}

/// Runs the sweep, returning the written paths in value order.
pub fn run_sweep(base: &Scenario, spec: &SweepSpec, out_dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(out_dir)?;
    // Prepare every scenario up front so a bad value fails before any run.
    let mut jobs = Vec::new();
    for raw in &spec.values {
        let value: f64 = raw
            .parse()
            .map_err(|_| Error::BadSweepPath(format!("{}: bad value `{raw}`", spec.param)))?;
        let mut scenario = set_parameter(base, &spec.param, value)?;
        if let Some(lock) = spec.lock {
            lock.apply(&mut scenario);
            scenario.validate()?;
        }
        jobs.push((sweep_file(out_dir, &spec.param, raw), scenario));
    }
    let n_workers = worker_count(jobs.len());
    let next = std::sync::atomic::AtomicUsize::new(0);
    let failures = Mutex::new(Vec::<Error>::new());
    std::thread::scope(|scope| {
        for _ in 0..n_workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some((path, scenario)) = jobs.get(i) else {
                    break;
                };
                let res = integrate(scenario).and_then(|rec| write_trajectory(path, &rec));
                if let Err(e) = res {
                    failures.lock().unwrap().push(e);
                }
            });
        }
    });
    if let Some(e) = failures.into_inner().unwrap().into_iter().next() {
        return Err(e);
    }
    Ok(jobs.into_iter().map(|(p, _)| p).collect())
}
