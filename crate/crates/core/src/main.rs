//! Command-line entry points for the dimer excitation-dynamics simulator.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use excidyn::asymptotics::{
    asymptotic_coefficients, beta_from_occupation, debye_waller, equilibrium_ratio,
    stationary_state,
};
use excidyn::model::{eigensystem, Scenario};
use excidyn::output::{field_coefficients_csv, phonon_coefficients_csv, write_trajectory};
use excidyn::presets::{preset, PRESET_NAMES};
use excidyn::scenario::{load_scenario, save_scenario, write_atomic};
use excidyn::sweep::{run_sweep, Lock, SweepSpec};
use excidyn::verify::{run_tier, Tier};
use excidyn::{Error, Result};

#[derive(Parser)]
#[command(
    name = "excidyn",
    about = "Generalized Bloch dynamics of a pulse-driven dimer with phonon coupling and optical noise",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Figure preset name (e.g. fig4).
    #[arg(long, conflicts_with = "scenario")]
    preset: Option<String>,
    /// Scenario JSON path.
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// Override the reduced Planck constant (eV fs).
    #[arg(long)]
    hbar: Option<f64>,
}

impl Source {
    fn load(&self) -> Result<Scenario> {
        let mut scenario = match (&self.preset, &self.scenario) {
            (Some(name), None) => preset(name)?,
            (None, Some(path)) => load_scenario(path)?,
            _ => {
                return Err(Error::Validation(vec![
                    "exactly one of --preset or --scenario is required".to_string(),
                ]))
            }
        };
        if let Some(hbar) = self.hbar {
            scenario.constants.hbar = hbar;
            scenario.validate()?;
        }
        Ok(scenario)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Integrate a scenario and write the trajectory CSV.
    Run {
        #[command(flatten)]
        source: Source,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a preset scenario as JSON (or list the catalog).
    Preset {
        /// Preset name.
        name: Option<String>,
        /// Output JSON path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// List available presets.
        #[arg(long)]
        list: bool,
    },
    /// Run one scenario once per value of a swept parameter.
    Sweep {
        #[command(flatten)]
        source: Source,
        /// Dotted scenario key, e.g. dimer.J
        #[arg(long)]
        param: String,
        /// Comma-separated values.
        #[arg(long)]
        values: String,
        /// Output directory (one CSV per value).
        #[arg(long, default_value = "sweep-out")]
        out_dir: PathBuf,
        /// Derived-parameter rule, e.g. detuning-tracks-eps.
        #[arg(long)]
        lock: Option<String>,
    },
    /// Long-time report: Debye-Waller factor, asymptotic coefficients,
    /// stationary state, equilibrium ratio.
    Asymptote {
        #[command(flatten)]
        source: Source,
        /// Output JSON path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump time-dependent coefficients as CSV.
    Coeffs {
        #[command(flatten)]
        source: Source,
        /// Which family: phonon (A..D2) or field (K, L, i, M..P2).
        #[arg(long, value_parser = ["phonon", "field"])]
        kind: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a built-in verification tier and print a pass/fail table.
    Verify {
        /// fast, oracle, or figures.
        #[arg(long, value_parser = ["fast", "oracle", "figures"])]
        tier: String,
    },
}

fn asymptote_report(scenario: &Scenario) -> Result<serde_json::Value> {
    let dw = debye_waller(scenario)?;
    let asym = asymptotic_coefficients(scenario)?;
    let stationary = stationary_state(scenario).ok();
    let eig = eigensystem(&scenario.dimer)?;
    let beta = beta_from_occupation(scenario.bath.n_b, eig.delta);
    let ratio = stationary
        .as_ref()
        .map(|s| equilibrium_ratio(s, &scenario.dimer, beta))
        .transpose()?;
    let finite = |v: f64| if v.is_finite() { Some(v) } else { None };
    Ok(serde_json::json!({
        "W": dw.w,
        "J_ren": dw.j_ren,
        "J_minus_hbar_B_as": dw.j_minus_hbar_b,
        "A_as": asym.a_as,
        "B_as": asym.b_as,
        "C_as": asym.c_as,
        "D_as": asym.d_as,
        "E_as": asym.e_as,
        "F_as": asym.f_as,
        "stationary_state": stationary,
        "ratio_measured": ratio.as_ref().and_then(|r| finite(r.measured)),
        "ratio_predicted": ratio.as_ref().map(|r| r.predicted),
        "ratio_diverged": ratio.as_ref().map(|r| r.diverged),
    }))
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Run { source, out } => {
            let scenario = source.load()?;
            let record = excidyn::integrate(&scenario)?;
            write_trajectory(&out, &record)?;
            eprintln!(
                "wrote {} samples ({} .. {} fs) to {}",
                record.len(),
                record.times.first().unwrap_or(&0.0),
                record.times.last().unwrap_or(&0.0),
                out.display()
            );
            Ok(true)
        }
        Command::Preset { name, out, list } => {
            if list || name.is_none() {
                for n in PRESET_NAMES {
                    println!("{n}");
                }
                return Ok(true);
            }
            let scenario = preset(&name.unwrap())?;
            match out {
                Some(path) => save_scenario(&path, &scenario)?,
                None => println!("{}", excidyn::scenario::scenario_to_json(&scenario)?),
            }
            Ok(true)
        }
        Command::Sweep {
            source,
            param,
            values,
            out_dir,
            lock,
        } => {
            let scenario = source.load()?;
            let lock =
                match lock {
                    Some(ref s) => Some(Lock::parse(s).ok_or_else(|| {
                        Error::Validation(vec![format!("unknown lock rule `{s}`")])
                    })?),
                    None => None,
                };
            let spec = SweepSpec {
                param,
                values: values.split(',').map(|s| s.trim().to_string()).collect(),
                lock,
            };
            let files = run_sweep(&scenario, &spec, &out_dir)?;
            for f in files {
                eprintln!("wrote {}", f.display());
            }
            Ok(true)
        }
        Command::Asymptote { source, out } => {
            let scenario = source.load()?;
            let report = asymptote_report(&scenario)?;
            let text = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => write_atomic(&path, format!("{text}\n").as_bytes())?,
                None => println!("{text}"),
            }
            Ok(true)
        }
        Command::Coeffs { source, kind, out } => {
            let scenario = source.load()?;
            let csv = match kind.as_str() {
                "phonon" => phonon_coefficients_csv(&scenario)?,
                _ => field_coefficients_csv(&scenario)?,
            };
            write_atomic(&out, csv.as_bytes())?;
            Ok(true)
        }
        Command::Verify { tier } => {
            let tier = Tier::parse(&tier).expect("clap value_parser");
            let checks = run_tier(tier)?;
            let mut all_passed = true;
            for check in &checks {
                let status = if check.passed { "PASS" } else { "FAIL" };
                println!("{status}  {:<28}  {}", check.name, check.detail);
                all_passed &= check.passed;
            }
            println!(
                "{} of {} checks passed",
                checks.iter().filter(|c| c.passed).count(),
                checks.len()
            );
            Ok(all_passed)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the downstream pipe closes (preset --list | head).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::FAILURE
        }
    }
}
