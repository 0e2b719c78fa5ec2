//! The figure parameter catalog (fig2A .. fig12).
//!
//! Each entry quotes energies (`F1`, `J`, `eps`, `hbar*delta'`,
//! `hbar*Omega_ph`, `hbar*gamma_ph`) in eV; frequencies and rates are
//! converted through the physical `hbar` once, here. All presets start
//! the pulse at t0 = 0 from the excitonless state and integrate with the
//! default step of 0.05 fs.

use num_complex::Complex64;

use crate::model::{
    BathParams, Constants, DimerParams, NoiseParams, Numerics, PulseParams, Scenario,
};
use crate::phonon::CrossKernelConvention;
use crate::{Error, Result};

/// Everything needed to spell one preset entry.
struct PresetSpec {
    f1: f64,
    f2: f64,
    j: f64,
    eps: f64,
    /// hbar * delta' (eV).
    hdelta: f64,
    tau1: f64,
    tau2: f64,
    g: f64,
    /// hbar * Omega_ph (eV).
    homega: f64,
    /// hbar * gamma_ph (eV).
    hgamma: f64,
    n_b: f64,
    ns: f64,
    gamma_s: f64,
    omega_s: f64,
    t_end: f64,
}

impl Default for PresetSpec {
    fn default() -> Self {
        PresetSpec {
            f1: 0.0005,
            f2: 0.0,
            j: 1e-8,
            eps: 0.0,
            hdelta: 0.0,
            tau1: 1000.0,
            tau2: 200.0,
            g: 0.0,
            homega: 0.01,
            hgamma: 0.001,
            n_b: 0.0,
            ns: 0.0,
            gamma_s: 0.01,
            omega_s: 0.0,
            t_end: 2000.0,
        }
    }
}

fn build(c: PresetSpec) -> Scenario {
    let constants = Constants::default();
    let hbar = constants.hbar;
    Scenario {
        dimer: DimerParams {
            e: 2.0,
            eps: c.eps,
            j: c.j,
            f1: c.f1,
            f2: c.f2,
        },
        bath: BathParams {
            g: c.g,
            g1_ratio: Complex64::new(1.0, 0.25),
            g2_ratio: Complex64::new(1.0, -0.25),
            n_b: c.n_b,
            omega_ph: c.homega / hbar,
            gamma_ph: c.hgamma / hbar,
            convention: CrossKernelConvention::default(),
        },
        pulse: PulseParams {
            tau1: c.tau1,
            tau2: c.tau2,
            delta_prime: c.hdelta / hbar,
            t0: 0.0,
        },
        noise: NoiseParams {
            ns: c.ns,
            gamma_s: c.gamma_s,
            omega_s: c.omega_s,
            anomalous_ns: 0.0,
        },
        constants,
        numerics: Numerics {
            h: 0.05,
            t_end: c.t_end,
            stride: 20,
        },
        initial: None,
    }
}

/// Preset names in catalog order.
pub const PRESET_NAMES: [&str; 26] = [
    "fig2A", "fig2B", "fig2C", "fig2D", "fig3A", "fig3B", "fig3C", "fig3D", "fig4", "fig5A",
    "fig5B", "fig5C", "fig6A", "fig6B", "fig6C", "fig6D", "fig7A", "fig7B", "fig7C", "fig8",
    "fig9A", "fig9B", "fig10", "fig11A", "fig11B", "fig12",
];

/// Returns the exact parameter set for a figure label.
pub fn preset(name: &str) -> Result<Scenario> {
    let two_level = PresetSpec {
        f1: 0.01,
        tau1: 100.0,
        tau2: 100.0,
        t_end: 800.0,
        ..PresetSpec::default()
    };
    let fig5 = |g: f64| PresetSpec {
        j: 0.0005,
        g,
        ..PresetSpec::default()
    };
    let fig6 = |eps: f64| PresetSpec {
        j: 0.002,
        eps,
        hdelta: -eps,
        ..PresetSpec::default()
    };
    let fig7 = |g: f64| PresetSpec {
        j: 0.005,
        eps: 0.004,
        hdelta: -0.004,
        g,
        ..PresetSpec::default()
    };
    let both = PresetSpec {
        f1: 0.0002,
        f2: 0.0002,
        ..PresetSpec::default()
    };
    let c = match name {
        "fig2A" => PresetSpec {
            g: 0.0,
            ..two_level
        },
        "fig2B" => PresetSpec {
            g: 0.004,
            ..two_level
        },
        "fig2C" => PresetSpec {
            g: 0.01,
            ..two_level
        },
        "fig2D" => PresetSpec {
            g: 0.02,
            ..two_level
        },
        "fig3A" => PresetSpec {
            j: 1e-8,
            ..PresetSpec::default()
        },
        "fig3B" => PresetSpec {
            j: 0.0005,
            ..PresetSpec::default()
        },
        "fig3C" => PresetSpec {
            j: 0.001,
            ..PresetSpec::default()
        },
        "fig3D" => PresetSpec {
            j: 0.002,
            ..PresetSpec::default()
        },
        "fig4" => PresetSpec {
            j: 0.007,
            ..PresetSpec::default()
        },
        "fig5A" => fig5(0.0),
        "fig5B" => fig5(0.003),
        "fig5C" => fig5(0.005),
        "fig6A" => fig6(0.0),
        "fig6B" => fig6(0.0005),
        "fig6C" => fig6(0.001),
        "fig6D" => fig6(0.002),
        "fig7A" => fig7(0.0),
        "fig7B" => fig7(0.003),
        "fig7C" => fig7(0.005),
        "fig8" => PresetSpec {
            j: 0.0005,
            g: 0.005,
            hgamma: 0.01,
            ..PresetSpec::default()
        },
        "fig9A" => PresetSpec {
            f1: 0.0002,
            ..PresetSpec::default()
        },
        "fig9B" => PresetSpec {
            f1: 0.0002,
            f2: 0.0002,
            ..PresetSpec::default()
        },
        "fig10" => PresetSpec {
            j: 0.002,
            eps: 0.0005,
            hdelta: -0.0005,
            ..both
        },
        "fig11A" => PresetSpec {
            j: 0.002,
            eps: 0.002,
            hdelta: -0.002,
            ..both
        },
        "fig11B" => PresetSpec {
            j: 0.002,
            eps: -0.002,
            hdelta: 0.002,
            ..both
        },
        "fig12" => PresetSpec {
            f1: 0.01,
            ns: 0.1,
            gamma_s: 0.01,
            ..PresetSpec::default()
        },
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    Ok(build(c))
}

/// All catalog entries.
pub fn all_presets() -> Vec<(&'static str, Scenario)> {
    PRESET_NAMES
        .iter()
        .map(|&n| (n, preset(n).expect("catalog entry")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig4_preset_values() {
        let s = preset("fig4").unwrap();
        assert_eq!(s.dimer.f1, 0.0005);
        assert_eq!(s.dimer.f2, 0.0);
        assert_eq!(s.dimer.j, 0.007);
        assert_eq!(s.dimer.eps, 0.0);
        assert_eq!(s.pulse.delta_prime, 0.0);
        assert_eq!(s.pulse.tau1, 1000.0);
        assert_eq!(s.pulse.tau2, 200.0);
        assert_eq!(s.bath.g, 0.0);
    }

    #[test]
    fn fig2c_preset_values() {
        let s = preset("fig2C").unwrap();
        assert_eq!(s.bath.g, 0.01);
        assert_eq!(s.dimer.f1, 0.01);
        assert_eq!(s.pulse.tau1, 100.0);
        assert_eq!(s.pulse.tau2, 100.0);
        assert_eq!(s.bath.g1_ratio, Complex64::new(1.0, 0.25));
        assert_eq!(s.bath.g2_ratio, Complex64::new(1.0, -0.25));
        assert_eq!(s.bath.n_b, 0.0);
        let hbar = s.constants.hbar;
        assert!((s.bath.omega_ph * hbar - 0.01).abs() < 1e-15);
        assert!((s.bath.gamma_ph * hbar - 0.001).abs() < 1e-15);
    }

    #[test]
    fn fig12_preset_values() {
        let s = preset("fig12").unwrap();
        assert_eq!(s.dimer.f1, 0.01);
        assert_eq!(s.noise.ns, 0.1);
        assert_eq!(s.noise.gamma_s, 0.01);
        assert_eq!(s.noise.omega_s, 0.0);
        assert_eq!(s.pulse.tau1, 1000.0);
        assert_eq!(s.pulse.tau2, 200.0);
        assert_eq!(s.bath.g, 0.0);
    }

    #[test]
    fn unknown_preset_rejected() {
        assert!(matches!(preset("fig99"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn every_preset_is_valid() {
        for (name, scenario) in all_presets() {
            scenario
                .validate()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }
}
