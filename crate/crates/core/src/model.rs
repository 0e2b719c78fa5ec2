//! Physical parameter records, unit conventions, and the dimer
//! eigenstructure.
//!
//! The excited-state block of the exciton Hamiltonian in the site basis is
//!
//! ```text
//! H_e = [ E + 2*eps   J ]
//!       [ J           E ]        (eV; molecule 1 sits 2*eps above molecule 2)
//! ```
//!
//! with eigenenergies `E + eps +/- Delta`, `Delta = sqrt(eps^2 + J^2)`.
//! The excitonless state |0> has zero energy.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::phonon::CrossKernelConvention;
use crate::{Error, Result};

/// Reduced Planck constant in eV fs.
pub const HBAR_EV_FS: f64 = 0.658_211_956_9;

/// Unit constants. `hbar` is configurable so inputs quoted
/// as `hbar * omega` in eV can be reproduced under either unit system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constants {
    pub hbar: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants { hbar: HBAR_EV_FS }
    }
}

/// Dimer parameters in energy units (eV).
///
/// `f1`/`f2` are the exciton-photon couplings at molecules 1 and 2 with the
/// field strength folded in, so `f1 / hbar` is the on-resonance half Rabi
/// frequency of molecule 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimerParams {
    /// Site-2 excited energy E (eV).
    #[serde(rename = "E")]
    pub e: f64,
    /// Half energy splitting eps (eV); molecule 1 has energy E + 2*eps.
    pub eps: f64,
    /// Transfer integral J (eV), real.
    #[serde(rename = "J")]
    pub j: f64,
    /// Exciton-photon coupling at molecule 1 (eV).
    #[serde(rename = "F1")]
    pub f1: f64,
    /// Exciton-photon coupling at molecule 2 (eV).
    #[serde(rename = "F2")]
    pub f2: f64,
}

/// Phonon bath parameters for the single damped mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BathParams {
    /// Mean exciton-phonon coupling G (eV).
    #[serde(rename = "G")]
    pub g: f64,
    /// Complex ratio G1 / G (dimensionless).
    pub g1_ratio: Complex64,
    /// Complex ratio G2 / G (dimensionless).
    pub g2_ratio: Complex64,
    /// Mean phonon occupation n_B (dimensionless, >= 0).
    #[serde(rename = "nB")]
    pub n_b: f64,
    /// Mean phonon frequency Omega_ph (rad/fs).
    pub omega_ph: f64,
    /// Dephasing damping gamma_ph (1/fs).
    pub gamma_ph: f64,
    /// Half-space pairing convention for the cross-coupling kernels.
    #[serde(default)]
    pub convention: CrossKernelConvention,
}

/// Pulse envelope and carrier parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PulseParams {
    /// Plateau duration tau_1 (fs).
    pub tau1: f64,
    /// Exponential decay constant tau_2 (fs).
    pub tau2: f64,
    /// Detuning delta' = (E + eps)/hbar - omega_K0 (rad/fs).
    pub delta_prime: f64,
    /// Interaction start time t_0 (fs); the envelope is zero before it.
    pub t0: f64,
}

/// Optical noise parameters of the exponential (phase-diffusion) family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoiseParams {
    /// Noise strength n_s (dimensionless).
    pub ns: f64,
    /// Phase-correlation decay gamma_s (1/fs).
    pub gamma_s: f64,
    /// Frequency shift of the fluctuations omega_s (rad/fs).
    pub omega_s: f64,
    /// Strength of the anomalous correlation family; zero in every preset.
    #[serde(default)]
    pub anomalous_ns: f64,
}

/// Integration controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Numerics {
    /// Fixed Runge-Kutta step (fs).
    pub h: f64,
    /// End time of the run (fs).
    pub t_end: f64,
    /// Output every `stride` steps.
    pub stride: usize,
}

/// Full parameter record for one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub dimer: DimerParams,
    pub bath: BathParams,
    pub pulse: PulseParams,
    pub noise: NoiseParams,
    #[serde(default)]
    pub constants: Constants,
    pub numerics: Numerics,
    /// Optional initial state `(rho11, rho22, rho_r, rho_i, rho00,
    /// rho1r, rho1i, rho2r, rho2i)`; defaults to the excitonless state.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<[f64; 9]>,
}

impl Scenario {
    /// Validates every invariant and reports all violations at once.
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        let mut check = |ok: bool, msg: &str| {
            if !ok {
                problems.push(msg.to_string());
            }
        };
        check(self.constants.hbar > 0.0, "constants.hbar must be > 0");
        check(self.bath.n_b >= 0.0, "bath.nB must be >= 0");
        check(self.bath.g >= 0.0, "bath.G must be >= 0");
        check(
            self.bath.g == 0.0 || self.bath.gamma_ph > 0.0,
            "bath.gamma_ph must be > 0 when G > 0",
        );
        check(self.bath.gamma_ph >= 0.0, "bath.gamma_ph must be >= 0");
        check(self.pulse.tau1 >= 0.0, "pulse.tau1 must be >= 0");
        check(self.pulse.tau2 > 0.0, "pulse.tau2 must be > 0");
        check(self.noise.ns >= 0.0, "noise.ns must be >= 0");
        check(self.noise.gamma_s >= 0.0, "noise.gamma_s must be >= 0");
        check(self.numerics.h > 0.0, "numerics.h must be > 0");
        check(
            self.numerics.t_end > self.pulse.t0,
            "numerics.t_end must be > pulse.t0",
        );
        check(self.numerics.stride > 0, "numerics.stride must be > 0");
        check(
            self.dimer.eps != 0.0 || self.dimer.j != 0.0,
            "dimer: eps and J cannot both be zero (degenerate splitting)",
        );
        for v in [
            self.dimer.e,
            self.dimer.eps,
            self.dimer.j,
            self.dimer.f1,
            self.dimer.f2,
        ] {
            if !v.is_finite() {
                problems.push("dimer parameters must be finite".to_string());
                break;
            }
        }
        if let Some(init) = &self.initial {
            if init.iter().any(|v| !v.is_finite()) {
                problems.push("initial state must be finite".to_string());
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }
}

/// Eigenstructure of the excited-state block.
///
/// The eigenvectors are stored as real site-basis components
/// `|+> = v_plus[0] |1> + v_plus[1] |2>` with the phase convention that the
/// |1> component carries the sign of J.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigensystem {
    /// Half splitting Delta = sqrt(eps^2 + J^2) (eV).
    pub delta: f64,
    /// Upper eigenenergy E + eps + Delta (eV).
    pub e_plus: f64,
    /// Lower eigenenergy E + eps - Delta (eV).
    pub e_minus: f64,
    pub v_plus: [f64; 2],
    pub v_minus: [f64; 2],
}

/// `Delta = sqrt(eps^2 + J^2)`, the half level splitting.
pub fn level_splitting(eps: f64, j: f64) -> f64 {
    eps.hypot(j)
}

/// Diagonalizes the 2x2 excited block. Rejects the degenerate point
/// eps = J = 0, where Delta would vanish in coefficient denominators.
///
/// The component forms are arranged so no catastrophic cancellation occurs
/// as J -> 0 for either sign of eps (`Delta -/+ eps` is replaced by
/// `J^2 / (Delta +/- eps)` on the shrinking side).
pub fn eigensystem(params: &DimerParams) -> Result<Eigensystem> {
    let (eps, j) = (params.eps, params.j);
    let delta = level_splitting(eps, j);
    if delta == 0.0 {
        return Err(Error::DegenerateSplitting);
    }
    // Stable values of Delta - eps and Delta + eps.
    let (dm, dp) = if eps >= 0.0 {
        (j * j / (delta + eps), delta + eps)
    } else {
        (delta - eps, j * j / (delta - eps))
    };
    let sj = if j < 0.0 { -1.0 } else { 1.0 };
    let v_plus = [
        sj * (dp / (2.0 * delta)).sqrt(),
        (dm / (2.0 * delta)).sqrt(),
    ];
    let v_minus = [
        sj * (dm / (2.0 * delta)).sqrt(),
        -(dp / (2.0 * delta)).sqrt(),
    ];
    Ok(Eigensystem {
        delta,
        e_plus: params.e + eps + delta,
        e_minus: params.e + eps - delta,
        v_plus,
        v_minus,
    })
}

/// Equilibrium phonon occupation `1 / (exp(energy / kT) - 1)`; zero at
/// kT = 0.
pub fn bose_occupation(energy: f64, kt: f64) -> f64 {
    if kt == 0.0 {
        return 0.0;
    }
    1.0 / (energy / kt).exp_m1()
}

/// Site-basis matrix elements `<p| exp(-i H_e t / hbar) |s>` of the free
/// excited-block propagator.
pub fn free_propagator(params: &DimerParams, t: f64, hbar: f64) -> Result<[[Complex64; 2]; 2]> {
    let eig = eigensystem(params)?;
    let phase_p = Complex64::new(0.0, -eig.e_plus * t / hbar).exp();
    let phase_m = Complex64::new(0.0, -eig.e_minus * t / hbar).exp();
    let mut u = [[Complex64::new(0.0, 0.0); 2]; 2];
    for p in 0..2 {
        for s in 0..2 {
            u[p][s] =
                phase_p * eig.v_plus[p] * eig.v_plus[s] + phase_m * eig.v_minus[p] * eig.v_minus[s];
        }
    }
    Ok(u)
}
