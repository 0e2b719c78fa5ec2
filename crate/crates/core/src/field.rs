//! Pulse envelope, coherent drive coefficients, and the optical-noise
//! coefficient family.
//!
//! The noise response integrals
//!
//! ```text
//! i1 = int_t0^t cos[D'(t-tau)] Re[dN(t,tau) exp(i d'(t-tau))] d tau
//! i2 = ... sin[D'(t-tau)] Re[...]
//! i3 = ... cos[D'(t-tau)] Im[...]
//! i4 = ... sin[D'(t-tau)] Im[...]
//! ```
//!
//! carry the exponential correlation `dN(t,tau) = A(t) A(tau) n_s
//! exp(-(i w_s + g_s)(t-tau))`, so they reduce exactly to the two complex
//! accumulators
//!
//! ```text
//! z+-(t) = int_t0^t A(tau) exp(-(g_s - i(d' - w_s) -/+ i D')(t-tau)) d tau
//! ```
//!
//! which obey `dz/dt = A(t) - lambda z`. The integrator advances them as
//! auxiliary state inside the same Runge-Kutta stages, making the noise
//! coefficients O(1) per step with integrator-consistent accuracy; direct
//! quadrature of the memory integral is kept as a test oracle. Two more
//! accumulators serve the anomalous-correlation hook, which is off in
//! every preset.

use num_complex::Complex64;
use serde::Serialize;

use crate::model::{eigensystem, PulseParams, Scenario};
use crate::{Error, Result};

/// Normalized pulse envelope of the plateau-plus-exponential-tail shape:
/// 1 on `[t0, t0 + tau1]`, `exp(-(t - t0 - tau1)/tau2)` after, 0 before
/// t0. Continuous everywhere.
pub fn envelope(t: f64, pulse: &PulseParams) -> f64 {
    let s = t - pulse.t0;
    if s < 0.0 {
        0.0
    } else if s <= pulse.tau1 {
        1.0
    } else {
        (-(s - pulse.tau1) / pulse.tau2).exp()
    }
}

/// Coherent drive coefficients K1, K2, L1, L2 (1/fs).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct CoherentDriveCoeffs {
    pub k1: f64,
    pub k2: f64,
    pub l1: f64,
    pub l2: f64,
}

/// `K1 = -(F1/hbar) Im[A(t) e^{i d' t}]`, `K2 = (F1/hbar) Re[...]`, and
/// the same with F2 for L1, L2. The envelope is real, so the modulus
/// identity `K1^2 + K2^2 = (F1 A(t) / hbar)^2` holds exactly.
pub fn coherent_drive(t: f64, scenario: &Scenario) -> CoherentDriveCoeffs {
    let a = envelope(t, &scenario.pulse);
    let hbar = scenario.constants.hbar;
    let phase = scenario.pulse.delta_prime * t;
    let (sin, cos) = phase.sin_cos();
    CoherentDriveCoeffs {
        k1: -scenario.dimer.f1 / hbar * a * sin,
        k2: scenario.dimer.f1 / hbar * a * cos,
        l1: -scenario.dimer.f2 / hbar * a * sin,
        l2: scenario.dimer.f2 / hbar * a * cos,
    }
}

/// Rotated noise correlation `dN(t,tau)` (the optical carrier cancels
/// against the frame rotation). Rejects acausal arguments.
pub fn noise_correlation(t: f64, tau: f64, scenario: &Scenario) -> Result<Complex64> {
    if tau > t {
        return Err(Error::AcausalCorrelation { t, tau });
    }
    let n = &scenario.noise;
    let lag = t - tau;
    let amp = envelope(t, &scenario.pulse) * envelope(tau, &scenario.pulse) * n.ns;
    Ok(amp * (Complex64::new(-n.gamma_s, -n.omega_s) * lag).exp())
}

/// Anomalous correlation hook of the same exponential family, scaled by
/// `noise.anomalous_ns`; identically zero in the presets.
pub fn anomalous_correlation(t: f64, tau: f64, scenario: &Scenario) -> Result<Complex64> {
    if tau > t {
        return Err(Error::AcausalCorrelation { t, tau });
    }
    let n = &scenario.noise;
    let amp = envelope(t, &scenario.pulse) * envelope(tau, &scenario.pulse) * n.anomalous_ns;
    Ok(amp * (Complex64::new(0.0, -n.omega_s) * (t + tau)).exp() * (-n.gamma_s * (t - tau)).exp())
}

/// The four complex convolution accumulators: `z_plus`, `z_minus` for the
/// normal correlation and `za_plus`, `za_minus` for the anomalous hook.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ConvolutionState {
    pub z: [Complex64; 4],
}

/// Decay rates of the accumulators, fixed per scenario.
#[derive(Debug, Clone, Copy)]
pub struct ConvolutionRates {
    pub lambda: [Complex64; 4],
}

impl ConvolutionRates {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        let eig = eigensystem(&scenario.dimer)?;
        let dp = eig.delta / scenario.constants.hbar;
        let n = &scenario.noise;
        let d = scenario.pulse.delta_prime;
        let g = n.gamma_s;
        let lam = |detune: f64, sign: f64| Complex64::new(g, -(detune + sign * dp));
        Ok(ConvolutionRates {
            lambda: [
                lam(d - n.omega_s, 1.0),
                lam(d - n.omega_s, -1.0),
                lam(d + n.omega_s, 1.0),
                lam(d + n.omega_s, -1.0),
            ],
        })
    }

    /// `dz_i/dt = A(t) - lambda_i z_i`.
    pub fn derivative(&self, conv: &ConvolutionState, envelope_value: f64) -> ConvolutionState {
        let mut dz = [Complex64::default(); 4];
        for i in 0..4 {
            dz[i] = envelope_value - self.lambda[i] * conv.z[i];
        }
        ConvolutionState { z: dz }
    }
}

/// The response integrals i1..i4 and their anomalous counterparts (fs).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct ResponseIntegrals {
    pub i: [f64; 4],
    pub i_anom: [f64; 4],
}

/// Assembles i1..i4 from the advanced accumulators at time `t`.
pub fn response_integrals(
    t: f64,
    scenario: &Scenario,
    conv: &ConvolutionState,
) -> ResponseIntegrals {
    let a = envelope(t, &scenario.pulse);
    let n = &scenario.noise;
    let zp = conv.z[0];
    let zm = conv.z[1];
    let w = n.ns * a;
    let half_sum = 0.5 * (zp + zm);
    let half_diff_over_i = (zp - zm) / Complex64::new(0.0, 2.0);
    let i = [
        w * half_sum.re,
        w * half_diff_over_i.re,
        w * half_sum.im,
        w * half_diff_over_i.im,
    ];
    let i_anom = if n.anomalous_ns == 0.0 {
        [0.0; 4]
    } else {
        // Anomalous kernel carries exp(-i(d' + w_s)(t + tau)); relative to
        // the accumulators this leaves the global phase below.
        let d = scenario.pulse.delta_prime;
        let w = n.anomalous_ns * a * (Complex64::new(0.0, -2.0 * (d + n.omega_s) * t)).exp();
        let zap = conv.z[2];
        let zam = conv.z[3];
        let s = w * 0.5 * (zap + zam);
        let q = w * (zap - zam) / Complex64::new(0.0, 2.0);
        [s.re, q.re, s.im, q.im]
    };
    ResponseIntegrals { i, i_anom }
}

/// Noise coefficients M1..P2 (1/fs). Barred values coincide with the
/// unbarred ones because vacuum fluctuations are omitted; the tilde family
/// is driven purely by the anomalous hook.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct NoiseCoeffs {
    pub m1: f64,
    pub m2: f64,
    pub n1: f64,
    pub n2: f64,
    pub o1: f64,
    pub o2: f64,
    pub p1: f64,
    pub p2: f64,
    pub tm1: f64,
    pub tm2: f64,
    pub tn1: f64,
    pub tn2: f64,
    pub to1: f64,
    pub to2: f64,
    pub tp1: f64,
    pub tp2: f64,
}

/// Couplings entering the noise bilinears, fixed per scenario.
#[derive(Debug, Clone, Copy)]
pub struct NoiseWeights {
    /// F1 / hbar (1/fs).
    pub phi1: f64,
    /// F2 / hbar (1/fs).
    pub phi2: f64,
    /// eps / Delta.
    pub eps_ratio: f64,
    /// J / Delta.
    pub j_ratio: f64,
}

impl NoiseWeights {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        let eig = eigensystem(&scenario.dimer)?;
        Ok(NoiseWeights {
            phi1: scenario.dimer.f1 / scenario.constants.hbar,
            phi2: scenario.dimer.f2 / scenario.constants.hbar,
            eps_ratio: scenario.dimer.eps / eig.delta,
            j_ratio: scenario.dimer.j / eig.delta,
        })
    }

    fn family(&self, i: &[f64; 4]) -> [f64; 8] {
        let (p1, p2) = (self.phi1, self.phi2);
        let (er, jr) = (self.eps_ratio, self.j_ratio);
        let cross = p1 * p2;
        [
            p1 * p1 * i[0] - p1 * p1 * er * i[3] - cross * jr * i[3], // M1
            p1 * p1 * i[2] + p1 * p1 * er * i[1] + cross * jr * i[1], // M2
            p2 * p2 * i[0] + p2 * p2 * er * i[3] - cross * jr * i[3], // N1
            p2 * p2 * i[2] - p2 * p2 * er * i[1] + cross * jr * i[1], // N2
            -p1 * p1 * jr * i[3] + cross * i[0] + cross * er * i[3],  // O1
            p1 * p1 * jr * i[1] + cross * i[2] - cross * er * i[1],   // O2
            -p2 * p2 * jr * i[3] + cross * i[0] - cross * er * i[3],  // P1
            p2 * p2 * jr * i[1] + cross * i[2] + cross * er * i[1],   // P2
        ]
    }
}

/// The eight printed bilinear combinations plus the tilde family.
pub fn noise_coefficients(weights: &NoiseWeights, ints: &ResponseIntegrals) -> NoiseCoeffs {
    let m = weights.family(&ints.i);
    let tm = weights.family(&ints.i_anom);
    NoiseCoeffs {
        m1: m[0],
        m2: m[1],
        n1: m[2],
        n2: m[3],
        o1: m[4],
        o2: m[5],
        p1: m[6],
        p2: m[7],
        tm1: tm[0],
        tm2: tm[1],
        tn1: tm[2],
        tn2: tm[3],
        to1: tm[4],
        to2: tm[5],
        tp1: tm[6],
        tp2: tm[7],
    }
}
