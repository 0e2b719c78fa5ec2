//! Independent reference values: quadrature versions of the closed-form
//! integrals, the exact two-level Rabi solution, and oscillation-period
//! extraction from sampled trajectories.

use num_complex::Complex64;

use super::quad::adaptive_simpson;
use crate::field::noise_correlation;
use crate::model::{eigensystem, Scenario};
use crate::phonon::{GbarKind, KernelConstants};
use crate::Result;

/// `gbar_{kind,j}` by adaptive quadrature over the explicit damped
/// sinusoid, independent of the complex-primitive path.
pub fn gbar_quadrature(
    kc: &KernelConstants,
    kind: GbarKind,
    j: usize,
    elapsed: f64,
    delta_prime: f64,
) -> f64 {
    let weight = move |tau: f64| match kind {
        GbarKind::Plain => 1.0,
        GbarKind::SinSq => {
            let s = (delta_prime * tau).sin();
            s * s
        }
        GbarKind::Sin2 => (2.0 * delta_prime * tau).sin(),
    };
    let f = |tau: f64| kc.kernel(j, tau) * weight(tau);
    let tol = 1e-13 * (1.0 + kc.c[j - 1].norm() * elapsed.min(1e4));
    adaptive_simpson(&f, 0.0, elapsed, tol)
}

/// The response integrals i1..i4 by direct quadrature of the memory
/// kernel (split at the envelope kink).
pub fn response_quadrature(t: f64, scenario: &Scenario) -> Result<[f64; 4]> {
    let eig = eigensystem(&scenario.dimer)?;
    let dp = eig.delta / scenario.constants.hbar;
    let d = scenario.pulse.delta_prime;
    let t0 = scenario.pulse.t0;
    let kink = (t0 + scenario.pulse.tau1).min(t);
    let value = |tau: f64| -> Complex64 {
        let lag = t - tau;
        noise_correlation(t, tau, scenario).expect("tau <= t")
            * (Complex64::new(0.0, d * lag)).exp()
    };
    let mut out = [0.0; 4];
    let parts: [(bool, bool); 4] = [
        (true, true),   // i1: cos, Re
        (false, true),  // i2: sin, Re
        (true, false),  // i3: cos, Im
        (false, false), // i4: sin, Im
    ];
    for (n, (use_cos, use_re)) in parts.iter().enumerate() {
        let f = |tau: f64| {
            let lag = t - tau;
            let trig = if *use_cos {
                (dp * lag).cos()
            } else {
                (dp * lag).sin()
            };
            let v = value(tau);
            trig * if *use_re { v.re } else { v.im }
        };
        let tol = 1e-13 * (1.0 + scenario.noise.ns * (t - t0).min(1e4));
        out[n] = adaptive_simpson(&f, t0, kink, tol)
            + if t > kink {
                adaptive_simpson(&f, kink, t, tol)
            } else {
                0.0
            };
    }
    Ok(out)
}

/// Exact excited-state population of a two-level system under constant
/// resonant drive: `p1(t) = sin^2(F1 (t - t0) / hbar)`.
pub fn rabi_p1(elapsed: f64, f1: f64, hbar: f64) -> f64 {
    let s = (f1 * elapsed / hbar).sin();
    s * s
}

/// Oscillation period from linearly interpolated upward zero crossings of
/// a mean-centred sampled signal. Same-direction crossings make the
/// estimate immune to a constant offset in the centring. Returns `None`
/// with fewer than two upward crossings.
pub fn measure_period(times: &[f64], values: &[f64]) -> Option<f64> {
    assert_eq!(times.len(), values.len());
    let n = values.len();
    if n < 4 {
        return None;
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let mut crossings = Vec::new();
    for i in 1..n {
        let (a, b) = (values[i - 1] - mean, values[i] - mean);
        if a < 0.0 && b >= 0.0 {
            let frac = a / (a - b);
            crossings.push(times[i - 1] + frac * (times[i] - times[i - 1]));
        }
    }
    if crossings.len() < 2 {
        return None;
    }
    let span = crossings.last().unwrap() - crossings.first().unwrap();
    Some(span / (crossings.len() - 1) as f64)
}
