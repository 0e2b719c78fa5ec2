//! Shared test oracles, independent of the production code paths they
//! check.

use excidyn::model::{BathParams, Constants};
use num_complex::Complex64;

/// Finite-sum oracle for the reduced phonon kernels.
///
/// Builds `n` explicit modes at the common frequency, assigns
/// `hbar Omega G_k^i = G_i` on the first half and `G_i^*` on the second,
/// maps `-k` to the mirror mode in the opposite half, and evaluates the
/// kernel sums literally (damping excluded; all modes share one
/// frequency, so the undamped kernel is amplitude * trig).
pub struct FiniteBath {
    g1: Vec<Complex64>,
    g2: Vec<Complex64>,
    omega: f64,
    g_mean: f64,
    thermal: f64,
    hbar: f64,
}

impl FiniteBath {
    pub fn new(bath: &BathParams, constants: &Constants, n: usize) -> Self {
        assert!(n % 2 == 0);
        let big_g1 = bath.g1_ratio * bath.g;
        let big_g2 = bath.g2_ratio * bath.g;
        let hbar_omega = constants.hbar * bath.omega_ph;
        let mut g1 = Vec::with_capacity(n);
        let mut g2 = Vec::with_capacity(n);
        for k in 0..n {
            // Dimensionless couplings G^i_k = G_i / (hbar Omega_k).
            if k < n / 2 {
                g1.push(big_g1 / hbar_omega);
                g2.push(big_g2 / hbar_omega);
            } else {
                g1.push(big_g1.conj() / hbar_omega);
                g2.push(big_g2.conj() / hbar_omega);
            }
        }
        FiniteBath {
            g1,
            g2,
            omega: bath.omega_ph,
            g_mean: bath.g,
            thermal: 2.0 * bath.n_b + 1.0,
            hbar: constants.hbar,
        }
    }

    fn mirror(&self, k: usize) -> usize {
        let n = self.g1.len();
        (k + n / 2) % n
    }

    /// Undamped kernel value `g_j(tau)` from the explicit mode sum.
    /// Multiplied by G^2 it matches `c_j * trig(Omega tau)` of the closed
    /// form with gamma_ph = 0.
    pub fn kernel(&self, j: usize, tau: f64) -> f64 {
        let n = self.g1.len();
        let w2 = self.omega * self.omega;
        let (cos_t, sin_t) = ((self.omega * tau).cos(), (self.omega * tau).sin());
        let mut acc = 0.0;
        for k in 0..n {
            let m = self.mirror(k);
            let term = match j {
                1 => (self.g1[k] - self.g2[k]).norm_sqr() * self.thermal * cos_t,
                2 => (self.g1[k] - self.g2[k]).norm_sqr() * sin_t,
                3 => ((self.g1[k] - self.g2[k]) * (self.g1[m] + self.g2[m])).re * sin_t,
                4 => self.g1[k].norm_sqr() * self.thermal * cos_t,
                5 => (self.g1[k] * self.g2[m]).re * self.thermal * cos_t,
                6 => (self.g1[k] * self.g2[m]).im * self.thermal * cos_t,
                7 => self.g2[k].norm_sqr() * self.thermal * cos_t,
                8 => self.g1[k].norm_sqr() * sin_t,
                9 => (self.g1[k] * self.g2[m]).re * sin_t,
                10 => (self.g1[k] * self.g2[m]).im * sin_t,
                11 => self.g2[k].norm_sqr() * sin_t,
                _ => panic!("kernel index {j}"),
            };
            acc += term;
        }
        w2 * acc / (self.g_mean * self.g_mean * n as f64)
    }

    /// Debye-Waller exponent from the explicit sum,
    /// `W = 1/(2N) sum_k |G1_k - G2_k|^2 (2 n_B + 1)`.
    pub fn debye_waller(&self) -> f64 {
        let n = self.g1.len();
        let mut acc = 0.0;
        for k in 0..n {
            acc += (self.g1[k] - self.g2[k]).norm_sqr() * self.thermal;
        }
        acc / (2.0 * n as f64)
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }
}

/// Max-abs difference of two 9-component states.
pub fn state_distance(a: &[f64; 9], b: &[f64; 9]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
