//! Reduction of the eleven phonon kernels to damped sinusoids and
//! closed-form evaluation of their response integrals.
//!
//! For the single damped mode, every kernel collapses to
//!
//! ```text
//! g_j(tau) = Re[ c_j exp((i*Omega_ph - gamma_ph) tau) ]     j in {1,4,5,6,7}
//! g_j(tau) = Im[ c_j exp((i*Omega_ph - gamma_ph) tau) ]     j in {2,3,8,9,10,11}
//! ```
//!
//! with complex amplitudes `c_j` built from `G1 = G * g1_ratio`,
//! `G2 = G * g2_ratio` and the thermal factor `2 n_B + 1` (cosine family
//! only). The amplitudes absorb `G^2 / hbar^2`, so the weighted integrals
//!
//! ```text
//! gbar_{1,j}(t) = int_0^{t-t0} g_j(tau)                  d tau
//! gbar_{2,j}(t) = int_0^{t-t0} g_j(tau) sin^2(D' tau)    d tau
//! gbar_{3,j}(t) = int_0^{t-t0} g_j(tau) sin(2 D' tau)    d tau
//! ```
//!
//! (`D' = Delta / hbar`) land directly in 1/fs once combined into the
//! fourteen generator coefficients `A(t) .. F(t), A1(t) .. D2(t)`. All
//! three weights reduce by product-to-sum identities to the single complex
//! primitive `int_0^T exp(-lambda tau) d tau`, so coefficients cost O(1)
//! per evaluation and are exact to machine precision; adaptive quadrature
//! is kept only as a test oracle.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::model::{eigensystem, BathParams, Constants, Scenario};
use crate::Result;

/// Pairing convention for the cross-coupling kernels (j = 3, 5, 6, 9, 10).
///
/// The half-space assignment puts `hbar * Omega_k * G_k^i = G_i` on one
/// half of k-space and `G_i^*` on the other. `ConjugatePaired` takes the
/// mirror mode `-k` in the opposite half (the hermitian assignment, and
/// the one the finite-sum oracle reproduces); cross products then pair
/// `G1` with `conj(G2)` and the imaginary parts cancel between halves.
/// `SameHalf` keeps `-k` in the same half, pairing `G1` with `G2`
/// unconjugated.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossKernelConvention {
    #[default]
    ConjugatePaired,
    SameHalf,
}

/// True for kernels that ride on `cos(Omega_ph tau)` (the thermal family).
const COS_FAMILY: [bool; 11] = [
    true,  // g1
    false, // g2
    false, // g3
    true,  // g4
    true,  // g5
    true,  // g6
    true,  // g7
    false, // g8
    false, // g9
    false, // g10
    false, // g11
];

/// Reduced kernel amplitudes and the shared complex decay rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelConstants {
    /// Amplitudes `c_1 .. c_11` (index 0 holds c_1). Units absorb
    /// `G^2 / hbar^2`, i.e. 1/fs^2.
    pub c: [Complex64; 11],
    /// `lambda_0 = gamma_ph - i Omega_ph` so that
    /// `exp((i Omega - gamma) tau) = exp(-lambda_0 tau)`.
    pub lambda0: Complex64,
}

/// Integration weight selector for [`KernelConstants::gbar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GbarKind {
    /// Weight 1.
    Plain,
    /// Weight `sin^2(Delta' tau)`.
    SinSq,
    /// Weight `sin(2 Delta' tau)`.
    Sin2,
}

/// Collapses the k-space kernels to damped sinusoids for the single
/// damped mode.
pub fn reduce_kernels(bath: &BathParams, constants: &Constants) -> KernelConstants {
    let q = bath.g * bath.g / (constants.hbar * constants.hbar);
    let th = 2.0 * bath.n_b + 1.0;
    let r1 = bath.g1_ratio;
    let r2 = bath.g2_ratio;
    let diff_sq = (r1 - r2).norm_sqr();
    let (c3, cross_re, cross_im) = match bath.convention {
        // Both halves of the k-sum contribute; only the real parts of the
        // cross products survive the mirror pairing.
        CrossKernelConvention::ConjugatePaired => {
            let cross = r1 * r2.conj();
            (r1.norm_sqr() - r2.norm_sqr(), cross.re, 0.0)
        }
        CrossKernelConvention::SameHalf => {
            let cross = r1 * r2;
            ((r1 * r1 - r2 * r2).re, cross.re, cross.im)
        }
    };
    let c = [
        q * diff_sq * th,       // g1
        q * diff_sq,            // g2
        q * c3,                 // g3
        q * r1.norm_sqr() * th, // g4
        q * cross_re * th,      // g5
        q * cross_im * th,      // g6
        q * r2.norm_sqr() * th, // g7
        q * r1.norm_sqr(),      // g8
        q * cross_re,           // g9
        q * cross_im,           // g10
        q * r2.norm_sqr(),      // g11
    ]
    .map(|a: f64| Complex64::new(a, 0.0));
    KernelConstants {
        c,
        lambda0: Complex64::new(bath.gamma_ph, -bath.omega_ph),
    }
}

/// `int_0^T exp(-lambda tau) d tau`, the primitive behind every gbar.
///
/// `T = inf` returns `1 / lambda` (valid for `Re(lambda) > 0`). Near
/// `|lambda T| = 0` a four-term series avoids the `(1 - exp)` cancellation.
pub fn damped_trig_integral(lambda: Complex64, t: f64) -> Complex64 {
    if t.is_infinite() {
        return 1.0 / lambda;
    }
    let x = lambda * t;
    if x.norm() < 1e-6 {
        // T (1 - x/2 + x^2/6 - x^3/24), relative error below 1e-26.
        let series = 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
        return series * t;
    }
    (1.0 - (-x).exp()) / lambda
}

/// The three weight integrals of `exp(-lambda0 tau)` against 1,
/// `sin^2(D' tau)`, `sin(2 D' tau)` over `[0, T]`.
fn weight_table(lambda0: Complex64, delta_prime: f64, elapsed: f64) -> [Complex64; 3] {
    let shift = Complex64::new(0.0, 2.0 * delta_prime);
    let i0 = damped_trig_integral(lambda0, elapsed);
    let im = damped_trig_integral(lambda0 - shift, elapsed);
    let ip = damped_trig_integral(lambda0 + shift, elapsed);
    [
        i0,
        0.5 * i0 - 0.25 * (im + ip),
        (im - ip) / Complex64::new(0.0, 2.0),
    ]
}

impl KernelConstants {
    /// Kernel value `g_j(tau)` (j is 1-based).
    pub fn kernel(&self, j: usize, tau: f64) -> f64 {
        let z = self.c[j - 1] * (-self.lambda0 * tau).exp();
        if COS_FAMILY[j - 1] {
            z.re
        } else {
            z.im
        }
    }

    /// Closed-form `gbar_{kind,j}(t)` with `elapsed = t - t0` and
    /// `delta_prime = Delta / hbar` in rad/fs (j is 1-based).
    pub fn gbar(&self, kind: GbarKind, j: usize, elapsed: f64, delta_prime: f64) -> f64 {
        let table = weight_table(self.lambda0, delta_prime, elapsed);
        let k = match kind {
            GbarKind::Plain => table[0],
            GbarKind::SinSq => table[1],
            GbarKind::Sin2 => table[2],
        };
        let z = self.c[j - 1] * k;
        if COS_FAMILY[j - 1] {
            z.re
        } else {
            z.im
        }
    }

    fn gbar_row(&self, table: &[Complex64; 3], kind: usize) -> [f64; 11] {
        let mut out = [0.0; 11];
        for (j, slot) in out.iter_mut().enumerate() {
            let z = self.c[j] * table[kind];
            *slot = if COS_FAMILY[j] { z.re } else { z.im };
        }
        out
    }
}

/// The fourteen time-dependent generator coefficients (1/fs).
///
/// `a..f` feed the R1-block phonon matrix, `a1..d2` the R2 block. `b` and
/// `d` renormalize the transfer integral; `a` and `c` drive relaxation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct PhononCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    pub a1: f64,
    pub b1: f64,
    pub a2: f64,
    pub b2: f64,
    pub c1: f64,
    pub d1: f64,
    pub c2: f64,
    pub d2: f64,
}

impl PhononCoefficients {
    pub const NAMES: [&'static str; 14] = [
        "A", "B", "C", "D", "E", "F", "A1", "B1", "A2", "B2", "C1", "D1", "C2", "D2",
    ];

    pub fn as_array(&self) -> [f64; 14] {
        [
            self.a, self.b, self.c, self.d, self.e, self.f, self.a1, self.b1, self.a2, self.b2,
            self.c1, self.d1, self.c2, self.d2,
        ]
    }
}

/// Precomputed scenario-level data for coefficient evaluation.
///
/// Pure and `Sync`: coefficients for many `t` may be evaluated in
/// parallel.
#[derive(Debug, Clone)]
pub struct PhononEngine {
    kc: KernelConstants,
    /// J eps / Delta^2 (dimensionless).
    j_eps: f64,
    /// J / (2 Delta) (dimensionless).
    j_half: f64,
    /// J^2 / Delta^2 (dimensionless).
    j_sq: f64,
    /// Delta / hbar (rad/fs).
    delta_prime: f64,
    t0: f64,
}

impl PhononEngine {
    pub fn new(scenario: &Scenario) -> Result<Self> {
        let eig = eigensystem(&scenario.dimer)?;
        let d = eig.delta;
        let j = scenario.dimer.j;
        Ok(PhononEngine {
            kc: reduce_kernels(&scenario.bath, &scenario.constants),
            j_eps: j * scenario.dimer.eps / (d * d),
            j_half: j / (2.0 * d),
            j_sq: j * j / (d * d),
            delta_prime: d / scenario.constants.hbar,
            t0: scenario.pulse.t0,
        })
    }

    pub fn kernel_constants(&self) -> &KernelConstants {
        &self.kc
    }

    /// Coefficients at absolute time `t` (>= t0).
    pub fn coefficients(&self, t: f64) -> PhononCoefficients {
        self.at_elapsed(t - self.t0)
    }

    /// `t -> inf` limits; the Lorentzian-broadened asymptotic values.
    pub fn asymptotic(&self) -> PhononCoefficients {
        self.at_elapsed(f64::INFINITY)
    }

    fn at_elapsed(&self, elapsed: f64) -> PhononCoefficients {
        // Uncoupled bath: all amplitudes vanish; skip the primitives so a
        // degenerate (omega = gamma = 0) mode cannot leak a 0 * inf.
        if self.kc.c.iter().all(|c| c.norm_sqr() == 0.0) {
            return PhononCoefficients::default();
        }
        let table = weight_table(self.kc.lambda0, self.delta_prime, elapsed);
        let g1 = self.kc.gbar_row(&table, 0);
        let g2 = self.kc.gbar_row(&table, 1);
        let g3 = self.kc.gbar_row(&table, 2);
        // 1-based kernel index helpers.
        let v1 = |j: usize| g1[j - 1];
        let v2 = |j: usize| g2[j - 1];
        let v3 = |j: usize| g3[j - 1];
        let (je, jh, js) = (self.j_eps, self.j_half, self.j_sq);
        PhononCoefficients {
            a: -je * v2(1) + jh * v3(2),
            b: -je * v2(2) - jh * v3(1),
            c: je * v2(1) + jh * v3(2),
            d: je * v2(2) - jh * v3(1),
            e: v1(1) - 2.0 * js * v2(1),
            f: -v1(3),
            a1: v1(4) + js * (-v2(4) + v2(5) + v2(10)),
            b1: v1(8) + js * (-v2(6) - v2(8) + v2(9)),
            a2: v1(7) + js * (v2(5) - v2(7) - v2(10)),
            b2: v1(11) + js * (v2(6) + v2(9) - v2(11)),
            c1: je * (v2(4) - v2(5) - v2(10)) + jh * (v3(6) + v3(8) - v3(9)),
            d1: je * (v2(6) + v2(8) - v2(9)) + jh * (-v3(4) + v3(5) + v3(10)),
            c2: je * (v2(5) - v2(7) - v2(10)) + jh * (-v3(6) - v3(9) + v3(11)),
            d2: je * (v2(6) + v2(9) - v2(11)) + jh * (v3(5) - v3(7) - v3(10)),
        }
    }
}

/// Convenience evaluation of the coefficients at time `t`.
pub fn phonon_coefficients(t: f64, scenario: &Scenario) -> Result<PhononCoefficients> {
    Ok(PhononEngine::new(scenario)?.coefficients(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::preset;
    use proptest::prelude::*;

    fn fig2c_bath() -> BathParams {
        preset("fig2C").unwrap().bath
    }

    #[test]
    fn equal_couplings_kill_difference_kernels() {
        let mut bath = fig2c_bath();
        bath.g2_ratio = bath.g1_ratio;
        let kc = reduce_kernels(&bath, &Constants::default());
        for j in [1, 2, 3] {
            assert_eq!(kc.c[j - 1], Complex64::new(0.0, 0.0), "c{j}");
        }
    }

    #[test]
    fn thermal_scaling_hits_cosine_family_only() {
        let mut bath = fig2c_bath();
        bath.n_b = 0.0;
        let cold = reduce_kernels(&bath, &Constants::default());
        bath.n_b = 0.5;
        let warm = reduce_kernels(&bath, &Constants::default());
        for j in 1..=11usize {
            let ratio_want = if COS_FAMILY[j - 1] { 2.0 } else { 1.0 };
            if cold.c[j - 1].norm() == 0.0 {
                assert_eq!(warm.c[j - 1].norm(), 0.0);
            } else {
                let r = warm.c[j - 1].re / cold.c[j - 1].re;
                assert!((r - ratio_want).abs() < 1e-12, "c{j} ratio {r}");
            }
        }
    }

    #[test]
    fn fig2_difference_amplitude() {
        // |G1 - G2|^2 = 0.25 G^2 for the 1 +/- 0.25i ratios.
        let bath = fig2c_bath();
        let kc = reduce_kernels(&bath, &Constants::default());
        let hbar = Constants::default().hbar;
        let want = 0.25 * bath.g * bath.g / (hbar * hbar);
        assert!((kc.c[0].re - want).abs() < 1e-18 * want.max(1.0));
        // Conjugate-symmetric ratios make g3 vanish and the cross kernels
        // real under either pairing convention.
        assert_eq!(kc.c[2].re, 0.0);
        assert_eq!(kc.c[5].im, 0.0);
    }

    #[test]
    fn primitive_limits() {
        let lam = Complex64::new(0.001, 0.01);
        assert_eq!(damped_trig_integral(lam, 0.0), Complex64::new(0.0, 0.0));
        let full = damped_trig_integral(Complex64::new(0.37, 0.0), f64::INFINITY);
        assert!((full - 1.0 / 0.37).norm() < 1e-15);
        // Both branches agree with a long reference series around the
        // |lambda T| = 1e-6 switch point.
        let reference = |lam: Complex64, t: f64| {
            let x = lam * t;
            let mut term = Complex64::new(t, 0.0);
            let mut acc = term;
            for k in 2..=8 {
                term *= -x / k as f64;
                acc += term;
            }
            acc
        };
        for scale in [0.3, 0.9, 1.1, 3.0] {
            let lam = Complex64::new(0.6e-6, 0.8e-6) * scale;
            let got = damped_trig_integral(lam, 1.0);
            let want = reference(lam, 1.0);
            assert!((got - want).norm() < 1e-9 * want.norm(), "scale {scale}");
        }
    }

    #[test]
    fn gbar_vanishes_at_t0_and_for_equal_couplings() {
        let scenario = preset("fig2C").unwrap();
        let engine = PhononEngine::new(&scenario).unwrap();
        let kc = engine.kernel_constants();
        for kind in [GbarKind::Plain, GbarKind::SinSq, GbarKind::Sin2] {
            for j in 1..=11 {
                assert_eq!(kc.gbar(kind, j, 0.0, engine.delta_prime), 0.0);
            }
        }
        let mut bath = scenario.bath;
        bath.g2_ratio = bath.g1_ratio;
        let kc = reduce_kernels(&bath, &Constants::default());
        for kind in [GbarKind::Plain, GbarKind::SinSq, GbarKind::Sin2] {
            for j in [1, 2, 3] {
                assert_eq!(kc.gbar(kind, j, 500.0, 0.003), 0.0);
            }
        }
    }

    #[test]
    fn coefficients_zero_without_coupling() {
        let mut scenario = preset("fig4").unwrap();
        scenario.bath.g = 0.0;
        let pc = phonon_coefficients(1500.0, &scenario).unwrap();
        for (name, v) in PhononCoefficients::NAMES.iter().zip(pc.as_array()) {
            assert_eq!(v, 0.0, "{name}");
        }
        // Even with a fully degenerate bath description the uncoupled
        // limit stays clean (no 0 * inf from the t -> inf primitives).
        scenario.bath.omega_ph = 0.0;
        scenario.bath.gamma_ph = 0.0;
        let asym = PhononEngine::new(&scenario).unwrap().asymptotic();
        for v in asym.as_array() {
            assert_eq!(v, 0.0);
        }
    }

    #[test]
    fn same_half_convention_amplitudes() {
        let mut bath = fig2c_bath();
        bath.g1_ratio = Complex64::new(1.0, 0.5);
        bath.g2_ratio = Complex64::new(0.3, -0.1);
        bath.n_b = 0.25;
        let constants = Constants::default();
        let q = bath.g * bath.g / (constants.hbar * constants.hbar);
        let th = 1.5;
        let (r1, r2) = (bath.g1_ratio, bath.g2_ratio);

        bath.convention = CrossKernelConvention::ConjugatePaired;
        let kc = reduce_kernels(&bath, &constants);
        assert!((kc.c[2].re - q * (r1.norm_sqr() - r2.norm_sqr())).abs() < 1e-18);
        assert!((kc.c[4].re - q * (r1 * r2.conj()).re * th).abs() < 1e-18);
        assert_eq!(kc.c[5].re, 0.0); // imaginary cross sums cancel

        bath.convention = CrossKernelConvention::SameHalf;
        let kc = reduce_kernels(&bath, &constants);
        assert!((kc.c[2].re - q * (r1 * r1 - r2 * r2).re).abs() < 1e-18);
        assert!((kc.c[4].re - q * (r1 * r2).re * th).abs() < 1e-18);
        assert!((kc.c[5].re - q * (r1 * r2).im * th).abs() < 1e-18);
        assert!((kc.c[9].re - q * (r1 * r2).im).abs() < 1e-18);
    }

    #[test]
    fn symmetric_dimer_degeneracies() {
        // eps = 0 forces A = C and B = D.
        let mut scenario = preset("fig8").unwrap();
        scenario.dimer.eps = 0.0;
        let engine = PhononEngine::new(&scenario).unwrap();
        for &t in &[25.0, 310.0, 1890.0] {
            let pc = engine.coefficients(t);
            assert!((pc.a - pc.c).abs() < 1e-18);
            assert!((pc.b - pc.d).abs() < 1e-18);
        }
    }

    #[test]
    fn f_ignores_dimer_structure() {
        // F(t) = -gbar_{1,3} carries no Delta' weight, so it cannot depend
        // on J or eps.
        let mut scenario = preset("fig7B").unwrap();
        scenario.bath.g1_ratio = Complex64::new(1.0, 0.5);
        scenario.bath.g2_ratio = Complex64::new(0.3, -0.1);
        let f_ref = phonon_coefficients(800.0, &scenario).unwrap().f;
        scenario.dimer.j = 0.001;
        scenario.dimer.eps = -0.002;
        let f_alt = phonon_coefficients(800.0, &scenario).unwrap().f;
        assert!((f_ref - f_alt).abs() < 1e-18);
        assert!(f_ref != 0.0);
    }

    #[test]
    fn quadratic_scaling_in_g() {
        let scenario = preset("fig8").unwrap();
        let mut doubled = scenario.clone();
        doubled.bath.g *= 2.0;
        let base = phonon_coefficients(600.0, &scenario).unwrap().as_array();
        let four = phonon_coefficients(600.0, &doubled).unwrap().as_array();
        for (b, f) in base.iter().zip(four) {
            assert!((f - 4.0 * b).abs() <= 1e-12 * b.abs().max(1e-30));
        }
    }

    proptest! {
        #[test]
        fn gbar_converges_after_relaxation(
            j in 1usize..=11,
            dp in 0.0f64..0.03,
            extra in 0.0f64..5000.0,
        ) {
            let scenario = preset("fig8").unwrap();
            let engine = PhononEngine::new(&scenario).unwrap();
            let kc = engine.kernel_constants();
            let t_relax = 20.0 / scenario.bath.gamma_ph;
            for kind in [GbarKind::Plain, GbarKind::SinSq, GbarKind::Sin2] {
                let a = kc.gbar(kind, j, t_relax, dp);
                let b = kc.gbar(kind, j, t_relax + extra, dp);
                prop_assert!((a - b).abs() <= 1e-10);
            }
        }
    }
}
