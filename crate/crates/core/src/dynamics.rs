//! Assembly of the full 9x9 time-dependent generator and fixed-step
//! integration of the state.
//!
//! The blocks follow the layout
//!
//! ```text
//! d/dt [R1]   ( [J1 0 ]   [G1(t) 0    ]   [F1(t) F2(t)] ) [R1]
//!      [R2] = ( [0  J2] - [0     G2(t)] - [F3(t) F4(t)] ) [R2]
//! ```
//!
//! with R1 = (rho11, rho22, rho_r, rho_i, rho00) and R2 = (rho1r, rho1i,
//! rho2r, rho2i). The J blocks are constant, G carries the phonon
//! coefficients, F2/F3 the coherent drive, and F1/F4 the noise. The
//! population columns of J1, G1, F1, F2 cancel identically, so the trace
//! is conserved up to integrator roundoff and is monitored, never
//! enforced.
//!
//! Integration is classical fixed-step RK4 with all coefficients
//! re-evaluated at stage times (the drive oscillates at the detuning, so
//! freezing them per step would degrade the order) and the noise
//! convolution accumulators advanced inside the same stages. Fixed
//! stepping keeps trajectories bit-reproducible on one platform.

use num_complex::Complex64;
use serde::Serialize;

use crate::field::{
    coherent_drive, envelope, noise_coefficients, response_integrals, CoherentDriveCoeffs,
    ConvolutionRates, ConvolutionState, NoiseCoeffs, NoiseWeights,
};
use crate::linalg::hermitian3_eigenvalues;
use crate::model::{DimerParams, Scenario};
use crate::phonon::{PhononCoefficients, PhononEngine};
use crate::{Error, Result};

/// The nine real dynamical variables of the dimer state.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct StateVector {
    pub rho11: f64,
    pub rho22: f64,
    pub rho_r: f64,
    pub rho_i: f64,
    pub rho00: f64,
    pub rho1r: f64,
    pub rho1i: f64,
    pub rho2r: f64,
    pub rho2i: f64,
}

impl StateVector {
    /// Excitonless initial state: rho00 = 1, everything else 0.
    pub fn excitonless() -> Self {
        StateVector {
            rho00: 1.0,
            ..Default::default()
        }
    }

    pub fn from_array(r: [f64; 9]) -> Self {
        StateVector {
            rho11: r[0],
            rho22: r[1],
            rho_r: r[2],
            rho_i: r[3],
            rho00: r[4],
            rho1r: r[5],
            rho1i: r[6],
            rho2r: r[7],
            rho2i: r[8],
        }
    }

    pub fn as_array(&self) -> [f64; 9] {
        [
            self.rho11, self.rho22, self.rho_r, self.rho_i, self.rho00, self.rho1r, self.rho1i,
            self.rho2r, self.rho2i,
        ]
    }

    pub fn trace(&self) -> f64 {
        self.rho11 + self.rho22 + self.rho00
    }
}

/// The eight generator blocks of one evaluation time.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorMatrices {
    pub j1: [[f64; 5]; 5],
    pub j2: [[f64; 4]; 4],
    pub g1: [[f64; 5]; 5],
    pub g2: [[f64; 4]; 4],
    pub f1: [[f64; 5]; 5],
    pub f2: [[f64; 4]; 5],
    pub f3: [[f64; 5]; 4],
    pub f4: [[f64; 4]; 4],
}

/// Constant free-transfer blocks.
pub fn j_blocks(dimer: &DimerParams, hbar: f64) -> ([[f64; 5]; 5], [[f64; 4]; 4]) {
    let j = dimer.j / hbar;
    let e = dimer.eps / hbar;
    let j1 = [
        [0.0, 0.0, 0.0, -2.0 * j, 0.0],
        [0.0, 0.0, 0.0, 2.0 * j, 0.0],
        [0.0, 0.0, 0.0, 2.0 * e, 0.0],
        [j, -j, -2.0 * e, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
    ];
    let j2 = [
        [0.0, -e, 0.0, -j],
        [e, 0.0, j, 0.0],
        [0.0, -j, 0.0, e],
        [j, 0.0, -e, 0.0],
    ];
    (j1, j2)
}

/// Evaluates every block entrywise from the coefficient bundles.
pub fn assemble_generator(
    dimer: &DimerParams,
    hbar: f64,
    ph: &PhononCoefficients,
    dr: &CoherentDriveCoeffs,
    ns: &NoiseCoeffs,
) -> GeneratorMatrices {
    let (j1, j2) = j_blocks(dimer, hbar);
    let g1 = [
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [ph.a, ph.c, ph.e, -ph.f, 0.0],
        [ph.b, -ph.d, ph.f, ph.e, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
    ];
    let g2 = [
        [ph.a1, -ph.b1, ph.c1, -ph.d1],
        [ph.b1, ph.a1, ph.d1, ph.c1],
        [ph.c2, -ph.d2, ph.a2, -ph.b2],
        [ph.d2, ph.c2, ph.b2, ph.a2],
    ];
    // Barred coefficients equal the plain ones (vacuum omitted); the
    // layout keeps the printed placement so the population columns cancel.
    let (m1, m2, n1, n2) = (ns.m1, ns.m2, ns.n1, ns.n2);
    let (o1, o2, p1, p2) = (ns.o1, ns.o2, ns.p1, ns.p2);
    let f1 = [
        [2.0 * m1, 0.0, 2.0 * o1, 2.0 * o2, -2.0 * m1],
        [0.0, 2.0 * n1, 2.0 * p1, -2.0 * p2, -2.0 * n1],
        [p1, o1, m1 + n1, -m2 + n2, -o1 - p1],
        [-p2, o2, m2 - n2, m1 + n1, p2 - o2],
        [
            -2.0 * m1,
            -2.0 * n1,
            -2.0 * p1 - 2.0 * o1,
            2.0 * p2 - 2.0 * o2,
            2.0 * m1 + 2.0 * n1,
        ],
    ];
    let (k1, k2, l1, l2) = (dr.k1, dr.k2, dr.l1, dr.l2);
    let f2 = [
        [2.0 * k1, -2.0 * k2, 0.0, 0.0],
        [0.0, 0.0, 2.0 * l1, -2.0 * l2],
        [l1, -l2, k1, -k2],
        [-l2, -l1, k2, k1],
        [-2.0 * k1, 2.0 * k2, -2.0 * l1, 2.0 * l2],
    ];
    let f3 = [
        [-k1, 0.0, -l1, l2, k1],
        [k2, 0.0, l2, l1, -k2],
        [0.0, -l1, -k1, -k2, l1],
        [0.0, l2, k2, -k1, -l2],
    ];
    let (tm1, tm2, tn1, tn2) = (ns.tm1, ns.tm2, ns.tn1, ns.tn2);
    let (to1, to2, tp1, tp2) = (ns.to1, ns.to2, ns.tp1, ns.tp2);
    let f4 = [
        [
            2.0 * m1 + n1 - 2.0 * tm1,
            2.0 * m2 + n2 - 2.0 * tm2,
            o1 - to1 - tp1,
            o2 - to2 - tp2,
        ],
        [
            -2.0 * m2 - n2 - 2.0 * tm2,
            2.0 * m1 + n1 + 2.0 * tm1,
            -o2 - to2 - tp2,
            o1 + to1 + tp1,
        ],
        [
            p1 - to1 - tp1,
            p2 - to2 - tp2,
            2.0 * n1 + m1 - 2.0 * tn1,
            2.0 * n2 + m2 - 2.0 * tn2,
        ],
        [
            -p2 - to2 - tp2,
            p1 + to1 + tp1,
            -2.0 * n2 - m2 - 2.0 * tn2,
            2.0 * n1 + m1 + 2.0 * tn1,
        ],
    ];
    GeneratorMatrices {
        j1,
        j2,
        g1,
        g2,
        f1,
        f2,
        f3,
        f4,
    }
}

impl GeneratorMatrices {
    /// `(J - G - F) R` for the stacked 9-vector.
    pub fn apply(&self, r: &[f64; 9]) -> [f64; 9] {
        let mut out = [0.0; 9];
        for row in 0..5 {
            let mut acc = 0.0;
            for col in 0..5 {
                acc += (self.j1[row][col] - self.g1[row][col] - self.f1[row][col]) * r[col];
            }
            for col in 0..4 {
                acc -= self.f2[row][col] * r[5 + col];
            }
            out[row] = acc;
        }
        for row in 0..4 {
            let mut acc = 0.0;
            for col in 0..5 {
                acc -= self.f3[row][col] * r[col];
            }
            for col in 0..4 {
                acc += (self.j2[row][col] - self.g2[row][col] - self.f4[row][col]) * r[5 + col];
            }
            out[5 + row] = acc;
        }
        out
    }
}

/// Hermitian 3x3 density matrix over {|0>, |1>, |2>} with the
/// rotating-frame phase reattached to the 0-j coherences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix3 {
    pub m: [[Complex64; 3]; 3],
}

impl DensityMatrix3 {
    pub fn trace(&self) -> f64 {
        (self.m[0][0] + self.m[1][1] + self.m[2][2]).re
    }

    pub fn purity(&self) -> f64 {
        let mut acc = 0.0;
        for r in 0..3 {
            for c in 0..3 {
                acc += self.m[r][c].norm_sqr();
            }
        }
        acc
    }
}

/// Inverse of the real parametrization: `rho12 = rho_r + i rho_i`,
/// `rho0j = (rho_jr + i rho_ji) exp(i (E + eps) t / hbar)`.
pub fn reconstruct_density(state: &StateVector, t: f64, scenario: &Scenario) -> DensityMatrix3 {
    let phase = Complex64::new(
        0.0,
        (scenario.dimer.e + scenario.dimer.eps) * t / scenario.constants.hbar,
    )
    .exp();
    let rho01 = Complex64::new(state.rho1r, state.rho1i) * phase;
    let rho02 = Complex64::new(state.rho2r, state.rho2i) * phase;
    let rho12 = Complex64::new(state.rho_r, state.rho_i);
    let re = |x: f64| Complex64::new(x, 0.0);
    DensityMatrix3 {
        m: [
            [re(state.rho00), rho01, rho02],
            [rho01.conj(), re(state.rho11), rho12],
            [rho02.conj(), rho12.conj(), re(state.rho22)],
        ],
    }
}

/// Invariant monitors: signed trace deviation, smallest eigenvalue, and
/// purity. Positivity violations are reported, never repaired; small
/// negative excursions are expected at strong phonon coupling where the
/// second-order truncation bites.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Monitors {
    pub trace_dev: f64,
    pub min_eig: f64,
    pub purity: f64,
}

pub fn monitors(density: &DensityMatrix3) -> Monitors {
    let evs = hermitian3_eigenvalues(&density.m);
    Monitors {
        trace_dev: density.trace() - 1.0,
        min_eig: evs[0],
        purity: density.purity(),
    }
}

/// Sampled time series of one integration run.
#[derive(Debug, Clone)]
pub struct TrajectoryRecord {
    pub times: Vec<f64>,
    pub states: Vec<StateVector>,
    pub monitors: Vec<Monitors>,
    /// Convolution accumulators at the sample times (z+, z-, za+, za-).
    pub convolution: Vec<[Complex64; 4]>,
}

impl TrajectoryRecord {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Largest |trace - 1| over the run.
    pub fn max_trace_dev(&self) -> f64 {
        self.monitors
            .iter()
            .map(|m| m.trace_dev.abs())
            .fold(0.0, f64::max)
    }

    /// Smallest density-matrix eigenvalue over the run.
    pub fn min_eigenvalue(&self) -> f64 {
        self.monitors
            .iter()
            .map(|m| m.min_eig)
            .fold(f64::INFINITY, f64::min)
    }
}

const STATE_DIM: usize = 17;

/// Scenario-bound right-hand side and stepper.
pub struct DynamicsEngine<'a> {
    scenario: &'a Scenario,
    phonon: PhononEngine,
    conv_rates: ConvolutionRates,
    noise_weights: NoiseWeights,
}

impl<'a> DynamicsEngine<'a> {
    pub fn new(scenario: &'a Scenario) -> Result<Self> {
        scenario.validate()?;
        Ok(DynamicsEngine {
            scenario,
            phonon: PhononEngine::new(scenario)?,
            conv_rates: ConvolutionRates::new(scenario)?,
            noise_weights: NoiseWeights::new(scenario)?,
        })
    }

    pub fn phonon(&self) -> &PhononEngine {
        &self.phonon
    }

    fn rhs(&self, t: f64, y: &[f64; STATE_DIM]) -> [f64; STATE_DIM] {
        let s = self.scenario;
        let conv = ConvolutionState {
            z: [
                Complex64::new(y[9], y[10]),
                Complex64::new(y[11], y[12]),
                Complex64::new(y[13], y[14]),
                Complex64::new(y[15], y[16]),
            ],
        };
        let ph = self.phonon.coefficients(t);
        let dr = coherent_drive(t, s);
        let ints = response_integrals(t, s, &conv);
        let ns = noise_coefficients(&self.noise_weights, &ints);
        let gen = assemble_generator(&s.dimer, s.constants.hbar, &ph, &dr, &ns);

        let r: [f64; 9] = y[..9].try_into().unwrap();
        let dr9 = gen.apply(&r);
        let env = envelope(t, &s.pulse);
        let dz = self.conv_rates.derivative(&conv, env);

        let mut dy = [0.0; STATE_DIM];
        dy[..9].copy_from_slice(&dr9);
        for i in 0..4 {
            dy[9 + 2 * i] = dz.z[i].re;
            dy[9 + 2 * i + 1] = dz.z[i].im;
        }
        dy
    }

    fn rk4_step(&self, t: f64, h: f64, y: &[f64; STATE_DIM]) -> [f64; STATE_DIM] {
        let k1 = self.rhs(t, y);
        let k2 = self.rhs(t + 0.5 * h, &add_scaled(y, &k1, 0.5 * h));
        let k3 = self.rhs(t + 0.5 * h, &add_scaled(y, &k2, 0.5 * h));
        let k4 = self.rhs(t + h, &add_scaled(y, &k3, h));
        let mut out = *y;
        for i in 0..STATE_DIM {
            out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        out
    }

    /// One RK4 step of the 9 state variables carrying the convolution
    /// accumulators along.
    pub fn step(
        &self,
        state: &StateVector,
        conv: &ConvolutionState,
        t: f64,
        h: f64,
    ) -> (StateVector, ConvolutionState) {
        let y = pack(state, conv);
        let y1 = self.rk4_step(t, h, &y);
        unpack(&y1)
    }

    /// Integrates from t0 to t_end, sampling every `stride` steps plus the
    /// final point. Deterministic across runs.
    pub fn integrate(&self) -> Result<TrajectoryRecord> {
        let s = self.scenario;
        let t0 = s.pulse.t0;
        let h = s.numerics.h;
        let span = s.numerics.t_end - t0;
        let n_steps = (span / h - 1e-9).ceil().max(1.0) as usize;

        let state0 = match &s.initial {
            Some(r) => StateVector::from_array(*r),
            None => StateVector::excitonless(),
        };
        let mut y = pack(&state0, &ConvolutionState::default());

        let mut record = TrajectoryRecord {
            times: Vec::new(),
            states: Vec::new(),
            monitors: Vec::new(),
            convolution: Vec::new(),
        };
        self.sample(&mut record, t0, &y);

        for step in 0..n_steps {
            let t = t0 + step as f64 * h;
            let h_eff = if step + 1 == n_steps {
                s.numerics.t_end - t
            } else {
                h
            };
            y = self.rk4_step(t, h_eff, &y);
            if y.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    t: t + h_eff,
                    step,
                    detail: format!("state = {:?}", &y[..9]),
                });
            }
            if (step + 1) % s.numerics.stride == 0 || step + 1 == n_steps {
                self.sample(&mut record, t + h_eff, &y);
            }
        }
        Ok(record)
    }

    fn sample(&self, record: &mut TrajectoryRecord, t: f64, y: &[f64; STATE_DIM]) {
        let (state, conv) = unpack(y);
        let density = reconstruct_density(&state, t, self.scenario);
        record.times.push(t);
        record.states.push(state);
        record.monitors.push(monitors(&density));
        record.convolution.push(conv.z);
    }
}

fn pack(state: &StateVector, conv: &ConvolutionState) -> [f64; STATE_DIM] {
    let mut y = [0.0; STATE_DIM];
    y[..9].copy_from_slice(&state.as_array());
    for i in 0..4 {
        y[9 + 2 * i] = conv.z[i].re;
        y[9 + 2 * i + 1] = conv.z[i].im;
    }
    y
}

fn unpack(y: &[f64; STATE_DIM]) -> (StateVector, ConvolutionState) {
    let state = StateVector::from_array(y[..9].try_into().unwrap());
    let conv = ConvolutionState {
        z: [
            Complex64::new(y[9], y[10]),
            Complex64::new(y[11], y[12]),
            Complex64::new(y[13], y[14]),
            Complex64::new(y[15], y[16]),
        ],
    };
    (state, conv)
}

fn add_scaled(y: &[f64; STATE_DIM], k: &[f64; STATE_DIM], factor: f64) -> [f64; STATE_DIM] {
    let mut out = *y;
    for i in 0..STATE_DIM {
        out[i] += factor * k[i];
    }
    out
}

/// Runs a scenario to completion.
pub fn integrate(scenario: &Scenario) -> Result<TrajectoryRecord> {
    DynamicsEngine::new(scenario)?.integrate()
}
