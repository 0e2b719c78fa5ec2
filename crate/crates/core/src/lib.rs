//! Deterministic simulator of the generalized Bloch equations for a
//! molecular dimer driven by an ultrashort optical pulse.
//!
//! The dimer (two coupled two-level molecules plus the shared excitonless
//! state) interacts with a damped phonon mode and with the coherent and
//! noisy parts of a pulsed optical field. The reduced density matrix is
//! parametrized by nine real variables grouped into two blocks,
//!
//! ```text
//! R1 = (rho11, rho22, rho_r, rho_i, rho00)      populations + 1-2 coherence
//! R2 = (rho1r, rho1i, rho2r, rho2i)             0-j coherences, rotating frame
//! ```
//!
//! and evolves under `dR/dt = (J - G(t) - F(t)) R`, where the constant `J`
//! blocks carry free exciton transfer, the `G` blocks carry the
//! exciton-phonon (polaron) coefficients, and the `F` blocks carry the
//! optical drive and noise. All phonon and field memory integrals reduce
//! to closed form for the damped single-mode bath and the exponential
//! noise correlation, so the right-hand side is exact at every Runge-Kutta
//! stage time.
//!
//! Units: energies in eV, times in fs, angular frequencies in rad/fs,
//! rates in 1/fs. Energy-quoted inputs (`hbar * omega` in eV) convert
//! through the configurable `hbar` in [`model::Constants`].

pub mod asymptotics;
pub mod dynamics;
pub mod field;
pub mod model;
pub mod output;
pub mod phonon;
pub mod presets;
pub mod scenario;
pub mod sweep;
pub mod verify;

mod error;
mod linalg;

pub use dynamics::{integrate, StateVector, TrajectoryRecord};
pub use error::Error;
pub use model::{Constants, DimerParams, Eigensystem, Scenario, HBAR_EV_FS};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
