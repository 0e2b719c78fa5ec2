//! Trajectory and coefficient CSV emission.
//!
//! Floats are formatted with Rust's shortest round-trip rendering, so a
//! written value parses back to the identical f64 and repeated runs of
//! the same scenario produce byte-identical files.

use std::fmt::Write as _;
use std::path::Path;

use crate::dynamics::{DynamicsEngine, TrajectoryRecord};
use crate::field::{coherent_drive, noise_coefficients, response_integrals, ConvolutionState};
use crate::model::Scenario;
use crate::phonon::{PhononCoefficients, PhononEngine};
use crate::scenario::write_atomic;
use crate::Result;

/// Fixed trajectory column order.
pub const TRAJECTORY_HEADER: &str =
    "t,p0,p1,p2,rho_r,rho_i,rho_1r,rho_1i,rho_2r,rho_2i,trace_dev,min_eig,purity";

/// Renders the trajectory CSV (header row mandatory).
pub fn trajectory_csv(record: &TrajectoryRecord) -> String {
    let mut out = String::with_capacity(64 * (record.len() + 1));
    out.push_str(TRAJECTORY_HEADER);
    out.push('\n');
    for i in 0..record.len() {
        let s = &record.states[i];
        let m = &record.monitors[i];
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            record.times[i],
            s.rho00,
            s.rho11,
            s.rho22,
            s.rho_r,
            s.rho_i,
            s.rho1r,
            s.rho1i,
            s.rho2r,
            s.rho2i,
            m.trace_dev,
            m.min_eig,
            m.purity
        );
    }
    out
}

pub fn write_trajectory(path: &Path, record: &TrajectoryRecord) -> Result<()> {
    write_atomic(path, trajectory_csv(record).as_bytes())
}

/// Diagnostic dump of the phonon coefficients at the scenario's sample
/// times.
pub fn phonon_coefficients_csv(scenario: &Scenario) -> Result<String> {
    let engine = PhononEngine::new(scenario)?;
    let mut out = String::from("t,");
    out.push_str(&PhononCoefficients::NAMES.join(","));
    out.push('\n');
    let mut t = scenario.pulse.t0;
    let dt = scenario.numerics.h * scenario.numerics.stride as f64;
    while t <= scenario.numerics.t_end + 1e-9 {
        let pc = engine.coefficients(t);
        let _ = write!(out, "{t}");
        for v in pc.as_array() {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
        t += dt;
    }
    Ok(out)
}

/// Diagnostic dump of the field coefficients along an actual run:
/// `t, K1, K2, L1, L2, i1..i4, M1..P2`.
pub fn field_coefficients_csv(scenario: &Scenario) -> Result<String> {
    let engine = DynamicsEngine::new(scenario)?;
    let record = engine.integrate()?;
    let weights = crate::field::NoiseWeights::new(scenario)?;
    let mut out = String::from("t,K1,K2,L1,L2,i1,i2,i3,i4,M1,M2,N1,N2,O1,O2,P1,P2\n");
    for (idx, &t) in record.times.iter().enumerate() {
        let drive = coherent_drive(t, scenario);
        let conv = ConvolutionState {
            z: record.convolution[idx],
        };
        let ints = response_integrals(t, scenario, &conv);
        let ns = noise_coefficients(&weights, &ints);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            t,
            drive.k1,
            drive.k2,
            drive.l1,
            drive.l2,
            ints.i[0],
            ints.i[1],
            ints.i[2],
            ints.i[3],
            ns.m1,
            ns.m2,
            ns.n1,
            ns.n2,
            ns.o1,
            ns.o2,
            ns.p1,
            ns.p2
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::integrate;
    use crate::presets::preset;

    #[test]
    fn trajectory_csv_round_trips_and_is_deterministic() {
        let mut scenario = preset("fig2A").unwrap();
        scenario.numerics.t_end = 50.0;
        let a = trajectory_csv(&integrate(&scenario).unwrap());
        let b = trajectory_csv(&integrate(&scenario).unwrap());
        assert_eq!(a, b);
        let mut lines = a.lines();
        assert_eq!(lines.next().unwrap(), TRAJECTORY_HEADER);
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first[0].parse::<f64>().unwrap(), 0.0);
        // p0 column starts at exactly 1.
        assert_eq!(first[1].parse::<f64>().unwrap(), 1.0);
        for field in &first {
            field.parse::<f64>().unwrap();
        }
    }

    #[test]
    fn coefficient_dumps_have_matching_rows() {
        let mut scenario = preset("fig12").unwrap();
        scenario.numerics.t_end = 100.0;
        let ph = phonon_coefficients_csv(&scenario).unwrap();
        assert!(ph.starts_with("t,A,B,C,D,E,F,A1,B1,A2,B2,C1,D1,C2,D2\n"));
        let fld = field_coefficients_csv(&scenario).unwrap();
        let n = fld.lines().count();
        assert!(n > 100, "expected dense dump, got {n} lines");
    }
}
