//! Adaptive Simpson quadrature. Used only to cross-check the closed-form
//! kernel integrals and the auxiliary-ODE noise integrals; never on the
//! production evaluation path.

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// The interval is pre-split into uniform panels so damped oscillations at
/// the phonon and splitting frequencies are resolved before the adaptive
/// recursion starts.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    const PANELS: usize = 64;
    let width = (b - a) / PANELS as f64;
    let mut acc = 0.0;
    for i in 0..PANELS {
        let lo = a + i as f64 * width;
        let hi = lo + width;
        let m = 0.5 * (lo + hi);
        let (flo, fm, fhi) = (f(lo), f(m), f(hi));
        let whole = simpson(lo, hi, flo, fm, fhi);
        acc += adapt(f, lo, hi, flo, fm, fhi, whole, tol / PANELS as f64, 48);
    }
    acc
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
        + adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}
