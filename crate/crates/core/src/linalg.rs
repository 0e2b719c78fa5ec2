//! Small dense eigensolver for the positivity monitor.

use num_complex::Complex64;

/// Eigenvalues of a 3x3 hermitian matrix via the real symmetric embedding
/// `[[X, -Y], [Y, X]]` (H = X + iY), cyclic Jacobi sweeps. Each eigenvalue
/// of H appears twice in the embedding; the returned triple is sorted
/// ascending.
pub fn hermitian3_eigenvalues(m: &[[Complex64; 3]; 3]) -> [f64; 3] {
    let mut a = [[0.0f64; 6]; 6];
    for r in 0..3 {
        for c in 0..3 {
            a[r][c] = m[r][c].re;
            a[r + 3][c + 3] = m[r][c].re;
            a[r][c + 3] = -m[r][c].im;
            a[r + 3][c] = m[r][c].im;
        }
    }
    jacobi_symmetric(&mut a);
    let mut evs = [a[0][0], a[1][1], a[2][2], a[3][3], a[4][4], a[5][5]];
    evs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    // Doubled spectrum: take one of each pair.
    [evs[0], evs[2], evs[4]]
}

fn jacobi_symmetric(a: &mut [[f64; 6]; 6]) {
    const SWEEPS: usize = 30;
    for _ in 0..SWEEPS {
        let mut off = 0.0;
        for p in 0..6 {
            for q in (p + 1)..6 {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-30 {
            return;
        }
        for p in 0..6 {
            for q in (p + 1)..6 {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..6 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..6 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
}
