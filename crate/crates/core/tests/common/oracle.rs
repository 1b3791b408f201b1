//! Reference spectral routines, independent of the library's linear algebra.

use cmgeom::{DMatrix, InertiaIndex};

pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, x| a.max(x.abs()))
}

/// Cyclic Jacobi eigenvalue iteration for symmetric matrices. Independent of
/// the factorization used by the library.
pub fn jacobi_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let n = m.nrows();
    let mut a = m.clone();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        if off.sqrt() <= 1e-15 * (1.0 + max_abs(&a)) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(|x, y| x.total_cmp(y));
    ev
}

/// Inertia by the Jacobi oracle with the same relative cutoff as the library.
pub fn oracle_inertia(m: &DMatrix<f64>) -> InertiaIndex {
    let ev = jacobi_eigenvalues(m);
    let max = ev.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let cut = 1e-9 * m.nrows() as f64 * max;
    InertiaIndex::new(
        ev.iter().filter(|&&l| l > cut).count(),
        ev.iter().filter(|&&l| l < -cut).count(),
        ev.iter().filter(|&&l| l.abs() <= cut).count(),
    )
}
