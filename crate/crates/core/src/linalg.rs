use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::metric::InertiaIndex;
use crate::tolerance::Tolerances;

pub(crate) fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

pub(crate) fn max_abs_vec(v: &DVector<f64>) -> f64 {
    v.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

pub(crate) fn check_finite<'a>(values: impl IntoIterator<Item = &'a f64>) -> Result<()> {
    match values.into_iter().position(|x| !x.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

pub(crate) fn check_square(m: &DMatrix<f64>) -> Result<()> {
    if m.nrows() == m.ncols() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        })
    }
}

/// Averages `m` with its transpose if it is symmetric within tolerance.
pub(crate) fn symmetrize(m: &DMatrix<f64>, tol: &Tolerances) -> Result<DMatrix<f64>> {
    check_square(m)?;
    check_finite(m.iter())?;
    let eps = tol.sym(max_abs(m));
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            if (m[(i, j)] - m[(j, i)]).abs() > eps {
                return Err(Error::Asymmetric { row: i, col: j });
            }
        }
    }
    Ok((m + m.transpose()) * 0.5)
}

/// Subtracts the mean of each row so every row sums to zero.
pub(crate) fn center_rows(m: &DMatrix<f64>) -> DMatrix<f64> {
    let mut out = m.clone();
    if m.ncols() == 0 {
        return out;
    }
    for mut row in out.row_iter_mut() {
        let mean = row.sum() / row.len() as f64;
        row.add_scalar_mut(-mean);
    }
    out
}

/// Eigenvalues of a symmetric matrix, ascending.
pub(crate) fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    if m.nrows() == 0 {
        return Vec::new();
    }
    let mut ev: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

pub(crate) fn spectral_inertia(m: &DMatrix<f64>, tol: &Tolerances) -> InertiaIndex {
    classify(&symmetric_eigenvalues(m), m.nrows(), tol)
}

pub(crate) fn classify(eigenvalues: &[f64], dim: usize, tol: &Tolerances) -> InertiaIndex {
    let max = eigenvalues.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let cut = tol.eig(dim, max);
    let mut index = InertiaIndex::default();
    for &l in eigenvalues {
        if l > cut {
            index.positive += 1;
        } else if l < -cut {
            index.negative += 1;
        } else {
            index.null += 1;
        }
    }
    index
}

/// LU factorization with partial pivoting that refuses tiny pivots.
#[derive(Debug, Clone)]
pub(crate) struct PivotedLu {
    lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
}

impl PivotedLu {
    pub(crate) fn new(m: &DMatrix<f64>, tol: &Tolerances) -> Option<Self> {
        let floor = tol.pivot(max_abs(m));
        let lu = m.clone().lu();
        let u = lu.u();
        let ok = (0..u.nrows()).all(|i| u[(i, i)].abs() > floor);
        ok.then_some(Self { lu })
    }

    pub(crate) fn solve(&self, b: &DVector<f64>) -> DVector<f64> {
        // Pivots were checked at construction, so the solve cannot fail.
        self.lu
            .solve(b)
            .expect("factorization checked non-singular")
    }
}
