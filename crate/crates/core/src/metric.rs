//! Metrics as quadratic functions modulo affine ones.
//!
//! A metric is stored as its hollow symmetric squared-pseudodistance matrix
//! `D`. The representative vanishing on the referential is `Δ⁰ = -¼D` and its
//! Gram matrix on the linear hull is `G⁰ = -½D`.

use std::fmt;

use nalgebra::{DMatrix, DVector};

use crate::affine::{HollowVector, Weight, WeightMatrix};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{self, check_finite, max_abs};
use crate::quadratic::{square_from_rows, QuadFn};
use crate::tolerance::Tolerances;

/// Inertia index `(π, ν, ρ)` of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct InertiaIndex {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl InertiaIndex {
    pub fn new(positive: usize, negative: usize, null: usize) -> Self {
        Self {
            positive,
            negative,
            null,
        }
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.null
    }
}

impl fmt::Display for InertiaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.positive, self.negative, self.null)
    }
}

/// A metric on an `n`-dimensional affine space, given by its hollow
/// squared-pseudodistance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Metric {
    d: DMatrix<f64>,
    tol: Tolerances,
}

impl Metric {
    /// Accepts `D` if it is hollow symmetric within tolerance, then
    /// symmetrizes it and zeroes the diagonal.
    pub fn new(d: DMatrix<f64>) -> Result<Self> {
        Self::with_tolerance(d, Tolerances::default())
    }

    pub fn with_tolerance(d: DMatrix<f64>, tol: Tolerances) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::Empty);
        }
        check_finite(d.iter())?;
        let mut d = linalg::symmetrize(&d, &tol)?;
        let eps = tol.sym(max_abs(&d));
        for i in 0..d.nrows() {
            let value = d[(i, i)];
            if value.abs() > eps {
                return Err(Error::NonHollowDiagonal { index: i, value });
            }
            d[(i, i)] = 0.0;
        }
        Ok(Self { d, tol })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(square_from_rows(rows)?)
    }

    fn from_hollow(d: DMatrix<f64>, tol: Tolerances) -> Self {
        Self { d, tol }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_hollow(DMatrix::zeros(n + 1, n + 1), Tolerances::default())
    }

    /// The metric of a quadratic function: `D = -4 · reduce(Δ)`.
    pub fn from_quad(delta: &QuadFn) -> Self {
        let d = delta.reduce_at_referential().matrix() * -4.0;
        Self::from_hollow(d, Tolerances::default())
    }

    pub fn with_tolerances(mut self, tol: Tolerances) -> Self {
        self.tol = tol;
        self
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn dim(&self) -> usize {
        self.d.nrows() - 1
    }

    /// The squared-pseudodistance matrix `D`.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.d
    }

    pub fn max_abs(&self) -> f64 {
        max_abs(&self.d)
    }

    /// Representative `δ⁰ = -¼D` vanishing on the referential.
    pub fn reduced_representative(&self) -> QuadFn {
        QuadFn::from_matrix_unchecked(&self.d * -0.25)
    }

    /// Gram matrix `G⁰ = -½D` of the reduced representative.
    pub fn reduced_gram(&self) -> DMatrix<f64> {
        &self.d * -0.5
    }

    /// Hessian bilinear form on director vectors: `g(x, y) = -½ xᵀDy`.
    pub fn hessian_pair(&self, x: &HollowVector, y: &HollowVector) -> Result<f64> {
        let n1 = self.d.nrows();
        check_dim(n1, x.as_vector().len())?;
        check_dim(n1, y.as_vector().len())?;
        Ok(-0.5 * x.as_vector().dot(&(&self.d * y.as_vector())))
    }

    /// `d²(p, q) = -½ (q - p)ᵀ D (q - p)`.
    pub fn sq_pseudodistance(&self, p: &Weight, q: &Weight) -> Result<f64> {
        let x = p.vector_to(q)?;
        self.hessian_pair(&x, &x)
    }

    /// Representative of the metric homogeneous at `p`: its value at `q` is
    /// `½ d²(p, q)`.
    pub fn half_sq_fn_at(&self, p: &Weight) -> Result<QuadFn> {
        self.reduced_representative().homogenize_at(p)
    }

    /// Gram matrix of the hessian in the basis `R_0R_1, ..., R_0R_n`.
    pub fn hessian_restriction(&self) -> DMatrix<f64> {
        self.hessian_restriction_at(0)
    }

    /// Gram matrix of the hessian in the basis `R_kR_i`, `i ≠ k`.
    pub fn hessian_restriction_at(&self, base: usize) -> DMatrix<f64> {
        let n = self.dim();
        assert!(base <= n);
        let idx: Vec<usize> = (0..=n).filter(|&i| i != base).collect();
        let d = &self.d;
        DMatrix::from_fn(n, n, |a, b| {
            let (i, j) = (idx[a], idx[b]);
            0.5 * (d[(base, i)] + d[(base, j)] - d[(i, j)])
        })
    }

    /// Spectral cutoff `τ_eig` used to classify eigenvalues of the hessian
    /// restriction.
    pub fn eigenvalue_cutoff(&self) -> f64 {
        let ev = linalg::symmetric_eigenvalues(&self.hessian_restriction());
        let max = ev.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        self.tol.eig(self.dim(), max)
    }

    pub fn inertia(&self) -> InertiaIndex {
        linalg::spectral_inertia(&self.hessian_restriction(), &self.tol)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.inertia().null == 0
    }

    /// Bordered matrix `[[D, 𝟙], [𝟙ᵀ, 0]]`.
    pub fn bordered_matrix(&self) -> DMatrix<f64> {
        let n1 = self.d.nrows();
        DMatrix::from_fn(n1 + 1, n1 + 1, |i, j| match (i < n1, j < n1) {
            (true, true) => self.d[(i, j)],
            (false, false) => 0.0,
            _ => 1.0,
        })
    }

    pub fn bordered_determinant(&self) -> f64 {
        self.bordered_matrix().determinant()
    }

    /// Determinant-based non-degeneracy test, used as a cross-check of
    /// [`Metric::is_nondegenerate`].
    pub fn bordered_is_invertible(&self) -> bool {
        let norm = self.max_abs().max(1.0);
        self.bordered_determinant().abs() > self.tol.det(norm, self.dim())
    }

    /// Basis of the radical: director vectors `x` with `g(x, ·) = 0`,
    /// equivalently hollow solutions of `D x ∈ ℝ𝟙`.
    pub fn radical_basis(&self) -> Vec<HollowVector> {
        let n = self.dim();
        if n == 0 {
            return Vec::new();
        }
        let eig = self.hessian_restriction().symmetric_eigen();
        let max = eig.eigenvalues.amax();
        let cut = self.tol.eig(n, max);
        eig.eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, l)| l.abs() <= cut)
            .map(|(k, _)| {
                let y = eig.eigenvectors.column(k);
                let mut x = DVector::zeros(n + 1);
                x[0] = -y.sum();
                x.rows_mut(1, n).copy_from(&y);
                HollowVector::from_vector_unchecked(x)
            })
            .collect()
    }

    /// Realizes the metric as a point configuration in a pseudo-Euclidean
    /// space of signature `(π, ν)`, with `R_0` at the origin.
    pub fn embed(&self) -> Embedding {
        let n = self.dim();
        let mut points = vec![vec![]; n + 1];
        if n == 0 {
            return Embedding {
                points,
                signature: Vec::new(),
                inertia: InertiaIndex::default(),
            };
        }
        let eig = self.hessian_restriction().symmetric_eigen();
        let max = eig.eigenvalues.amax();
        let cut = self.tol.eig(n, max);

        let mut order: Vec<usize> = (0..n).filter(|&k| eig.eigenvalues[k].abs() > cut).collect();
        // positive directions first, each group by decreasing magnitude
        order.sort_by(|&a, &b| {
            let (la, lb) = (eig.eigenvalues[a], eig.eigenvalues[b]);
            lb.signum()
                .total_cmp(&la.signum())
                .then(lb.abs().total_cmp(&la.abs()))
        });
        let signature: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k].signum()).collect();

        points[0] = vec![0.0; order.len()];
        for (i, point) in points.iter_mut().enumerate().skip(1) {
            *point = order
                .iter()
                .map(|&k| eig.eigenvectors[(i - 1, k)] * eig.eigenvalues[k].abs().sqrt())
                .collect();
        }
        let positive = signature.iter().filter(|s| **s > 0.0).count();
        let negative = signature.len() - positive;
        Embedding {
            points,
            signature,
            inertia: InertiaIndex::new(positive, negative, n - order.len()),
        }
    }

    /// Pull-back along an affine map `C` from a space `B` into this one:
    /// `D̄_ij = d²(C R_i, C R_j)`.
    pub fn pullback(&self, c: &WeightMatrix) -> Result<Metric> {
        check_dim(self.d.nrows(), c.matrix().nrows())?;
        let n1 = c.matrix().ncols();
        let images: Vec<Weight> = (0..n1).map(|j| c.image_of_vertex(j)).collect();
        let mut d = DMatrix::zeros(n1, n1);
        for i in 0..n1 {
            for j in (i + 1)..n1 {
                let v = self.sq_pseudodistance(&images[i], &images[j])?;
                d[(i, j)] = v;
                d[(j, i)] = v;
            }
        }
        Ok(Self::from_hollow(d, self.tol))
    }
}

/// Point configuration realizing a metric.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    /// Coordinates of `R_0, ..., R_n`, each of length `π + ν`.
    pub points: Vec<Vec<f64>>,
    /// Signs of the coordinate axes: `+1` for the first `π`, `-1` after.
    pub signature: Vec<f64>,
    pub inertia: InertiaIndex,
}

impl Embedding {
    pub fn pseudo_inner(&self, a: &[f64], b: &[f64]) -> f64 {
        self.signature
            .iter()
            .zip(a.iter().zip(b))
            .map(|(s, (x, y))| s * x * y)
            .sum()
    }

    pub fn sq_pseudodistance(&self, i: usize, j: usize) -> f64 {
        let diff: Vec<f64> = self.points[i]
            .iter()
            .zip(&self.points[j])
            .map(|(a, b)| a - b)
            .collect();
        self.pseudo_inner(&diff, &diff)
    }

    pub fn reconstructed_matrix(&self) -> DMatrix<f64> {
        let n1 = self.points.len();
        DMatrix::from_fn(n1, n1, |i, j| {
            if i == j {
                0.0
            } else {
                self.sq_pseudodistance(i, j)
            }
        })
    }

    /// `max |D - D_reconstructed|`.
    pub fn reconstruction_error(&self, metric: &Metric) -> f64 {
        max_abs(&(metric.matrix() - self.reconstructed_matrix()))
    }
}
