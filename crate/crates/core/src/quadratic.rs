//! Quadratic functions and mappings in barycentric representation.
//!
//! A quadratic function on an `n`-dimensional affine space is a symmetric
//! `(n+1) x (n+1)` matrix `Δ` evaluated as `p ↦ pᵀ Δ p` on weights. The
//! representation is unique: no two symmetric matrices define the same
//! function on the hyperplane of weights.

use nalgebra::{DMatrix, DVector};

use crate::affine::{AffineFunction, Covector, HollowVector, Weight};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{center_rows, check_finite, max_abs, symmetrize};
use crate::tolerance::Tolerances;

/// Quadratic function `p ↦ pᵀ Δ p`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadFn {
    delta: DMatrix<f64>,
}

impl QuadFn {
    /// Builds a quadratic function from its barycentric matrix. Input within
    /// tolerance of symmetric is averaged with its transpose.
    pub fn new(delta: DMatrix<f64>) -> Result<Self> {
        Self::with_tolerance(delta, &Tolerances::default())
    }

    pub fn with_tolerance(delta: DMatrix<f64>, tol: &Tolerances) -> Result<Self> {
        if delta.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self {
            delta: symmetrize(&delta, tol)?,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(square_from_rows(rows)?)
    }

    pub(crate) fn from_matrix_unchecked(delta: DMatrix<f64>) -> Self {
        Self { delta }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            delta: DMatrix::zeros(n + 1, n + 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.delta.nrows() - 1
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.delta
    }

    /// Gram matrix `2Δ` of the associated bilinear form on the linear hull.
    pub fn gram(&self) -> DMatrix<f64> {
        &self.delta * 2.0
    }

    pub fn eval(&self, p: &Weight) -> Result<f64> {
        check_dim(self.delta.nrows(), p.as_vector().len())?;
        let p = p.as_vector();
        Ok(p.dot(&(&self.delta * p)))
    }

    /// The unique quadratic function with `δ(R_i) = S_ii` and
    /// `δ((R_i + R_j)/2) = S_ij`: `Δ_ij = 2 S_ij - ½ S_ii - ½ S_jj`.
    pub fn from_midpoint_values(values: DMatrix<f64>) -> Result<Self> {
        Self::from_midpoint_values_with(values, &Tolerances::default())
    }

    pub fn from_midpoint_values_with(values: DMatrix<f64>, tol: &Tolerances) -> Result<Self> {
        let s = symmetrize(&values, tol)?;
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let n1 = s.nrows();
        Ok(Self {
            delta: DMatrix::from_fn(n1, n1, |i, j| {
                2.0 * s[(i, j)] - 0.5 * s[(i, i)] - 0.5 * s[(j, j)]
            }),
        })
    }

    /// Values at the referential (diagonal) and at all midpoints.
    pub fn midpoint_values(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n + 1, n + 1, |i, j| {
            self.eval(&Weight::midpoint(n, i, j))
                .expect("same dimension")
        })
    }

    /// Affine function `c` viewed as a quadratic one: `Δ = ½(𝟙ᵀc + cᵀ𝟙)`.
    pub fn from_affine(c: &AffineFunction) -> Self {
        let c = c.coeffs();
        let n1 = c.len();
        Self {
            delta: DMatrix::from_fn(n1, n1, |i, j| 0.5 * (c[i] + c[j])),
        }
    }

    /// Homogeneous component at `p`: `(Id - p𝟙)ᵀ Δ (Id - p𝟙)`, the function
    /// `q ↦ (q - p)ᵀ Δ (q - p)`.
    pub fn homogenize_at(&self, p: &Weight) -> Result<QuadFn> {
        check_dim(self.delta.nrows(), p.as_vector().len())?;
        let n1 = self.delta.nrows();
        let proj = DMatrix::identity(n1, n1) - p.as_vector() * DMatrix::from_element(1, n1, 1.0);
        let h = proj.transpose() * &self.delta * &proj;
        Ok(Self {
            delta: (&h + h.transpose()) * 0.5,
        })
    }

    /// Representative of the same metric that vanishes on the whole
    /// referential: `Δ_ij - ½(Δ_ii + Δ_jj)`.
    pub fn reduce_at_referential(&self) -> QuadFn {
        let d = &self.delta;
        let n1 = d.nrows();
        Self {
            delta: DMatrix::from_fn(n1, n1, |i, j| {
                if i == j {
                    0.0
                } else {
                    d[(i, j)] - 0.5 * (d[(i, i)] + d[(j, j)])
                }
            }),
        }
    }

    /// Affine part of the decomposition `δ = affine + homogeneous at p`:
    /// coefficients `2pᵀΔ - (pᵀΔp)𝟙`.
    pub fn affine_part_at(&self, p: &Weight) -> Result<AffineFunction> {
        let value = self.eval(p)?;
        let row = (self.delta.transpose() * p.as_vector()) * 2.0;
        Ok(AffineFunction::from_vector(row.add_scalar(-value)).expect("finite"))
    }

    /// Gradient covector at `p`: canonical representative of `2pᵀΔ`.
    pub fn gradient_at(&self, p: &Weight) -> Result<Covector> {
        check_dim(self.delta.nrows(), p.as_vector().len())?;
        Ok(Covector::canonicalize(
            &((&self.delta * p.as_vector()) * 2.0),
        ))
    }

    /// Hessian pairing of two director vectors: `2 xᵀ Δ y`.
    pub fn hessian_pair(&self, x: &HollowVector, y: &HollowVector) -> Result<f64> {
        let n1 = self.delta.nrows();
        check_dim(n1, x.as_vector().len())?;
        check_dim(n1, y.as_vector().len())?;
        Ok(2.0 * x.as_vector().dot(&(&self.delta * y.as_vector())))
    }

    /// Gradient covector field `p ↦ ∇_p δ`, i.e. `2Δ` with centered rows.
    pub fn field(&self) -> CovectorField {
        CovectorField {
            f: center_rows(&(&self.delta * 2.0)),
        }
    }

    pub fn add(&self, other: &QuadFn) -> Result<QuadFn> {
        check_dim(self.delta.nrows(), other.delta.nrows())?;
        Ok(Self {
            delta: &self.delta + &other.delta,
        })
    }

    pub fn sub(&self, other: &QuadFn) -> Result<QuadFn> {
        check_dim(self.delta.nrows(), other.delta.nrows())?;
        Ok(Self {
            delta: &self.delta - &other.delta,
        })
    }

    pub fn scale(&self, t: f64) -> QuadFn {
        Self {
            delta: &self.delta * t,
        }
    }
}

pub(crate) fn square_from_rows(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let n1 = rows.len();
    if n1 == 0 {
        return Err(Error::Empty);
    }
    for r in rows {
        check_dim(n1, r.len())?;
    }
    Ok(DMatrix::from_fn(n1, n1, |i, j| rows[i][j]))
}

/// Affine covector field on weights: the value at `p` is the class of the row
/// `pᵀF`. Rows of `F` are kept centered (sum zero).
#[derive(Debug, Clone, PartialEq)]
pub struct CovectorField {
    f: DMatrix<f64>,
}

impl CovectorField {
    /// Any square matrix defines a field; rows are centered on construction.
    pub fn new(f: DMatrix<f64>) -> Result<Self> {
        if f.is_empty() {
            return Err(Error::Empty);
        }
        if f.nrows() != f.ncols() {
            return Err(Error::NotSquare {
                rows: f.nrows(),
                cols: f.ncols(),
            });
        }
        check_finite(f.iter())?;
        Ok(Self { f: center_rows(&f) })
    }

    /// Constant field equal to `df` everywhere.
    pub fn constant(df: &Covector) -> Self {
        let c = df.coeffs();
        let n1 = c.len();
        Self {
            f: DMatrix::from_fn(n1, n1, |_, j| c[j]),
        }
    }

    pub fn dim(&self) -> usize {
        self.f.nrows() - 1
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.f
    }

    pub fn at(&self, p: &Weight) -> Result<Covector> {
        check_dim(self.f.nrows(), p.as_vector().len())?;
        Ok(Covector::canonicalize(
            &(self.f.transpose() * p.as_vector()),
        ))
    }

    /// Skew part of the principal component on the hollow basis
    /// `x_i = R_i - R_0`: `x_iᵀ F x_j - x_jᵀ F x_i`.
    fn hollow_skew(&self, i: usize, j: usize) -> f64 {
        let f = &self.f;
        let pair = |a: usize, b: usize| f[(a, b)] - f[(a, 0)] - f[(0, b)] + f[(0, 0)];
        pair(i, j) - pair(j, i)
    }

    /// Whether the principal component is self-adjoint, i.e. the field is
    /// locally a gradient.
    pub fn is_closed(&self) -> bool {
        self.is_closed_with(&Tolerances::default())
    }

    pub fn is_closed_with(&self, tol: &Tolerances) -> bool {
        let eps = tol.sym(max_abs(&self.f));
        let n = self.dim();
        (1..=n).all(|i| ((i + 1)..=n).all(|j| self.hollow_skew(i, j).abs() <= eps))
    }

    /// The quadratic function vanishing at `R_0` whose gradient field is
    /// `self`. Values are obtained by integrating along segments from `R_0`
    /// with the trapezoid rule, exact for linear integrands.
    pub fn potential(&self) -> Result<QuadFn> {
        if !self.is_closed() {
            return Err(Error::NotClosed);
        }
        let n = self.dim();
        let e0 = Weight::vertex(n, 0);
        let start = self.f.transpose() * e0.as_vector();
        let value = |p: &Weight| -> f64 {
            let end = self.f.transpose() * p.as_vector();
            let x = p.as_vector() - e0.as_vector();
            0.5 * (&start + end).dot(&x)
        };
        let s = DMatrix::from_fn(n + 1, n + 1, |i, j| value(&Weight::midpoint(n, i, j)));
        let s = (&s + s.transpose()) * 0.5;
        QuadFn::from_midpoint_values(s)
    }
}

/// Quadratic mapping into an `m`-dimensional affine space. Entry `(i, j)` of
/// the grid is a weight of the target; evaluation is `Σ p_i p_j Δ_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadMap {
    source_dim: usize,
    target_dim: usize,
    // row-major (n+1)^2 grid of target weights
    grid: Vec<DVector<f64>>,
}

impl QuadMap {
    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn entry(&self, i: usize, j: usize) -> Weight {
        Weight::from_vector_unchecked(self.grid[i * (self.source_dim + 1) + j].clone())
    }

    /// Entrywise `Δ_ij = 2 S_ij - ½ S_ii - ½ S_jj` over a symmetric grid of
    /// target points `S_ij = δ((R_i + R_j)/2)`.
    pub fn from_midpoint_values(values: &[Vec<Weight>]) -> Result<Self> {
        let n1 = values.len();
        if n1 == 0 {
            return Err(Error::Empty);
        }
        let m1 = values[0].first().ok_or(Error::Empty)?.as_vector().len();
        let tol = Tolerances::default();
        for (i, row) in values.iter().enumerate() {
            check_dim(n1, row.len())?;
            for (j, s) in row.iter().enumerate() {
                check_dim(m1, s.as_vector().len())?;
                let other = values[j][i].as_vector();
                let diff = s.as_vector() - other;
                let scale = s.as_vector().amax().max(other.amax());
                if diff.iter().any(|d| d.abs() > tol.sym(scale)) {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
        }
        let s = |i: usize, j: usize| values[i][j].as_vector();
        let mut grid = Vec::with_capacity(n1 * n1);
        for i in 0..n1 {
            for j in 0..n1 {
                let sym = (s(i, j) + s(j, i)) * 0.5;
                grid.push(sym * 2.0 - s(i, i) * 0.5 - s(j, j) * 0.5);
            }
        }
        Ok(Self {
            source_dim: n1 - 1,
            target_dim: m1 - 1,
            grid,
        })
    }

    /// `Σ p_i p_j Δ_ij`. The result is a weight because `(Σ p_i)² = 1`.
    pub fn eval(&self, p: &Weight) -> Result<Weight> {
        let n1 = self.source_dim + 1;
        check_dim(n1, p.as_vector().len())?;
        let p = p.as_vector();
        let mut acc = DVector::zeros(self.target_dim + 1);
        for i in 0..n1 {
            for j in 0..n1 {
                acc.axpy(p[i] * p[j], &self.grid[i * n1 + j], 1.0);
            }
        }
        debug_assert!((acc.sum() - 1.0).abs() <= 1e-6 * (1.0 + acc.amax()));
        Ok(Weight::from_vector_unchecked(acc))
    }

    /// Validates the weight invariant of an evaluation explicitly.
    pub fn eval_checked(&self, p: &Weight) -> Result<Weight> {
        Weight::from_vector(self.eval(p)?.as_vector().clone())
    }

    /// Scalar component `k` of the map, as a quadratic function.
    pub fn component(&self, k: usize) -> QuadFn {
        let n1 = self.source_dim + 1;
        QuadFn::from_matrix_unchecked(DMatrix::from_fn(n1, n1, |i, j| self.grid[i * n1 + j][k]))
    }
}
