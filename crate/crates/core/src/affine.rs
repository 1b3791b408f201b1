//! Barycentric representation of an `n`-dimensional affine space.
//!
//! Everything is expressed in coordinates relative to one fixed referential
//! `(R_0, ..., R_n)`: points are [`Weight`]s (columns summing to 1), director
//! vectors are [`HollowVector`]s (columns summing to 0), affine functions are
//! coefficient rows and affine maps are column-stochastic-like
//! [`WeightMatrix`]es.

use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};

use crate::error::{check_dim, Error, Result};
use crate::linalg::{check_finite, max_abs, max_abs_vec};
use crate::tolerance::Tolerances;

/// Barycentric coordinates of a point; entries sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight(DVector<f64>);

/// Coordinates of a director vector; entries sum to 0.
#[derive(Debug, Clone, PartialEq)]
pub struct HollowVector(DVector<f64>);

/// Coefficient row `c` of an affine function `p ↦ c·p`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineFunction(DVector<f64>);

/// Gradient covector of an affine function, stored as the sum-zero
/// representative of its class modulo the unit row.
#[derive(Debug, Clone, PartialEq)]
pub struct Covector(DVector<f64>);

/// Affine map from an `n`-space to an `m`-space: `(m+1) x (n+1)` matrix whose
/// columns are the images of the source referential.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix(DMatrix<f64>);

fn sum_check(v: &DVector<f64>, target: f64, tol: &Tolerances) -> Result<f64> {
    if v.is_empty() {
        return Err(Error::Empty);
    }
    check_finite(v.iter())?;
    let sum = v.sum();
    if (sum - target).abs() > tol.sum(max_abs_vec(v)) {
        Err(if target == 0.0 {
            Error::NotHollow { sum }
        } else {
            Error::NotAWeight { sum }
        })
    } else {
        Ok(sum)
    }
}

impl Weight {
    pub fn new(entries: impl Into<Vec<f64>>) -> Result<Self> {
        Self::with_tolerance(entries, &Tolerances::default())
    }

    pub fn with_tolerance(entries: impl Into<Vec<f64>>, tol: &Tolerances) -> Result<Self> {
        let v = DVector::from_vec(entries.into());
        sum_check(&v, 1.0, tol)?;
        Ok(Self(v))
    }

    pub fn from_vector(v: DVector<f64>) -> Result<Self> {
        sum_check(&v, 1.0, &Tolerances::default())?;
        Ok(Self(v))
    }

    pub(crate) fn from_vector_unchecked(v: DVector<f64>) -> Self {
        Self(v)
    }

    /// The referential point `R_i` of an `n`-dimensional space.
    pub fn vertex(n: usize, i: usize) -> Self {
        assert!(i <= n, "vertex index {i} out of range for dimension {n}");
        let mut v = DVector::zeros(n + 1);
        v[i] = 1.0;
        Self(v)
    }

    /// Midpoint `(R_i + R_j) / 2`.
    pub fn midpoint(n: usize, i: usize, j: usize) -> Self {
        let mut v = Self::vertex(n, i).0 * 0.5;
        v[j] += 0.5;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn as_vector(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    /// Director vector from `self` to `q`.
    pub fn vector_to(&self, q: &Weight) -> Result<HollowVector> {
        vector_between(self, q)
    }

    /// Affine combination `(1 - t) self + t q`.
    pub fn lerp(&self, q: &Weight, t: f64) -> Result<Weight> {
        check_dim(self.0.len(), q.0.len())?;
        Ok(Self(&self.0 * (1.0 - t) + &q.0 * t))
    }

    /// Translate the point by a director vector.
    pub fn translate(&self, x: &HollowVector) -> Result<Weight> {
        check_dim(self.0.len(), x.0.len())?;
        Ok(Self(&self.0 + &x.0))
    }
}

impl HollowVector {
    pub fn new(entries: impl Into<Vec<f64>>) -> Result<Self> {
        Self::with_tolerance(entries, &Tolerances::default())
    }

    pub fn with_tolerance(entries: impl Into<Vec<f64>>, tol: &Tolerances) -> Result<Self> {
        let v = DVector::from_vec(entries.into());
        sum_check(&v, 0.0, tol)?;
        Ok(Self(v))
    }

    pub fn from_vector(v: DVector<f64>) -> Result<Self> {
        sum_check(&v, 0.0, &Tolerances::default())?;
        Ok(Self(v))
    }

    pub(crate) fn from_vector_unchecked(v: DVector<f64>) -> Self {
        Self(v)
    }

    pub fn zero(n: usize) -> Self {
        Self(DVector::zeros(n + 1))
    }

    /// `R_i - R_0`, the `i`-th vector of the standard hollow basis (`1 <= i <= n`).
    pub fn basis(n: usize, i: usize) -> Self {
        assert!(
            i >= 1 && i <= n,
            "hollow basis index {i} out of range 1..={n}"
        );
        let mut v = DVector::zeros(n + 1);
        v[0] = -1.0;
        v[i] = 1.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn as_vector(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    pub fn scale(&self, t: f64) -> Self {
        Self(&self.0 * t)
    }
}

impl Add for &HollowVector {
    type Output = HollowVector;

    fn add(self, rhs: Self) -> HollowVector {
        assert_eq!(
            self.0.len(),
            rhs.0.len(),
            "hollow vector dimension mismatch"
        );
        HollowVector(&self.0 + &rhs.0)
    }
}

impl Sub for &HollowVector {
    type Output = HollowVector;

    fn sub(self, rhs: Self) -> HollowVector {
        assert_eq!(
            self.0.len(),
            rhs.0.len(),
            "hollow vector dimension mismatch"
        );
        HollowVector(&self.0 - &rhs.0)
    }
}

impl Neg for &HollowVector {
    type Output = HollowVector;

    fn neg(self) -> HollowVector {
        HollowVector(-&self.0)
    }
}

impl Mul<f64> for &HollowVector {
    type Output = HollowVector;

    fn mul(self, rhs: f64) -> HollowVector {
        self.scale(rhs)
    }
}

/// Barycentric combination `Σ w_i · points_i`.
pub fn bary_combine(points: &[Weight], w: &Weight) -> Result<Weight> {
    let first = points.first().ok_or(Error::Empty)?;
    check_dim(points.len(), w.0.len())?;
    let mut acc = DVector::zeros(first.0.len());
    for (p, &wi) in points.iter().zip(w.0.iter()) {
        check_dim(first.0.len(), p.0.len())?;
        acc.axpy(wi, &p.0, 1.0);
    }
    Ok(Weight(acc))
}

/// Director vector `q - p`.
pub fn vector_between(p: &Weight, q: &Weight) -> Result<HollowVector> {
    check_dim(p.0.len(), q.0.len())?;
    Ok(HollowVector(&q.0 - &p.0))
}

/// Point reflection `2·center - q`.
pub fn invert_point(center: &Weight, q: &Weight) -> Result<Weight> {
    check_dim(center.0.len(), q.0.len())?;
    Ok(Weight(&center.0 * 2.0 - &q.0))
}

impl AffineFunction {
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Result<Self> {
        let v = DVector::from_vec(coeffs.into());
        if v.is_empty() {
            return Err(Error::Empty);
        }
        check_finite(v.iter())?;
        Ok(Self(v))
    }

    pub fn from_vector(v: DVector<f64>) -> Result<Self> {
        Self::new(v.as_slice().to_vec())
    }

    /// The constant function 1.
    pub fn unit(n: usize) -> Self {
        Self(DVector::from_element(n + 1, 1.0))
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn eval(&self, p: &Weight) -> Result<f64> {
        check_dim(self.0.len(), p.0.len())?;
        Ok(self.0.dot(&p.0))
    }

    /// Gradient covector: the class of the coefficients modulo the unit row.
    pub fn differential(&self) -> Covector {
        Covector::canonicalize(&self.0)
    }

    pub fn add_constant(&self, lambda: f64) -> Self {
        Self(self.0.add_scalar(lambda))
    }
}

impl Covector {
    /// Canonical representative `c - mean(c)·𝟙` of the class `c + ℝ𝟙`.
    pub fn canonicalize(c: &DVector<f64>) -> Self {
        if c.is_empty() {
            return Self(c.clone());
        }
        let mean = c.sum() / c.len() as f64;
        Self(c.add_scalar(-mean))
    }

    pub fn zero(n: usize) -> Self {
        Self(DVector::zeros(n + 1))
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    /// Value of the covector on a director vector.
    pub fn pair(&self, x: &HollowVector) -> Result<f64> {
        check_dim(self.0.len(), x.0.len())?;
        Ok(self.0.dot(&x.0))
    }
}

impl WeightMatrix {
    /// Validates that every column sums to 1.
    pub fn new(c: DMatrix<f64>) -> Result<Self> {
        Self::with_tolerance(c, &Tolerances::default())
    }

    pub fn with_tolerance(c: DMatrix<f64>, tol: &Tolerances) -> Result<Self> {
        if c.nrows() == 0 || c.ncols() == 0 {
            return Err(Error::Empty);
        }
        check_finite(c.iter())?;
        let eps = tol.sum(max_abs(&c));
        for (column, col) in c.column_iter().enumerate() {
            let sum = col.sum();
            if (sum - 1.0).abs() > eps {
                return Err(Error::ColumnSum { column, sum });
            }
        }
        Ok(Self(c))
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let nrows = rows.len();
        if nrows == 0 {
            return Err(Error::Empty);
        }
        let ncols = rows[0].len();
        for r in rows {
            check_dim(ncols, r.len())?;
        }
        Self::new(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n + 1, n + 1))
    }

    /// Constant map from an `n_source`-space onto the point `c`.
    pub fn constant(c: &Weight, n_source: usize) -> Self {
        Self(DMatrix::from_fn(c.0.len(), n_source + 1, |i, _| c.0[i]))
    }

    /// Map sending `R_j` to `R_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n1 = perm.len();
        let mut m = DMatrix::zeros(n1, n1);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = 1.0;
        }
        Self(m)
    }

    /// Dimension of the source space.
    pub fn source_dim(&self) -> usize {
        self.0.ncols() - 1
    }

    /// Dimension of the target space.
    pub fn target_dim(&self) -> usize {
        self.0.nrows() - 1
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    /// Image of the referential point `R_j`.
    pub fn image_of_vertex(&self, j: usize) -> Weight {
        Weight(self.0.column(j).into_owned())
    }

    pub fn apply(&self, p: &Weight) -> Result<Weight> {
        check_dim(self.0.ncols(), p.0.len())?;
        Ok(Weight(&self.0 * &p.0))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &WeightMatrix) -> Result<WeightMatrix> {
        check_dim(self.0.ncols(), inner.0.nrows())?;
        Ok(Self(&self.0 * &inner.0))
    }
}
