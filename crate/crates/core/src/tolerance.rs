//! Numerical thresholds.
//!
//! Every threshold in the crate is derived from a single base value
//! (default `1e-9`) and scaled by the magnitude of the data it is applied to.

/// Tolerance policy shared by all validation and classification routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub base: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            base: Self::DEFAULT_BASE,
        }
    }
}

impl Tolerances {
    pub const DEFAULT_BASE: f64 = 1e-9;

    pub fn new(base: f64) -> Self {
        Self { base }
    }

    /// Weight / hollow sum checks: `base * (1 + max|entry|)`.
    pub fn sum(&self, scale: f64) -> f64 {
        self.base * (1.0 + scale)
    }

    /// Symmetry checks: `base * (1 + max|entry|)`.
    pub fn sym(&self, scale: f64) -> f64 {
        self.base * (1.0 + scale)
    }

    /// Spectral cutoff for inertia classification: `base * dim * max|λ|`.
    pub fn eig(&self, dim: usize, max_abs_eigenvalue: f64) -> f64 {
        self.base * dim as f64 * max_abs_eigenvalue
    }

    /// Quadric membership defect: `10 * base * (1 + max|D|)`.
    pub fn quadric(&self, max_abs_d: f64) -> f64 {
        10.0 * self.base * (1.0 + max_abs_d)
    }

    /// Functoriality defect, same scale as [`Tolerances::quadric`].
    pub fn functorial(&self, max_abs_d: f64) -> f64 {
        self.quadric(max_abs_d)
    }

    /// Embedding reconstruction error: `10 * base * max|D|`.
    pub fn embed(&self, max_abs_d: f64) -> f64 {
        10.0 * self.base * max_abs_d
    }

    /// Pivot floor for factorizations of the Cayley-Menger matrix:
    /// `1e-3 * base * max|M|` (i.e. `1e-12 * max|M|` at the default base).
    pub fn pivot(&self, max_abs_m: f64) -> f64 {
        1e-3 * self.base * max_abs_m
    }

    /// Determinant floor for the bordered matrix of an `n`-dimensional metric:
    /// `base * norm^(n+2)`.
    pub fn det(&self, max_norm: f64, n: usize) -> f64 {
        self.base * max_norm.powi(n as i32 + 2)
    }
}
