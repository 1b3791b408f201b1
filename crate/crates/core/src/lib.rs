//! Barycentric calculus on metric affine spaces of arbitrary signature.
//!
//! All data is expressed relative to one fixed referential `(R_0, ..., R_n)`
//! of an `n`-dimensional affine space:
//!
//! - [`affine`]: weights, hollow vectors, affine functions and maps.
//! - [`quadratic`]: quadratic functions `p ↦ pᵀΔp`, homogenization,
//!   gradient fields and their potentials.
//! - [`metric`]: metrics as hollow squared-pseudodistance matrices `D`,
//!   inertia, radical and pseudo-Euclidean embedding.
//! - [`cayley_menger`]: the Cayley-Menger form `[[½D, 𝟙ᵀ], [𝟙, 0]]`,
//!   quadratic coordinates, linear localization, sphere fitting and
//!   functoriality under affine maps.
//!
//! ```
//! use cmgeom::{CmForm, Metric};
//!
//! let m = Metric::from_rows(&[
//!     vec![0.0, 8.0, 24.0],
//!     vec![8.0, 0.0, 48.0],
//!     vec![24.0, 48.0, 0.0],
//! ])?;
//! let fit = CmForm::new(&m).sphere_fit(&[1.0, 9.0, 1.0])?;
//! assert!((fit.r_squared - 4.0).abs() < 1e-12);
//! # Ok::<(), cmgeom::Error>(())
//! ```

pub mod affine;
pub mod cayley_menger;
mod error;
mod linalg;
pub mod metric;
pub mod quadratic;
mod tolerance;

pub use affine::{
    bary_combine, invert_point, vector_between, AffineFunction, Covector, HollowVector, Weight,
    WeightMatrix,
};
pub use cayley_menger::{
    cm_coordinates, functoriality_check, point_functional, pushforward_matrix, CmForm, Functional,
    Functoriality, HullElement, HyperbolicSplit, Localization, SphereFit,
};
pub use error::{Error, Result};
pub use metric::{Embedding, InertiaIndex, Metric};
pub use quadratic::{CovectorField, QuadFn, QuadMap};
pub use tolerance::Tolerances;

pub use nalgebra::{DMatrix, DVector};
