//! The Cayley-Menger bilinear form of a metric.
//!
//! For a metric `m` with squared-distance matrix `D` on an `n`-dimensional
//! space, the affine functionals on `m`-quadratic functions form an
//! `(n+2)`-dimensional space with basis `(v_{R_0}, ..., v_{R_n}, v_m)`:
//! evaluation at each referential point plus the functional reading off the
//! normalization. The Cayley-Menger form has Gram matrix
//!
//! ```text
//! M = [ ½D  𝟙ᵀ ]
//!     [ 𝟙   0  ]
//! ```
//!
//! in that basis. Every point `p` maps to an isotropic functional `v_p`, and
//! `CM(v_p, v_q) = ½ d²(p, q)`.
//!
//! Two coordinate systems are in play and they are not dual to each other:
//! [`Functional`] holds coordinates in the `v` basis, while [`HullElement`]
//! holds the pairing values of a linear-hull element against the `v` basis
//! (for an `m`-quadratic function `δ`: `(δ(R_0), ..., δ(R_n), 1)`). `M` maps
//! the first kind to the second.

use nalgebra::{DMatrix, DVector};

use crate::affine::{HollowVector, Weight, WeightMatrix};
use crate::error::{check_dim, Error, Result};
use crate::linalg::{self, max_abs, PivotedLu};
use crate::metric::{InertiaIndex, Metric};

/// Coordinates in the basis `(v_{R_0}, ..., v_{R_n}, v_m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional(DVector<f64>);

/// Pairing values `(⟨v_{R_0}, ·⟩, ..., ⟨v_{R_n}, ·⟩, ⟨v_m, ·⟩)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HullElement(DVector<f64>);

impl Functional {
    pub fn new(coords: impl Into<Vec<f64>>) -> Result<Self> {
        let v = DVector::from_vec(coords.into());
        if v.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: v.len(),
            });
        }
        linalg::check_finite(v.iter())?;
        Ok(Self(v))
    }

    /// `v_{R_i}`.
    pub fn vertex(n: usize, i: usize) -> Self {
        assert!(i <= n);
        let mut v = DVector::zeros(n + 2);
        v[i] = 1.0;
        Self(v)
    }

    /// `v_m`, the normalization functional.
    pub fn normalization(n: usize) -> Self {
        let mut v = DVector::zeros(n + 2);
        v[n + 1] = 1.0;
        Self(v)
    }

    pub fn zero(n: usize) -> Self {
        Self(DVector::zeros(n + 2))
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 2
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    /// Coefficients on `v_{R_0}, ..., v_{R_n}`.
    pub fn point_part(&self) -> DVector<f64> {
        self.0.rows(0, self.0.len() - 1).into_owned()
    }

    /// Coefficient on `v_m`.
    pub fn normalization_part(&self) -> f64 {
        self.0[self.0.len() - 1]
    }

    pub fn scale(&self, t: f64) -> Self {
        Self(&self.0 * t)
    }

    pub fn add(&self, other: &Functional) -> Result<Self> {
        check_dim(self.0.len(), other.0.len())?;
        Ok(Self(&self.0 + &other.0))
    }

    pub fn sub(&self, other: &Functional) -> Result<Self> {
        check_dim(self.0.len(), other.0.len())?;
        Ok(Self(&self.0 - &other.0))
    }
}

impl HullElement {
    pub fn new(pairings: impl Into<Vec<f64>>) -> Result<Self> {
        let v = DVector::from_vec(pairings.into());
        if v.len() < 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: v.len(),
            });
        }
        linalg::check_finite(v.iter())?;
        Ok(Self(v))
    }

    /// The `m`-quadratic function taking `values[i]` at `R_i`: `[values; 1]`.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        let mut v = values.to_vec();
        v.push(1.0);
        Self::new(v)
    }

    /// `u_m`, the constant function 1: `(1, ..., 1, 0)`.
    pub fn unit(n: usize) -> Self {
        let mut v = DVector::from_element(n + 2, 1.0);
        v[n + 1] = 0.0;
        Self(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 2
    }

    pub fn pairings(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        self.0.as_slice()
    }

    /// Whether this is a genuine `m`-quadratic function (pairs to 1 with `v_m`).
    pub fn is_normalized(&self, eps: f64) -> bool {
        (self.0[self.0.len() - 1] - 1.0).abs() <= eps
    }
}

/// The Cayley-Menger form of a metric, with a cached factorization when the
/// metric is non-degenerate.
#[derive(Debug, Clone)]
pub struct CmForm {
    matrix: DMatrix<f64>,
    metric: Metric,
    lu: Option<PivotedLu>,
}

impl PartialEq for CmForm {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.metric == other.metric
    }
}

/// Result of recovering a point from Cayley-Menger coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Localization {
    pub point: Weight,
    /// Coefficient of `v_m` in the recovered functional.
    pub beta: f64,
    /// `CM⁻¹(h, h)` for `h = [δ; 1]`; zero iff `δ` are genuine coordinates.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphereFit {
    pub center: Weight,
    /// Signed squared radius; negative values occur in indefinite signatures.
    pub r_squared: f64,
}

impl SphereFit {
    pub fn radius(&self) -> Option<f64> {
        (self.r_squared >= 0.0).then(|| self.r_squared.sqrt())
    }
}

/// Coordinates of a functional in the decomposition
/// `α v_m + β v_q + ∇*_q(x)` (hyperbolic plane ⊕ director space).
#[derive(Debug, Clone, PartialEq)]
pub struct HyperbolicSplit {
    pub alpha: f64,
    pub beta: f64,
    pub direction: HollowVector,
}

impl CmForm {
    pub fn new(metric: &Metric) -> Self {
        let matrix = metric.bordered_matrix().map_with_location(|i, j, x| {
            let n1 = metric.dim() + 1;
            if i < n1 && j < n1 {
                0.5 * x
            } else {
                x
            }
        });
        let lu = PivotedLu::new(&matrix, metric.tolerances());
        Self {
            matrix,
            metric: metric.clone(),
            lu,
        }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    /// Whether the factorization succeeded, i.e. `M` is invertible.
    pub fn is_invertible(&self) -> bool {
        self.lu.is_some()
    }

    fn quadric_tolerance(&self) -> f64 {
        self.metric.tolerances().quadric(self.metric.max_abs())
    }

    pub fn pair(&self, f1: &Functional, f2: &Functional) -> Result<f64> {
        check_dim(self.matrix.nrows(), f1.0.len())?;
        check_dim(self.matrix.nrows(), f2.0.len())?;
        Ok(f1.0.dot(&(&self.matrix * &f2.0)))
    }

    /// `M f`, the linear-hull element paired to `f` by the form.
    pub fn apply(&self, f: &Functional) -> Result<HullElement> {
        check_dim(self.matrix.nrows(), f.0.len())?;
        Ok(HullElement(&self.matrix * &f.0))
    }

    /// `M⁻¹ h`.
    pub fn inverse_apply(&self, h: &HullElement) -> Result<Functional> {
        check_dim(self.matrix.nrows(), h.0.len())?;
        let lu = self.lu.as_ref().ok_or(Error::SingularCm)?;
        Ok(Functional(lu.solve(&h.0)))
    }

    /// Inverse form `h1ᵀ M⁻¹ h2`.
    pub fn inverse_pair(&self, h1: &HullElement, h2: &HullElement) -> Result<f64> {
        check_dim(self.matrix.nrows(), h1.0.len())?;
        let f2 = self.inverse_apply(h2)?;
        Ok(h1.0.dot(&f2.0))
    }

    /// `v_p = [p; -¼ pᵀDp]`, the evaluation functional at `p`.
    pub fn point_functional(&self, p: &Weight) -> Result<Functional> {
        point_functional(&self.metric, p)
    }

    /// `δ_i = ½ d²(R_i, p)` for `i = 0..=n`.
    pub fn coordinates(&self, p: &Weight) -> Result<Vec<f64>> {
        cm_coordinates(&self.metric, p)
    }

    /// Solves `M [p; β] = [δ; 1]`.
    pub fn localize(&self, delta: &[f64]) -> Result<Localization> {
        check_dim(self.dim() + 1, delta.len())?;
        let h = HullElement::from_values(delta)?;
        let f = self.inverse_apply(&h)?;
        let residual = h.0.dot(&f.0);
        Ok(Localization {
            point: Weight::from_vector_unchecked(f.point_part()),
            beta: f.normalization_part(),
            residual,
        })
    }

    /// The `m`-quadratic function with the given referential values written
    /// as `δ_center - ½r²`.
    pub fn sphere_fit(&self, values: &[f64]) -> Result<SphereFit> {
        check_dim(self.dim() + 1, values.len())?;
        let h = HullElement::from_values(values)?;
        let r_squared = -self.inverse_pair(&h, &h)?;
        let shifted: Vec<f64> = values.iter().map(|v| v + 0.5 * r_squared).collect();
        let center = self.localize(&shifted)?.point;
        Ok(SphereFit { center, r_squared })
    }

    /// Whether `f` lies on the quadric of point functionals:
    /// `CM(f, f) = 0` and `CM(f, v_m) = 1`.
    pub fn is_on_quadric(&self, f: &Functional) -> bool {
        let eps = self.quadric_tolerance();
        let Ok(ff) = self.pair(f, f) else {
            return false;
        };
        let fm = f.0.rows(0, self.dim() + 1).sum();
        ff.abs() <= eps && (fm - 1.0).abs() <= eps
    }

    /// `τ_quadric` for this form's metric.
    pub fn quadric_cutoff(&self) -> f64 {
        self.quadric_tolerance()
    }

    /// Spectral cutoff used by [`CmForm::signature`].
    pub fn eigenvalue_cutoff(&self) -> f64 {
        let ev = linalg::symmetric_eigenvalues(&self.matrix);
        let max = ev.iter().fold(0.0f64, |a, x| a.max(x.abs()));
        self.metric.tolerances().eig(self.matrix.nrows(), max)
    }

    /// Spectral inertia of `M`.
    pub fn signature(&self) -> InertiaIndex {
        linalg::spectral_inertia(&self.matrix, self.metric.tolerances())
    }

    /// `∇*_q(x)`: the functional acting as the derivative along `x` at `q`,
    /// vanishing on `u_m` and on `δ^m_q`.
    pub fn gradient_lift(&self, q: &Weight, x: &HollowVector) -> Result<Functional> {
        let n1 = self.dim() + 1;
        check_dim(n1, x.as_vector().len())?;
        let h = self.coordinates(q)?;
        let t: f64 = -x.as_slice().iter().zip(&h).map(|(a, b)| a * b).sum::<f64>();
        let mut v = DVector::zeros(n1 + 1);
        v.rows_mut(0, n1).copy_from(x.as_vector());
        v[n1] = t;
        Ok(Functional(v))
    }

    /// Splits `f = α v_m + β v_q + ∇*_q(x)`. No inverse is involved, so this
    /// works for degenerate metrics as well.
    pub fn hyperbolic_split(&self, f: &Functional, q: &Weight) -> Result<HyperbolicSplit> {
        let n1 = self.dim() + 1;
        check_dim(n1 + 1, f.0.len())?;
        check_dim(n1, q.as_vector().len())?;
        let c = f.point_part();
        let gamma = f.normalization_part();
        let beta = c.sum();
        let x = &c - q.as_vector() * beta;
        let h = self.coordinates(q)?;
        let alpha = c.iter().zip(&h).map(|(a, b)| a * b).sum::<f64>() + gamma;
        Ok(HyperbolicSplit {
            alpha,
            beta,
            direction: HollowVector::from_vector_unchecked(x),
        })
    }
}

impl HyperbolicSplit {
    /// Rebuilds the functional from its split coordinates at base point `q`.
    pub fn reconstruct(&self, form: &CmForm, q: &Weight) -> Result<Functional> {
        let vq = form.point_functional(q)?;
        let lift = form.gradient_lift(q, &self.direction)?;
        let n = form.dim();
        Functional::normalization(n)
            .scale(self.alpha)
            .add(&vq.scale(self.beta))?
            .add(&lift)
    }

    /// Value of the form on two split functionals:
    /// `α₁β₂ + α₂β₁ + ½ x₁ᵀDx₂`.
    pub fn pair(&self, other: &HyperbolicSplit, metric: &Metric) -> Result<f64> {
        let g = metric.hessian_pair(&self.direction, &other.direction)?;
        Ok(self.alpha * other.beta + other.alpha * self.beta - g)
    }
}

/// `v_p = [p; -¼ pᵀDp]`.
pub fn point_functional(metric: &Metric, p: &Weight) -> Result<Functional> {
    let n1 = metric.dim() + 1;
    let pv = p.as_vector();
    check_dim(n1, pv.len())?;
    let beta = -0.25 * pv.dot(&(metric.matrix() * pv));
    let mut v = DVector::zeros(n1 + 1);
    v.rows_mut(0, n1).copy_from(pv);
    v[n1] = beta;
    Ok(Functional(v))
}

/// Overdetermined quadratic coordinates `δ_i = ½ d²(R_i, p)`.
pub fn cm_coordinates(metric: &Metric, p: &Weight) -> Result<Vec<f64>> {
    let n = metric.dim();
    check_dim(n + 1, p.as_vector().len())?;
    (0..=n)
        .map(|i| Ok(0.5 * metric.sq_pseudodistance(&Weight::vertex(n, i), p)?))
        .collect()
}

/// Matrix of the induced map between Cayley-Menger spaces for an affine map
/// `C: B → A`: columns `v_{C R_j}` followed by `v_m`.
pub fn pushforward_matrix(metric: &Metric, c: &WeightMatrix) -> Result<DMatrix<f64>> {
    let na1 = metric.dim() + 1;
    check_dim(na1, c.matrix().nrows())?;
    let nb1 = c.matrix().ncols();
    let mut t = DMatrix::zeros(na1 + 1, nb1 + 1);
    for j in 0..nb1 {
        let v = point_functional(metric, &c.image_of_vertex(j))?;
        t.column_mut(j).copy_from(v.coords());
    }
    t[(na1, nb1)] = 1.0;
    Ok(t)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Functoriality {
    pub pulled_back: Metric,
    pub form: CmForm,
    pub pushforward: DMatrix<f64>,
    /// `max |M_B - Tᵀ M_A T|`.
    pub defect: f64,
    pub tolerance: f64,
}

impl Functoriality {
    pub fn holds(&self) -> bool {
        self.defect <= self.tolerance
    }
}

/// Compares the form of the pulled-back metric with the pull-back of the form.
pub fn functoriality_check(metric: &Metric, c: &WeightMatrix) -> Result<Functoriality> {
    let pulled_back = metric.pullback(c)?;
    let form_b = CmForm::new(&pulled_back);
    let form_a = CmForm::new(metric);
    let t = pushforward_matrix(metric, c)?;
    let transported = t.transpose() * form_a.matrix() * &t;
    let defect = max_abs(&(form_b.matrix() - transported));
    let tolerance = metric.tolerances().functorial(metric.max_abs());
    Ok(Functoriality {
        pulled_back,
        form: form_b,
        pushforward: t,
        defect,
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn worked() -> Metric {
        Metric::from_rows(&[
            vec![0.0, 8.0, 24.0],
            vec![8.0, 0.0, 48.0],
            vec![24.0, 48.0, 0.0],
        ])
        .unwrap()
    }

    fn lorentz() -> Metric {
        Metric::from_rows(&[vec![0.0, -2.0], vec![-2.0, 0.0]]).unwrap()
    }

    fn assert_slice_eq(a: &[f64], b: &[f64], eps: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert_abs_diff_eq!(*x, *y, epsilon = eps);
        }
    }

    #[test]
    fn matrix_shapes() {
        let cm = CmForm::new(&worked());
        let expected = DMatrix::from_row_slice(
            4,
            4,
            &[
                0.0, 4.0, 12.0, 1.0, 4.0, 0.0, 24.0, 1.0, 12.0, 24.0, 0.0, 1.0, 1.0, 1.0, 1.0, 0.0,
            ],
        );
        assert_eq!(cm.matrix(), &expected);
        let point = CmForm::new(&Metric::zero(0));
        assert_eq!(
            point.matrix(),
            &DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0])
        );
        let z = CmForm::new(&Metric::zero(2));
        assert_eq!(z.matrix().view((0, 0), (3, 3)), DMatrix::<f64>::zeros(3, 3));
    }

    #[test]
    fn pairing_basics() {
        let cm = CmForm::new(&worked());
        let vm = Functional::normalization(2);
        assert_eq!(cm.pair(&vm, &vm).unwrap(), 0.0);
        assert_eq!(cm.pair(&Functional::vertex(2, 0), &vm).unwrap(), 1.0);
        let p = Weight::new(vec![0.3, -1.2, 1.9]).unwrap();
        let vp = cm.point_functional(&p).unwrap();
        assert_abs_diff_eq!(cm.pair(&vp, &vp).unwrap(), 0.0, epsilon = 1e-12);
        assert!(cm.pair(&vm, &Functional::normalization(3)).is_err());
    }

    #[test]
    fn apply_transports_basis() {
        let cm = CmForm::new(&worked());
        assert_eq!(
            cm.apply(&Functional::normalization(2)).unwrap(),
            HullElement::unit(2)
        );
        assert_eq!(
            cm.apply(&Functional::vertex(2, 0)).unwrap().as_slice(),
            &[0.0, 4.0, 12.0, 1.0]
        );
        assert_eq!(
            cm.apply(&Functional::zero(2)).unwrap().as_slice(),
            &[0.0, 0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn inverse_pairing() {
        let cm = CmForm::new(&worked());
        let h = HullElement::new(vec![1.0, 9.0, 1.0, 1.0]).unwrap();
        assert_abs_diff_eq!(cm.inverse_pair(&h, &h).unwrap(), -4.0, epsilon = 1e-12);
        let u = HullElement::unit(2);
        assert_abs_diff_eq!(cm.inverse_pair(&u, &u).unwrap(), 0.0, epsilon = 1e-12);
        let p = Weight::new(vec![0.6, 0.1, 0.3]).unwrap();
        let hp = cm.apply(&cm.point_functional(&p).unwrap()).unwrap();
        assert_abs_diff_eq!(cm.inverse_pair(&hp, &hp).unwrap(), 0.0, epsilon = 1e-10);
        let degenerate = CmForm::new(&Metric::zero(2));
        assert!(!degenerate.is_invertible());
        assert_eq!(degenerate.inverse_pair(&u, &u), Err(Error::SingularCm));
    }

    #[test]
    fn point_functionals() {
        let m = worked();
        for i in 0..3 {
            let v = point_functional(&m, &Weight::vertex(2, i)).unwrap();
            assert_eq!(v, Functional::vertex(2, i));
        }
        let v = point_functional(&m, &Weight::midpoint(2, 0, 2)).unwrap();
        assert_eq!(v.as_slice(), &[0.5, 0.0, 0.5, -3.0]);
    }

    #[test]
    fn quadraticity_defect_of_point_functionals() {
        let m = worked();
        let cm = CmForm::new(&m);
        let p = Weight::new(vec![0.2, 0.7, 0.1]).unwrap();
        let q = Weight::new(vec![-0.5, 0.5, 1.0]).unwrap();
        let alpha = 0.3;
        let beta = 1.0 - alpha;
        let r = bary(&p, &q, alpha);
        let vp = cm.point_functional(&p).unwrap();
        let vq = cm.point_functional(&q).unwrap();
        let defect = cm
            .point_functional(&r)
            .unwrap()
            .sub(&vp.scale(alpha))
            .unwrap()
            .sub(&vq.scale(beta))
            .unwrap();
        assert_slice_eq(&defect.as_slice()[..3], &[0.0; 3], 1e-12);
        // v(αp+βq) - αv_p - βv_q = ¼αβ (p-q)ᵀD(p-q) v_m = -αβ CM(v_p, v_q) v_m
        let expected = -alpha * beta * cm.pair(&vp, &vq).unwrap();
        assert_abs_diff_eq!(defect.normalization_part(), expected, epsilon = 1e-12);
    }

    fn bary(p: &Weight, q: &Weight, alpha: f64) -> Weight {
        q.lerp(p, alpha).unwrap()
    }

    #[test]
    fn coordinates_and_localization() {
        let m = worked();
        let cm = CmForm::new(&m);
        assert_eq!(
            cm.coordinates(&Weight::midpoint(2, 0, 2)).unwrap(),
            vec![3.0, 11.0, 3.0]
        );
        let c1 = cm.coordinates(&Weight::vertex(2, 1)).unwrap();
        assert_eq!(c1, vec![4.0, 0.0, 24.0]);
        assert_eq!(
            cm_coordinates(&Metric::zero(2), &Weight::midpoint(2, 0, 1)).unwrap(),
            vec![0.0; 3]
        );

        let loc = cm.localize(&[3.0, 11.0, 3.0]).unwrap();
        assert_slice_eq(loc.point.as_slice(), &[0.5, 0.0, 0.5], 1e-12);
        assert_abs_diff_eq!(loc.beta, -3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(loc.residual, 0.0, epsilon = 1e-12);

        let loc = cm.localize(&[0.0, 4.0, 12.0]).unwrap();
        assert_slice_eq(loc.point.as_slice(), &[1.0, 0.0, 0.0], 1e-12);

        let off = cm.localize(&[1.0, 9.0, 1.0]).unwrap();
        assert_abs_diff_eq!(off.residual, -4.0, epsilon = 1e-12);

        assert_eq!(
            CmForm::new(&Metric::zero(2)).localize(&[0.0; 3]),
            Err(Error::SingularCm)
        );
        assert!(cm.localize(&[1.0, 2.0]).is_err());
    }

    #[test]
    fn sphere_fitting() {
        let cm = CmForm::new(&worked());
        let fit = cm.sphere_fit(&[1.0, 9.0, 1.0]).unwrap();
        assert_slice_eq(fit.center.as_slice(), &[0.5, 0.0, 0.5], 1e-12);
        assert_abs_diff_eq!(fit.r_squared, 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(fit.radius().unwrap(), 2.0, epsilon = 1e-12);

        let p = Weight::new(vec![0.1, 0.1, 0.8]).unwrap();
        let fit = cm.sphere_fit(&cm.coordinates(&p).unwrap()).unwrap();
        assert_abs_diff_eq!(fit.r_squared, 0.0, epsilon = 1e-10);
        assert_slice_eq(fit.center.as_slice(), p.as_slice(), 1e-10);

        // M = [[0,-1,1],[-1,0,1],[1,1,0]]: M⁻¹ e_2 = (½,½,½), so r² = -½ and
        // the centre solves M[p;β] = (-¼,-¼,1): p = (½,½), β = ¼.
        let l = CmForm::new(&lorentz()).sphere_fit(&[0.0, 0.0]).unwrap();
        assert_abs_diff_eq!(l.r_squared, -0.5, epsilon = 1e-14);
        assert!(l.radius().is_none());
        assert_slice_eq(l.center.as_slice(), &[0.5, 0.5], 1e-14);
    }

    #[test]
    fn quadric_membership() {
        let cm = CmForm::new(&worked());
        let p = Weight::new(vec![1.3, -0.4, 0.1]).unwrap();
        assert!(cm.is_on_quadric(&cm.point_functional(&p).unwrap()));
        assert!(!cm.is_on_quadric(&Functional::normalization(2)));
        let h = HullElement::new(vec![1.0, 9.0, 1.0, 1.0]).unwrap();
        assert!(!cm.is_on_quadric(&cm.inverse_apply(&h).unwrap()));
    }

    #[test]
    fn signatures() {
        assert_eq!(
            CmForm::new(&worked()).signature(),
            InertiaIndex::new(1, 3, 0)
        );
        assert_eq!(
            CmForm::new(&Metric::zero(1)).signature(),
            InertiaIndex::new(1, 1, 1)
        );
        assert_eq!(
            CmForm::new(&Metric::zero(0)).signature(),
            InertiaIndex::new(1, 1, 0)
        );
        assert_eq!(
            CmForm::new(&lorentz()).signature(),
            InertiaIndex::new(2, 1, 0)
        );
    }

    #[test]
    fn pushforwards() {
        let m = worked();
        let id = pushforward_matrix(&m, &WeightMatrix::identity(2)).unwrap();
        assert_eq!(id, DMatrix::identity(4, 4));

        let perm = WeightMatrix::permutation(&[1, 2, 0]);
        let t = pushforward_matrix(&m, &perm).unwrap();
        assert_eq!(t.column(0).as_slice(), &[0.0, 1.0, 0.0, 0.0]);
        assert_eq!(t.column(2).as_slice(), &[1.0, 0.0, 0.0, 0.0]);

        let c = Weight::new(vec![0.5, 0.0, 0.5]).unwrap();
        let k = pushforward_matrix(&m, &WeightMatrix::constant(&c, 1)).unwrap();
        assert_eq!(k.shape(), (4, 3));
        for j in 0..2 {
            assert_eq!(k.column(j).as_slice(), &[0.5, 0.0, 0.5, -3.0]);
        }
        assert_eq!(k.column(2).as_slice(), &[0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn functoriality() {
        let m = worked();
        let id = functoriality_check(&m, &WeightMatrix::identity(2)).unwrap();
        assert_eq!(id.defect, 0.0);

        let swap = functoriality_check(&m, &WeightMatrix::permutation(&[2, 1, 0])).unwrap();
        assert_eq!(swap.defect, 0.0);
        let ma = CmForm::new(&m);
        for i in 0..4 {
            for j in 0..4 {
                let pi = [2, 1, 0, 3][i];
                let pj = [2, 1, 0, 3][j];
                assert_eq!(swap.form.matrix()[(i, j)], ma.matrix()[(pi, pj)]);
            }
        }

        let c =
            WeightMatrix::from_rows(&[vec![0.5, 2.0], vec![0.25, -1.0], vec![0.25, 0.0]]).unwrap();
        let f = functoriality_check(&m, &c).unwrap();
        assert!(f.holds(), "defect {}", f.defect);
        assert!(functoriality_check(&m, &WeightMatrix::identity(1)).is_err());
    }

    #[test]
    fn hyperbolic_split_of_basis_elements() {
        let m = worked();
        let cm = CmForm::new(&m);
        let q = Weight::new(vec![0.2, 0.3, 0.5]).unwrap();
        let s = cm
            .hyperbolic_split(&Functional::normalization(2), &q)
            .unwrap();
        assert_eq!((s.alpha, s.beta), (1.0, 0.0));
        assert_eq!(s.direction, HollowVector::zero(2));

        let s = cm
            .hyperbolic_split(&cm.point_functional(&q).unwrap(), &q)
            .unwrap();
        assert_abs_diff_eq!(s.alpha, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.beta, 1.0, epsilon = 1e-12);
        assert_slice_eq(s.direction.as_slice(), &[0.0; 3], 1e-12);

        let f = Functional::new(vec![0.4, -2.0, 1.0, 3.5]).unwrap();
        let s = cm.hyperbolic_split(&f, &q).unwrap();
        let back = s.reconstruct(&cm, &q).unwrap();
        assert_slice_eq(back.as_slice(), f.as_slice(), 1e-12);

        let x = HollowVector::basis(2, 1);
        let lift = cm.gradient_lift(&q, &x).unwrap();
        assert_abs_diff_eq!(
            cm.pair(&lift, &Functional::normalization(2)).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            cm.pair(&lift, &cm.point_functional(&q).unwrap()).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }
}
