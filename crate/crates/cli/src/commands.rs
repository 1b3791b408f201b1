use cmgeom::{functoriality_check, CmForm, Metric, QuadFn, Tolerances};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult, ExitKind};
use crate::input::{self, LoadedMetric, PointSet, Source};
use crate::report::{self, Report};

pub struct Context {
    pub tol: Tolerances,
}

fn weights(points: &[cmgeom::HollowVector]) -> Value {
    Value::Array(
        points
            .iter()
            .map(|x| Value::from(x.as_slice().to_vec()))
            .collect(),
    )
}

impl Context {
    fn metric(&self, path: &str) -> CliResult<(Source, LoadedMetric)> {
        let src = input::read_source("metric", path)?;
        let loaded = input::load_metric(&src, self.tol)?;
        Ok((src, loaded))
    }

    fn start(&self, command: &'static str, metric_path: &str, loaded: &LoadedMetric) -> Report {
        let mut r = Report::new(command);
        r.arg("metric", metric_path);
        r.tolerances = report::tolerances(&self.tol, Some(&loaded.metric));
        if loaded.canonicalized {
            r.notes
                .push("input D was symmetrized and its diagonal zeroed within tau_sym".into());
        }
        r
    }

    pub fn validate(&self, metric_path: &str) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let m = &loaded.metric;
        let mut r = self.start("validate", metric_path, &loaded);
        r.digest = report::digest(&[&src], &[]);
        let inertia = m.inertia();
        let radical = m.radical_basis();
        r.out("dimension", m.dim());
        r.out("hollow_symmetric", true);
        r.out("canonicalized", loaded.canonicalized);
        r.out("inertia", report::inertia(&inertia));
        r.out("nondegenerate", m.is_nondegenerate());
        r.out("bordered_determinant", m.bordered_determinant());
        r.out("bordered_invertible", m.bordered_is_invertible());
        r.out("radical_dimension", radical.len());
        r.out("radical_basis", weights(&radical));
        if m.is_nondegenerate() != m.bordered_is_invertible() {
            r.warnings
                .push("spectral and determinant non-degeneracy tests disagree".into());
        }
        Ok(r)
    }

    pub fn dist(
        &self,
        metric_path: &str,
        points_path: Option<&str>,
        p: &str,
        q: &str,
    ) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let m = &loaded.metric;
        let n = m.dim();
        let (points, psrc) = match points_path {
            Some(path) => {
                let s = input::read_source("points", path)?;
                (input::load_points(&s, n, &self.tol)?, Some(s))
            }
            None => (PointSet::empty(), None),
        };
        let wp = points.resolve(p, n)?;
        let wq = points.resolve(q, n)?;
        let d2 = m
            .sq_pseudodistance(&wp, &wq)
            .map_err(|e| CliError::from_core(e, "points"))?;

        let mut r = self.start("dist", metric_path, &loaded);
        if let Some(path) = points_path {
            r.arg("points", path);
        }
        r.arg("p", p);
        r.arg("q", q);
        let mut sources = vec![&src];
        sources.extend(psrc.as_ref());
        r.digest = report::digest(&sources, &[("p", p), ("q", q)]);
        r.out("p", json!({ "name": p, "coords": wp.as_slice() }));
        r.out("q", json!({ "name": q, "coords": wq.as_slice() }));
        r.out("sq_distance", d2);
        r.out("half_sq_distance", 0.5 * d2);
        Ok(r)
    }

    fn values_for(&self, m: &Metric, text: &str) -> CliResult<Vec<f64>> {
        let values = input::parse_value_list(text)?;
        if values.len() != m.dim() + 1 {
            return Err(CliError::reference(format!(
                "expected {} values, got {}",
                m.dim() + 1,
                values.len()
            ))
            .at("values"));
        }
        Ok(values)
    }

    pub fn localize(&self, metric_path: &str, values_text: &str) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let values = self.values_for(&loaded.metric, values_text)?;
        let cm = CmForm::new(&loaded.metric);
        let loc = cm
            .localize(&values)
            .map_err(|e| CliError::from_core(e, "values"))?;

        let mut r = self.start("localize", metric_path, &loaded);
        r.arg("values", values_text);
        r.digest = report::digest(&[&src], &[("values", values_text)]);
        let on_quadric = loc.residual.abs() <= cm.quadric_cutoff();
        r.out("values", values.clone());
        r.out("point", loc.point.as_slice().to_vec());
        r.out("beta", loc.beta);
        r.out("residual", loc.residual);
        r.out("on_quadric", on_quadric);
        if !on_quadric {
            r.warnings.push(format!(
                "residual {} exceeds tau_quadric: values are not Cayley-Menger coordinates of any point",
                loc.residual
            ));
        }
        Ok(r)
    }

    pub fn sphere_fit(&self, metric_path: &str, values_text: &str) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let values = self.values_for(&loaded.metric, values_text)?;
        let cm = CmForm::new(&loaded.metric);
        let fit = cm
            .sphere_fit(&values)
            .map_err(|e| CliError::from_core(e, "values"))?;

        let mut r = self.start("sphere-fit", metric_path, &loaded);
        r.arg("values", values_text);
        r.digest = report::digest(&[&src], &[("values", values_text)]);
        r.out("values", values.clone());
        r.out("center", fit.center.as_slice().to_vec());
        r.out("r_squared", fit.r_squared);
        if let Some(radius) = fit.radius() {
            r.out("r", radius);
        } else {
            r.notes
                .push("negative squared radius: no real radius reported".into());
        }
        Ok(r)
    }

    pub fn cm_matrix(&self, metric_path: &str, command: &'static str) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let m = &loaded.metric;
        let cm = CmForm::new(m);
        let mut r = self.start(command, metric_path, &loaded);
        r.digest = report::digest(&[&src], &[]);
        let sig = cm.signature();
        let inner = m.inertia();
        r.out("cm_matrix", report::matrix(cm.matrix()));
        r.out("signature", report::inertia(&sig));
        r.out("metric_inertia", report::inertia(&inner));
        r.out("invertible", cm.is_invertible());
        if command == "signature" {
            let predicted =
                cmgeom::InertiaIndex::new(inner.negative + 1, inner.positive + 1, inner.null);
            r.out("predicted_signature", report::inertia(&predicted));
            r.out("signature_law_holds", predicted == sig);
            r.out("tau_eig_cm", cm.eigenvalue_cutoff());
            if predicted != sig {
                r.warnings
                    .push("CM signature differs from (nu+1, pi+1, rho)".into());
            }
        }
        Ok(r)
    }

    pub fn embed(&self, metric_path: &str) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let m = &loaded.metric;
        let e = m.embed();
        let err = e.reconstruction_error(m);
        let mut r = self.start("embed", metric_path, &loaded);
        r.digest = report::digest(&[&src], &[]);
        r.out("coordinates", e.points.clone());
        r.out("signature", e.signature.clone());
        r.out("inertia", report::inertia(&e.inertia));
        r.out("reconstruction_error", err);
        if err > self.tol.embed(m.max_abs()) {
            r.warnings
                .push(format!("reconstruction error {err} exceeds tau_embed"));
        }
        Ok(r)
    }

    pub fn functorial(&self, metric_path: &str, map_path: &str) -> CliResult<Report> {
        let (src, loaded) = self.metric(metric_path)?;
        let msrc = input::read_source("map", map_path)?;
        let c = input::load_map(&msrc, loaded.metric.dim(), &self.tol)?;
        let f =
            functoriality_check(&loaded.metric, &c).map_err(|e| CliError::from_core(e, "map"))?;

        let mut r = self.start("functorial", metric_path, &loaded);
        r.arg("map", map_path);
        r.digest = report::digest(&[&src, &msrc], &[]);
        r.out("pulled_back_D", report::matrix(f.pulled_back.matrix()));
        r.out("pushforward", report::matrix(&f.pushforward));
        r.out("cm_matrix_source", report::matrix(f.form.matrix()));
        r.out("defect", f.defect);
        r.out("within_tolerance", f.holds());
        if !f.holds() {
            r.warnings.push(format!(
                "functoriality defect {} exceeds tau_functorial",
                f.defect
            ));
        }
        Ok(r)
    }

    pub fn interpolate(&self, values_path: &str) -> CliResult<Report> {
        let src = input::read_source("values", values_path)?;
        let s = input::load_value_matrix(&src)?;
        let delta = QuadFn::from_midpoint_values_with(s, &self.tol).map_err(|e| match e {
            cmgeom::Error::Asymmetric { .. } => CliError::from_core(e, "values"),
            other => CliError::new(ExitKind::Invariant, other.to_string()).at("values"),
        })?;
        let reduced = delta.reduce_at_referential();
        let metric = Metric::from_quad(&delta).with_tolerances(self.tol);

        let mut r = Report::new("interpolate");
        r.arg("values", values_path);
        r.digest = report::digest(&[&src], &[]);
        r.tolerances = report::tolerances(&self.tol, Some(&metric));
        r.out("delta", report::matrix(delta.matrix()));
        r.out("reduced", report::matrix(reduced.matrix()));
        r.out("D", report::matrix(metric.matrix()));
        r.out("inertia", report::inertia(&metric.inertia()));
        Ok(r)
    }
}
