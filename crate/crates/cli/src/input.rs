//! On-disk JSON schemas.
//!
//! ```text
//! metric: { "n": 2, "D": [[0, 8, 24], [8, 0, 48], [24, 48, 0]] }
//! points: { "points": [ { "name": "Q", "coords": [0.5, 0, 0.5] } ] }
//! map:    { "map": [[...], ...] }          (n_A+1) rows, (n_B+1) columns
//! values: { "values": [[...], ...] }       symmetric midpoint value matrix
//! ```

use std::io::Read;

use cmgeom::{DMatrix, Metric, Tolerances, Weight, WeightMatrix};
use serde::Deserialize;

use crate::error::{CliError, CliResult, ExitKind};

/// Raw bytes of one input, kept for the report digest.
pub struct Source {
    pub label: &'static str,
    pub bytes: Vec<u8>,
}

pub fn read_source(label: &'static str, path: &str) -> CliResult<Source> {
    let bytes = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::parse(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| CliError::parse(format!("reading {path}: {e}")))?
    };
    Ok(Source { label, bytes })
}

fn parse_json<'a, T: Deserialize<'a>>(src: &'a Source) -> CliResult<T> {
    serde_json::from_slice(&src.bytes)
        .map_err(|e| CliError::parse(format!("malformed {} file: {e}", src.label)))
}

fn matrix_from_rows(rows: &[Vec<f64>], field: &str) -> CliResult<DMatrix<f64>> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if nrows == 0 || ncols == 0 {
        return Err(CliError::parse(format!("{field} is empty")).at(field));
    }
    if let Some(i) = rows.iter().position(|r| r.len() != ncols) {
        return Err(CliError::parse(format!("{field} has ragged rows")).at(format!("{field}[{i}]")));
    }
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MetricSpaceFile {
    n: usize,
    #[serde(rename = "D")]
    d: Vec<Vec<f64>>,
}

pub struct LoadedMetric {
    pub metric: Metric,
    /// Whether symmetrizing or zeroing the diagonal changed the input.
    pub canonicalized: bool,
}

pub fn load_metric(src: &Source, tol: Tolerances) -> CliResult<LoadedMetric> {
    let file: MetricSpaceFile = parse_json(src)?;
    let raw = matrix_from_rows(&file.d, "D")?;
    if raw.nrows() != raw.ncols() {
        return Err(CliError::parse(format!(
            "D must be square, got {}x{}",
            raw.nrows(),
            raw.ncols()
        ))
        .at("D"));
    }
    if raw.nrows() != file.n + 1 {
        return Err(CliError::new(
            ExitKind::Invariant,
            format!("n = {} but D has {} rows", file.n, raw.nrows()),
        )
        .at("n"));
    }
    let metric =
        Metric::with_tolerance(raw.clone(), tol).map_err(|e| CliError::from_core(e, "D"))?;
    let canonicalized = metric.matrix() != &raw;
    Ok(LoadedMetric {
        metric,
        canonicalized,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointFile {
    points: Vec<NamedPoint>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NamedPoint {
    name: String,
    coords: Vec<f64>,
}

pub struct PointSet {
    pub points: Vec<(String, Weight)>,
}

pub fn load_points(src: &Source, n: usize, tol: &Tolerances) -> CliResult<PointSet> {
    let file: PointFile = parse_json(src)?;
    let mut points = Vec::with_capacity(file.points.len());
    for (i, p) in file.points.into_iter().enumerate() {
        let path = format!("points[{i}].coords");
        if p.coords.len() != n + 1 {
            return Err(CliError::reference(format!(
                "point {:?} has {} coordinates, expected {}",
                p.name,
                p.coords.len(),
                n + 1
            ))
            .at(path));
        }
        let w = Weight::with_tolerance(p.coords, tol).map_err(|e| CliError::from_core(e, &path))?;
        points.push((p.name, w));
    }
    Ok(PointSet { points })
}

impl PointSet {
    pub fn empty() -> Self {
        Self { points: Vec::new() }
    }

    /// Looks a name up in the file, falling back to referential names `R<i>`.
    pub fn resolve(&self, name: &str, n: usize) -> CliResult<Weight> {
        if let Some((_, w)) = self.points.iter().find(|(k, _)| k == name) {
            return Ok(w.clone());
        }
        if let Some(i) = name.strip_prefix('R').and_then(|s| s.parse::<usize>().ok()) {
            if i <= n {
                return Ok(Weight::vertex(n, i));
            }
        }
        Err(CliError::reference(format!("unknown point name {name:?}")))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    map: Vec<Vec<f64>>,
}

pub fn load_map(src: &Source, target_n: usize, tol: &Tolerances) -> CliResult<WeightMatrix> {
    let file: MapFile = parse_json(src)?;
    let c = matrix_from_rows(&file.map, "map")?;
    if c.nrows() != target_n + 1 {
        return Err(CliError::reference(format!(
            "map has {} rows, metric space needs {}",
            c.nrows(),
            target_n + 1
        ))
        .at("map"));
    }
    WeightMatrix::with_tolerance(c, tol).map_err(|e| CliError::from_core(e, "map"))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ValuesFile {
    values: Vec<Vec<f64>>,
}

pub fn load_value_matrix(src: &Source) -> CliResult<DMatrix<f64>> {
    let file: ValuesFile = parse_json(src)?;
    let s = matrix_from_rows(&file.values, "values")?;
    if s.nrows() != s.ncols() {
        return Err(CliError::parse("values must be a square matrix").at("values"));
    }
    Ok(s)
}

/// Parses `v0,v1,...`.
pub fn parse_value_list(text: &str) -> CliResult<Vec<f64>> {
    text.split(',')
        .enumerate()
        .map(|(i, t)| {
            let v: f64 = t.trim().parse().map_err(|_| {
                CliError::parse(format!("bad number {t:?} in --values")).at(format!("values[{i}]"))
            })?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::parse("non-finite value in --values").at(format!("values[{i}]")))
            }
        })
        .collect()
}
