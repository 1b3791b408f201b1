#![allow(dead_code)]

use cmgeom::{DMatrix, Weight};
use proptest::collection::vec;
use proptest::prelude::*;

mod oracle;
pub use oracle::*;

pub fn coord() -> impl Strategy<Value = f64> {
    -3.0f64..3.0
}

/// Weight of dimension `n` with bounded free coordinates.
pub fn weight(n: usize) -> impl Strategy<Value = Weight> {
    vec(coord(), n).prop_map(move |mut v| {
        let s: f64 = v.iter().sum();
        v.push(1.0 - s);
        Weight::new(v).unwrap()
    })
}

pub fn hollow(n: usize) -> impl Strategy<Value = Vec<f64>> {
    vec(coord(), n).prop_map(|mut v| {
        let s: f64 = v.iter().sum();
        v.insert(0, -s);
        v
    })
}

pub fn symmetric(n1: usize, scale: f64) -> impl Strategy<Value = DMatrix<f64>> {
    vec(-scale..scale, n1 * n1).prop_map(move |v| {
        let m = DMatrix::from_vec(n1, n1, v);
        (&m + m.transpose()) * 0.5
    })
}

pub fn hollow_symmetric(n1: usize, scale: f64) -> impl Strategy<Value = DMatrix<f64>> {
    symmetric(n1, scale).prop_map(|mut m| {
        m.fill_diagonal(0.0);
        m
    })
}

pub fn assert_close(a: f64, b: f64, eps: f64) -> Result<(), TestCaseError> {
    prop_assert!((a - b).abs() <= eps, "{a} vs {b} (eps {eps})");
    Ok(())
}
