//! Deterministic inputs for the benchmarks.

use cmgeom::{DMatrix, Metric, Weight, WeightMatrix};

/// Euclidean metric of a corner simplex: `R_0` at the origin and `R_i` at
/// `s_i e_i` with edge lengths `s_i` between 1 and 2. Well conditioned for
/// every `n`.
pub fn corner_simplex_metric(n: usize) -> Metric {
    let s2 = |i: usize| {
        if i == 0 {
            0.0
        } else {
            (1.0 + i as f64 / n as f64).powi(2)
        }
    };
    let d = DMatrix::from_fn(
        n + 1,
        n + 1,
        |i, j| if i == j { 0.0 } else { s2(i) + s2(j) },
    );
    Metric::new(d).expect("corner simplex distances are hollow symmetric")
}

/// Barycenter of the referential.
pub fn barycenter(n: usize) -> Weight {
    Weight::new(vec![1.0 / (n + 1) as f64; n + 1]).expect("uniform weights sum to one")
}

/// Map from an `m`-simplex onto the referential of an `n`-simplex that sends
/// vertex `j` to a fixed mix of `R_{j mod (n+1)}` and `R_0`.
pub fn mixing_map(n: usize, m: usize) -> WeightMatrix {
    let c = DMatrix::from_fn(n + 1, m + 1, |i, j| {
        let k = j % (n + 1);
        match (i == k, i == 0) {
            (true, true) => 1.0,
            (true, false) => 0.75,
            (false, true) => 0.25,
            _ => 0.0,
        }
    });
    WeightMatrix::new(c).expect("columns sum to one")
}
