//! Fixed inputs shared by the benchmarks.

use orthogrid::{HParams, PointSet};

/// Grid shapes covering each colouring case.
pub const H_SHAPES: [(usize, usize, usize); 3] = [(4, 2, 3), (20, 2, 3), (200, 2, 3)];

pub fn h_params(shape: (usize, usize, usize)) -> HParams {
    HParams::new(shape.0, shape.1, shape.2).expect("benchmark shapes are valid")
}

/// Point set at the dense-regime threshold `n^-1/4`.
pub fn dense_points(n: usize, seed: u64) -> PointSet {
    PointSet::sample(n, (n as f64).powf(-0.25), seed).expect("valid sampling parameters")
}
