//! Partitions of the unit square into `m × m` cells.
//!
//! Cells are 0-indexed here; cell `(i, j)` corresponds to clique `C_{i,j}`.
//!
//! * [`equal_size_partition`]: `i` indexes x and `j` indexes y. Cell `i`
//!   along an axis covers the half-open interval `(i/m, (i+1)/m]`, except
//!   that coordinate `0` belongs to cell 0.
//! * [`equal_count_partition`]: `i` indexes horizontal strips cut at
//!   y-order statistics, `j` indexes cells within a strip cut at x-order
//!   statistics. A point equal to a boundary value belongs to the lower
//!   strip or cell. Ties are broken by vertex id.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geo::points::{Point, PointSet};
use crate::graph::Vertex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartitionKind {
    EqualSize,
    EqualCount,
}

/// Cut positions of an equal-count partition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Boundaries {
    /// `y*_0 = 0, y*_1, …, y*_m = 1`.
    pub y: Vec<f64>,
    /// `x[i]` holds `x*_{i,0} = 0, …, x*_{i,m} = 1` for strip `i`.
    pub x: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellPartition {
    pub kind: PartitionKind,
    pub m: usize,
    /// Cell side in points (`t²` points per cell); equal-count only.
    pub t: Option<usize>,
    pub cell_of: Vec<(usize, usize)>,
    pub boundaries: Option<Boundaries>,
}

impl CellPartition {
    /// Vertices in each cell, in increasing vertex id, indexed `i * m + j`.
    pub fn members(&self) -> Vec<Vec<Vertex>> {
        let mut cells = vec![Vec::new(); self.m * self.m];
        for (v, &(i, j)) in self.cell_of.iter().enumerate() {
            cells[i * self.m + j].push(v);
        }
        cells
    }

    pub fn occupancy(&self) -> Vec<usize> {
        let mut counts = vec![0; self.m * self.m];
        for &(i, j) in &self.cell_of {
            counts[i * self.m + j] += 1;
        }
        counts
    }
}

fn axis_cell(c: f64, m: usize) -> usize {
    let k = (c * m as f64).ceil() as usize;
    k.clamp(1, m) - 1
}

/// Equal-size `m × m` grid with side `1/m`.
pub fn equal_size_partition(ps: &PointSet, m: usize) -> Result<CellPartition> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let cell_of = ps
        .points()
        .iter()
        .map(|p| (axis_cell(p.x, m), axis_cell(p.y, m)))
        .collect();
    Ok(CellPartition {
        kind: PartitionKind::EqualSize,
        m,
        t: None,
        cell_of,
        boundaries: None,
    })
}

fn by_coord(points: &[Point], coord: fn(&Point) -> f64) -> impl Fn(&Vertex, &Vertex) -> Ordering + '_ {
    move |&a, &b| {
        coord(&points[a])
            .total_cmp(&coord(&points[b]))
            .then(a.cmp(&b))
    }
}

/// Equal-count partition of `n = m²t²` points: `m` strips of `mt²` points by
/// y-rank, each cut into `m` cells of `t²` points by x-rank.
pub fn equal_count_partition(ps: &PointSet, m: usize, t: usize) -> Result<CellPartition> {
    if m == 0 || t == 0 {
        return Err(Error::InvalidParameter("m and t must be at least 1".into()));
    }
    let per_cell = t * t;
    let per_strip = m * per_cell;
    if ps.len() != m * per_strip {
        return Err(Error::InvalidParameter(format!(
            "equal-count partition needs n = m²t² = {} points, got {}",
            m * per_strip,
            ps.len()
        )));
    }
    let points = ps.points();
    let mut order: Vec<Vertex> = (0..points.len()).collect();
    order.sort_unstable_by(by_coord(points, |p| p.y));

    let mut cell_of = vec![(0, 0); points.len()];
    let mut y = Vec::with_capacity(m + 1);
    let mut x = Vec::with_capacity(m);
    y.push(0.0);
    for (i, strip) in order.chunks_mut(per_strip).enumerate() {
        if i + 1 < m {
            y.push(points[*strip.last().expect("strip is non-empty")].y);
        }
        strip.sort_unstable_by(by_coord(points, |p| p.x));
        let mut cuts = Vec::with_capacity(m + 1);
        cuts.push(0.0);
        for (j, cell) in strip.chunks(per_cell).enumerate() {
            if j + 1 < m {
                cuts.push(points[*cell.last().expect("cell is non-empty")].x);
            }
            for &v in cell {
                cell_of[v] = (i, j);
            }
        }
        cuts.push(1.0);
        x.push(cuts);
    }
    y.push(1.0);
    Ok(CellPartition {
        kind: PartitionKind::EqualCount,
        m,
        t: Some(t),
        cell_of,
        boundaries: Some(Boundaries { y, x }),
    })
}

/// Observed boundary deviations against the concentration bounds
/// `|y*_i − i/m| <= 2 ln n / (mt)` and `|x*_{i,j} − j/m| <= 2 ln n / (t√m)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeviationReport {
    pub holds: bool,
    pub y_holds: bool,
    pub x_holds: bool,
    pub max_y_dev: f64,
    pub max_x_dev: f64,
    pub y_bound: f64,
    pub x_bound: f64,
}

impl DeviationReport {
    /// The x-bound says nothing once it reaches the width of the square.
    pub fn x_bound_vacuous(&self) -> bool {
        self.x_bound >= 1.0
    }
}

fn equal_count_parts(cp: &CellPartition) -> Result<(usize, &Boundaries)> {
    match (cp.kind, cp.t, &cp.boundaries) {
        (PartitionKind::EqualCount, Some(t), Some(b)) => Ok((t, b)),
        _ => Err(Error::InvalidParameter(
            "operation needs an equal-count partition".into(),
        )),
    }
}

/// Interior boundaries only: `1 <= i < m` for strips and `1 <= j < m` in
/// every strip.
pub fn check_deviation_bounds(cp: &CellPartition) -> Result<DeviationReport> {
    let (t, b) = equal_count_parts(cp)?;
    let m = cp.m;
    let mf = m as f64;
    let ln_n = ((m * m * t * t) as f64).ln();
    let y_bound = 2.0 * ln_n / (mf * t as f64);
    let x_bound = 2.0 * ln_n / (t as f64 * mf.sqrt());
    let max_y_dev = (1..m)
        .map(|i| (b.y[i] - i as f64 / mf).abs())
        .fold(0.0, f64::max);
    let max_x_dev = b
        .x
        .iter()
        .flat_map(|cuts| (1..m).map(move |j| (cuts[j] - j as f64 / mf).abs()))
        .fold(0.0, f64::max);
    let y_holds = max_y_dev <= y_bound;
    let x_holds = max_x_dev <= x_bound;
    Ok(DeviationReport {
        holds: y_holds && x_holds,
        y_holds,
        x_holds,
        max_y_dev,
        max_x_dev,
        y_bound,
        x_bound,
    })
}

/// `(1/m)·(max{|Δi|, |Δj|} − 1 − 4√m·ln n / t)` with `n = m²t²`.
pub fn separation_lower_bound(m: usize, t: usize, a: (usize, usize), b: (usize, usize)) -> f64 {
    let offset = a.0.abs_diff(b.0).max(a.1.abs_diff(b.1)) as f64;
    (offset - 1.0 - super::params::separation_slack(m, t)) / m as f64
}

/// Guaranteed lower bound on the distance between any point of cell `a`
/// and any point of cell `b`. Refuses unless the partition's boundaries
/// satisfy the concentration bounds, since the guarantee rests on them.
pub fn min_cell_pair_distance(cp: &CellPartition, a: (usize, usize), b: (usize, usize)) -> Result<f64> {
    let (t, _) = equal_count_parts(cp)?;
    if a.0 >= cp.m || a.1 >= cp.m || b.0 >= cp.m || b.1 >= cp.m {
        return Err(Error::InvalidParameter(format!(
            "cells {a:?}, {b:?} outside an {0} × {0} grid",
            cp.m
        )));
    }
    if !check_deviation_bounds(cp)?.holds {
        return Err(Error::BoundsNotSatisfied);
    }
    Ok(separation_lower_bound(cp.m, t, a, b))
}
