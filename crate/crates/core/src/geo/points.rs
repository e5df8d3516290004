//! Random point sets in the unit square and their threshold graphs.

use std::ops::ControlFlow;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist_sq(&self, other: &Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.dist_sq(other).sqrt()
    }
}

/// Points in `[0, 1]²` together with the connection threshold `r`.
/// The index of a point is its vertex id.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    points: Vec<Point>,
    r: f64,
    seed: Option<u64>,
}

fn check_threshold(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 && r <= std::f64::consts::SQRT_2 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "threshold r must lie in (0, √2], got {r}"
        )))
    }
}

impl PointSet {
    /// Wraps explicit points. Every coordinate must lie in `[0, 1]`.
    pub fn new(points: Vec<Point>, r: f64) -> Result<Self> {
        check_threshold(r)?;
        for (v, p) in points.iter().enumerate() {
            let inside = |c: f64| (0.0..=1.0).contains(&c);
            if !inside(p.x) || !inside(p.y) {
                return Err(Error::InvalidParameter(format!(
                    "point {v} = ({}, {}) lies outside the unit square",
                    p.x, p.y
                )));
            }
        }
        Ok(Self {
            points,
            r,
            seed: None,
        })
    }

    /// `n` i.i.d. uniform points from ChaCha8 seeded with `seed`.
    ///
    /// Stream order is interleaved: point `k` consumes the `2k`-th draw as
    /// its x-coordinate and the `2k+1`-th as its y-coordinate.
    pub fn sample(n: usize, r: f64, seed: u64) -> Result<Self> {
        check_threshold(r)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points = (0..n)
            .map(|_| {
                let x = rng.random::<f64>();
                let y = rng.random::<f64>();
                Point { x, y }
            })
            .collect();
        Ok(Self {
            points,
            r,
            seed: Some(seed),
        })
    }

    pub(crate) fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// The threshold graph as an implicit edge source.
    pub fn graph(&self) -> GeometricGraph<'_> {
        GeometricGraph::new(&self.points, self.r)
    }
}

/// Samples `RG(n, r)`: the point set and its explicit graph.
pub fn sample_rgg(n: usize, r: f64, seed: u64) -> Result<(PointSet, Graph)> {
    let ps = PointSet::sample(n, r, seed)?;
    let g = Graph::from_edge_set(&ps.graph());
    Ok((ps, g))
}

/// Threshold graph on a point slice: `uv` is an edge iff `‖p_u − p_v‖ < r`.
///
/// Points are bucketed into a `k × k` grid whose cell width `1/k` is at
/// least `r`, so only the eight surrounding cells need to be scanned.
#[derive(Clone, Debug)]
pub struct GeometricGraph<'a> {
    points: &'a [Point],
    r: f64,
    r_sq: f64,
    k: usize,
    /// `members[start[c]..start[c + 1]]` are the point ids in cell `c`,
    /// ascending.
    start: Vec<usize>,
    members: Vec<Vertex>,
}

impl<'a> GeometricGraph<'a> {
    pub fn new(points: &'a [Point], r: f64) -> Self {
        let n = points.len();
        // Shrink the cell count slightly so rounding in `x * k` can never put
        // two points closer than `r` more than one cell apart.
        let by_radius = (1.0 / (r * (1.0 + 1e-9))).floor();
        let by_count = (n as f64).sqrt().ceil().max(1.0);
        let k = by_radius.min(by_count).max(1.0) as usize;

        let cell_of = |p: &Point| -> usize {
            let cx = ((p.x * k as f64) as usize).min(k - 1);
            let cy = ((p.y * k as f64) as usize).min(k - 1);
            cy * k + cx
        };
        let mut start = vec![0usize; k * k + 1];
        for p in points {
            start[cell_of(p) + 1] += 1;
        }
        for c in 0..k * k {
            start[c + 1] += start[c];
        }
        let mut fill = start.clone();
        let mut members = vec![0; n];
        for (v, p) in points.iter().enumerate() {
            let c = cell_of(p);
            members[fill[c]] = v;
            fill[c] += 1;
        }
        Self {
            points,
            r,
            r_sq: r * r,
            k,
            start,
            members,
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Cells per side of the bucket grid.
    pub fn buckets_per_side(&self) -> usize {
        self.k
    }

    fn cell(&self, cx: usize, cy: usize) -> &[Vertex] {
        let c = cy * self.k + cx;
        &self.members[self.start[c]..self.start[c + 1]]
    }

    fn close(&self, u: Vertex, v: Vertex) -> bool {
        self.points[u].dist_sq(&self.points[v]) < self.r_sq
    }
}

impl EdgeSet for GeometricGraph<'_> {
    fn vertex_count(&self) -> usize {
        self.points.len()
    }

    fn try_for_each_edge<B, F>(&self, mut f: F) -> ControlFlow<B>
    where
        F: FnMut(Vertex, Vertex) -> ControlFlow<B>,
    {
        // Forward half of the Moore neighbourhood; with the cell itself this
        // visits every unordered pair of neighbouring cells once.
        const FORWARD: [(isize, isize); 4] = [(1, -1), (1, 0), (1, 1), (0, 1)];
        let k = self.k as isize;
        for cy in 0..self.k {
            for cx in 0..self.k {
                let here = self.cell(cx, cy);
                for (a, &u) in here.iter().enumerate() {
                    for &v in &here[a + 1..] {
                        if self.close(u, v) {
                            f(u.min(v), u.max(v))?;
                        }
                    }
                }
                for (dx, dy) in FORWARD {
                    let (nx, ny) = (cx as isize + dx, cy as isize + dy);
                    if nx < 0 || ny < 0 || nx >= k || ny >= k {
                        continue;
                    }
                    let there = self.cell(nx as usize, ny as usize);
                    for &u in here {
                        for &v in there {
                            if self.close(u, v) {
                                f(u.min(v), u.max(v))?;
                            }
                        }
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_is_strict() {
        let r = 0.2;
        let near = PointSet::new(vec![Point::new(0.0, 0.0), Point::new(0.0, r / 2.0)], r).unwrap();
        assert_eq!(near.graph().edge_count(), 1);
        let far = PointSet::new(vec![Point::new(0.0, 0.0), Point::new(r, 0.0)], r).unwrap();
        assert_eq!(far.graph().edge_count(), 0);
    }

    #[test]
    fn invalid_threshold() {
        assert!(PointSet::sample(3, 0.0, 1).is_err());
        assert!(PointSet::sample(3, 1.5, 1).is_err());
        assert!(PointSet::sample(3, f64::NAN, 1).is_err());
        assert!(PointSet::new(vec![Point::new(1.5, 0.0)], 0.1).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = PointSet::sample(50, 0.1, 7).unwrap();
        let b = PointSet::sample(50, 0.1, 7).unwrap();
        let c = PointSet::sample(50, 0.1, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert!(a
            .points()
            .iter()
            .all(|p| (0.0..1.0).contains(&p.x) && (0.0..1.0).contains(&p.y)));
    }

    #[test]
    fn bucket_width_covers_radius() {
        for r in [0.01, 0.1, 1.0 / 3.0, 0.25, 0.5, 1.0, 1.4] {
            let pts = vec![Point::new(0.5, 0.5); 1000];
            let g = GeometricGraph::new(&pts, r);
            assert!(1.0 / g.buckets_per_side() as f64 >= r || g.buckets_per_side() == 1);
        }
    }
}
