//! Clique rows `H(m, d, t)`, clique grids `L(m², d, t²) = H ⊠ H`, and their
//! explicit orthogonal colourings.
//!
//! `H(m, d, t)` has vertices `v_i^j` (`0 <= i < m`, `0 <= j < t`) with flat id
//! `i*t + j`; two distinct vertices are adjacent iff their clique indices
//! differ by at most `d`. In a strong product `G ⊠ H` the pair `(u, v)` gets
//! flat id `u*|V(H)| + v`.

use serde::{Deserialize, Serialize};

use crate::colouring::{clique_number_lower_bound, ColouringPair};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, Vertex};

/// Parameters of `H(m, d, t)`: `m` cliques of size `t`, joined when their
/// indices differ by at most `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HParams {
    pub m: usize,
    pub d: usize,
    pub t: usize,
}

impl HParams {
    pub fn new(m: usize, d: usize, t: usize) -> Result<Self> {
        if m == 0 || d == 0 || t == 0 {
            return Err(Error::InvalidParameter(format!(
                "H(m, d, t) needs m, d, t >= 1, got ({m}, {d}, {t})"
            )));
        }
        let p = Self { m, d, t };
        p.n_vertices()?;
        Ok(p)
    }

    /// `m * t`.
    pub fn n_vertices(&self) -> Result<usize> {
        self.m
            .checked_mul(self.t)
            .ok_or(Error::Overflow("m * t exceeds the platform count"))
    }

    /// `t * (d + 1)`, the clique number of `H` once `m > d`.
    pub fn block(&self) -> usize {
        self.t.saturating_mul(self.d.saturating_add(1))
    }

    pub fn vertex(&self, i: usize, j: usize) -> Vertex {
        debug_assert!(i < self.m && j < self.t);
        i * self.t + j
    }

    pub fn split(&self, v: Vertex) -> HVertex {
        HVertex {
            i: v / self.t,
            j: v % self.t,
        }
    }
}

/// Vertex `v_i^j` of `H(m, d, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HVertex {
    /// Clique index.
    pub i: usize,
    /// Position inside the clique.
    pub j: usize,
}

/// Which formula of the orthogonal chromatic number of `H` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremCase {
    /// `m <= t(d+1)`
    Case1,
    /// `t(d+1) < m <= t(d+1)²`
    Case2,
    /// `m > t(d+1)²`
    Case3,
}

pub fn classify_case(p: HParams) -> TheoremCase {
    let block = p.block();
    if p.m <= block {
        TheoremCase::Case1
    } else if p.m <= block.saturating_mul(p.d.saturating_add(1)) {
        TheoremCase::Case2
    } else {
        TheoremCase::Case3
    }
}

/// Palette size of [`colour_h`]; equal to `Oχ(H(m, d, t))` outside the
/// degenerate range `m <= d` where `H` is a single clique of size `mt`.
pub fn ochi_h(p: HParams) -> usize {
    match classify_case(p) {
        TheoremCase::Case1 => p.block(),
        TheoremCase::Case2 => p.block() + 1,
        TheoremCase::Case3 => clique_number_lower_bound(p.m * p.t),
    }
}

/// Upper bound on `Oχ(L(m², d, t²))` obtained by squaring [`ochi_h`].
pub fn ochi_l_upper(p: HParams) -> usize {
    let n = ochi_h(p);
    n * n
}

/// `H(m, d, t)` as an explicit graph.
pub fn build_h(p: HParams) -> Result<Graph> {
    let n = p.n_vertices()?;
    let adj = (0..n)
        .map(|v| {
            let HVertex { i, .. } = p.split(v);
            let lo = i.saturating_sub(p.d) * p.t;
            let hi = (i + p.d + 1).min(p.m) * p.t;
            (lo..hi).filter(|&w| w != v).collect()
        })
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// The explicit orthogonal colouring of `H(m, d, t)` for its case.
///
/// With `x = j + i*t`:
/// * Case 1, `N = t(d+1)`: `c1 = x mod N`,
///   `c2 = ((j + ⌊i/(d+1)⌋) mod t + i*t) mod N`.
/// * Case 2, palette `P = t(d+1) + 1`: `c1 = x mod P`,
///   `c2 = (x + ⌊x/P⌋) mod P`. This is the Case 3 rule with modulus `P`;
///   it needs only `P > t(d+1)` and `P² >= mt`, and Case 2 gives
///   `mt <= t²(d+1)² < P²`. (The variant
///   `c2 = (x mod t(d+1) + ⌊i/(d+1)⌋) mod P` is not proper: it already
///   fails on `H(3, 1, 1)`.)
/// * Case 3, `N = ⌈√(mt)⌉`: `c1 = x mod N`, `c2 = (x + ⌊x/N⌋) mod N`.
pub fn colour_h(p: HParams) -> ColouringPair {
    let n = p.m * p.t;
    let mut c1 = Vec::with_capacity(n);
    let mut c2 = Vec::with_capacity(n);
    let case = classify_case(p);
    let palette = ochi_h(p);
    for i in 0..p.m {
        for j in 0..p.t {
            let x = j + i * p.t;
            let (a, b) = match case {
                TheoremCase::Case1 => {
                    let big = p.block();
                    let shifted = (j + i / (p.d + 1)) % p.t;
                    (x % big, (shifted + i * p.t) % big)
                }
                TheoremCase::Case2 | TheoremCase::Case3 => (x % palette, (x + x / palette) % palette),
            };
            c1.push(a);
            c2.push(b);
        }
    }
    ColouringPair::new_unchecked(palette, c1, c2)
}

/// Strong product `g ⊠ h`; vertex `(u, v)` has id `u*|V(h)| + v`.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let nh = h.n_vertices();
    let n = g
        .n_vertices()
        .checked_mul(nh)
        .ok_or(Error::Overflow("strong product size"))?;
    let closed = |graph: &Graph, u: Vertex| -> Vec<Vertex> {
        let mut list = graph.neighbours(u).to_vec();
        list.push(u);
        list.sort_unstable();
        list
    };
    let g_closed: Vec<Vec<Vertex>> = (0..g.n_vertices()).map(|u| closed(g, u)).collect();
    let h_closed: Vec<Vec<Vertex>> = (0..nh).map(|v| closed(h, v)).collect();
    let adj = (0..n)
        .map(|x| {
            let (u, v) = (x / nh, x % nh);
            let mut list = Vec::with_capacity(g_closed[u].len() * h_closed[v].len());
            for &u2 in &g_closed[u] {
                for &v2 in &h_closed[v] {
                    let y = u2 * nh + v2;
                    if y != x {
                        list.push(y);
                    }
                }
            }
            list
        })
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Colours `(u, v)` of `g ⊠ h` by `(pg(u)·Nh + ph(v))` in each coordinate.
pub fn compose_orthogonal(pg: &ColouringPair, ph: &ColouringPair) -> ColouringPair {
    let nh = ph.palette_size();
    let palette = pg.palette_size() * nh;
    let size = pg.len() * ph.len();
    let mut c1 = Vec::with_capacity(size);
    let mut c2 = Vec::with_capacity(size);
    for u in 0..pg.len() {
        let (a1, a2) = pg.colours_of(u);
        for v in 0..ph.len() {
            let (b1, b2) = ph.colours_of(v);
            c1.push(a1 * nh + b1);
            c2.push(a2 * nh + b2);
        }
    }
    ColouringPair::new_unchecked(palette, c1, c2)
}

/// `L(m², d, t²)` built directly from the clique rule: cliques `C_{i,j}` of
/// size `t²`, fully joined iff `|Δi| <= d` and `|Δj| <= d`.
pub fn build_l(p: HParams) -> Result<Graph> {
    let grid = CliqueGrid::new(p)?;
    let n = grid.n_vertices();
    let side = grid.side();
    let adj = (0..n)
        .map(|x| {
            let (u, v) = (x / side, x % side);
            let (ci, cj) = (u / p.t, v / p.t);
            let rows = ci.saturating_sub(p.d) * p.t..(ci + p.d + 1).min(p.m) * p.t;
            let cols = cj.saturating_sub(p.d) * p.t..(cj + p.d + 1).min(p.m) * p.t;
            let mut list = Vec::with_capacity(rows.len() * cols.len());
            for u2 in rows {
                for v2 in cols.clone() {
                    let y = u2 * side + v2;
                    if y != x {
                        list.push(y);
                    }
                }
            }
            list
        })
        .collect();
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Implicit `L(m², d, t²)`, for grids too large to materialise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueGrid {
    params: HParams,
    side: usize,
}

/// A vertex of `L` named by its clique `C_{i,j}` and a slot in `0..t²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSlot {
    pub i: usize,
    pub j: usize,
    pub slot: usize,
}

impl CliqueGrid {
    pub fn new(params: HParams) -> Result<Self> {
        let side = params.n_vertices()?;
        side.checked_mul(side)
            .ok_or(Error::Overflow("clique grid size"))?;
        Ok(Self { params, side })
    }

    pub fn params(&self) -> HParams {
        self.params
    }

    /// `m * t`, the number of vertices of each factor.
    pub fn side(&self) -> usize {
        self.side
    }

    pub fn n_vertices(&self) -> usize {
        self.side * self.side
    }

    pub fn clique_size(&self) -> usize {
        self.params.t * self.params.t
    }

    /// Flat id of slot `slot` in clique `C_{i,j}`; slot `a*t + b` is the
    /// product vertex `(v_i^a, v_j^b)`.
    pub fn vertex(&self, at: GridSlot) -> Vertex {
        let t = self.params.t;
        debug_assert!(at.i < self.params.m && at.j < self.params.m && at.slot < t * t);
        let (a, b) = (at.slot / t, at.slot % t);
        (at.i * t + a) * self.side + (at.j * t + b)
    }

    pub fn locate(&self, x: Vertex) -> GridSlot {
        let t = self.params.t;
        let (u, v) = (x / self.side, x % self.side);
        GridSlot {
            i: u / t,
            j: v / t,
            slot: (u % t) * t + v % t,
        }
    }

    /// Whether cliques `C_{i1,j1}` and `C_{i2,j2}` are joined (or equal).
    pub fn cells_joined(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        a.0.abs_diff(b.0) <= self.params.d && a.1.abs_diff(b.1) <= self.params.d
    }
}

impl Adjacency for CliqueGrid {
    fn vertex_count(&self) -> usize {
        self.n_vertices()
    }

    fn is_adjacent(&self, x: Vertex, y: Vertex) -> bool {
        if x == y || x >= self.n_vertices() || y >= self.n_vertices() {
            return false;
        }
        let (a, b) = (self.locate(x), self.locate(y));
        self.cells_joined((a.i, a.j), (b.i, b.j))
    }
}
