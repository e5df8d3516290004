//! Exhaustive search for the orthogonal chromatic number of small graphs.
//!
//! The search assigns a colour pair to one vertex at a time and backtracks.
//! Pruning uses properness against already coloured neighbours, pair
//! injectivity, and first-use symmetry breaking applied to each colouring
//! independently (relabelling the colours of `c1` or of `c2` maps solutions
//! to solutions). The search starts from the larger of `⌈√n⌉` and the
//! clique number, both of which are lower bounds.

use crate::colouring::{clique_number_lower_bound, ColouringPair};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default vertex limit for the oracle.
pub const DEFAULT_GUARD: usize = 14;

/// Hard limit: vertex sets are handled as `u64` bitmasks.
const MAX_GUARD: usize = 64;

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub max_vertices: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_GUARD,
        }
    }
}

impl Oracle {
    pub fn with_guard(max_vertices: usize) -> Self {
        Self { max_vertices }
    }

    fn check_guard(&self, g: &Graph) -> Result<()> {
        let guard = self.max_vertices.min(MAX_GUARD);
        if g.n_vertices() > guard {
            Err(Error::OracleGuard {
                n_vertices: g.n_vertices(),
                guard,
            })
        } else {
            Ok(())
        }
    }

    /// Smallest `N <= max_colours` admitting a proper orthogonal pair.
    pub fn ochi(&self, g: &Graph, max_colours: usize) -> Result<Option<usize>> {
        Ok(self
            .optimal_colouring(g, max_colours)?
            .map(|p| p.palette_size()))
    }

    /// A proper orthogonal pair with the smallest feasible palette not above
    /// `max_colours`, if one exists.
    pub fn optimal_colouring(&self, g: &Graph, max_colours: usize) -> Result<Option<ColouringPair>> {
        self.check_guard(g)?;
        let n = g.n_vertices();
        let start = clique_number_lower_bound(n).max(clique_number(g));
        for palette in start..=max_colours {
            if let Some(pair) = Search::new(g, palette).run() {
                return Ok(Some(pair));
            }
        }
        Ok(None)
    }

    /// A proper orthogonal pair using exactly the palette `0..palette`, if
    /// one exists.
    pub fn colouring_with_palette(&self, g: &Graph, palette: usize) -> Result<Option<ColouringPair>> {
        self.check_guard(g)?;
        Ok(Search::new(g, palette).run())
    }
}

/// Convenience wrapper using the default guard.
pub fn brute_force_ochi(g: &Graph, max_colours: usize) -> Result<Option<usize>> {
    Oracle::default().ochi(g, max_colours)
}

/// Size of a maximum clique. Exponential; only for oracle-sized graphs.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.n_vertices();
    assert!(n <= MAX_GUARD, "clique_number is limited to {MAX_GUARD} vertices");
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    grow_clique(&masks, 0, all, &mut best);
    best
}

fn grow_clique(masks: &[u64], size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() as usize <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        grow_clique(masks, size + 1, rest & masks[v], best);
    }
}

struct Search<'a> {
    palette: usize,
    order: Vec<Vertex>,
    /// For each position in `order`, the positions of earlier neighbours.
    back_edges: Vec<Vec<usize>>,
    c1: Vec<usize>,
    c2: Vec<usize>,
    pair_used: Vec<bool>,
    graph: &'a Graph,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, palette: usize) -> Self {
        let order = search_order(graph);
        let mut position = vec![0; graph.n_vertices()];
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        let back_edges = order
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                graph
                    .neighbours(v)
                    .iter()
                    .map(|&w| position[w])
                    .filter(|&p| p < k)
                    .collect()
            })
            .collect();
        let n = graph.n_vertices();
        Self {
            palette,
            order,
            back_edges,
            c1: vec![0; n],
            c2: vec![0; n],
            pair_used: vec![false; palette * palette],
            graph,
        }
    }

    fn run(mut self) -> Option<ColouringPair> {
        let n = self.graph.n_vertices();
        if n > self.palette * self.palette {
            return None;
        }
        if !self.extend(0, 0, 0) {
            return None;
        }
        // `c1`/`c2` are indexed by search position; map back to vertex ids.
        let mut c1 = vec![0; n];
        let mut c2 = vec![0; n];
        for (k, &v) in self.order.iter().enumerate() {
            c1[v] = self.c1[k];
            c2[v] = self.c2[k];
        }
        Some(ColouringPair::new_unchecked(self.palette, c1, c2))
    }

    fn extend(&mut self, k: usize, used1: usize, used2: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let n = self.palette;
        for a in 0..n.min(used1 + 1) {
            if self.back_edges[k].iter().any(|&p| self.c1[p] == a) {
                continue;
            }
            for b in 0..n.min(used2 + 1) {
                if self.pair_used[a * n + b] || self.back_edges[k].iter().any(|&p| self.c2[p] == b) {
                    continue;
                }
                self.c1[k] = a;
                self.c2[k] = b;
                self.pair_used[a * n + b] = true;
                if self.extend(k + 1, used1.max(a + 1), used2.max(b + 1)) {
                    return true;
                }
                self.pair_used[a * n + b] = false;
            }
        }
        false
    }
}

/// Max-degree start, then repeatedly the vertex with the most already
/// ordered neighbours (ties: higher degree, then lower id). Dense clusters
/// come first, so infeasible palettes fail near the root.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n_vertices();
    let mut placed = vec![false; n];
    let mut ordered_nbrs = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (ordered_nbrs[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            ordered_nbrs[w] += 1;
        }
    }
    order
}
