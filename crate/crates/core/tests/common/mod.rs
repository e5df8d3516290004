//! Naive reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use orthogrid::{EdgeSet, Point};

pub type EdgeList = BTreeSet<(usize, usize)>;

/// Every pair compared directly against the strict threshold.
pub fn all_pairs_edges(points: &[Point], r: f64) -> EdgeList {
    let mut out = EdgeList::new();
    for u in 0..points.len() {
        for v in u + 1..points.len() {
            let dx = points[u].x - points[v].x;
            let dy = points[u].y - points[v].y;
            if dx * dx + dy * dy < r * r {
                out.insert((u, v));
            }
        }
    }
    out
}

pub fn edges_of<G: EdgeSet>(g: &G) -> EdgeList {
    let mut out = EdgeList::new();
    g.for_each_edge(|u, v| {
        out.insert((u.min(v), u.max(v)));
    });
    out
}

/// `H(m, d, t)` straight from its definition on `(i, j)` labels.
pub fn h_edges(m: usize, d: usize, t: usize) -> EdgeList {
    let mut out = EdgeList::new();
    let labels: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..t).map(move |j| (i, j))).collect();
    for (a, &(i1, _)) in labels.iter().enumerate() {
        for (b, &(i2, _)) in labels.iter().enumerate().skip(a + 1) {
            if i1.abs_diff(i2) <= d {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Strong product by the closed-neighbourhood rule on edge lists.
pub fn strong_product_edges(ng: usize, g: &EdgeList, nh: usize, h: &EdgeList) -> EdgeList {
    let close = |e: &EdgeList, a: usize, b: usize| a == b || e.contains(&(a.min(b), a.max(b)));
    let mut out = EdgeList::new();
    for x in 0..ng * nh {
        for y in x + 1..ng * nh {
            if close(g, x / nh, y / nh) && close(h, x % nh, y % nh) {
                out.insert((x, y));
            }
        }
    }
    out
}

pub fn naive_proper(edges: &EdgeList, c: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| c[u] != c[v])
}

pub fn naive_orthogonal(c1: &[usize], c2: &[usize]) -> bool {
    let pairs: HashSet<(usize, usize)> = c1.iter().copied().zip(c2.iter().copied()).collect();
    pairs.len() == c1.len()
}

/// Smallest palette admitting an orthogonal pair, by enumerating every
/// assignment of pairs. Only for a handful of vertices.
pub fn enumerate_ochi(n: usize, edges: &EdgeList) -> usize {
    fn fill(v: usize, n: usize, k: usize, edges: &EdgeList, c1: &mut Vec<usize>, c2: &mut Vec<usize>) -> bool {
        if v == n {
            return naive_proper(edges, c1) && naive_proper(edges, c2) && naive_orthogonal(c1, c2);
        }
        for a in 0..k {
            for b in 0..k {
                c1.push(a);
                c2.push(b);
                let found = fill(v + 1, n, k, edges, c1, c2);
                c1.pop();
                c2.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    (1..=n.max(1))
        .find(|&k| fill(0, n, k, edges, &mut Vec::new(), &mut Vec::new()))
        .unwrap_or(0)
}

/// `⌈√n⌉` by integer search.
pub fn ceil_sqrt(n: usize) -> usize {
    (0..).find(|k| k * k >= n).unwrap()
}

pub fn ln_n(n: usize) -> f64 {
    (n as f64).ln()
}
