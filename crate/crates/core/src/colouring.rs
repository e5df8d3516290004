//! Orthogonal colouring pairs and their verification.
//!
//! Two proper colourings `c1`, `c2` are orthogonal when the map
//! `v -> (c1(v), c2(v))` is injective; that is the form checked here.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Vertex};

/// A pair of vertex colourings sharing a palette `0..palette_size`.
///
/// Serialises as `{"N": .., "c1": [..], "c2": [..]}` with arrays indexed by
/// vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct ColouringPair {
    #[serde(rename = "N")]
    palette_size: usize,
    c1: Vec<usize>,
    c2: Vec<usize>,
}

#[derive(Deserialize)]
struct RawPair {
    #[serde(rename = "N")]
    palette_size: usize,
    c1: Vec<usize>,
    c2: Vec<usize>,
}

impl TryFrom<RawPair> for ColouringPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        ColouringPair::new(raw.palette_size, raw.c1, raw.c2)
    }
}

impl ColouringPair {
    /// Both maps must have the same length and every colour must be below
    /// `palette_size`.
    pub fn new(palette_size: usize, c1: Vec<usize>, c2: Vec<usize>) -> Result<Self> {
        if c1.len() != c2.len() {
            return Err(Error::NotTotal {
                expected: c1.len(),
                got: c2.len(),
            });
        }
        for (vertex, (&a, &b)) in c1.iter().zip(&c2).enumerate() {
            let colour = a.max(b);
            if colour >= palette_size {
                return Err(Error::ColourOutOfPalette {
                    vertex,
                    colour,
                    palette: palette_size,
                });
            }
        }
        Ok(Self {
            palette_size,
            c1,
            c2,
        })
    }

    pub(crate) fn new_unchecked(palette_size: usize, c1: Vec<usize>, c2: Vec<usize>) -> Self {
        debug_assert_eq!(c1.len(), c2.len());
        debug_assert!(c1.iter().chain(&c2).all(|&c| c < palette_size));
        Self {
            palette_size,
            c1,
            c2,
        }
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    pub fn len(&self) -> usize {
        self.c1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty()
    }

    pub fn c1(&self) -> &[usize] {
        &self.c1
    }

    pub fn c2(&self) -> &[usize] {
        &self.c2
    }

    pub fn colours_of(&self, v: Vertex) -> (usize, usize) {
        (self.c1[v], self.c2[v])
    }

    /// Restricts the pair along `map`: vertex `v` of the new pair takes the
    /// colours of `map[v]`. With an injective edge-preserving `map` the
    /// result stays proper and orthogonal.
    pub fn pull_back(&self, map: &[Vertex]) -> Self {
        let c1 = map.iter().map(|&w| self.c1[w]).collect();
        let c2 = map.iter().map(|&w| self.c2[w]).collect();
        Self::new_unchecked(self.palette_size, c1, c2)
    }

    /// Relabels the colours of each map onto `0..k` in increasing order of
    /// the original values, dropping unused colours. Each map is relabelled
    /// independently, which preserves properness and orthogonality.
    pub fn compact(&self) -> Self {
        fn relabel(colours: &[usize]) -> (Vec<usize>, usize) {
            let mut used: Vec<usize> = colours.to_vec();
            used.sort_unstable();
            used.dedup();
            let out = colours
                .iter()
                .map(|c| used.binary_search(c).expect("colour is present"))
                .collect();
            (out, used.len())
        }
        let (c1, k1) = relabel(&self.c1);
        let (c2, k2) = relabel(&self.c2);
        Self::new_unchecked(k1.max(k2), c1, c2)
    }

    /// Number of distinct colours appearing in either map.
    pub fn colours_used(&self) -> usize {
        let mut all: Vec<usize> = self.c1.iter().chain(&self.c2).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    }
}

/// Which property a violation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    ImproperC1,
    ImproperC2,
    NotOrthogonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub u: Vertex,
    pub v: Vertex,
}

/// Outcome of [`verify`]. `first_violation` is present iff a flag is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper_c1: bool,
    pub proper_c2: bool,
    pub orthogonal: bool,
    pub first_violation: Option<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.proper_c1 && self.proper_c2 && self.orthogonal
    }
}

fn check_total(n: usize, got: usize) -> Result<()> {
    if n == got {
        Ok(())
    } else {
        Err(Error::NotTotal { expected: n, got })
    }
}

fn first_monochromatic_edge<G: EdgeSet>(g: &G, c: &[usize]) -> Option<(Vertex, Vertex)> {
    match g.try_for_each_edge(|u, v| {
        if c[u] == c[v] {
            ControlFlow::Break((u, v))
        } else {
            ControlFlow::Continue(())
        }
    }) {
        ControlFlow::Break(edge) => Some(edge),
        ControlFlow::Continue(()) => None,
    }
}

/// First pair of distinct vertices `(u, v)`, `u < v`, sharing both colours,
/// in order of their colour pair.
fn first_repeated_pair(c1: &[usize], c2: &[usize]) -> Option<(Vertex, Vertex)> {
    let mut order: Vec<Vertex> = (0..c1.len()).collect();
    order.sort_unstable_by_key(|&v| (c1[v], c2[v], v));
    order
        .windows(2)
        .find(|w| c1[w[0]] == c1[w[1]] && c2[w[0]] == c2[w[1]])
        .map(|w| (w[0], w[1]))
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper<G: EdgeSet>(g: &G, c: &[usize]) -> Result<bool> {
    check_total(g.vertex_count(), c.len())?;
    Ok(first_monochromatic_edge(g, c).is_none())
}

/// True iff no two vertices receive the same colour pair.
pub fn is_orthogonal<G: EdgeSet>(g: &G, p: &ColouringPair) -> Result<bool> {
    check_total(g.vertex_count(), p.len())?;
    Ok(first_repeated_pair(&p.c1, &p.c2).is_none())
}

/// Checks both colourings for properness and the pair for orthogonality.
pub fn verify<G: EdgeSet>(g: &G, p: &ColouringPair) -> Result<VerificationReport> {
    check_total(g.vertex_count(), p.len())?;
    let (mut bad_c1, mut bad_c2) = (None, None);
    // One pass over the edges, stopping once both maps have a witness.
    let _ = g.try_for_each_edge(|u, v| {
        if bad_c1.is_none() && p.c1[u] == p.c1[v] {
            bad_c1 = Some((u, v));
        }
        if bad_c2.is_none() && p.c2[u] == p.c2[v] {
            bad_c2 = Some((u, v));
        }
        if bad_c1.is_some() && bad_c2.is_some() {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    let collision = first_repeated_pair(&p.c1, &p.c2);
    let first_violation = bad_c1
        .map(|e| (ViolationKind::ImproperC1, e))
        .or(bad_c2.map(|e| (ViolationKind::ImproperC2, e)))
        .or(collision.map(|e| (ViolationKind::NotOrthogonal, e)))
        .map(|(kind, (u, v))| Violation { kind, u, v });
    Ok(VerificationReport {
        proper_c1: bad_c1.is_none(),
        proper_c2: bad_c2.is_none(),
        orthogonal: collision.is_none(),
        first_violation,
    })
}

/// `⌈√n⌉`, the minimum palette of any orthogonal colouring on `n` vertices.
pub fn clique_number_lower_bound(n: usize) -> usize {
    let root = n.isqrt();
    if root * root == n {
        root
    } else {
        root + 1
    }
}
