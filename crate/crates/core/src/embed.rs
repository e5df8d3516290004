//! Embedding random geometric graphs into clique grids and pulling back the
//! grid colourings.
//!
//! Both regimes send the points of cell `(i, j)` to clique `C_{i,j}` of
//! `L(m², d, t²)`, filling slots in increasing vertex id. If the map is a
//! homomorphism, any orthogonal colouring of the grid restricts to one of
//! the geometric graph.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clique_grid::{colour_h, compose_orthogonal, ochi_l_upper, CliqueGrid, GridSlot, HParams};
use crate::colouring::ColouringPair;
use crate::error::Error;
use crate::geo::{equal_count_partition, equal_size_partition, CellPartition, DenseParams, OptimalParams, PointSet};
use crate::graph::{Adjacency, EdgeSet, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Dense,
    Optimal,
}

/// A cell holding more points than its clique has vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overflow {
    pub i: usize,
    pub j: usize,
    pub count: usize,
}

#[derive(Debug, Error)]
pub enum EmbedError {
    #[error("{} cell(s) exceed the clique size {capacity}", cells.len())]
    CellOverflow { capacity: usize, cells: Vec<Overflow> },

    #[error("m = {m} does not exceed t(d+1)² = {bound} (t = {t}, d = {d})")]
    OutsideCaseThree { m: usize, t: usize, d: usize, bound: usize },

    #[error(transparent)]
    Invalid(#[from] Error),
}

/// Vertex map from a point set into `L(m², d, t²)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingMap {
    target: HParams,
    regime: Regime,
    slots: Vec<GridSlot>,
}

impl EmbeddingMap {
    /// Assigns slots cell by cell in increasing vertex id. Fails with
    /// [`EmbedError::CellOverflow`] listing every cell above `t²` points.
    pub fn from_partition(cp: &CellPartition, target: HParams, regime: Regime) -> Result<Self, EmbedError> {
        if cp.m != target.m {
            return Err(Error::InvalidParameter(format!(
                "partition has {} cells per side but the grid has {}",
                cp.m, target.m
            ))
            .into());
        }
        let capacity = target.t * target.t;
        let overflow: Vec<Overflow> = cp
            .occupancy()
            .iter()
            .enumerate()
            .filter(|&(_, &count)| count > capacity)
            .map(|(c, &count)| Overflow {
                i: c / cp.m,
                j: c % cp.m,
                count,
            })
            .collect();
        if !overflow.is_empty() {
            return Err(EmbedError::CellOverflow {
                capacity,
                cells: overflow,
            });
        }
        let mut filled = vec![0usize; cp.m * cp.m];
        let slots = cp
            .cell_of
            .iter()
            .map(|&(i, j)| {
                let c = i * cp.m + j;
                let slot = filled[c];
                filled[c] += 1;
                GridSlot { i, j, slot }
            })
            .collect();
        Ok(Self {
            target,
            regime,
            slots,
        })
    }

    pub fn target_params(&self) -> HParams {
        self.target
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn slots(&self) -> &[GridSlot] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn grid(&self) -> CliqueGrid {
        CliqueGrid::new(self.target).expect("target size checked at construction")
    }

    /// Flat target vertex for every source vertex.
    pub fn target_vertices(&self) -> Vec<Vertex> {
        let grid = self.grid();
        self.slots.iter().map(|&s| grid.vertex(s)).collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.grid().n_vertices()];
        self.target_vertices()
            .into_iter()
            .all(|x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.len() == self.grid().n_vertices() && self.is_injective()
    }
}

/// Equal-size grid embedding. Requires `ps` to have `dp.n` points and its
/// threshold to satisfy `r/l + 1 < d`.
pub fn embed_dense(ps: &PointSet, dp: &DenseParams) -> Result<EmbeddingMap, EmbedError> {
    if ps.len() != dp.n {
        return Err(Error::InvalidParameter(format!(
            "parameters are for n = {} but the point set has {} points",
            dp.n,
            ps.len()
        ))
        .into());
    }
    if !dp.edge_condition_holds(ps.r()) {
        return Err(Error::InvalidParameter(format!(
            "threshold {} violates r/l + 1 < d for m = {}, d = {}",
            ps.r(),
            dp.m,
            dp.d
        ))
        .into());
    }
    let cp = equal_size_partition(ps, dp.m)?;
    EmbeddingMap::from_partition(&cp, dp.h_params(), Regime::Dense)
}

/// Equal-count embedding; a bijection onto `L(m², d, t²)`.
pub fn embed_optimal(ps: &PointSet, op: &OptimalParams) -> Result<EmbeddingMap, EmbedError> {
    let cp = equal_count_partition(ps, op.m, op.t)?;
    EmbeddingMap::from_partition(&cp, op.h_params(), Regime::Optimal)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismCheck {
    pub ok: bool,
    pub first_violation: Option<(Vertex, Vertex)>,
}

/// Whether every edge of `g` lands on an edge of `target` under `em`.
pub fn check_homomorphism<G, A>(g: &G, em: &EmbeddingMap, target: &A) -> HomomorphismCheck
where
    G: EdgeSet,
    A: Adjacency,
{
    let image = em.target_vertices();
    assert_eq!(image.len(), g.vertex_count(), "embedding must cover every vertex");
    let outcome = g.try_for_each_edge(|u, v| {
        if target.is_adjacent(image[u], image[v]) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break((u, v))
        }
    });
    let first_violation = match outcome {
        ControlFlow::Break(edge) => Some(edge),
        ControlFlow::Continue(()) => None,
    };
    HomomorphismCheck {
        ok: first_violation.is_none(),
        first_violation,
    }
}

/// Why a coloured instance does not carry a guaranteed colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Failure {
    HomomorphismViolated { u: Vertex, v: Vertex },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "regime", rename_all = "snake_case")]
pub enum RegimeParams {
    Dense(DenseParams),
    Optimal(OptimalParams),
}

/// A point set with the colouring pulled back from its grid.
#[derive(Clone, Debug, PartialEq)]
pub struct ColouredRgg {
    pub point_set: PointSet,
    pub params: RegimeParams,
    /// Pulled-back pair with unused colours dropped.
    pub pair: ColouringPair,
    /// Palette of the grid colouring before compaction.
    pub declared_palette: usize,
    pub homomorphism_ok: bool,
    pub failure: Option<Failure>,
}

impl ColouredRgg {
    pub fn regime(&self) -> Regime {
        match self.params {
            RegimeParams::Dense(_) => Regime::Dense,
            RegimeParams::Optimal(_) => Regime::Optimal,
        }
    }

    pub fn palette_size(&self) -> usize {
        self.pair.palette_size()
    }
}

fn pull_back_grid_colouring<G: EdgeSet>(
    ps: &PointSet,
    g: &G,
    em: &EmbeddingMap,
    params: RegimeParams,
) -> ColouredRgg {
    let h = em.target_params();
    let factor = colour_h(h);
    let grid_pair = compose_orthogonal(&factor, &factor);
    debug_assert_eq!(grid_pair.palette_size(), ochi_l_upper(h));
    let check = check_homomorphism(g, em, &em.grid());
    let pair = grid_pair.pull_back(&em.target_vertices()).compact();
    ColouredRgg {
        point_set: ps.clone(),
        params,
        pair,
        declared_palette: grid_pair.palette_size(),
        homomorphism_ok: check.ok,
        failure: check
            .first_violation
            .map(|(u, v)| Failure::HomomorphismViolated { u, v }),
    }
}

/// Dense regime: equal-size embedding, then the product of the explicit
/// `H(m, d, t)` colourings pulled back.
pub fn colour_rgg_dense<G: EdgeSet>(ps: &PointSet, g: &G, dp: &DenseParams) -> Result<ColouredRgg, EmbedError> {
    let em = embed_dense(ps, dp)?;
    Ok(pull_back_grid_colouring(ps, g, &em, RegimeParams::Dense(*dp)))
}

/// Optimal regime: equal-count bijection into a grid in Case 3.
pub fn colour_rgg_optimal<G: EdgeSet>(ps: &PointSet, g: &G, op: &OptimalParams) -> Result<ColouredRgg, EmbedError> {
    if !op.in_case_three() {
        return Err(EmbedError::OutsideCaseThree {
            m: op.m,
            t: op.t,
            d: op.d,
            bound: op.t * (op.d + 1) * (op.d + 1),
        });
    }
    let em = embed_optimal(ps, op)?;
    Ok(pull_back_grid_colouring(ps, g, &em, RegimeParams::Optimal(*op)))
}
