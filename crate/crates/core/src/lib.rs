//! Orthogonal colourings of clique grids and random geometric graphs.
//!
//! An orthogonal colouring of a graph is a pair of proper colourings whose
//! colour pairs are all distinct. This crate builds explicit optimal pairs
//! for the banded clique graphs `H(m, d, t)`, squares them into colourings of
//! the grids `L(m², d, t²) = H ⊠ H`, and pulls those back to random
//! geometric graphs through grid embeddings of the unit square.

pub mod clique_grid;
pub mod colouring;
pub mod embed;
pub mod error;
pub mod experiments;
pub mod geo;
pub mod graph;
pub mod io;
pub mod oracle;

pub use clique_grid::{
    build_h, build_l, classify_case, colour_h, compose_orthogonal, ochi_h, ochi_l_upper, strong_product,
    CliqueGrid, GridSlot, HParams, HVertex, TheoremCase,
};
pub use colouring::{
    clique_number_lower_bound, is_orthogonal, is_proper, verify, ColouringPair, VerificationReport, Violation,
    ViolationKind,
};
pub use embed::{
    check_homomorphism, colour_rgg_dense, colour_rgg_optimal, embed_dense, embed_optimal, ColouredRgg,
    EmbedError, EmbeddingMap, Failure, HomomorphismCheck, Overflow, Regime, RegimeParams,
};
pub use error::{Error, Result};
pub use geo::{
    check_deviation_bounds, equal_count_partition, equal_size_partition, min_cell_pair_distance, sample_rgg,
    separation_lower_bound, separation_slack, Boundaries, CellPartition, DenseParams, DeviationReport,
    GeometricGraph, OptimalParams, PartitionKind, Point, PointSet,
};
pub use graph::{Adjacency, EdgeSet, Graph, Vertex};
pub use oracle::{brute_force_ochi, clique_number, Oracle, DEFAULT_GUARD};
