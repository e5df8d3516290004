//! Random geometric graphs and the unit-square partitions used to embed
//! them into clique grids.

pub mod params;
pub mod partition;
pub mod points;

pub use params::{separation_slack, DenseParams, OptimalParams};
pub use partition::{
    check_deviation_bounds, equal_count_partition, equal_size_partition, min_cell_pair_distance,
    separation_lower_bound, Boundaries, CellPartition, DeviationReport, PartitionKind,
};
pub use points::{sample_rgg, GeometricGraph, Point, PointSet};
