//! Exact computation of partition-based location and domination parameters
//! of small graphs: the partition dimension, the dominating partition
//! dimension, the metric dimension, the domination number, the resolving
//! domination number and the partition domination number, together with
//! constructive partition builders, named family generators, small-order
//! isomorphism-free enumeration, and an executable catalog of structural
//! checks runnable over any graph6 corpus.

pub mod constructions;
pub mod distance;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod partition;
pub mod solvers;
pub mod twins;
pub mod verification;

pub use distance::{diameter, distances, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{emit_graph6, parse_graph6};
pub use partition::{
    dist_to_part, distance_vector, is_dominating, is_rd, is_resolving, partitions_into, Partition,
};
pub use solvers::{compute_all, ParamRecord};
pub use twins::{twin_sets, TwinKind, TwinSetReport};
pub use verification::{run_check, run_suite, run_suite_orders, CheckReport, CheckStatus, Corpus};
