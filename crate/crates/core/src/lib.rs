//! Maximum common induced subforests and minimum common induced
//! superforests of sets of forests.
//!
//! - [`pairwise`]: exact maximum common subtree and minimum supertree of two
//!   trees.
//! - [`greedy`]: rotation-folding approximation for any number of trees.
//! - [`exact3`]: exact minimum supertree of three bounded-degree trees.
//! - [`ptas`]: approximate maximum common subforest via component censuses.
//! - [`oracle`]: exhaustive solvers for small instances.
//! - [`generators`]: hardness and tightness instance families.

pub mod error;
pub mod exact3;
pub mod forest;
pub mod generators;
pub mod greedy;
pub mod oracle;
pub mod pairwise;
pub mod ptas;

pub use error::{Error, Result};
pub use exact3::{exact3_supertree, Exact3Options, Exact3Result};
pub use forest::{
    contains_induced, parse_forest, parse_forests, to_dot, to_edge_list, tree_canonical,
    CanonicalCode, Embedding, Forest, RootedForest,
};
pub use greedy::{greedy_bound, greedy_supertree, GreedyTrace, MultiSupertree};
pub use oracle::{oracle_max_subforest, oracle_min_superforest, OracleBudget, OracleResult};
pub use pairwise::{mcs_trees, supertree2, McsResult, SupertreeResult};
pub use ptas::{ptas_subforest, PtasOptions, PtasResult};
