//! Classical layout engines used as baselines and as ground-truth producers:
//! stress majorization, ForceAtlas2, and a radial tree layout.

mod forceatlas2;
mod radial;
mod stress;

pub use forceatlas2::{forceatlas2, FdConfig};
pub use radial::radial_tree_layout;
pub use stress::{stress_majorization, SmConfig, SmResult};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum LayoutError {
    #[error("need at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("input graph is not a tree ({n} nodes, {m} edges)")]
    NotATree { n: usize, m: usize },
    #[error("invalid root {0} for {1} nodes")]
    InvalidRoot(usize, usize),
    #[error("barnes-hut approximation is not built into this engine")]
    BarnesHutUnavailable,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
