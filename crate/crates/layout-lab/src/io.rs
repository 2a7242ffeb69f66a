//! The graph+layout JSON file format used across the whole toolchain:
//!
//! ```json
//! {"n": 4, "edges": [[0,1],[1,2]], "coords": [[0.0,1.0], ...] or null,
//!  "meta": {"class": "grids", "seed": 7, "k": 49}}
//! ```
//!
//! `coords` is the ground-truth (or computed) layout and may be null; `k` is
//! the feature width the graph's class was generated for and is optional.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, Layout};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Invalid { path: String, source: GraphError },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub class: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
}

/// On-disk form of a graph with an optional layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub coords: Option<Vec<[f64; 2]>>,
    pub meta: GraphMeta,
}

impl GraphFile {
    pub fn new(graph: &Graph, coords: Option<&Layout>, meta: GraphMeta) -> Self {
        Self {
            n: graph.n(),
            edges: graph.edges().to_vec(),
            coords: coords.map(|l| l.coords().to_vec()),
            meta,
        }
    }

    /// Validates and converts to in-memory types.
    pub fn decode(&self) -> Result<(Graph, Option<Layout>), GraphError> {
        let graph = Graph::new(self.n, self.edges.clone())?;
        let layout = match &self.coords {
            Some(coords) => {
                let l = Layout::new(coords.clone())?;
                l.matches(&graph)?;
                Some(l)
            }
            None => None,
        };
        Ok((graph, layout))
    }

    pub fn load(path: &Path) -> Result<Self, IoError> {
        let text = fs::read_to_string(path).map_err(|source| IoError::Read {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| IoError::Parse {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), IoError> {
        let text = serde_json::to_string(self).expect("graph file serialization cannot fail");
        fs::write(path, text).map_err(|source| IoError::Write {
            path: path.display().to_string(),
            source,
        })
    }
}

/// Loads and validates a graph file in one step.
pub fn load_graph(path: &Path) -> Result<(Graph, Option<Layout>, GraphMeta), IoError> {
    let file = GraphFile::load(path)?;
    let (graph, layout) = file.decode().map_err(|source| IoError::Invalid {
        path: path.display().to_string(),
        source,
    })?;
    Ok((graph, layout, file.meta))
}
