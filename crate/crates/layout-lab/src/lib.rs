//! A desk-scale laboratory for learning planar graph layouts: graph classes
//! with ground-truth drawings, classical baseline layout engines, quality
//! metrics, and a bidirectional recurrent model trained to place nodes from
//! BFS-encoded sequences.

pub mod graph;
pub mod io;
pub mod layouts;
pub mod metrics;
