//! Vertex-coloring edge-weightings.
//!
//! An edge weighting `w: E -> {1..k}` induces the vertex coloring `c(v) = sum of w(e) over edges
//! at v`. This crate computes the smallest `k` for which that coloring can be made proper, builds
//! proper weightings for several graph families directly, and classifies the weighting number of
//! paths, cycles, cliques, theta graphs and small generalized polygon trees in closed form.

pub mod blocks;
pub mod classifiers;
pub mod connectivity;
pub mod constructors;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod msp;
pub mod oracle;
pub mod weighting;

pub use error::{Error, Result};
pub use graph::{Bipartition, EdgeId, Graph, Side, VertexId};
pub use weighting::{admits_vc1, induced_coloring, is_proper, EdgeWeighting, InducedColoring};
