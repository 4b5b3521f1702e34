//! Edge weightings and the vertex coloring they induce.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Weights in `1..=k`, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeWeighting {
    k: u32,
    weights: Vec<u32>,
}

impl EdgeWeighting {
    pub fn new(k: u32, weights: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("k must be positive".into()));
        }
        if let Some((edge, &weight)) = weights.iter().enumerate().find(|(_, &w)| w == 0 || w > k) {
            return Err(Error::WeightOutOfRange { edge, weight, k });
        }
        Ok(Self { k, weights })
    }

    /// Every edge gets `weight`; `k` is `weight`.
    pub fn constant(edge_count: usize, weight: u32) -> Self {
        Self { k: weight.max(1), weights: vec![weight.max(1); edge_count] }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, e: EdgeId) -> u32 {
        self.weights[e]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Same weights, larger alphabet.
    pub fn with_k(&self, k: u32) -> Result<Self> {
        Self::new(k, self.weights.clone())
    }

    pub fn into_weights(self) -> Vec<u32> {
        self.weights
    }
}

/// `colors[v]` is the sum of the weights on edges at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedColoring {
    pub colors: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Properness {
    pub proper: bool,
    /// Edges whose ends share a color, ascending.
    pub conflicts: Vec<EdgeId>,
}

fn check_len(g: &Graph, w: &EdgeWeighting) -> Result<()> {
    if w.len() != g.edge_count() {
        return Err(Error::WeightCountMismatch { expected: g.edge_count(), got: w.len() });
    }
    Ok(())
}

pub fn induced_coloring(g: &Graph, w: &EdgeWeighting) -> Result<InducedColoring> {
    check_len(g, w)?;
    let mut colors = vec![0u64; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let x = u64::from(w.weight(e));
        colors[u] += x;
        colors[v] += x;
    }
    Ok(InducedColoring { colors })
}

pub fn is_proper(g: &Graph, w: &EdgeWeighting) -> Result<Properness> {
    let c = induced_coloring(g, w)?;
    let conflicts: Vec<EdgeId> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| c.colors[u] == c.colors[v])
        .map(|(e, _)| e)
        .collect();
    Ok(Properness { proper: conflicts.is_empty(), conflicts })
}

pub(crate) fn require_connected_min3(g: &Graph) -> Result<()> {
    if g.vertex_count() < 3 {
        return Err(Error::TooSmall(format!(
            "need at least 3 vertices, got {}",
            g.vertex_count()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// A 1-weighting is proper exactly when no edge joins two vertices of equal degree.
pub fn admits_vc1(g: &Graph) -> Result<bool> {
    require_connected_min3(g)?;
    Ok(g.edges().iter().all(|&(u, v)| g.degree(u) != g.degree(v)))
}
