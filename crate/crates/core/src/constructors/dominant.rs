//! 2-weighting of a bipartite graph around a vertex whose degree exceeds all its neighbors'.
//!
//! With both parts odd, `G - v` is weighted so that colors are odd on `v`'s side and even on the
//! other, then every edge at `v` gets weight 2. The neighbors of `v` stay even and below
//! `c(v) = 2 deg(v)`. The inner weighting comes from the constrained search.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::{find_weighting, Parity, SearchConstraints};
use crate::weighting::{require_connected_min3, EdgeWeighting};

fn dominates(g: &Graph, v: VertexId) -> bool {
    g.neighbors(v).all(|u| g.degree(u) < g.degree(v))
}

/// Vertices `v` with `deg(v) > deg(u)` for every neighbor `u` and `G - v` connected, ascending.
pub fn dominant_vertices(g: &Graph) -> Vec<VertexId> {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0 && dominates(g, v) && g.remove_vertex(v).0.is_connected())
        .collect()
}

pub fn dominant_vertex_weighting(g: &Graph, v: VertexId) -> Result<EdgeWeighting> {
    require_connected_min3(g).map_err(|e| Error::Precondition(e.to_string()))?;
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange(v));
    }
    let Some(bip) = g.bipartition() else {
        return Err(Error::Precondition("graph must be bipartite".into()));
    };
    if !dominates(g, v) {
        return Err(Error::Precondition(format!("vertex {v} does not have larger degree than all its neighbors")));
    }
    let (h, origin) = g.remove_vertex(v);
    if !h.is_connected() {
        return Err(Error::Precondition(format!("removing vertex {v} disconnects the graph")));
    }
    let (su, sw) = bip.part_sizes();
    if su % 2 == 0 || sw % 2 == 0 {
        // a part of even size: any proper 2-weighting will do
        return find_weighting(g, 2, &SearchConstraints::none())?.ok_or_else(|| {
            Error::ConstructionFailed("bipartite graph with an even part has no proper 2-weighting".into())
        });
    }
    // remove_vertex keeps the order of the other vertices
    let own = bip.side[v];
    let parity: BTreeMap<VertexId, Parity> = (0..g.vertex_count())
        .filter(|&x| x != v)
        .map(|x| {
            let p = if bip.side[x] == own { Parity::Odd } else { Parity::Even };
            (if x < v { x } else { x - 1 }, p)
        })
        .collect();
    let cons = SearchConstraints { fixed_weights: BTreeMap::new(), parity };
    let inner = find_weighting(&h, 2, &cons)?.ok_or_else(|| {
        Error::ConstructionFailed(format!("no parity-constrained 2-weighting of G - {v}"))
    })?;
    let mut weights = vec![2u32; g.edge_count()];
    for (i, &e) in origin.iter().enumerate() {
        weights[e] = inner.weight(i);
    }
    super::certify(g, EdgeWeighting::new(2, weights)?, "dominant-vertex construction")
}
