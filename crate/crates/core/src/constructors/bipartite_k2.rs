//! Proper 2-weighting of `G □ K2` for a connected bipartite `G`.
//!
//! Copy 1 of `G` gets weight 1 and copy 2 weight 2, which already separates the copies. The
//! remaining cross edges `e_u` are fixed component by component, where components are the
//! connected pieces of the subgraphs induced by vertices of equal degree. Inside a component
//! `w(e_v)` equals `w(e_u)` exactly when `d(u, v)` is even; neighboring components whose degrees
//! differ by one are linked so that the linking edge's cross edges agree.

use crate::error::{Error, Result};
use crate::families::path;
use crate::graph::{Graph, VertexId};
use crate::weighting::EdgeWeighting;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComponentPartition {
    /// Each sorted; ordered by smallest vertex.
    pub components: Vec<Vec<VertexId>>,
    /// Component that linked this one into its forest, `None` for a seed.
    pub parent: Vec<Option<usize>>,
    /// `(u, w(e_u))` for the vertex each component's weights were derived from.
    pub anchor: Vec<(VertexId, u32)>,
    /// Cross-edge weight per vertex of `G`.
    pub cross: Vec<u32>,
}

/// Connected components of the subgraphs induced by each degree class, ordered by smallest vertex.
pub fn degree_components(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let d = g.degree(s);
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            i += 1;
            for y in g.neighbors(x) {
                if comp[y] == usize::MAX && g.degree(y) == d {
                    comp[y] = id;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn flip(w: u32) -> u32 {
    3 - w
}

/// Runs the component-linking procedure on `g` (the copy of `G` inside `G □ K2`), seeding each
/// new forest at its smallest unprocessed component with weight 1 on its smallest vertex.
pub fn degree_component_partition(g: &Graph) -> DegreeComponentPartition {
    let n = g.vertex_count();
    let components = degree_components(g);
    let mut comp_of = vec![0; n];
    for (i, c) in components.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let k = components.len();
    let mut parent = vec![None; k];
    let mut anchor = vec![(0, 0); k];
    let mut done = vec![false; k];
    let mut cross = vec![0u32; n];

    let assign = |a: usize, u: VertexId, wu: u32, cross: &mut Vec<u32>, anchor: &mut Vec<(VertexId, u32)>| {
        let dist = g.bfs_distances(u);
        for &v in &components[a] {
            let d = dist[v].expect("g is connected");
            cross[v] = if d % 2 == 1 { flip(wu) } else { wu };
        }
        anchor[a] = (u, wu);
    };

    while let Some(seed) = (0..k).find(|&a| !done[a]) {
        done[seed] = true;
        assign(seed, components[seed][0], 1, &mut cross, &mut anchor);
        let mut tree = vec![seed];
        loop {
            let link = g.edges().iter().find_map(|&(p, q)| {
                [(p, q), (q, p)].into_iter().find(|&(x, y)| {
                    tree.contains(&comp_of[x])
                        && !done[comp_of[y]]
                        && g.degree(x).abs_diff(g.degree(y)) == 1
                })
            });
            let Some((x, y)) = link else { break };
            let a2 = comp_of[y];
            done[a2] = true;
            parent[a2] = Some(comp_of[x]);
            let wx = cross[x];
            assign(a2, y, wx, &mut cross, &mut anchor);
            tree.push(a2);
        }
    }
    DegreeComponentPartition { components, parent, anchor, cross }
}

/// Proper 2-weighting of `g □ K2` in the edge numbering of [`Graph::cartesian_product`]: edges of
/// copy 1, edges of copy 2, then the cross edge `e_u` of vertex `u` at id `2m + u`.
pub fn bipartite_product_k2(g: &Graph) -> Result<EdgeWeighting> {
    if g.vertex_count() <= 2 {
        return Err(Error::Precondition(format!("need more than 2 vertices, got {}", g.vertex_count())));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if !g.is_bipartite() {
        return Err(Error::Precondition("graph must be bipartite".into()));
    }
    let part = degree_component_partition(g);
    let m = g.edge_count();
    let mut weights = vec![1; m];
    weights.extend(std::iter::repeat_n(2, m));
    weights.extend_from_slice(&part.cross);
    let w = EdgeWeighting::new(2, weights)?;
    let host = g.cartesian_product(&path(2)?);
    super::certify(&host, w, "bipartite product construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_multipartite, cycle, random_connected_bipartite};
    use crate::weighting::is_proper;

    fn check(g: &Graph) {
        let w = bipartite_product_k2(g).unwrap();
        let host = g.cartesian_product(&path(2).unwrap());
        assert!(is_proper(&host, &w).unwrap().proper);
    }

    #[test]
    fn small_cases() {
        check(&cycle(4).unwrap());
        check(&path(3).unwrap());
        check(&complete_multipartite(&[1, 3]).unwrap());
        assert!(bipartite_product_k2(&cycle(5).unwrap()).is_err());
        assert!(bipartite_product_k2(&path(2).unwrap()).is_err());
    }

    #[test]
    fn cross_weights_follow_distance_parity() {
        for seed in 0..40 {
            let g = random_connected_bipartite(10, 13, seed).unwrap();
            let p = degree_component_partition(&g);
            for c in &p.components {
                for &u in c {
                    let du = g.bfs_distances(u);
                    for &v in c {
                        assert_eq!(p.cross[u] == p.cross[v], du[v].unwrap().is_multiple_of(2));
                    }
                }
            }
            for (a, par) in p.parent.iter().enumerate() {
                if let Some(b) = *par {
                    assert!(g.edges().iter().any(|&(x, y)| {
                        [(x, y), (y, x)].iter().any(|&(x, y)| {
                            p.components[b].contains(&x)
                                && p.components[a].contains(&y)
                                && g.degree(x).abs_diff(g.degree(y)) == 1
                                && p.cross[x] == p.cross[y]
                        })
                    }));
                }
            }
            check(&g);
        }
    }
}
