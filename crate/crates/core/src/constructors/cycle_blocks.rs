//! 2-weightings assembled block by block.
//!
//! The block-cut tree is rooted at the smallest cut vertex. A cycle block is walked from the cut
//! vertex through which it hangs (the root for blocks containing it) and weighted `2,2,1,1`
//! periodically, so its first and last edges both touch that vertex. Either walking direction fits
//! that description; the directions are chosen by a small backtracking search and the result is
//! certified.

use std::collections::VecDeque;

use crate::blocks::blocks_and_cut_vertices;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::weighting::{require_connected_min3, EdgeWeighting};

const PATTERN: [u32; 4] = [2, 2, 1, 1];

/// Edges of the cycle `block` walked from `start`, leaving along its smaller (`reverse = false`)
/// or larger block edge.
fn cycle_walk(g: &Graph, block: &[EdgeId], start: VertexId, reverse: bool) -> Vec<EdgeId> {
    let in_block = |e: EdgeId| block.binary_search(&e).is_ok();
    let mut first: Vec<EdgeId> = g.incident(start).iter().map(|&(_, e)| e).filter(|&e| in_block(e)).collect();
    first.sort_unstable();
    let mut e = if reverse { first[1] } else { first[0] };
    let mut at = start;
    let mut walk = Vec::with_capacity(block.len());
    loop {
        walk.push(e);
        at = g.opposite(e, at);
        if at == start {
            return walk;
        }
        e = g.incident(at).iter().map(|&(_, f)| f).find(|&f| f != e && in_block(f)).expect("cycle vertex has two block edges");
    }
}

/// Cut vertex (or, for a graph with one block, smallest vertex) each block hangs from.
fn attachments(g: &Graph, blocks: &[Vec<EdgeId>], cut: &[VertexId]) -> Vec<VertexId> {
    let verts: Vec<Vec<VertexId>> = blocks
        .iter()
        .map(|b| {
            let mut vs: Vec<_> = b.iter().flat_map(|&e| <[VertexId; 2]>::from(g.edge(e))).collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    let Some(&root) = cut.first() else {
        return verts.iter().map(|vs| vs[0]).collect();
    };
    let mut attach = vec![usize::MAX; blocks.len()];
    let mut seen_cut = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(c) = queue.pop_front() {
        for (b, vs) in verts.iter().enumerate() {
            if attach[b] == usize::MAX && vs.binary_search(&c).is_ok() {
                attach[b] = c;
                for &x in vs {
                    if x != c && cut.binary_search(&x).is_ok() && !seen_cut.contains(&x) {
                        seen_cut.push(x);
                        queue.push_back(x);
                    }
                }
            }
        }
    }
    attach
}

/// Combines per-block weightings into a 2-weighting of `g`. `supplied[i]` weights block `i` of
/// [`blocks_and_cut_vertices`] in the numbering of
/// [`BlockDecomposition::block_graph`](crate::blocks::BlockDecomposition::block_graph); blocks
/// left as `None` must be cycles and receive the periodic pattern.
pub fn compose_block_weightings(g: &Graph, supplied: &[Option<EdgeWeighting>]) -> Result<EdgeWeighting> {
    require_connected_min3(g).map_err(|e| Error::Precondition(e.to_string()))?;
    let bd = blocks_and_cut_vertices(g)?;
    if supplied.len() != bd.blocks.len() {
        return Err(Error::Precondition(format!(
            "{} block weightings supplied for {} blocks",
            supplied.len(),
            bd.blocks.len()
        )));
    }
    let mut weights = vec![0u32; g.edge_count()];
    let mut free = Vec::new();
    for (b, edges) in bd.blocks.iter().enumerate() {
        match &supplied[b] {
            Some(w) => {
                if w.len() != edges.len() || w.k() > 2 {
                    return Err(Error::Precondition(format!("block {b} needs a 2-weighting of {} edges", edges.len())));
                }
                for (&e, &x) in edges.iter().zip(w.weights()) {
                    weights[e] = x;
                }
            }
            None if bd.block_is_cycle(g, b) => free.push(b),
            None => {
                let vs = bd.block_vertices(g, b);
                return Err(Error::Precondition(format!(
                    "block {b} on vertices {vs:?} is not a cycle and has no weighting"
                )));
            }
        }
    }
    let attach = attachments(g, &bd.blocks, &bd.cut_vertices);
    let walks: Vec<[Vec<EdgeId>; 2]> = free
        .iter()
        .map(|&b| [false, true].map(|r| cycle_walk(g, &bd.blocks[b], attach[b], r)))
        .collect();

    // A vertex is settled once all its edges are weighted; the search fails a branch as soon as two
    // settled neighbors share a color.
    let mut missing: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.incident(v).iter().filter(|&&(_, e)| weights[e] == 0).count())
        .collect();
    let found = search(g, &walks, 0, &mut weights, &mut missing);
    if !found {
        return Err(Error::ConstructionFailed(
            "no choice of walking directions gives a proper weighting".into(),
        ));
    }
    let w = EdgeWeighting::new(2, weights)?;
    super::certify(g, w, "cycle-block patterns")
}

fn settled_conflict(g: &Graph, weights: &[u32], missing: &[usize], v: VertexId) -> bool {
    if missing[v] != 0 {
        return false;
    }
    let color = |x: VertexId| g.incident(x).iter().map(|&(_, e)| u64::from(weights[e])).sum::<u64>();
    let cv = color(v);
    g.neighbors(v).any(|u| missing[u] == 0 && color(u) == cv)
}

fn search(g: &Graph, walks: &[[Vec<EdgeId>; 2]], i: usize, weights: &mut [u32], missing: &mut [usize]) -> bool {
    if i == walks.len() {
        return (0..g.vertex_count()).all(|v| !settled_conflict(g, weights, missing, v));
    }
    for walk in &walks[i] {
        for (j, &e) in walk.iter().enumerate() {
            weights[e] = PATTERN[j % 4];
            let (u, v) = g.edge(e);
            missing[u] -= 1;
            missing[v] -= 1;
        }
        let touched: Vec<VertexId> = walk.iter().flat_map(|&e| <[VertexId; 2]>::from(g.edge(e))).collect();
        let ok = touched.iter().all(|&v| !settled_conflict(g, weights, missing, v));
        if ok && search(g, walks, i + 1, weights, missing) {
            return true;
        }
        for &e in walk {
            weights[e] = 0;
            let (u, v) = g.edge(e);
            missing[u] += 1;
            missing[v] += 1;
        }
    }
    false
}

/// 2-weighting of a graph whose blocks are all cycles.
pub fn cycle_block_weighting(g: &Graph) -> Result<EdgeWeighting> {
    let bd = blocks_and_cut_vertices(g)?;
    compose_block_weightings(g, &vec![None; bd.blocks.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};
    use crate::weighting::induced_coloring;

    fn bouquet(lengths: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut n = 1;
        for &l in lengths {
            let mut prev = 0;
            for _ in 1..l {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, 0));
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn two_squares_at_a_vertex() {
        let g = bouquet(&[4, 4]);
        let w = cycle_block_weighting(&g).unwrap();
        let c = induced_coloring(&g, &w).unwrap().colors;
        assert!(c[0] >= 6);
        assert!(g.neighbors(0).all(|u| c[u] <= 4));
        assert!(cycle_block_weighting(&bouquet(&[4, 4, 4])).is_ok());
        assert!(cycle_block_weighting(&bouquet(&[3, 5, 6])).is_ok());
    }

    #[test]
    fn single_cycles() {
        let w = cycle_block_weighting(&cycle(8).unwrap()).unwrap();
        assert_eq!(w.weights(), &[2, 2, 1, 1, 2, 2, 1, 1]);
        assert!(cycle_block_weighting(&cycle(6).unwrap()).is_err());
        assert!(matches!(cycle_block_weighting(&path(4).unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn chain_of_cycles() {
        // triangle - square - pentagon chained through vertices 2 and 5
        let g = Graph::new(
            10,
            vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 2), (5, 6), (6, 7), (7, 8), (8, 9), (9, 5)],
        )
        .unwrap();
        assert!(cycle_block_weighting(&g).is_ok());
    }

    #[test]
    fn supplied_blocks_are_kept() {
        // theta(2,2,2) with a square hanging at root 0, whose neighbors all have degree 2
        let g = Graph::new(8, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 0)]).unwrap();
        let bd = blocks_and_cut_vertices(&g).unwrap();
        let theta = bd.block_graph(&g, 0);
        assert_eq!(theta.edge_count(), 6);
        let wd = crate::oracle::find_weighting(&theta, 2, &Default::default()).unwrap().unwrap();
        let w = compose_block_weightings(&g, &[Some(wd.clone()), None]).unwrap();
        for (j, &e) in bd.blocks[0].iter().enumerate() {
            assert_eq!(w.weight(e), wd.weight(j));
        }
    }
}
