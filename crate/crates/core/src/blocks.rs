//! Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge ids of each block, sorted; blocks ordered by smallest edge id.
    pub blocks: Vec<Vec<EdgeId>>,
    /// Sorted.
    pub cut_vertices: Vec<VertexId>,
}

impl BlockDecomposition {
    pub fn block_vertices(&self, g: &Graph, block: usize) -> Vec<VertexId> {
        let mut vs: Vec<_> = self.blocks[block].iter().flat_map(|&e| {
            let (u, v) = g.edge(e);
            [u, v]
        }).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// The block as a standalone graph: vertex `i` is the `i`-th entry of
    /// [`block_vertices`](Self::block_vertices), edge `j` is `blocks[block][j]`.
    pub fn block_graph(&self, g: &Graph, block: usize) -> Graph {
        let vs = self.block_vertices(g, block);
        let local = |x: VertexId| vs.binary_search(&x).expect("edge end lies in its block");
        let edges = self.blocks[block].iter().map(|&e| {
            let (u, v) = g.edge(e);
            (local(u), local(v))
        }).collect();
        Graph::new(vs.len(), edges).expect("a block of a simple graph is simple")
    }

    /// `true` when the block's edges form a single cycle.
    pub fn block_is_cycle(&self, g: &Graph, block: usize) -> bool {
        let vs = self.block_vertices(g, block);
        let edges = &self.blocks[block];
        if edges.len() < 3 || edges.len() != vs.len() {
            return false;
        }
        // 2-connected with |E| = |V| means a cycle.
        true
    }
}

/// Hopcroft–Tarjan with an explicit edge stack. Rejects disconnected input.
pub fn blocks_and_cut_vertices(g: &Graph) -> Result<BlockDecomposition> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut time = 0;

    if n == 0 {
        return Ok(BlockDecomposition { blocks, cut_vertices: Vec::new() });
    }

    // frame: (vertex, parent edge, next incidence index)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(0, None, 0)];
    disc[0] = time;
    low[0] = time;
    time += 1;
    let mut root_children = 0;

    while let Some(&mut (v, parent_edge, ref mut idx)) = stack.last_mut() {
        if *idx < g.incident(v).len() {
            let (u, e) = g.incident(v)[*idx];
            *idx += 1;
            if Some(e) == parent_edge {
                continue;
            }
            if disc[u] == usize::MAX {
                edge_stack.push(e);
                disc[u] = time;
                low[u] = time;
                time += 1;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((u, Some(e), 0));
            } else if disc[u] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    if p != 0 {
                        is_cut[p] = true;
                    }
                    let pe = parent_edge.expect("non-root frame has a parent edge");
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == pe {
                            break;
                        }
                    }
                    block.sort_unstable();
                    blocks.push(block);
                }
            }
        }
    }
    if root_children > 1 {
        is_cut[0] = true;
    }
    blocks.sort_by_key(|b| b[0]);
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();
    Ok(BlockDecomposition { blocks, cut_vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_edges(vs: &[usize]) -> Vec<(usize, usize)> {
        (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect()
    }

    #[test]
    fn two_squares_sharing_a_vertex() {
        let mut e = cycle_edges(&[0, 1, 2, 3]);
        e.extend(cycle_edges(&[0, 4, 5, 6]));
        let g = Graph::new(7, e).unwrap();
        let d = blocks_and_cut_vertices(&g).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![0]);
        assert!(d.block_is_cycle(&g, 0) && d.block_is_cycle(&g, 1));
    }

    #[test]
    fn path_blocks_are_bridges() {
        let g = Graph::new(5, (1..5).map(|i| (i - 1, i)).collect()).unwrap();
        let d = blocks_and_cut_vertices(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(d.cut_vertices, vec![1, 2, 3]);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = Graph::new(6, cycle_edges(&[0, 1, 2, 3, 4, 5])).unwrap();
        let d = blocks_and_cut_vertices(&g).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn disconnected_is_rejected() {
        assert_eq!(blocks_and_cut_vertices(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn diamond_with_tail() {
        // K4 minus an edge, plus a pendant edge at 3
        let g = Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let d = blocks_and_cut_vertices(&g).unwrap();
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4], vec![5]]);
        assert_eq!(d.cut_vertices, vec![3]);
        assert!(!d.block_is_cycle(&g, 0));
    }
}
