//! Decomposition of the edge set into maximal simple paths: paths whose internal vertices all have
//! degree 2 and whose ends have degree other than 2.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Msp {
    pub edges: Vec<EdgeId>,
    /// `edges.len() + 1` entries; `vertices[i]` and `vertices[i + 1]` are the ends of `edges[i]`.
    pub vertices: Vec<VertexId>,
    /// Starts and ends at the same vertex: a cycle hanging on one branch vertex, or the whole graph
    /// when it is a cycle.
    pub closed: bool,
}

impl Msp {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MspDecomposition {
    /// Ordered by smallest edge id.
    pub paths: Vec<Msp>,
}

impl MspDecomposition {
    /// For every edge, the index of the path containing it.
    pub fn path_of_edge(&self, edge_count: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; edge_count];
        for (i, p) in self.paths.iter().enumerate() {
            for &e in &p.edges {
                owner[e] = i;
            }
        }
        owner
    }

    pub fn has_single_edge_path(&self) -> bool {
        self.paths.iter().any(|p| p.len() == 1)
    }
}

/// Each path is walked from its smaller-id end; a closed path is walked from its branch vertex
/// along the smaller of its two edge ids there.
pub fn maximal_simple_paths(g: &Graph) -> Result<MspDecomposition> {
    if g.edge_count() == 0 {
        return Err(Error::TooSmall("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut used = vec![false; g.edge_count()];
    let mut paths = Vec::new();

    let branch: Vec<VertexId> = (0..n).filter(|&v| g.degree(v) != 2).collect();
    if branch.is_empty() {
        // Connected and 2-regular: one closed path around the cycle.
        paths.push(walk(g, 0, g.incident(0)[0].1, &mut used, |_| false));
    } else {
        for &b in &branch {
            for &(_, e) in g.incident(b) {
                if !used[e] {
                    paths.push(walk(g, b, e, &mut used, |v| g.degree(v) != 2));
                }
            }
        }
    }
    paths.sort_by_key(|p| p.edges.iter().copied().min());
    Ok(MspDecomposition { paths })
}

fn walk(
    g: &Graph,
    start: VertexId,
    first: EdgeId,
    used: &mut [bool],
    stop_at: impl Fn(VertexId) -> bool,
) -> Msp {
    let mut edges = vec![first];
    let mut vertices = vec![start];
    used[first] = true;
    let mut cur = g.opposite(first, start);
    let mut via = first;
    vertices.push(cur);
    while cur != start && !stop_at(cur) {
        let &(next, e) = g
            .incident(cur)
            .iter()
            .find(|&&(_, e)| e != via)
            .expect("degree-2 vertex has a second edge");
        used[e] = true;
        edges.push(e);
        vertices.push(next);
        via = e;
        cur = next;
    }
    let closed = cur == start;
    Msp { edges, vertices, closed }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta(lengths: &[usize]) -> Graph {
        let mut n = 2;
        let mut e = Vec::new();
        for &l in lengths {
            let mut prev = 0;
            for _ in 1..l {
                e.push((prev, n));
                prev = n;
                n += 1;
            }
            e.push((prev, 1));
        }
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn theta_has_three_paths() {
        let d = maximal_simple_paths(&theta(&[2, 2, 2])).unwrap();
        assert_eq!(d.paths.len(), 3);
        for p in &d.paths {
            assert_eq!(p.len(), 2);
            assert_eq!((p.start(), p.end()), (0, 1));
            assert!(!p.closed);
        }
    }

    #[test]
    fn clique_paths_are_single_edges() {
        let mut e = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                e.push((i, j));
            }
        }
        let d = maximal_simple_paths(&Graph::new(4, e).unwrap()).unwrap();
        assert_eq!(d.paths.len(), 6);
        assert!(d.paths.iter().all(|p| p.len() == 1));
        assert!(d.has_single_edge_path());
    }

    #[test]
    fn cycle_is_one_closed_path() {
        let g = Graph::new(8, (0..8).map(|i| (i, (i + 1) % 8)).collect()).unwrap();
        let d = maximal_simple_paths(&g).unwrap();
        assert_eq!(d.paths.len(), 1);
        assert!(d.paths[0].closed);
        assert_eq!(d.paths[0].len(), 8);
        assert_eq!(d.paths[0].edges, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn hanging_cycle_is_closed() {
        // square 0-1-2-3 with a pendant edge 0-4: branch vertices 0 (deg 3) and 4 (deg 1)
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let d = maximal_simple_paths(&g).unwrap();
        assert_eq!(d.paths.len(), 2);
        assert!(d.paths[0].closed);
        assert_eq!(d.paths[0].vertices, vec![0, 1, 2, 3, 0]);
        assert_eq!(d.paths[1].vertices, vec![0, 4]);
    }

    #[test]
    fn paths_start_at_smaller_end() {
        // path 3-1-0-2 with vertex 0 and 1 interior
        let g = Graph::new(4, vec![(3, 1), (1, 0), (0, 2)]).unwrap();
        let d = maximal_simple_paths(&g).unwrap();
        assert_eq!(d.paths[0].vertices, vec![2, 0, 1, 3]);
    }
}
