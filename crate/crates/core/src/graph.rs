//! Simple undirected graphs with stable vertex and edge identifiers.
//!
//! Vertices are `0..n`. Edge `i` is the `i`-th pair handed to [`Graph::new`]; ids never change
//! after construction, so weightings can be stored as plain vectors indexed by edge id.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("edge {id} is a loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("edge {id} ({u},{v}) is a parallel edge")));
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Self { n, edges, adj })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].iter().find(|&&(x, _)| x == b).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The other endpoint of `e`, seen from `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Maximal connected vertex sets, each sorted, ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(u, _) in &self.adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn bfs_distances(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0) + 1;
            for &(u, _) in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange(x));
            }
        }
        self.bfs_distances(u)[v].ok_or(Error::Unreachable(u, v))
    }

    /// Two-coloring of the vertices, or `None` when the graph has an odd cycle. The smallest vertex
    /// of every component lands in `U`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::U);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v]?;
                for &(u, _) in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(sv.other());
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition { side: side.into_iter().map(|s| s.unwrap_or(Side::U)).collect() })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `true` for a connected 2-regular graph.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// Subgraph induced by `keep`, renumbered in the order given. Returns the graph and, for each
    /// new edge, the id of the original edge.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> (Graph, Vec<EdgeId>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
                origin.push(id);
            }
        }
        let sub = Graph::new(keep.len(), edges).expect("induced subgraph of a simple graph is simple");
        (sub, origin)
    }

    /// The graph with vertex `v` deleted; remaining vertices keep their relative order.
    pub fn remove_vertex(&self, v: VertexId) -> (Graph, Vec<EdgeId>) {
        let keep: Vec<_> = (0..self.n).filter(|&x| x != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Number of components after deleting the vertices in `removed`.
    pub fn components_without(&self, removed: &[VertexId]) -> usize {
        let keep: Vec<_> = (0..self.n).filter(|x| !removed.contains(x)).collect();
        self.induced_subgraph(&keep).0.connected_components().len()
    }

    /// Cartesian product `self □ h`. Vertex `(u, v)` is numbered `u * n(h) + v`. Edge ids list the
    /// copies of `self`'s edges for each vertex of `h` first, then the copies of `h`'s edges for
    /// each vertex of `self`, each in input order.
    pub fn cartesian_product(&self, h: &Graph) -> Graph {
        let nh = h.n;
        let mut edges = Vec::with_capacity(self.edge_count() * nh + h.edge_count() * self.n);
        for v in 0..nh {
            for &(a, b) in &self.edges {
                edges.push((a * nh + v, b * nh + v));
            }
        }
        for u in 0..self.n {
            for &(a, b) in &h.edges {
                edges.push((u * nh + a, u * nh + b));
            }
        }
        Graph::new(self.n * nh, edges).expect("product of simple graphs is simple")
    }

    /// Disjoint union; `other`'s vertices are shifted by `n(self)`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("disjoint union of simple graphs is simple")
    }

    /// Same graph with edges renumbered in `(min, max)` order.
    pub fn with_sorted_edges(&self) -> Graph {
        let mut edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Graph::new(self.n, edges).expect("reordering edges keeps the graph simple")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Graph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, edges).expect("relabeling keeps the graph simple")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    U,
    W,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::W,
            Side::W => Side::U,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
}

impl Bipartition {
    pub fn part(&self, s: Side) -> Vec<VertexId> {
        (0..self.side.len()).filter(|&v| self.side[v] == s).collect()
    }

    pub fn part_sizes(&self) -> (usize, usize) {
        let u = self.side.iter().filter(|&&s| s == Side::U).count();
        (u, self.side.len() - u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn clique(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(Graph::new(2, vec![(0, 0)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(Graph::new(2, vec![(0, 1), (1, 0)]), Err(Error::InvalidGraph(_))));
        assert_eq!(Graph::new(2, vec![(0, 2)]), Err(Error::VertexOutOfRange(2)));
    }

    #[test]
    fn degrees() {
        assert_eq!(path(3).degree_sequence(), vec![1, 2, 1]);
        assert_eq!(cycle(4).degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(clique(4).degree_sequence(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn bipartitions() {
        let b = cycle(4).bipartition().unwrap();
        assert_eq!(b.side, vec![Side::U, Side::W, Side::U, Side::W]);
        assert!(cycle(5).bipartition().is_none());
        // theta(2,2,2): roots 0,1; midpoints 2,3,4
        let theta = Graph::new(5, vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let b = theta.bipartition().unwrap();
        assert_eq!(b.side, vec![Side::U, Side::U, Side::W, Side::W, Side::W]);
    }

    #[test]
    fn components() {
        assert_eq!(cycle(4).connected_components(), vec![vec![0, 1, 2, 3]]);
        let g = cycle(3).disjoint_union(&cycle(4));
        let sizes: Vec<_> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3, 4]);
        assert_eq!(Graph::empty(3).connected_components(), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn distances() {
        assert_eq!(cycle(6).distance(0, 3), Ok(3));
        assert_eq!(cycle(6).distance(4, 4), Ok(0));
        assert_eq!(path(5).distance(0, 4), Ok(4));
        assert_eq!(Graph::empty(2).distance(0, 1), Err(Error::Unreachable(0, 1)));
    }

    #[test]
    fn products() {
        let k2 = path(2);
        let c4 = k2.cartesian_product(&k2);
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(c4.is_cycle());
        let q3 = c4.cartesian_product(&k2);
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert!(q3.degree_sequence().iter().all(|&d| d == 3));
        let grid = path(2).cartesian_product(&path(3));
        assert_eq!((grid.vertex_count(), grid.edge_count()), (6, 7));
        // G-edges per H-vertex come first
        assert_eq!(grid.edge(0), (0, 3));
        assert_eq!(grid.edge(3), (0, 1));
    }
}
