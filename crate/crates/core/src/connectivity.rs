//! Vertex connectivity via vertex-split unit-capacity max-flow.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexId};

struct FlowNet {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        Self { head: vec![usize::MAX; nodes], next: Vec::new(), to: Vec::new(), cap: Vec::new() }
    }

    fn add(&mut self, a: usize, b: usize, c: u32) {
        for (x, y, cap) in [(a, b, c), (b, a, 0)] {
            self.next.push(self.head[x]);
            self.to.push(y);
            self.cap.push(cap);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Augments along shortest paths until `limit` units have been pushed or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let n = self.head.len();
        let mut flow = 0;
        let mut pred = vec![usize::MAX; n];
        while flow < limit {
            pred.fill(usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                let mut a = self.head[x];
                while a != usize::MAX {
                    let y = self.to[a];
                    if self.cap[a] > 0 && y != s && pred[y] == usize::MAX {
                        pred[y] = a;
                        if y == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                    a = self.next[a];
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = t;
            while y != s {
                let a = pred[y];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                y = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths, capped at `limit`. `s` and `t`
/// must be non-adjacent.
pub fn local_vertex_connectivity(g: &Graph, s: VertexId, t: VertexId, limit: usize) -> usize {
    let n = g.vertex_count();
    let big = u32::MAX / 2;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for &(u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Minimum number of vertices whose removal disconnects `g` or leaves a single vertex. Complete
/// graphs give `n - 1`; disconnected graphs give 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    if g.edge_count() == n * (n - 1) / 2 {
        return n - 1;
    }
    // Some minimum separator misses one of the first best+1 vertices.
    let mut i = 0;
    while i < n && i <= best {
        for j in 0..n {
            if j != i && !g.has_edge(i, j) {
                best = best.min(local_vertex_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(vertex_connectivity(&cycle(5)), 2);
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&k4), 3);
        let p4 = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&p4), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(3)), 0);
    }

    #[test]
    fn torus_product_formula() {
        // kappa(C4 x C4) = min{delta = 4, 2*4, 2*4} = 4
        let c4 = cycle(4);
        assert_eq!(vertex_connectivity(&c4.cartesian_product(&c4)), 4);
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(vertex_connectivity(&g), 1);
    }
}
