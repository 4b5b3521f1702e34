//! Canonical labeling for small graphs and orderly enumeration of connected graphs.
//!
//! The canonical form is the smallest adjacency code over the leaves of an
//! individualization-refinement tree. Refinement splits cells by neighbor counts and orders the
//! pieces by those counts, so the tree (and thus the minimum) does not depend on the input
//! labeling.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest order handled by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Adjacency code: bit `pair_index(i, j)` is set when `i` and `j` are adjacent.
pub type Code = u128;

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    // pairs (0,1), (0,2), .., (0,n-1), (1,2), ..
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn code_under(adj: &[u32], n: usize, label: &[usize]) -> Code {
    let mut code: Code = 0;
    for u in 0..n {
        let mut rest = adj[u] >> (u + 1);
        let mut v = u + 1;
        while rest != 0 {
            if rest & 1 == 1 {
                // highest-weight bit for the first pair makes codes compare like adjacency strings
                let idx = pair_index(label[u], label[v], n);
                code |= 1 << (n * (n - 1) / 2 - 1 - idx);
            }
            rest >>= 1;
            v += 1;
        }
    }
    code
}

/// Splits cells until every vertex in a cell has the same number of neighbors in every cell.
fn refine(adj: &[u32], cells: &mut Vec<Vec<VertexId>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u32 = cells[s].iter().fold(0, |m, &v| m | (1 << v));
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let counts: Vec<u32> = cells[c].iter().map(|&v| (adj[v] & splitter).count_ones()).collect();
                if counts.iter().all(|&x| x == counts[0]) {
                    continue;
                }
                let mut groups: BTreeMap<u32, Vec<VertexId>> = BTreeMap::new();
                for (&v, &k) in cells[c].iter().zip(&counts) {
                    groups.entry(k).or_default().push(v);
                }
                let pieces: Vec<Vec<VertexId>> = groups.into_values().collect();
                cells.splice(c..=c, pieces);
                continue 'outer;
            }
        }
        return;
    }
}

fn search(adj: &[u32], n: usize, cells: Vec<Vec<VertexId>>, best: &mut Option<(Code, Vec<usize>)>) {
    let mut cells = cells;
    refine(adj, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label = vec![0; n];
            for (i, c) in cells.iter().enumerate() {
                label[c[0]] = i;
            }
            let code = code_under(adj, n, &label);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, label));
            }
        }
        Some(t) => {
            for &v in &cells[t] {
                let mut next = cells.clone();
                let rest: Vec<VertexId> = cells[t].iter().copied().filter(|&x| x != v).collect();
                next.splice(t..=t, [vec![v], rest]);
                search(adj, n, next, best);
            }
        }
    }
}

/// Canonical code and the labeling (`label[v]` = canonical position of `v`) that attains it.
pub fn canonical_labeling(g: &Graph) -> Result<(Code, Vec<usize>)> {
    let n = g.vertex_count();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::Precondition(format!(
            "canonical form supports at most {MAX_CANONICAL_ORDER} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0, |m, u| m | (1 << u))).collect();
    let mut best = None;
    search(&adj, n, vec![(0..n).collect()], &mut best);
    Ok(best.expect("search visits at least one leaf"))
}

pub fn canonical_form(g: &Graph) -> Result<Code> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// The graph relabeled canonically, edges in `(min, max)` order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, label) = canonical_labeling(g)?;
    Ok(g.relabel(&label).with_sorted_edges())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (mut dg, mut dh) = (g.degree_sequence(), h.degree_sequence());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// All connected graphs on `n` vertices up to isomorphism, in increasing canonical-code order.
///
/// A connected graph always has a vertex whose removal leaves it connected, so every graph on
/// `n` vertices arises from one on `n - 1` vertices plus a vertex joined to a nonempty subset.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(3..=8).contains(&n) {
        return Err(Error::Precondition(format!("enumeration supports 3 <= n <= 8, got {n}")));
    }
    Ok(connected_graphs(n))
}

pub(crate) fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1)];
    for order in 2..=n {
        let mut seen: BTreeMap<Code, Graph> = BTreeMap::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().to_vec();
            let new = order - 1;
            for subset in 1u32..(1 << new) {
                let mut edges = base.clone();
                edges.extend((0..new).filter(|&u| subset & (1 << u) != 0).map(|u| (u, new)));
                let h = Graph::new(order, edges).expect("extension is simple");
                let (code, label) = canonical_labeling(&h).expect("order within range");
                seen.entry(code).or_insert_with(|| h.relabel(&label).with_sorted_edges());
            }
        }
        level = seen.into_values().collect();
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: every edge subset, connectivity filter, canonical code by trying all
    /// vertex permutations.
    fn brute_force_classes(n: usize) -> std::collections::BTreeSet<Vec<(usize, usize)>> {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let perms = permutations(n);
        let mut classes = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &p)| p).collect();
            let g = Graph::new(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let min = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<_> = g.edges().iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
                    e.sort_unstable();
                    e
                })
                .min()
                .unwrap();
            classes.insert(min);
        }
        classes
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn counts_match_brute_force() {
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        for n in [4, 5] {
            let ours = enumerate_connected(n).unwrap();
            let oracle = brute_force_classes(n);
            assert_eq!(ours.len(), oracle.len());
            assert_eq!(ours.len(), if n == 4 { 6 } else { 21 });
        }
    }

    #[test]
    fn known_counts() {
        // connected graphs on 6 and 7 vertices
        assert_eq!(enumerate_connected(6).unwrap().len(), 112);
        assert_eq!(enumerate_connected(7).unwrap().len(), 853);
        assert!(enumerate_connected(2).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        for p in permutations(6).iter().step_by(37) {
            assert_eq!(canonical_form(&g.relabel(p)).unwrap(), canonical_form(&g).unwrap());
        }
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6)).collect()).unwrap();
        let two_triangles = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles).unwrap());
    }
}
