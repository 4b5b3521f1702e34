//! Seeded random connected bipartite graphs.
//!
//! The generator is `ChaCha8Rng::seed_from_u64(seed)` from `rand_chacha`, so a seed fixes the
//! output on every platform. Steps, each drawing from the same stream:
//!
//! 1. pick the size `s` of part U uniformly among `1..=n/2` with `s * (n - s) >= m`;
//! 2. shuffle `0..n`; the first `s` vertices form U;
//! 3. grow a spanning tree: join the first U and first W vertex, then attach every other vertex
//!    (in shuffled order) to a uniformly chosen tree vertex of the opposite part;
//! 4. add `m - (n - 1)` cross edges chosen uniformly from the remaining U–W pairs;
//! 5. sort the edge list.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn random_connected_bipartite(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = (n / 2) * n.div_ceil(2);
    if n < 2 || m + 1 < n || m > max {
        return Err(Error::Precondition(format!(
            "no connected bipartite graph with n={n}, m={m} (need n >= 2 and n-1 <= m <= {max})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes: Vec<usize> = (1..=n / 2).filter(|&s| s * (n - s) >= m).collect();
    let s = *sizes.choose(&mut rng).expect("max size is feasible");

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let (u_part, w_part) = order.split_at(s);

    let mut in_u = vec![false; n];
    for &x in u_part {
        in_u[x] = true;
    }
    let mut tree_u = vec![u_part[0]];
    let mut tree_w = vec![w_part[0]];
    let mut edges = vec![(u_part[0], w_part[0])];
    let mut rest: Vec<usize> = u_part[1..].iter().chain(&w_part[1..]).copied().collect();
    rest.shuffle(&mut rng);
    for x in rest {
        if in_u[x] {
            edges.push((x, *tree_w.choose(&mut rng).unwrap()));
            tree_u.push(x);
        } else {
            edges.push((*tree_u.choose(&mut rng).unwrap(), x));
            tree_w.push(x);
        }
    }

    let mut used: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut candidates: Vec<(usize, usize)> = u_part
        .iter()
        .flat_map(|&x| w_part.iter().map(move |&y| (x, y)))
        .filter(|p| !used.contains(p))
        .collect();
    // shuffle a sorted list so the result does not depend on hash iteration order
    candidates.sort_unstable();
    candidates.shuffle(&mut rng);
    for p in candidates.into_iter().take(m + 1 - n) {
        used.insert(p);
        edges.push(p);
    }

    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_when_m_is_n_minus_1() {
        let g = random_connected_bipartite(4, 3, 1).unwrap();
        assert!(g.is_connected() && g.is_bipartite());
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn max_edges_gives_k33() {
        for seed in 0..5 {
            let g = random_connected_bipartite(6, 9, seed).unwrap();
            assert_eq!(g.degree_sequence(), vec![3; 6]);
            assert!(g.is_bipartite());
        }
    }

    #[test]
    fn deterministic_and_valid() {
        for seed in 0..50 {
            let g = random_connected_bipartite(9, 12, seed).unwrap();
            assert_eq!(g, random_connected_bipartite(9, 12, seed).unwrap());
            assert!(g.is_connected() && g.is_bipartite());
            assert_eq!(g.edge_count(), 12);
        }
        assert!(random_connected_bipartite(6, 10, 0).is_err());
        assert!(random_connected_bipartite(6, 4, 0).is_err());
        assert!(random_connected_bipartite(1, 0, 0).is_err());
    }
}
