use crate::error::{Error, Result};
use crate::families::complete_multipartite;
use crate::graph::Graph;
use crate::weighting::EdgeWeighting;

/// `K_{n,...,n}` with `r` parts, and its 2-weighting: an edge from `x` in part `i` to `y` in a
/// later part gets weight 2 exactly when `x` is the last vertex of part `i`.
pub fn multipartite_weighting(r: usize, n: usize) -> Result<(Graph, EdgeWeighting)> {
    if r < 2 || n < 2 {
        return Err(Error::Precondition(format!("need r >= 2 parts of size n >= 2, got r={r}, n={n}")));
    }
    let g = complete_multipartite(&vec![n; r])?;
    let weights = g
        .edges()
        .iter()
        .map(|&(x, y)| {
            debug_assert!(x / n < y / n);
            if x % n == n - 1 { 2 } else { 1 }
        })
        .collect();
    let w = super::certify(&g, EdgeWeighting::new(2, weights)?, "multipartite matrix")?;
    Ok((g, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weighting::induced_coloring;

    #[test]
    fn k22_colors() {
        let (g, w) = multipartite_weighting(2, 2).unwrap();
        assert_eq!(induced_coloring(&g, &w).unwrap().colors, vec![2, 4, 3, 3]);
    }

    #[test]
    fn several_sizes() {
        for r in 2..=5 {
            for n in 2..=5 {
                let (g, _) = multipartite_weighting(r, n).unwrap();
                assert_eq!(g.vertex_count(), r * n);
            }
        }
        assert!(multipartite_weighting(1, 3).is_err());
        assert!(multipartite_weighting(3, 1).is_err());
    }
}
