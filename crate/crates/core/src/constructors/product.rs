use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weighting::{is_proper, EdgeWeighting};

/// Weighting of `g □ h` that repeats `wg` on every copy of `g` and `wh` on every copy of `h`.
/// Uses the edge numbering of [`Graph::cartesian_product`]; `k` is the larger of the two.
pub fn product_weighting(g: &Graph, wg: &EdgeWeighting, h: &Graph, wh: &EdgeWeighting) -> Result<EdgeWeighting> {
    for (x, w) in [(g, wg), (h, wh)] {
        let p = is_proper(x, w)?;
        if !p.proper {
            return Err(Error::ImproperInput(p.conflicts.len()));
        }
    }
    let mut weights = Vec::with_capacity(g.edge_count() * h.vertex_count() + h.edge_count() * g.vertex_count());
    for _ in 0..h.vertex_count() {
        weights.extend_from_slice(wg.weights());
    }
    for _ in 0..g.vertex_count() {
        weights.extend_from_slice(wh.weights());
    }
    let w = EdgeWeighting::new(wg.k().max(wh.k()), weights)?;
    super::certify(&g.cartesian_product(h), w, "product weighting")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn grid_keeps_all_ones() {
        let p3 = path(3).unwrap();
        let ones = EdgeWeighting::constant(2, 1);
        let w = product_weighting(&p3, &ones, &p3, &ones).unwrap();
        assert_eq!(w.weights(), &[1; 12]);
        assert_eq!(w.k(), 1);
    }

    #[test]
    fn fibers_copy_the_factors() {
        let c4 = cycle(4).unwrap();
        let p3 = path(3).unwrap();
        let wc = EdgeWeighting::new(2, vec![1, 1, 2, 2]).unwrap();
        let wp = EdgeWeighting::constant(2, 1);
        let w = product_weighting(&c4, &wc, &p3, &wp).unwrap();
        assert_eq!(w.k(), 2);
        assert_eq!(&w.weights()[4..8], wc.weights());
        assert_eq!(&w.weights()[12..14], wp.weights());
        let bad = EdgeWeighting::constant(4, 1);
        assert_eq!(product_weighting(&c4, &bad, &p3, &wp), Err(Error::ImproperInput(4)));
    }
}
