//! Periodic 2-weightings along maximal simple paths.
//!
//! Each path is weighted from its start (see [`maximal_simple_paths`]) with a period-4 pattern
//! chosen by its length mod 4. Interior vertices then always differ from their neighbors, so any
//! conflict sits at a path end.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::msp::{maximal_simple_paths, Msp};
use crate::weighting::{induced_coloring, is_proper, require_connected_min3, EdgeWeighting};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MspVariant {
    /// Paths of length 2 mod 4 get `1,1,2,2`, the rest `2,1,1,2`, followed by the repair loop.
    /// Needs: no single-edge path, and no path of length 1 mod 4 with both ends of degree 3.
    A,
    /// Paths of length 2 mod 4 get `2,2,1,1`, the rest `2,1,1,2`.
    /// Needs: no path of length 3 mod 4, and every single-edge path joins different degrees.
    B,
}

/// Conflict counts seen by the repair loop: `conflicts[0]` after the initial patterns, then one
/// entry per flipped path.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RepairTrace {
    pub conflicts: Vec<usize>,
    /// Indices into the path decomposition, in flip order.
    pub flipped: Vec<usize>,
}

const P1122: [u32; 4] = [1, 1, 2, 2];
const P2112: [u32; 4] = [2, 1, 1, 2];
const P2211: [u32; 4] = [2, 2, 1, 1];

fn paint(weights: &mut [u32], p: &Msp, pattern: [u32; 4], from_end: bool) {
    let len = p.edges.len();
    for i in 0..len {
        let e = if from_end { p.edges[len - 1 - i] } else { p.edges[i] };
        weights[e] = pattern[i % 4];
    }
}

fn check_preconditions(g: &Graph, paths: &[Msp], variant: MspVariant) -> Result<()> {
    let n = g.vertex_count();
    if g.is_cycle() && !n.is_multiple_of(4) {
        return Err(Error::Precondition(format!("graph is the cycle C{n} with n not divisible by 4")));
    }
    let deg = |v: VertexId| g.degree(v);
    for p in paths {
        let (x, y) = (p.start(), p.end());
        match variant {
            MspVariant::A => {
                if p.len() == 1 {
                    return Err(Error::Precondition(format!("edge {x}-{y} is a maximal simple path")));
                }
                if p.len() % 4 == 1 && deg(x) == 3 && deg(y) == 3 {
                    return Err(Error::Precondition(format!(
                        "maximal simple path {x}..{y} of length {} (1 mod 4) joins two degree-3 vertices",
                        p.len()
                    )));
                }
            }
            MspVariant::B => {
                if p.len() % 4 == 3 {
                    return Err(Error::Precondition(format!(
                        "maximal simple path {x}..{y} has length {} (3 mod 4)",
                        p.len()
                    )));
                }
                if p.len() == 1 && deg(x) == deg(y) {
                    return Err(Error::Precondition(format!(
                        "single-edge maximal simple path {x}-{y} joins two vertices of degree {}",
                        deg(x)
                    )));
                }
            }
        }
    }
    Ok(())
}

pub fn msp_pattern_weighting(g: &Graph, variant: MspVariant) -> Result<EdgeWeighting> {
    msp_pattern_weighting_traced(g, variant).map(|(w, _)| w)
}

/// Like [`msp_pattern_weighting`], also returning what the repair loop did.
pub fn msp_pattern_weighting_traced(g: &Graph, variant: MspVariant) -> Result<(EdgeWeighting, RepairTrace)> {
    require_connected_min3(g).map_err(|e| Error::Precondition(e.to_string()))?;
    let dec = maximal_simple_paths(g)?;
    let paths = &dec.paths;
    check_preconditions(g, paths, variant)?;

    let mut weights = vec![0u32; g.edge_count()];
    for p in paths {
        let pattern = match (variant, p.len() % 4 == 2) {
            (MspVariant::A, true) => P1122,
            (MspVariant::B, true) => P2211,
            (_, false) => P2112,
        };
        paint(&mut weights, p, pattern, false);
    }
    let mut trace = RepairTrace::default();
    let mut w = EdgeWeighting::new(2, weights)?;
    let mut conflicts = is_proper(g, &w)?.conflicts;
    trace.conflicts.push(conflicts.len());

    if variant == MspVariant::A {
        let owner = dec.path_of_edge(g.edge_count());
        while let Some(&e) = conflicts.first() {
            let colors = induced_coloring(g, &w)?.colors;
            let (u, v) = g.edge(e);
            let z = [u, v].into_iter().find(|&z| g.degree(z) == 3 && colors[z] == 4).ok_or_else(|| {
                Error::ConstructionFailed(format!(
                    "conflict on edge {u}-{v} (color {}) is not at a degree-3 vertex of color 4",
                    colors[u]
                ))
            })?;
            let heavy: Vec<EdgeId> = g.incident(z).iter().map(|&(_, f)| f).filter(|&f| w.weight(f) == 2).collect();
            let pi = owner[heavy[0]];
            let p = &paths[pi];
            if p.len() % 4 != 1 || p.closed || trace.flipped.contains(&pi) {
                return Err(Error::ConstructionFailed(format!(
                    "weight-2 edge at {z} lies on a path of length {} that cannot be flipped",
                    p.len()
                )));
            }
            let mut weights = w.into_weights();
            paint(&mut weights, p, P1122, p.start() != z);
            w = EdgeWeighting::new(2, weights)?;
            let next = is_proper(g, &w)?.conflicts;
            trace.flipped.push(pi);
            trace.conflicts.push(next.len());
            if next.len() >= conflicts.len() {
                return Err(Error::ConstructionFailed(format!(
                    "flipping the path through {z} did not reduce conflicts ({} -> {})",
                    conflicts.len(),
                    next.len()
                )));
            }
            conflicts = next;
        }
    }
    let w = super::certify(g, w, "maximal simple path patterns")?;
    Ok((w, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, theta};
    use crate::weighting::induced_coloring;

    #[test]
    fn theta_222() {
        let g = theta(&[2, 2, 2]).unwrap();
        let w = msp_pattern_weighting(&g, MspVariant::A).unwrap();
        assert_eq!(w.weights(), &[1; 6]);
        let c = induced_coloring(&g, &w).unwrap().colors;
        assert_eq!(c, vec![3, 3, 2, 2, 2]);
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            msp_pattern_weighting(&theta(&[5, 5, 4]).unwrap(), MspVariant::A),
            Err(Error::Precondition(_))
        ));
        assert!(msp_pattern_weighting(&cycle(6).unwrap(), MspVariant::A).is_err());
        assert!(msp_pattern_weighting(&theta(&[1, 2, 2]).unwrap(), MspVariant::A).is_err());
        assert!(msp_pattern_weighting(&theta(&[3, 2, 2]).unwrap(), MspVariant::B).is_err());
        assert!(msp_pattern_weighting(&theta(&[4, 4, 4]).unwrap(), MspVariant::A).is_ok());
        assert!(msp_pattern_weighting(&cycle(8).unwrap(), MspVariant::B).is_ok());
        assert!(msp_pattern_weighting(&path(7).unwrap(), MspVariant::A).is_ok());
    }

    #[test]
    fn repair_flips_one_mod_four_paths() {
        // 0-1-2-3-4-5 has length 5 and ends at 5, which also carries two pendant paths of length 2
        let g = Graph::new(10, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8), (8, 9)]).unwrap();
        let (w, trace) = msp_pattern_weighting_traced(&g, MspVariant::A).unwrap();
        assert!(is_proper(&g, &w).unwrap().proper);
        assert_eq!(trace.flipped.len(), 1);
        assert_eq!(trace.conflicts, vec![1, 0]);
        assert_eq!(&w.weights()[..5], &[1, 2, 2, 1, 1]);
    }
}
