//! Closed-form weighting numbers for the classified families, and a rule engine that derives an
//! upper bound on the weighting number from known sufficient conditions.

use std::fmt;

use crate::blocks::blocks_and_cut_vertices;
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::families::GptParams;
use crate::graph::{Graph, Side, VertexId};
use crate::msp::maximal_simple_paths;
use crate::weighting::{admits_vc1, require_connected_min3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleFamily {
    Path,
    Cycle,
    Clique,
}

/// Weighting number of `P_n`, `C_n` or `K_n` (`n` vertices).
pub fn mu_path_cycle_clique(family: SimpleFamily, n: usize) -> Result<u32> {
    if n < 3 {
        return Err(Error::TooSmall(format!("need n >= 3, got {n}")));
    }
    Ok(match family {
        SimpleFamily::Path if n == 3 => 1,
        SimpleFamily::Path => 2,
        SimpleFamily::Cycle if n.is_multiple_of(4) => 2,
        SimpleFamily::Cycle => 3,
        SimpleFamily::Clique => 3,
    })
}

/// Weighting number of the theta graph with the given path lengths (at least 3, nondecreasing).
pub fn mu_theta(lengths: &[usize]) -> Result<u32> {
    if lengths.len() < 3 {
        return Err(Error::Precondition(format!("theta classification needs r >= 3 paths, got {}", lengths.len())));
    }
    if lengths.contains(&0) {
        return Err(Error::Precondition("theta path lengths must be positive".into()));
    }
    if lengths.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Precondition(format!("theta lengths {lengths:?} are not nondecreasing")));
    }
    if lengths.len() > 1 && lengths[1] == 1 {
        return Err(Error::Precondition("two paths of length 1 would be parallel edges".into()));
    }
    Ok(if lengths.iter().all(|&l| l == 2) {
        1
    } else if lengths[0] == 1 && lengths[1..].iter().all(|&l| l % 4 == 1) {
        3
    } else {
        2
    })
}

/// Path lengths (sorted) when `g` is a theta graph with at least three paths.
pub fn theta_lengths(g: &Graph) -> Option<Vec<usize>> {
    let branch: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.degree(v) != 2).collect();
    let [x, y] = branch[..] else { return None };
    if g.degree(x) < 3 || g.degree(x) != g.degree(y) || !g.is_connected() {
        return None;
    }
    let dec = maximal_simple_paths(g).ok()?;
    if dec.paths.iter().any(|p| p.closed || p.start() == p.end()) {
        return None;
    }
    let mut lengths: Vec<usize> = dec.paths.iter().map(|p| p.len()).collect();
    lengths.sort_unstable();
    Some(lengths)
}

fn gpt_mu1(p: &GptParams) -> bool {
    let GptParams { a, b, c, d, e, f } = *p;
    (a == 2 && b == 2 && c == 2 && d == 2 && e == 2 && f == 2)
        || (a == 2 && b == 2 && e + f == 2 && c == 0 && d == 0)
        || (a == 2 && d == 2 && f == 2 && b == 1 && c == 1 && e == 0)
        || (a == 2 && d == 2 && f == 2 && b == 2 && c == 2 && e == 0)
        || (a == 2 && b == 2 && c == 2 && d == 2 && e == 0 && f == 0)
}

fn gpt_mu3(p: &GptParams) -> bool {
    let GptParams { a, b, c, d, e, f } = *p;
    (a == 0 && b == 0 && c == 0 && d == 0 && (e + f) % 4 == 2)
        || (b == 1 && c == 0 && d == 0 && a % 4 == 1 && (e + f) % 4 == 1)
        || (b == 1 && e == 0 && f == 0 && a % 4 == 1 && c % 4 == 1 && d % 4 == 1)
        || (b == 1 && c == 1 && a % 4 == 1 && d % 4 == 1 && e % 4 == 1 && f % 4 == 3)
}

/// Weighting number of a bipartite generalized polygon tree with at most three interior regions.
///
/// Parameter tuples that describe a plain cycle or a theta graph are classified by the cycle and
/// theta formulas. Otherwise the value is 1 or 3 when the tuple, or one of its
/// [symmetric images](GptParams::symmetric_images), matches the corresponding list of conditions,
/// and 2 otherwise.
pub fn mu_gpt(p: &GptParams) -> Result<u32> {
    let g = p.build()?;
    if !p.parity_bipartite() || !g.is_bipartite() {
        return Err(Error::Precondition(format!("gpt:{p} is not bipartite")));
    }
    if g.is_cycle() {
        return mu_path_cycle_clique(SimpleFamily::Cycle, g.vertex_count());
    }
    if let Some(lengths) = theta_lengths(&g) {
        return mu_theta(&lengths);
    }
    let images = p.symmetric_images();
    Ok(if images.iter().any(gpt_mu1) {
        1
    } else if images.iter().any(gpt_mu3) {
        3
    } else {
        2
    })
}

/// Proper 3-coloring by backtracking (vertices in order of decreasing degree), if one exists.
pub fn three_coloring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.vertex_count();
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![u8::MAX; n];
    fn go(g: &Graph, order: &[VertexId], i: usize, color: &mut [u8]) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for c in 0..3 {
            if g.neighbors(v).all(|u| color[u] != c) {
                color[v] = c;
                if go(g, order, i + 1, color) {
                    return true;
                }
            }
        }
        color[v] = u8::MAX;
        false
    }
    go(g, &order, 0, &mut color).then_some(color)
}

pub fn is_three_colorable(g: &Graph) -> bool {
    three_coloring(g).is_some()
}

/// Named sufficient conditions, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Vc1,
    BipartiteLeaf,
    ThreeConnectedBipartite,
    EvenPart,
    ClosedNeighborhood,
    MinDegreeVertex,
    DominantVertex,
    BipartitePrism,
    NoSingleEdgeMsp,
    MspPatterns,
    CycleBlocks,
    ThreeColorable,
    Fallback,
}

impl Rule {
    pub const ALL: [Rule; 13] = [
        Rule::Vc1,
        Rule::BipartiteLeaf,
        Rule::ThreeConnectedBipartite,
        Rule::EvenPart,
        Rule::ClosedNeighborhood,
        Rule::MinDegreeVertex,
        Rule::DominantVertex,
        Rule::BipartitePrism,
        Rule::NoSingleEdgeMsp,
        Rule::MspPatterns,
        Rule::CycleBlocks,
        Rule::ThreeColorable,
        Rule::Fallback,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Vc1 => "adjacent degrees differ",
            Rule::BipartiteLeaf => "bipartite with δ=1",
            Rule::ThreeConnectedBipartite => "3-connected bipartite",
            Rule::EvenPart => "bipartite with an even part",
            Rule::ClosedNeighborhood => "bipartite, G-N[v] connected",
            Rule::MinDegreeVertex => "bipartite, minimum-degree vertex with G-v connected",
            Rule::DominantVertex => "bipartite dominant vertex",
            Rule::BipartitePrism => "bipartite product with K2",
            Rule::NoSingleEdgeMsp => "no single-edge maximal simple path",
            Rule::MspPatterns => "maximal simple path patterns",
            Rule::CycleBlocks => "all blocks are cycles",
            Rule::ThreeColorable => "3-colorable",
            Rule::Fallback => "fallback",
        }
    }

    pub fn bound(self) -> u32 {
        match self {
            Rule::Vc1 => 1,
            Rule::ThreeColorable => 3,
            Rule::Fallback => 5,
            _ => 2,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCertificate {
    pub bound: u32,
    pub rule: Rule,
    pub witness_details: String,
}

/// Vertices whose degree differs from all their neighbors' degrees.
fn degree_distinct(g: &Graph, v: VertexId) -> bool {
    g.neighbors(v).all(|u| g.degree(u) != g.degree(v))
}

fn connected_without(g: &Graph, removed: &[VertexId]) -> bool {
    g.components_without(removed) == 1
}

fn is_bad_cycle(g: &Graph) -> bool {
    g.is_cycle() && !g.vertex_count().is_multiple_of(4)
}

/// When `g` is `H □ K2` with `H` connected on more than two vertices, returns the vertices of one
/// copy of `H`. Searches perfect matchings whose swap is an automorphism; skipped above 20
/// vertices.
pub fn prism_factor(g: &Graph) -> Option<Vec<VertexId>> {
    let n = g.vertex_count();
    if n % 2 == 1 || !(6..=20).contains(&n) || !g.is_connected() {
        return None;
    }
    let mut mate = vec![usize::MAX; n];
    fn consistent(g: &Graph, mate: &[usize], u: VertexId) -> bool {
        // every non-matching edge at u must map to an edge under the swap
        g.neighbors(u).all(|x| {
            x == mate[u] || mate[x] == usize::MAX || (g.has_edge(mate[u], mate[x]) && mate[u] != x)
        })
    }
    fn go(g: &Graph, mate: &mut Vec<usize>) -> Option<Vec<VertexId>> {
        let Some(u) = (0..g.vertex_count()).find(|&v| mate[v] == usize::MAX) else {
            let keep: Vec<VertexId> = (0..g.vertex_count()).collect();
            let without: Vec<(usize, usize)> =
                g.edges().iter().copied().filter(|&(a, b)| mate[a] != b).collect();
            let h = Graph::new(keep.len(), without).ok()?;
            let comps = h.connected_components();
            if comps.len() != 2 || comps[0].iter().any(|&v| comps[0].contains(&mate[v])) {
                return None;
            }
            return Some(comps[0].clone());
        };
        let candidates: Vec<VertexId> = g.neighbors(u).filter(|&x| mate[x] == usize::MAX).collect();
        for x in candidates {
            mate[u] = x;
            mate[x] = u;
            if consistent(g, mate, u) && consistent(g, mate, x) {
                if let Some(found) = go(g, mate) {
                    return Some(found);
                }
            }
            mate[u] = usize::MAX;
            mate[x] = usize::MAX;
        }
        None
    }
    go(g, &mut mate)
}

fn bipartite_rule(g: &Graph) -> Option<(Rule, String)> {
    let bip = g.bipartition()?;
    let n = g.vertex_count();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 1) {
        return Some((Rule::BipartiteLeaf, format!("vertex {v} has degree 1")));
    }
    let kappa = vertex_connectivity(g);
    if kappa >= 3 {
        return Some((Rule::ThreeConnectedBipartite, format!("vertex connectivity {kappa}")));
    }
    let (su, sw) = bip.part_sizes();
    if su % 2 == 0 || sw % 2 == 0 {
        let (side, size) = if su % 2 == 0 { (Side::U, su) } else { (Side::W, sw) };
        return Some((Rule::EvenPart, format!("part {:?} has {size} vertices", bip.part(side))));
    }
    for v in 0..n {
        if degree_distinct(g, v) {
            let mut closed: Vec<VertexId> = g.neighbors(v).collect();
            closed.push(v);
            if closed.len() < n && connected_without(g, &closed) {
                return Some((Rule::ClosedNeighborhood, format!("vertex {v}: degree differs from its neighbors and G-N[{v}] is connected")));
            }
        }
    }
    let delta = g.min_degree();
    if let Some(v) = (0..n).find(|&v| g.degree(v) == delta && degree_distinct(g, v) && connected_without(g, &[v])) {
        return Some((Rule::MinDegreeVertex, format!("vertex {v} of minimum degree {delta}")));
    }
    if let Some(&v) = crate::constructors::dominant_vertices(g).first() {
        return Some((Rule::DominantVertex, format!("vertex {v} of degree {} dominates its neighbors", g.degree(v))));
    }
    if let Some(h) = prism_factor(g) {
        return Some((Rule::BipartitePrism, format!("G = H □ K2 with H on vertices {h:?}")));
    }
    None
}

/// Best upper bound on the weighting number justified by the first matching rule of
/// [`Rule::ALL`].
pub fn mu_upper_bound(g: &Graph) -> Result<BoundCertificate> {
    require_connected_min3(g)?;
    let cert = |rule: Rule, details: String| Ok(BoundCertificate { bound: rule.bound(), rule, witness_details: details });
    if admits_vc1(g)? {
        return cert(Rule::Vc1, "no edge joins two vertices of equal degree".into());
    }
    if let Some((rule, details)) = bipartite_rule(g) {
        return cert(rule, details);
    }
    if !is_bad_cycle(g) {
        let dec = maximal_simple_paths(g)?;
        if !dec.has_single_edge_path() {
            return cert(Rule::NoSingleEdgeMsp, format!("{} maximal simple paths, none a single edge", dec.paths.len()));
        }
        let no_three = dec.paths.iter().all(|p| p.len() % 4 != 3);
        let singles_ok = dec.paths.iter().filter(|p| p.len() == 1).all(|p| g.degree(p.start()) != g.degree(p.end()));
        if no_three && singles_ok {
            return cert(Rule::MspPatterns, "no path of length 3 mod 4; single-edge paths join different degrees".into());
        }
    }
    let bd = blocks_and_cut_vertices(g)?;
    if bd.blocks.len() >= 2 && (0..bd.blocks.len()).all(|b| bd.block_is_cycle(g, b)) {
        return cert(Rule::CycleBlocks, format!("{} cycle blocks", bd.blocks.len()));
    }
    if is_three_colorable(g) {
        return cert(Rule::ThreeColorable, "proper 3-coloring found".into());
    }
    cert(Rule::Fallback, "every connected graph on at least 3 vertices has a proper 5-weighting".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{clique, cycle, hypercube, path, theta};

    #[test]
    fn simple_families() {
        assert_eq!(mu_path_cycle_clique(SimpleFamily::Path, 3), Ok(1));
        assert_eq!(mu_path_cycle_clique(SimpleFamily::Path, 9), Ok(2));
        assert_eq!(mu_path_cycle_clique(SimpleFamily::Cycle, 6), Ok(3));
        assert_eq!(mu_path_cycle_clique(SimpleFamily::Cycle, 8), Ok(2));
        assert_eq!(mu_path_cycle_clique(SimpleFamily::Clique, 5), Ok(3));
        assert!(mu_path_cycle_clique(SimpleFamily::Cycle, 2).is_err());
    }

    #[test]
    fn theta_values() {
        assert_eq!(mu_theta(&[2, 2, 2]), Ok(1));
        assert_eq!(mu_theta(&[1, 5, 5]), Ok(3));
        assert_eq!(mu_theta(&[1, 3, 3]), Ok(2));
        assert!(mu_theta(&[1, 1, 3]).is_err());
        assert!(mu_theta(&[5, 1, 5]).is_err());
        assert!(mu_theta(&[2, 2]).is_err());
        assert_eq!(theta_lengths(&theta(&[5, 1, 5]).unwrap()), Some(vec![1, 5, 5]));
        assert_eq!(theta_lengths(&cycle(5).unwrap()), None);
    }

    #[test]
    fn gpt_values() {
        assert_eq!(mu_gpt(&GptParams::new(2, 2, 2, 2, 2, 2)), Ok(1));
        assert_eq!(mu_gpt(&GptParams::new(0, 0, 0, 0, 3, 3)), Ok(3));
        assert_eq!(mu_gpt(&GptParams::new(0, 6, 0, 0, 0, 0)), Ok(3));
        assert_eq!(mu_gpt(&GptParams::new(5, 1, 1, 5, 1, 3)), Ok(3));
        assert!(mu_gpt(&GptParams::new(1, 1, 1, 1, 1, 3)).is_err());
        assert!(mu_gpt(&GptParams::new(2, 1, 1, 2, 1, 1)).is_err());
    }

    #[test]
    fn three_colorability() {
        assert!(is_three_colorable(&clique(3).unwrap()));
        assert!(!is_three_colorable(&clique(4).unwrap()));
        assert!(is_three_colorable(&cycle(7).unwrap()));
    }

    #[test]
    fn bound_examples() {
        let q3 = mu_upper_bound(&hypercube(3).unwrap()).unwrap();
        assert_eq!((q3.bound, q3.rule), (2, Rule::ThreeConnectedBipartite));
        let tree = Graph::new(6, vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let t = mu_upper_bound(&tree).unwrap();
        assert_eq!((t.bound, t.rule), (2, Rule::BipartiteLeaf));
        assert_eq!(mu_upper_bound(&path(3).unwrap()).unwrap().rule, Rule::Vc1);
        let k4 = mu_upper_bound(&clique(4).unwrap()).unwrap();
        assert_eq!((k4.bound, k4.rule), (5, Rule::Fallback));
        assert_eq!(mu_upper_bound(&cycle(5).unwrap()).unwrap().rule, Rule::ThreeColorable);
    }

    #[test]
    fn prism_detection() {
        let p3 = path(3).unwrap();
        let prism = p3.cartesian_product(&path(2).unwrap());
        assert_eq!(prism_factor(&prism).map(|h| h.len()), Some(3));
        let c5 = cycle(5).unwrap().cartesian_product(&path(2).unwrap());
        assert!(prism_factor(&c5).is_some());
        assert!(prism_factor(&cycle(6).unwrap()).is_none());
    }
}
