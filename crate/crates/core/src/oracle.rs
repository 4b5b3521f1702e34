//! Ground truth by exhaustive search: proper weightings, the exact weighting number, and the
//! end-edge behavior of paths.
//!
//! The search assigns edges in breadth-first order from vertex 0, trying weights in increasing
//! order, and rejects a partial assignment as soon as two adjacent vertices whose edges are all
//! weighted share a color (or a saturated vertex breaks its parity constraint). The first
//! weighting found is therefore the lexicographically smallest one with respect to that edge
//! order. With the `parallel` feature the top of the tree is split into prefixes that are searched
//! concurrently; the smallest successful prefix wins, so the witness does not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::weighting::{is_proper, require_connected_min3, EdgeWeighting};

/// Largest edge count searched with `k = 2` unless forced.
pub const GUARD_K2: usize = 40;
/// Largest edge count searched with `k >= 3` unless forced.
pub const GUARD_K3: usize = 26;
pub const DEFAULT_K_MAX: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn admits(self, color: u64) -> bool {
        match self {
            Parity::Odd => color % 2 == 1,
            Parity::Even => color.is_multiple_of(2),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchConstraints {
    pub fixed_weights: BTreeMap<EdgeId, u32>,
    /// Required parity of the final color of a vertex.
    pub parity: BTreeMap<VertexId, Parity>,
}

impl SearchConstraints {
    pub fn none() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Skip the edge-count guard.
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndEdgeBehavior {
    /// Every proper 2-weighting puts equal weights on the two end edges.
    Same,
    /// Every proper 2-weighting puts different weights on the two end edges.
    Different,
    /// All four end-edge weight pairs occur.
    Free,
}

/// Breadth-first edge order from vertex 0; edges at a vertex are taken in id order.
pub fn search_order(g: &Graph) -> Vec<EdgeId> {
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(g.edge_count());
    let mut taken = vec![false; g.edge_count()];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(u, e) in g.incident(v) {
                if !taken[e] {
                    taken[e] = true;
                    order.push(e);
                }
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<EdgeId>,
    /// Allowed weight range per search position.
    domain: Vec<(u32, u32)>,
    parity: Vec<Option<Parity>>,
}

#[derive(Clone)]
struct State {
    sum: Vec<u64>,
    remaining: Vec<u32>,
    /// Weight per search position.
    assigned: Vec<u32>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: u32, cons: &SearchConstraints) -> Result<Self> {
        let order = search_order(g);
        let mut domain = Vec::with_capacity(order.len());
        for &e in &order {
            match cons.fixed_weights.get(&e) {
                Some(&w) => domain.push((w, w)),
                None => domain.push((1, k)),
            }
        }
        for (&e, &w) in &cons.fixed_weights {
            if e >= g.edge_count() {
                return Err(Error::Precondition(format!("fixed weight on unknown edge {e}")));
            }
            if w == 0 || w > k {
                return Err(Error::WeightOutOfRange { edge: e, weight: w, k });
            }
        }
        let mut parity = vec![None; g.vertex_count()];
        for (&v, &p) in &cons.parity {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange(v));
            }
            parity[v] = Some(p);
        }
        Ok(Self { g, order, domain, parity })
    }

    fn fresh_state(&self) -> State {
        State {
            sum: vec![0; self.g.vertex_count()],
            remaining: self.g.degree_sequence().iter().map(|&d| d as u32).collect(),
            assigned: Vec::with_capacity(self.order.len()),
        }
    }

    fn saturated_ok(&self, st: &State, x: VertexId) -> bool {
        if let Some(p) = self.parity[x] {
            if !p.admits(st.sum[x]) {
                return false;
            }
        }
        self.g
            .neighbors(x)
            .all(|y| st.remaining[y] != 0 || st.sum[y] != st.sum[x])
    }

    /// Assigns the next position; returns false if that already violates a constraint.
    fn push(&self, st: &mut State, w: u32) -> bool {
        let e = self.order[st.assigned.len()];
        let (a, b) = self.g.edge(e);
        st.assigned.push(w);
        for x in [a, b] {
            st.sum[x] += u64::from(w);
            st.remaining[x] -= 1;
        }
        [a, b]
            .into_iter()
            .all(|x| st.remaining[x] != 0 || self.saturated_ok(st, x))
    }

    fn pop(&self, st: &mut State) {
        let w = st.assigned.pop().expect("pop on empty assignment");
        let (a, b) = self.g.edge(self.order[st.assigned.len()]);
        for x in [a, b] {
            st.sum[x] -= u64::from(w);
            st.remaining[x] += 1;
        }
    }

    fn dfs<F: FnMut(&[u32]) -> ControlFlow<()>>(&self, st: &mut State, visit: &mut F) -> ControlFlow<()> {
        let pos = st.assigned.len();
        if pos == self.order.len() {
            return visit(&st.assigned);
        }
        let (lo, hi) = self.domain[pos];
        for w in lo..=hi {
            let ok = self.push(st, w);
            if ok {
                let flow = self.dfs(st, visit);
                if flow.is_break() {
                    self.pop(st);
                    return flow;
                }
            }
            self.pop(st);
        }
        ControlFlow::Continue(())
    }

    fn to_edge_order(&self, assigned: &[u32]) -> Vec<u32> {
        let mut w = vec![0; self.order.len()];
        for (pos, &e) in self.order.iter().enumerate() {
            w[e] = assigned[pos];
        }
        w
    }

    /// All consistent assignments of the first `len` positions, in lexicographic order.
    fn prefixes(&self, len: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut st = self.fresh_state();
        self.collect_prefixes(&mut st, len, &mut out);
        out
    }

    fn collect_prefixes(&self, st: &mut State, len: usize, out: &mut Vec<Vec<u32>>) {
        if st.assigned.len() == len {
            out.push(st.assigned.clone());
            return;
        }
        let (lo, hi) = self.domain[st.assigned.len()];
        for w in lo..=hi {
            if self.push(st, w) {
                self.collect_prefixes(st, len, out);
            }
            self.pop(st);
        }
    }

    fn first_from_prefix(&self, prefix: &[u32]) -> Option<Vec<u32>> {
        let mut st = self.fresh_state();
        for &w in prefix {
            if !self.push(&mut st, w) {
                return None;
            }
        }
        let mut found = None;
        let _ = self.dfs(&mut st, &mut |a: &[u32]| {
            found = Some(a.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    fn first(&self) -> Option<Vec<u32>> {
        const PARALLEL_MIN_EDGES: usize = 18;
        if !cfg!(feature = "parallel") || self.order.len() < PARALLEL_MIN_EDGES {
            return self.first_from_prefix(&[]);
        }
        let max_k = self.domain.iter().map(|&(lo, hi)| hi - lo + 1).max().unwrap_or(1).max(2);
        let mut len = 0;
        let mut width = 1u64;
        while width < 64 && len < self.order.len() / 2 {
            width *= u64::from(max_k);
            len += 1;
        }
        let prefixes = self.prefixes(len);
        find_first(&prefixes, |p| self.first_from_prefix(p))
    }
}

#[cfg(feature = "parallel")]
fn find_first<F>(prefixes: &[Vec<u32>], f: F) -> Option<Vec<u32>>
where
    F: Fn(&[u32]) -> Option<Vec<u32>> + Sync,
{
    use rayon::prelude::*;
    prefixes.par_iter().find_map_first(|p| f(p))
}

#[cfg(not(feature = "parallel"))]
fn find_first<F>(prefixes: &[Vec<u32>], f: F) -> Option<Vec<u32>>
where
    F: Fn(&[u32]) -> Option<Vec<u32>>,
{
    prefixes.iter().find_map(|p| f(p))
}

fn guard(g: &Graph, k: u32, opts: SearchOptions) -> Result<()> {
    let limit = match k {
        1 => return Ok(()),
        2 => GUARD_K2,
        _ => GUARD_K3,
    };
    if !opts.force && g.edge_count() > limit {
        return Err(Error::SearchTooLarge { edges: g.edge_count(), k, limit });
    }
    Ok(())
}

/// Smallest proper `k`-weighting satisfying `cons`, or `None` when there is none.
pub fn find_weighting(g: &Graph, k: u32, cons: &SearchConstraints) -> Result<Option<EdgeWeighting>> {
    find_weighting_with(g, k, cons, SearchOptions::default())
}

pub fn find_weighting_with(
    g: &Graph,
    k: u32,
    cons: &SearchConstraints,
    opts: SearchOptions,
) -> Result<Option<EdgeWeighting>> {
    require_connected_min3(g)?;
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    guard(g, k, opts)?;
    let search = Search::new(g, k, cons)?;
    match search.first() {
        Some(assigned) => {
            let w = EdgeWeighting::new(k, search.to_edge_order(&assigned))?;
            debug_assert!(is_proper(g, &w)?.proper);
            Ok(Some(w))
        }
        None => Ok(None),
    }
}

/// Calls `visit` with every proper weighting satisfying `cons` (weights indexed by edge id), in
/// search order, until it breaks.
pub fn for_each_weighting<F>(
    g: &Graph,
    k: u32,
    cons: &SearchConstraints,
    opts: SearchOptions,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    require_connected_min3(g)?;
    guard(g, k, opts)?;
    let search = Search::new(g, k, cons)?;
    let mut st = search.fresh_state();
    let _ = search.dfs(&mut st, &mut |a: &[u32]| visit(&search.to_edge_order(a)));
    Ok(())
}

/// Exact weighting number together with a canonical witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuResult {
    pub mu: u32,
    pub witness: EdgeWeighting,
}

pub fn mu_exact(g: &Graph, k_max: u32) -> Result<u32> {
    mu_exact_with(g, k_max, SearchOptions::default()).map(|r| r.mu)
}

/// For a disconnected graph the value is the maximum over components, and the witness combines
/// the component witnesses.
pub fn mu_exact_with(g: &Graph, k_max: u32, opts: SearchOptions) -> Result<MuResult> {
    let components = g.connected_components();
    if let Some(c) = components.iter().find(|c| c.len() < 3) {
        return Err(Error::TooSmall(format!("component containing vertex {} has {} vertices", c[0], c.len())));
    }
    let mut weights = vec![0u32; g.edge_count()];
    let mut mu = 1;
    for comp in &components {
        let (sub, origin) = g.induced_subgraph(comp);
        let (k, w) = mu_connected(&sub, k_max, opts)?;
        mu = mu.max(k);
        for (i, &e) in origin.iter().enumerate() {
            weights[e] = w.weight(i);
        }
    }
    Ok(MuResult { mu, witness: EdgeWeighting::new(mu, weights)? })
}

fn mu_connected(g: &Graph, k_max: u32, opts: SearchOptions) -> Result<(u32, EdgeWeighting)> {
    for k in 1..=k_max {
        if let Some(w) = find_weighting_with(g, k, &SearchConstraints::none(), opts)? {
            return Ok((k, w));
        }
    }
    Err(Error::NotFoundWithinCap { k_max })
}

/// Classifies the end-edge weights over all proper 2-weightings of the path with `n` edges.
///
/// Only the interior vertices constrain the weights (an end vertex always differs from its
/// neighbor), so the answer also describes any path of length `n` whose internal vertices have
/// degree 2 inside a larger graph.
pub fn end_edge_behavior(n: usize) -> Result<EndEdgeBehavior> {
    if n < 4 {
        return Err(Error::TooSmall(format!("path needs at least 4 edges, got {n}")));
    }
    let g = Graph::new(n + 1, (1..=n).map(|i| (i - 1, i)).collect())?;
    let last = g.edge_count() - 1;
    let mut pairs = BTreeSet::new();
    for_each_weighting(&g, 2, &SearchConstraints::none(), SearchOptions { force: true }, |w| {
        pairs.insert((w[0], w[last]));
        ControlFlow::Continue(())
    })?;
    let all: BTreeSet<(u32, u32)> = [(1, 1), (1, 2), (2, 1), (2, 2)].into();
    if pairs == all {
        Ok(EndEdgeBehavior::Free)
    } else if !pairs.is_empty() && pairs.iter().all(|(a, b)| a == b) {
        Ok(EndEdgeBehavior::Same)
    } else if !pairs.is_empty() && pairs.iter().all(|(a, b)| a != b) {
        Ok(EndEdgeBehavior::Different)
    } else {
        Err(Error::Inconsistent(format!("P{n} end-edge pairs {pairs:?}")))
    }
}
