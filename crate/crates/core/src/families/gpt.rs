//! Generalized polygon trees with at most three interior regions.
//!
//! Four hub vertices `u, v, u', v'` are joined by six paths:
//! `p1, p2: u–v` (lengths `a, b`), `p3, p4: u'–v'` (`c, d`), `p5: u–u'` (`e`) and `p6: v–v'` (`f`).
//! The interior regions are bounded by `p1 ∪ p2`, `p3 ∪ p4` and `p2 ∪ p5 ∪ p3 ∪ p6`.
//!
//! A length of 0 on one of the inner paths `p2, p3, p5, p6` identifies its two ends. A length of 0
//! on an outer path `p1` or `p4` removes that path, so its region is simply absent.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GptParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
}

const U: usize = 0;
const V: usize = 1;
const U2: usize = 2;
const V2: usize = 3;

impl GptParams {
    pub fn new(a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Self {
        Self { a, b, c, d, e, f }
    }

    pub fn from_slice(p: &[usize]) -> Result<Self> {
        match *p {
            [a, b, c, d, e, f] => Ok(Self::new(a, b, c, d, e, f)),
            _ => Err(Error::Family(format!("gpt needs 6 lengths, got {}", p.len()))),
        }
    }

    pub fn as_array(&self) -> [usize; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    pub fn total_edges(&self) -> usize {
        self.as_array().iter().sum()
    }

    /// `(from hub, to hub, length, zero length identifies the ends)` for p1..p6.
    fn paths(&self) -> [(usize, usize, usize, bool); 6] {
        [
            (U, V, self.a, false),
            (U, V, self.b, true),
            (U2, V2, self.c, true),
            (U2, V2, self.d, false),
            (U, U2, self.e, true),
            (V, V2, self.f, true),
        ]
    }

    /// Parity conditions for the three region boundaries to be even.
    pub fn parity_bipartite(&self) -> bool {
        (self.a + self.b).is_multiple_of(2)
            && (self.c + self.d).is_multiple_of(2)
            && (self.b + self.e + self.c + self.f).is_multiple_of(2)
    }

    /// Builds the graph. Hubs are numbered first (one id per class of identified hubs, in order of
    /// the smallest hub in the class, with `u=0, v=1, u'=2, v'=3`), then path interiors in the
    /// order p1..p6, each walked from its first hub.
    pub fn build(&self) -> Result<Graph> {
        let mut class = [U, V, U2, V2];
        fn find(class: &mut [usize; 4], x: usize) -> usize {
            let mut r = x;
            while class[r] != r {
                r = class[r];
            }
            class[x] = r;
            r
        }
        for (x, y, len, identify) in self.paths() {
            if len == 0 && identify {
                let (rx, ry) = (find(&mut class, x), find(&mut class, y));
                let (lo, hi) = (rx.min(ry), rx.max(ry));
                class[hi] = lo;
            }
        }
        let roots: Vec<usize> = (0..4).map(|h| find(&mut class, h)).collect();
        let mut hub_id = [usize::MAX; 4];
        let mut next = 0;
        for h in 0..4 {
            let r = roots[h];
            if hub_id[r] == usize::MAX {
                hub_id[r] = next;
                next += 1;
            }
            hub_id[h] = hub_id[r];
        }

        let mut n = next;
        let mut edges = Vec::new();
        for (i, (x, y, len, _)) in self.paths().into_iter().enumerate() {
            if len == 0 {
                continue;
            }
            let (hx, hy) = (hub_id[x], hub_id[y]);
            if hx == hy && len < 3 {
                return Err(Error::Family(format!(
                    "p{} of length {len} closes on a single hub and would make a loop or parallel edge",
                    i + 1
                )));
            }
            let mut prev = hx;
            for _ in 1..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, hy));
        }
        let g = Graph::new(n, edges).map_err(|_| {
            Error::Family(format!("gpt:{self} has two paths of length 1 between the same hubs"))
        })?;
        if n < 3 {
            return Err(Error::Family(format!("gpt:{self} has fewer than 3 vertices")));
        }
        if !g.is_connected() {
            return Err(Error::Family(format!("gpt:{self} is disconnected")));
        }
        Ok(g)
    }

    /// Parameter tuples describing an isomorphic graph through the symmetries of the hub
    /// structure: swapping the two u–v paths, swapping the two u'–v' paths (both only when neither
    /// length is 0, since 0 means different things on inner and outer paths), mirroring
    /// left-right (u↔v, u'↔v', which exchanges e and f) and mirroring top-bottom. Deduplicated,
    /// identity first.
    pub fn symmetric_images(&self) -> Vec<GptParams> {
        let mut out: Vec<GptParams> = Vec::with_capacity(16);
        for mask in 0..16u8 {
            let mut p = *self;
            if mask & 1 != 0 && p.a > 0 && p.b > 0 {
                std::mem::swap(&mut p.a, &mut p.b);
            }
            if mask & 2 != 0 && p.c > 0 && p.d > 0 {
                std::mem::swap(&mut p.c, &mut p.d);
            }
            if mask & 4 != 0 {
                std::mem::swap(&mut p.e, &mut p.f);
            }
            if mask & 8 != 0 {
                // top-bottom: p1 <-> p4, p2 <-> p3 keeps p2, p3 next to the middle region
                p = GptParams::new(p.d, p.c, p.b, p.a, p.e, p.f);
            }
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

impl fmt::Display for GptParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{},{}", self.a, self.b, self.c, self.d, self.e, self.f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_regions_counts() {
        // a = b = 1 would be two parallel u–v edges
        assert!(GptParams::new(1, 1, 1, 1, 1, 3).build().is_err());
        let g = GptParams::new(5, 1, 1, 5, 1, 3).build().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 16));
        assert!(g.is_bipartite());
        let g = GptParams::new(2, 2, 2, 2, 2, 2).build().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 12));
    }

    #[test]
    fn outer_zero_removes_the_path() {
        // b, c > 1, e = f = 1, a = 0: a theta graph with roots u', v'
        let g = GptParams::new(0, 2, 2, 2, 1, 1).build().unwrap();
        let mut deg = g.degree_sequence();
        deg.sort_unstable();
        assert_eq!(deg, vec![2, 2, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn zero_lengths_identify_hubs() {
        // a=b=c=d=0: u=v and u'=v', leaving the cycle p5 ∪ p6
        let g = GptParams::new(0, 0, 0, 0, 3, 3).build().unwrap();
        assert!(g.is_cycle());
        assert_eq!(g.vertex_count(), 6);
    }

    #[test]
    fn rejects_degenerate_tuples() {
        assert!(GptParams::new(1, 1, 2, 2, 1, 1).build().is_err()); // parallel u–v edges
        assert!(GptParams::new(0, 1, 0, 0, 0, 0).build().is_err()); // loop
        assert!(GptParams::new(0, 2, 0, 0, 0, 0).build().is_err()); // 2-cycle
        assert!(GptParams::new(0, 1, 0, 0, 2, 2).build().unwrap().is_cycle());
        assert!(GptParams::new(0, 0, 0, 0, 0, 0).build().is_err());
    }

    #[test]
    fn symmetric_images_include_identity() {
        let p = GptParams::new(1, 2, 3, 4, 5, 6);
        let imgs = p.symmetric_images();
        assert_eq!(imgs.len(), 16);
        assert_eq!(imgs[0], p);
        assert_eq!(GptParams::new(0, 3, 1, 5, 1, 1).symmetric_images().len(), 4);
        assert!(imgs.contains(&GptParams::new(4, 3, 2, 1, 5, 6)));
        assert!(imgs.contains(&GptParams::new(2, 1, 3, 4, 6, 5)));
    }
}
