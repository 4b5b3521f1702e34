//! Verification campaigns, one per theorem id.

use std::time::Instant;

use vcew_core::classifiers::{mu_gpt, mu_path_cycle_clique, mu_theta, mu_upper_bound, SimpleFamily};
use vcew_core::connectivity::vertex_connectivity;
use vcew_core::constructors::{
    bipartite_product_k2, dominant_vertex_weighting, dominant_vertices, multipartite_weighting, product_weighting,
};
use vcew_core::families::{clique, cycle, enumerate_connected, path, random_connected_bipartite, theta, GptParams};
use vcew_core::msp::maximal_simple_paths;
use vcew_core::oracle::{end_edge_behavior, find_weighting, mu_exact, EndEdgeBehavior, SearchConstraints, GUARD_K2, DEFAULT_K_MAX};
use vcew_core::{admits_vc1, is_proper, EdgeWeighting, Error, Graph, Result};

use crate::report::VerificationReport;

pub const THEOREMS: [&str; 12] = [
    "thm-1.3", "thm-2.1", "lemma-2.3", "thm-2.4", "prop-2.5", "remark", "prop-3.6", "thm-3.7", "thm-4.1", "thm-4.2",
    "thm-4.3", "conj-1",
];

#[derive(Debug, Clone, Default)]
pub struct Params {
    pub max_edges: Option<usize>,
    pub max_vertices: Option<usize>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

/// Lower-cases and expands long names, so `Theorem-4.2` and `thm4.2` both become `thm-4.2`.
pub fn normalize(id: &str) -> String {
    let mut s = id.trim().to_ascii_lowercase();
    for (long, short) in [("theorem", "thm"), ("proposition", "prop"), ("conjecture", "conj")] {
        if let Some(rest) = s.strip_prefix(long) {
            s = format!("{short}{rest}");
        }
    }
    for short in ["thm", "prop", "lemma", "conj"] {
        if let Some(rest) = s.strip_prefix(short) {
            if !rest.is_empty() && !rest.starts_with('-') {
                s = format!("{short}-{}", rest.trim_start_matches(['_', ' ']));
            }
        }
    }
    s
}

pub fn run(id: &str, p: &Params) -> Result<VerificationReport> {
    let id = normalize(id);
    let start = Instant::now();
    let mut r = VerificationReport::new(&id);
    match id.as_str() {
        "thm-1.3" => fixed_table(&mut r, p)?,
        "thm-2.1" => composition(&mut r, p)?,
        "lemma-2.3" => connectivity(&mut r, p)?,
        "thm-2.4" => bipartite_k2(&mut r, p)?,
        "prop-2.5" => vc1_products(&mut r, p)?,
        "remark" => end_edges(&mut r, p)?,
        "prop-3.6" => multipartite(&mut r, p)?,
        "thm-3.7" => no_single_edge_path(&mut r, p)?,
        "thm-4.1" => dominant(&mut r, p)?,
        "thm-4.2" => thetas(&mut r, p)?,
        "thm-4.3" => gpts(&mut r, p)?,
        "conj-1" => conjecture(&mut r, p)?,
        _ => {
            return Err(Error::Precondition(format!("unknown theorem id `{id}`; known: {}", THEOREMS.join(", "))));
        }
    }
    r.seconds = start.elapsed().as_secs_f64();
    Ok(r)
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges={}", g.vertex_count(), edges.join(","))
}

fn require_seed(p: &Params) -> Result<u64> {
    p.seed.ok_or_else(|| Error::Precondition("this campaign is randomized; pass --seed".into()))
}

fn enumerated(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    if hi > 8 {
        return Err(Error::Precondition(format!("--max-vertices {hi} exceeds the enumeration limit of 8")));
    }
    let mut out = Vec::new();
    for n in lo..=hi {
        if n == 2 {
            out.push(path(2)?);
        } else if n >= 3 {
            out.extend(enumerate_connected(n)?);
        }
    }
    Ok(out)
}

fn oracle_witness(g: &Graph) -> Result<EdgeWeighting> {
    let mu = mu_exact(g, DEFAULT_K_MAX)?;
    Ok(find_weighting(g, mu, &SearchConstraints::none())?.expect("mu_exact found a weighting with mu weights"))
}

fn proper(g: &Graph, w: &Result<EdgeWeighting>) -> bool {
    w.as_ref().is_ok_and(|w| is_proper(g, w).is_ok_and(|p| p.proper))
}

fn outcome(w: &Result<EdgeWeighting>) -> String {
    match w {
        Ok(w) => format!("{}-weighting, improper", w.k()),
        Err(e) => e.to_string(),
    }
}

fn fixed_table(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let hi = p.max_edges.unwrap_or(12);
    for n in 3..=hi {
        for (fam, g, name) in [(SimpleFamily::Path, path(n)?, "path"), (SimpleFamily::Cycle, cycle(n)?, "cycle")] {
            r.check(|| format!("{name}:{n}"), mu_path_cycle_clique(fam, n)?, mu_exact(&g, DEFAULT_K_MAX)?);
        }
    }
    for n in 3..=6 {
        r.check(|| format!("clique:{n}"), mu_path_cycle_clique(SimpleFamily::Clique, n)?, mu_exact(&clique(n)?, DEFAULT_K_MAX)?);
    }
    Ok(())
}

fn composition(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let graphs = enumerated(3, p.max_vertices.unwrap_or(4))?;
    let witnesses = graphs.iter().map(oracle_witness).collect::<Result<Vec<_>>>()?;
    for (g, wg) in graphs.iter().zip(&witnesses) {
        for (h, wh) in graphs.iter().zip(&witnesses) {
            let host = g.cartesian_product(h);
            let w = product_weighting(g, wg, h, wh);
            let k = wg.k().max(wh.k());
            r.check_that(
                || format!("{} x {}", describe(g), describe(h)),
                proper(&host, &w) && w.as_ref().is_ok_and(|w| w.k() <= k),
                &format!("proper {k}-weighting"),
                || outcome(&w),
            );
        }
    }
    Ok(())
}

fn connectivity(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let graphs = enumerated(2, p.max_vertices.unwrap_or(5))?;
    let kappa: Vec<usize> = graphs.iter().map(vertex_connectivity).collect();
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in graphs.iter().enumerate().skip(i) {
            let prod = g.cartesian_product(h);
            let formula = prod.min_degree().min(kappa[j] * g.vertex_count()).min(kappa[i] * h.vertex_count());
            r.check(|| format!("{} x {}", describe(g), describe(h)), formula, vertex_connectivity(&prod));
        }
    }
    Ok(())
}

fn random_bipartite(seed: u64, i: usize, lo: usize, hi: usize) -> Result<Graph> {
    let n = lo + i % (hi + 1 - lo);
    let max = (n / 2) * n.div_ceil(2);
    let m = n - 1 + (i * 7) % (max + 2 - n);
    random_connected_bipartite(n, m, seed.wrapping_add(i as u64))
}

fn bipartite_k2(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let seed = require_seed(p)?;
    let hi = p.max_vertices.unwrap_or(8).max(3);
    let k2 = path(2)?;
    for i in 0..p.samples.unwrap_or(100) {
        let g = random_bipartite(seed, i, 3, hi)?;
        let host = g.cartesian_product(&k2);
        let w = bipartite_product_k2(&g);
        let mut ok = proper(&host, &w);
        let mut got = outcome(&w);
        if ok && host.edge_count() <= GUARD_K2 {
            let mu = mu_exact(&host, DEFAULT_K_MAX)?;
            ok = mu <= 2;
            got = format!("mu={mu}");
        }
        r.check_that(|| describe(&g), ok, "proper 2-weighting of G x K2", || got);
    }
    Ok(())
}

fn vc1_products(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let graphs = enumerated(3, p.max_vertices.unwrap_or(5))?;
    let one: Vec<bool> = graphs.iter().map(|g| mu_exact(g, DEFAULT_K_MAX).map(|m| m == 1)).collect::<Result<_>>()?;
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in graphs.iter().enumerate().skip(i) {
            let lhs = admits_vc1(&g.cartesian_product(h))?;
            r.check(|| format!("{} x {}", describe(g), describe(h)), one[i] && one[j], lhs);
        }
    }
    Ok(())
}

fn end_edges(r: &mut VerificationReport, p: &Params) -> Result<()> {
    for n in 4..=p.max_edges.unwrap_or(16) {
        let want = match n % 4 {
            1 => EndEdgeBehavior::Same,
            3 => EndEdgeBehavior::Different,
            _ => EndEdgeBehavior::Free,
        };
        let got = match end_edge_behavior(n) {
            Ok(b) => format!("{b:?}"),
            Err(e) => e.to_string(),
        };
        r.check(|| format!("path with {n} edges"), format!("{want:?}"), got);
    }
    Ok(())
}

fn multipartite(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let cap = p.max_vertices.unwrap_or(12);
    for parts in 2..=cap / 2 {
        for n in 2..=cap / parts {
            let (g, w) = multipartite_weighting(parts, n)?;
            let w = Ok(w);
            let mut ok = proper(&g, &w);
            let mut got = outcome(&w);
            if ok && g.edge_count() <= GUARD_K2 {
                let mu = mu_exact(&g, DEFAULT_K_MAX)?;
                ok = mu == 2;
                got = format!("mu={mu}");
            }
            let spec = format!("kpart:{}", vec![n.to_string(); parts].join(","));
            r.check_that(|| spec, ok, "proper 2-weighting, mu=2", || got);
        }
    }
    Ok(())
}

fn no_single_edge_path(r: &mut VerificationReport, p: &Params) -> Result<()> {
    for g in enumerated(3, p.max_vertices.unwrap_or(8))? {
        let bad_cycle = g.is_cycle() && g.vertex_count() % 4 != 0;
        if bad_cycle || maximal_simple_paths(&g)?.has_single_edge_path() {
            continue;
        }
        let mu = mu_exact(&g, DEFAULT_K_MAX)?;
        r.check_that(|| describe(&g), mu <= 2, "mu<=2", || format!("mu={mu}"));
    }
    Ok(())
}

fn dominant(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let seed = require_seed(p)?;
    let hi = p.max_vertices.unwrap_or(10).max(5);
    for i in 0..p.samples.unwrap_or(100) {
        let g = random_bipartite(seed, i, 5, hi)?;
        for v in dominant_vertices(&g) {
            if g.remove_vertex(v).0.connected_components().len() != 1 {
                continue;
            }
            let w = dominant_vertex_weighting(&g, v);
            r.check_that(|| format!("{} v={v}", describe(&g)), proper(&g, &w), "proper 2-weighting", || outcome(&w));
        }
    }
    Ok(())
}

fn theta_lists(max_total: usize) -> Vec<Vec<usize>> {
    fn extend(cur: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 3 {
            out.push(cur.clone());
        }
        let lo = cur.last().copied().unwrap_or(1);
        for l in lo..=left {
            if l == 1 && cur.first() == Some(&1) {
                continue;
            }
            cur.push(l);
            extend(cur, left - l, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_total, &mut out);
    out
}

fn thetas(r: &mut VerificationReport, p: &Params) -> Result<()> {
    for l in theta_lists(p.max_edges.unwrap_or(16)) {
        let spec = format!("theta:{}", l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        r.check(|| spec, mu_exact(&theta(&l)?, DEFAULT_K_MAX)?, mu_theta(&l)?);
    }
    Ok(())
}

fn gpts(r: &mut VerificationReport, p: &Params) -> Result<()> {
    let t = p.max_edges.unwrap_or(14);
    let mut stack = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        let used: usize = cur.iter().sum();
        if cur.len() < 6 {
            stack.extend((0..=t - used).rev().map(|x| [cur.as_slice(), &[x]].concat()));
            continue;
        }
        let gp = GptParams::from_slice(&cur)?;
        let Ok(g) = gp.build() else { continue };
        if !gp.parity_bipartite() {
            continue;
        }
        let got = match mu_gpt(&gp) {
            Ok(m) => m.to_string(),
            Err(e) => e.to_string(),
        };
        r.check(|| format!("gpt:{gp}"), mu_exact(&g, DEFAULT_K_MAX)?, got);
    }
    Ok(())
}

fn conjecture(r: &mut VerificationReport, p: &Params) -> Result<()> {
    for g in enumerated(3, p.max_vertices.unwrap_or(7))? {
        let mu = mu_exact(&g, DEFAULT_K_MAX)?;
        let cert = mu_upper_bound(&g)?;
        let ok = mu <= 3 && cert.bound >= mu;
        r.check_that(
            || describe(&g),
            ok,
            "mu<=3 and rule bound >= mu",
            || format!("mu={mu} bound={} ({})", cert.bound, cert.rule),
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_ids() {
        assert_eq!(normalize("Theorem-4.2"), "thm-4.2");
        assert_eq!(normalize("thm4.2"), "thm-4.2");
        assert_eq!(normalize("PROP-2.5"), "prop-2.5");
        assert_eq!(normalize("remark"), "remark");
        assert_eq!(normalize("conjecture1"), "conj-1");
    }

    #[test]
    fn theta_lists_are_sorted_and_simple() {
        let lists = theta_lists(7);
        assert!(lists.contains(&vec![1, 2, 2]) && lists.contains(&vec![2, 2, 3]));
        assert!(lists.iter().all(|l| l.windows(2).all(|w| w[0] <= w[1]) && l.iter().filter(|&&x| x == 1).count() <= 1));
        assert!(!lists.contains(&vec![1, 1, 2]));
    }

    #[test]
    fn randomized_campaigns_need_a_seed() {
        assert!(matches!(run("thm-2.4", &Params::default()), Err(Error::Precondition(_))));
    }
}
