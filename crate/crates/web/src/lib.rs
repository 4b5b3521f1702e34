//! Browser bindings. Every export takes plain arguments and returns a JSON string; failures come
//! back as `{"error": "..."}` rather than exceptions.

use serde_json::{json, Value};
use vcew_core::classifiers::{mu_gpt, mu_upper_bound};
use vcew_core::families::{FamilySpec, GptParams};
use vcew_core::oracle::{end_edge_behavior, for_each_weighting, mu_exact, mu_exact_with, SearchConstraints, SearchOptions, DEFAULT_K_MAX};
use vcew_core::{induced_coloring, Graph, Result};
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest graph the page will draw and search.
pub const MAX_EDGES: usize = 40;

fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.vertex_count(), "edges": g.edges() })
}

fn or_error(r: Result<Value>) -> Value {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() }))
}

fn checked_size(g: &Graph) -> Result<()> {
    if g.edge_count() > MAX_EDGES {
        return Err(vcew_core::Error::Precondition(format!(
            "{} edges; the demo handles at most {MAX_EDGES}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// Graph, exact weighting number with witness and vertex colors, and the rule-engine bound.
pub fn explore_value(spec: &str) -> Value {
    or_error((|| {
        let g = spec.parse::<FamilySpec>()?.make()?;
        checked_size(&g)?;
        let r = mu_exact_with(&g, DEFAULT_K_MAX, SearchOptions::default())?;
        let colors = induced_coloring(&g, &r.witness)?.colors;
        let bound = mu_upper_bound(&g)?;
        Ok(json!({
            "graph": graph_json(&g),
            "mu": r.mu,
            "weights": r.witness.weights(),
            "colors": colors,
            "bound": bound.bound,
            "rule": bound.rule.name(),
            "details": bound.witness_details,
        }))
    })())
}

/// Closed-form value for a generalized polygon tree next to the exact search.
pub fn gpt_value(p: &[usize]) -> Value {
    or_error((|| {
        let p = GptParams::from_slice(p)?;
        let g = p.build()?;
        checked_size(&g)?;
        let classified = mu_gpt(&p).map_err(|e| e.to_string());
        Ok(json!({
            "graph": graph_json(&g),
            "classifier": classified.as_ref().ok(),
            "classifier_error": classified.as_ref().err(),
            "exact": mu_exact(&g, DEFAULT_K_MAX)?,
        }))
    })())
}

/// End-edge behavior of the path with `n` edges, with the end-weight pairs that occur.
pub fn end_edges_value(n: usize) -> Value {
    or_error((|| {
        if n > 24 {
            return Err(vcew_core::Error::Precondition("the demo enumerates paths of at most 24 edges".into()));
        }
        let behavior = end_edge_behavior(n)?;
        let g = Graph::new(n + 1, (1..=n).map(|i| (i - 1, i)).collect())?;
        let mut pairs = std::collections::BTreeMap::<(u32, u32), usize>::new();
        let mut total = 0;
        for_each_weighting(&g, 2, &SearchConstraints::none(), SearchOptions { force: true }, |w| {
            *pairs.entry((w[0], w[n - 1])).or_default() += 1;
            total += 1;
            std::ops::ControlFlow::Continue(())
        })?;
        let pairs: Vec<Value> = pairs.iter().map(|(&(a, b), &c)| json!({ "first": a, "last": b, "count": c })).collect();
        Ok(json!({ "edges": n, "behavior": format!("{behavior:?}"), "weightings": total, "pairs": pairs }))
    })())
}

#[wasm_bindgen]
pub fn explore(spec: &str) -> String {
    explore_value(spec).to_string()
}

#[wasm_bindgen]
pub fn classify_gpt(a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> String {
    gpt_value(&[a, b, c, d, e, f]).to_string()
}

#[wasm_bindgen]
pub fn end_edges(n: usize) -> String {
    end_edges_value(n).to_string()
}
