use serde_json::Value;
use vcew_web::{classify_gpt, end_edges, explore};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn explore_reports_mu_and_a_proper_coloring() {
    let v = parse(explore("theta:1,5,5"));
    assert_eq!(v["mu"], 3);
    assert_eq!(v["graph"]["n"], 10);
    let colors: Vec<u64> = serde_json::from_value(v["colors"].clone()).unwrap();
    let edges: Vec<(usize, usize)> = serde_json::from_value(v["graph"]["edges"].clone()).unwrap();
    assert!(edges.iter().all(|&(a, b)| colors[a] != colors[b]));
    assert!(v["bound"].as_u64().unwrap() >= 3);

    let q3 = parse(explore("hypercube:3"));
    assert_eq!(q3["mu"], 2);
    assert_eq!(q3["rule"], "3-connected bipartite");
}

#[test]
fn errors_are_json() {
    assert!(parse(explore("blob:3"))["error"].is_string());
    assert!(parse(explore("clique:12"))["error"].as_str().unwrap().contains("at most"));
    assert!(parse(classify_gpt(1, 1, 1, 1, 1, 3))["error"].is_string());
    assert!(parse(end_edges(3))["error"].is_string());
}

#[test]
fn gpt_classifier_matches_search() {
    let v = parse(classify_gpt(5, 1, 1, 5, 1, 3));
    assert_eq!(v["classifier"], 3);
    assert_eq!(v["exact"], 3);
    let v = parse(classify_gpt(2, 2, 2, 2, 2, 2));
    assert_eq!(v["classifier"], 1);
    assert_eq!(v["exact"], 1);
}

#[test]
fn end_edge_pairs() {
    let v = parse(end_edges(5));
    assert_eq!(v["behavior"], "Same");
    assert!(v["pairs"].as_array().unwrap().iter().all(|p| p["first"] == p["last"]));
    let v = parse(end_edges(7));
    assert_eq!(v["behavior"], "Different");
    let v = parse(end_edges(8));
    assert_eq!(v["behavior"], "Free");
    assert_eq!(v["pairs"].as_array().unwrap().len(), 4);
}
