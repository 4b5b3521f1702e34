use std::process::{Command, Output};

use vcew_core::families::FamilySpec;
use vcew_core::io::{parse_edge_list, parse_weighting, write_edge_list};
use vcew_core::is_proper;

fn vcew(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcew")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses the printed weighting and re-checks it against the graph.
fn assert_proper_on(spec: &str, text: &str, k: u32) {
    let g = spec.parse::<FamilySpec>().unwrap().make().unwrap();
    let w = parse_weighting(text, &g).unwrap();
    assert!(is_proper(&g, &w).unwrap().proper);
    assert!(w.weights().iter().all(|&x| x <= k));
}

#[test]
fn mu_examples() {
    for (spec, mu) in [("theta:1,5,5", 3), ("cycle:8", 2), ("path:3", 1), ("clique:4", 3)] {
        let o = vcew(&["mu", spec]);
        assert_eq!(o.status.code(), Some(0), "{spec}");
        let out = stdout(&o);
        let (first, rest) = out.split_once('\n').unwrap();
        assert_eq!(first, format!("mu={mu}"));
        assert_proper_on(spec, rest, mu);
    }
}

#[test]
fn mu_reads_edge_list_files() {
    let g = "cycle:6".parse::<FamilySpec>().unwrap().make().unwrap();
    let dir = std::env::temp_dir().join(format!("vcew-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("c6.txt");
    std::fs::write(&file, format!("# hexagon\n{}", write_edge_list(&g))).unwrap();
    let o = vcew(&["mu", file.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().next(), Some("mu=3"));
    let back = parse_edge_list(&std::fs::read_to_string(&file).unwrap()).unwrap();
    let ends = |g: &vcew_core::Graph| g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect::<Vec<_>>();
    assert_eq!(ends(&back), ends(&g));

    std::fs::write(&file, "3 2\n0 1\n").unwrap();
    let o = vcew(&["mu", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(vcew(&["mu", "blob:3"]).status.code(), Some(2));
    assert_eq!(vcew(&["mu", "no-such-file"]).status.code(), Some(2));
    let o = vcew(&["mu", "cycle:6", "--kmax", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("k <= 2"));
    let o = vcew(&["weight", "path:4", "--method", "dominant"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("dominant"));
    let o = vcew(&["weight", "theta:1,3,3", "--method", "msp-a"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(vcew(&["verify", "--theorem", "thm-9.9"]).status.code(), Some(4));
    assert_eq!(vcew(&["verify", "--theorem", "thm-2.4"]).status.code(), Some(4));
    assert_eq!(vcew(&["mu", "path:2"]).status.code(), Some(4));
}

#[test]
fn weight_examples() {
    let o = vcew(&["weight", "kpart:2,2", "--method", "multipartite"]);
    assert_eq!(o.status.code(), Some(0));
    assert_proper_on("kpart:2,2", &stdout(&o), 2);

    let o = vcew(&["weight", "theta:4,4,4", "--method", "msp-a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_proper_on("theta:4,4,4", &stdout(&o), 2);

    let o = vcew(&["weight", "cycle:6", "--method", "oracle", "--k", "2"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("no proper 2-weighting"));
}

#[test]
fn every_method_certifies() {
    for (spec, method, k) in [
        ("product(cycle:4,path:3)", "product", 2),
        ("product(path:3,clique:3)", "product", 3),
        ("theta:2,2,2", "msp-b", 2),
        ("cycle:8", "cycle-blocks", 2),
        ("kpart:3,3,3", "multipartite", 2),
        ("kpart:2,3", "dominant", 2),
        ("clique:5", "oracle", 3),
    ] {
        let o = vcew(&["weight", spec, "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{spec} {method}: {}", stderr(&o));
        assert_proper_on(spec, &stdout(&o), k);
    }
    let o = vcew(&["weight", "cycle:4", "--method", "bipk2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_proper_on("product(cycle:4,path:2)", &stdout(&o), 2);
}

#[test]
fn decompose_examples() {
    let out = stdout(&vcew(&["decompose", "theta:2,2,2", "--kind", "msp"]));
    assert!(out.starts_with("paths=3 closed=0\n"));
    assert_eq!(out.matches("length 2 ").count(), 3);
    let out = stdout(&vcew(&["decompose", "path:5", "--kind", "blocks"]));
    assert!(out.starts_with("blocks=4 cut_vertices=3\n"));
    assert!(out.ends_with("cut vertices: 1 2 3\n"));
    let out = stdout(&vcew(&["decompose", "cycle:8", "--kind", "msp"]));
    assert!(out.starts_with("paths=1 closed=1\n"));
    assert!(out.contains("length 8 closed"));
}

fn report_value<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}="))).unwrap()
}

#[test]
fn verify_examples() {
    for args in [
        &["--theorem", "thm-4.2", "--max-edges", "16"][..],
        &["--theorem", "remark"],
        &["--theorem", "prop-2.5", "--max-vertices", "5"],
        &["--theorem", "thm-2.4", "--seed", "3", "--samples", "40"],
        &["--theorem", "Theorem-4.3", "--max-edges", "10"],
    ] {
        let o = vcew(&[&["verify"], args].concat());
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let out = stdout(&o);
        assert_eq!(report_value(&out, "failures"), "0");
        let instances: usize = report_value(&out, "instances").parse().unwrap();
        assert!(instances > 0);
        assert_eq!(report_value(&out, "passed"), instances.to_string());
    }
    let out = stdout(&vcew(&["verify", "--theorem", "remark"]));
    assert_eq!(report_value(&out, "instances"), "13");
}

#[test]
fn seeded_campaigns_are_reproducible() {
    let a = stdout(&vcew(&["verify", "--theorem", "thm-4.1", "--seed", "11", "--samples", "30"]));
    let b = stdout(&vcew(&["verify", "--theorem", "thm-4.1", "--seed", "11", "--samples", "30"]));
    let strip = |s: &str| s.lines().filter(|l| !l.starts_with("wall_seconds")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&a), strip(&b));
}
