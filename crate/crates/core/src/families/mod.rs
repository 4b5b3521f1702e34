//! Generators for the graph families used throughout the crate, and a small spec language for
//! naming them.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! spec    := name ':' ints | 'product(' spec ',' spec ')'
//! name    := path | cycle | clique | kpart | theta | gpt | hypercube
//! ints    := int (',' int)*
//! ```

pub mod enumerate;
pub mod gpt;
pub mod random;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use enumerate::{are_isomorphic, canonical_form, enumerate_connected};
pub use gpt::GptParams;
pub use random::random_connected_bipartite;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    Multipartite(Vec<usize>),
    Theta(Vec<usize>),
    Gpt(GptParams),
    Hypercube(usize),
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn make(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Clique(n) => clique(*n),
            FamilySpec::Multipartite(parts) => complete_multipartite(parts),
            FamilySpec::Theta(lengths) => theta(lengths),
            FamilySpec::Gpt(p) => p.build(),
            FamilySpec::Hypercube(n) => hypercube(*n),
            FamilySpec::Product(g, h) => Ok(g.make()?.cartesian_product(&h.make()?)),
        }
    }
}

pub fn make(spec: &FamilySpec) -> Result<Graph> {
    spec.make()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Clique(n) => write!(f, "clique:{n}"),
            FamilySpec::Multipartite(p) => write!(f, "kpart:{}", join(p)),
            FamilySpec::Theta(l) => write!(f, "theta:{}", join(l)),
            FamilySpec::Gpt(p) => write!(f, "gpt:{p}"),
            FamilySpec::Hypercube(n) => write!(f, "hypercube:{n}"),
            FamilySpec::Product(g, h) => write!(f, "product({g},{h})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        parse(&compact)
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

fn parse(s: &str) -> Result<FamilySpec> {
    if let Some(inner) = s.strip_prefix("product(") {
        let inner = inner.strip_suffix(')').ok_or_else(|| bad(format!("unclosed product in `{s}`")))?;
        let mut depth = 0i32;
        let mut split = None;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                // a top-level comma followed by a family name separates the factors
                ',' if depth == 0 && inner[i + 1..].starts_with(|c: char| c.is_ascii_alphabetic()) => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(|| bad(format!("product needs two factors in `{s}`")))?;
        return Ok(FamilySpec::Product(Box::new(parse(&inner[..i])?), Box::new(parse(&inner[i + 1..])?)));
    }
    let (name, args) = s.split_once(':').ok_or_else(|| bad(format!("expected `name:args`, got `{s}`")))?;
    let nums = args
        .split(',')
        .map(|t| t.parse::<usize>().map_err(|_| bad(format!("`{t}` is not a non-negative integer"))))
        .collect::<Result<Vec<usize>>>()?;
    let single = || match nums[..] {
        [n] => Ok(n),
        _ => Err(bad(format!("{name} takes exactly one integer"))),
    };
    Ok(match name {
        "path" => FamilySpec::Path(single()?),
        "cycle" => FamilySpec::Cycle(single()?),
        "clique" => FamilySpec::Clique(single()?),
        "hypercube" => FamilySpec::Hypercube(single()?),
        "kpart" => FamilySpec::Multipartite(nums),
        "theta" => FamilySpec::Theta(nums),
        "gpt" => FamilySpec::Gpt(GptParams::from_slice(&nums).map_err(|e| bad(e.to_string()))?),
        _ => return Err(bad(format!("unknown family `{name}`"))),
    })
}

/// Path on `n` vertices `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Family("path needs at least 1 vertex".into()));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect())
}

/// Cycle `0-1-...-(n-1)-0`; edge `i` is `(i, i+1)` and the last edge is `(n-1, 0)`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Family(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

pub fn clique(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Family("clique needs at least 1 vertex".into()));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect())
}

/// Part `i` occupies consecutive ids; edges in lexicographic order of `(x, y)`, `x < y`.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::Family("kpart needs at least 2 parts".into()));
    }
    if parts.contains(&0) {
        return Err(Error::Family("kpart part sizes must be positive".into()));
    }
    let mut part_of = Vec::new();
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| part_of[x] != part_of[y])
        .collect();
    Graph::new(n, edges)
}

/// Roots are 0 and 1; interiors follow path by path, each walked from root 0.
pub fn theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return Err(Error::Family("theta needs at least one path".into()));
    }
    if lengths.contains(&0) {
        return Err(Error::Family("theta path lengths must be positive".into()));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::Family("theta has at most one path of length 1".into()));
    }
    let mut n = 2;
    let mut edges = Vec::new();
    for &l in lengths {
        let mut prev = 0;
        for _ in 1..l {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    Graph::new(n, edges)
}

/// `Q_n`, built as `Q_(n-1) □ P_2`.
pub fn hypercube(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Family("hypercube dimension must be positive".into()));
    }
    let k2 = path(2)?;
    let mut g = k2.clone();
    for _ in 1..n {
        g = g.cartesian_product(&k2);
    }
    Ok(g)
}
