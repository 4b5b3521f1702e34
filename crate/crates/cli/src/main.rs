//! `vcew`: weighting numbers, constructions and verification campaigns from the command line.
//!
//! Exit codes: 0 ok, 2 parse error, 3 no weighting within the cap, 4 precondition violated,
//! 5 verification failures, 1 anything else.

mod report;
mod source;
mod verify;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vcew_core::blocks::blocks_and_cut_vertices;
use vcew_core::constructors::{
    bipartite_product_k2, cycle_block_weighting, dominant_vertex_weighting, dominant_vertices, msp_pattern_weighting,
    multipartite_weighting, product_weighting, MspVariant,
};
use vcew_core::families::{path, FamilySpec};
use vcew_core::io::write_weighting;
use vcew_core::msp::maximal_simple_paths;
use vcew_core::oracle::{find_weighting_with, mu_exact_with, SearchConstraints, SearchOptions, DEFAULT_K_MAX};
use vcew_core::{is_proper, EdgeWeighting, Error, Graph};

#[derive(Parser)]
#[command(name = "vcew", version, about = "Vertex-coloring edge-weightings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact weighting number and its canonical witness.
    Mu {
        /// Edge-list file or family spec such as `theta:1,5,5`.
        graph: String,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: u32,
        /// Search past the edge-count guard.
        #[arg(long)]
        force: bool,
    },
    /// Build a weighting with one of the constructions.
    Weight {
        graph: String,
        #[arg(long, value_enum)]
        method: Method,
        /// Number of weights for `--method oracle` (default: the smallest that works).
        #[arg(long)]
        k: Option<u32>,
        /// Dominant vertex for `--method dominant` (default: the smallest one).
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// Run a verification campaign and print a report.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Print the maximal simple paths or the blocks of a graph.
    Decompose {
        graph: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    Product,
    Bipk2,
    MspA,
    MspB,
    CycleBlocks,
    Multipartite,
    Dominant,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Msp,
    Blocks,
}

/// Error with the exit code it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Family(_) => 2,
            Error::NotFoundWithinCap { .. } => 3,
            Error::Precondition(_)
            | Error::SearchTooLarge { .. }
            | Error::TooSmall(_)
            | Error::Disconnected
            | Error::ImproperInput(_)
            | Error::ConstructionFailed(_) => 4,
            _ => 1,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("VCEW_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<(String, u8), Failure> {
    match cmd {
        Command::Mu { graph, kmax, force } => cmd_mu(&graph, kmax, force).map(|s| (s, 0)),
        Command::Weight { graph, method, k, vertex, force } => {
            cmd_weight(&graph, method, k, vertex, force).map(|s| (s, 0))
        }
        Command::Verify { theorem, max_edges, max_vertices, seed, samples } => {
            let params = verify::Params { max_edges, max_vertices, seed, samples };
            let report = verify::run(&theorem, &params)?;
            let code = if report.failures.is_empty() { 0 } else { 5 };
            Ok((report.render(), code))
        }
        Command::Decompose { graph, kind } => cmd_decompose(&graph, kind).map(|s| (s, 0)),
    }
}

fn cmd_mu(arg: &str, kmax: u32, force: bool) -> Result<String, Failure> {
    let g = source::load(arg)?.graph()?;
    match mu_exact_with(&g, kmax, SearchOptions { force }) {
        Ok(r) => Ok(format!("mu={}\n{}", r.mu, write_weighting(&g, &r.witness))),
        Err(Error::NotFoundWithinCap { k_max }) if k_max >= DEFAULT_K_MAX => Err(fail(
            3,
            format!("POTENTIAL COUNTEREXAMPLE: no proper weighting with k <= {k_max} exists for {arg}; the known bound is 5"),
        )),
        Err(Error::NotFoundWithinCap { k_max }) => {
            Err(fail(3, format!("no proper weighting with k <= {k_max}; raise --kmax")))
        }
        Err(e) => Err(e.into()),
    }
}

fn certified(host: &Graph, w: EdgeWeighting) -> Result<String, Failure> {
    let p = is_proper(host, &w)?;
    if !p.proper {
        return Err(fail(1, format!("internal error: constructed weighting has {} conflicts", p.conflicts.len())));
    }
    Ok(write_weighting(host, &w))
}

fn cmd_weight(arg: &str, method: Method, k: Option<u32>, vertex: Option<usize>, force: bool) -> Result<String, Failure> {
    let src = source::load(arg)?;
    let g = src.graph()?;
    let opts = SearchOptions { force };
    match method {
        Method::Oracle => match k {
            Some(k) => match find_weighting_with(&g, k, &SearchConstraints::none(), opts)? {
                Some(w) => certified(&g, w),
                None => Err(fail(3, format!("no proper {k}-weighting of {arg}"))),
            },
            None => certified(&g, mu_exact_with(&g, DEFAULT_K_MAX, opts)?.witness),
        },
        Method::Product => {
            let Some(FamilySpec::Product(a, b)) = src.spec() else {
                return Err(fail(4, "--method product needs a `product(spec,spec)` graph"));
            };
            let (ga, gb) = (a.make()?, b.make()?);
            let wa = mu_exact_with(&ga, DEFAULT_K_MAX, opts)?.witness;
            let wb = mu_exact_with(&gb, DEFAULT_K_MAX, opts)?.witness;
            certified(&g, product_weighting(&ga, &wa, &gb, &wb)?)
        }
        Method::Bipk2 => {
            let w = bipartite_product_k2(&g)?;
            certified(&g.cartesian_product(&path(2)?), w)
        }
        Method::MspA => certified(&g, msp_pattern_weighting(&g, MspVariant::A)?),
        Method::MspB => certified(&g, msp_pattern_weighting(&g, MspVariant::B)?),
        Method::CycleBlocks => certified(&g, cycle_block_weighting(&g)?),
        Method::Multipartite => {
            let parts = match src.spec() {
                Some(FamilySpec::Multipartite(p)) if p.iter().all(|&x| x == p[0]) => p.clone(),
                _ => return Err(fail(4, "--method multipartite needs `kpart:n,n,...` with equal part sizes")),
            };
            let (host, w) = multipartite_weighting(parts.len(), parts[0])?;
            certified(&host, w)
        }
        Method::Dominant => {
            let v = match vertex {
                Some(v) => v,
                None => *dominant_vertices(&g)
                    .first()
                    .ok_or_else(|| fail(4, "precondition violated: no dominant vertex"))?,
            };
            certified(&g, dominant_vertex_weighting(&g, v)?)
        }
    }
}

fn cmd_decompose(arg: &str, kind: Kind) -> Result<String, Failure> {
    let g = source::load(arg)?.graph()?;
    let mut out = String::new();
    let join = |xs: &[usize], sep: &str| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
    match kind {
        Kind::Msp => {
            let d = maximal_simple_paths(&g)?;
            let closed = d.paths.iter().filter(|p| p.closed).count();
            let _ = writeln!(out, "paths={} closed={closed}", d.paths.len());
            for (i, p) in d.paths.iter().enumerate() {
                let tag = if p.closed { " closed" } else { "" };
                let _ = writeln!(out, "path {i}: length {}{tag} vertices {}", p.len(), join(&p.vertices, "-"));
            }
        }
        Kind::Blocks => {
            let d = blocks_and_cut_vertices(&g)?;
            let _ = writeln!(out, "blocks={} cut_vertices={}", d.blocks.len(), d.cut_vertices.len());
            for b in 0..d.blocks.len() {
                let tag = if d.block_is_cycle(&g, b) { " cycle" } else { "" };
                let _ = writeln!(
                    out,
                    "block {b}:{tag} vertices {} edges {}",
                    join(&d.block_vertices(&g, b), ","),
                    join(&d.blocks[b], ",")
                );
            }
            let _ = writeln!(out, "cut vertices: {}", join(&d.cut_vertices, " "));
        }
    }
    Ok(out)
}
