//! Graph sources: an edge-list file or an inline family spec.

use std::path::Path;

use vcew_core::families::FamilySpec;
use vcew_core::io::parse_edge_list;
use vcew_core::{Error, Graph, Result};

#[derive(Debug, Clone)]
pub enum Source {
    Spec(FamilySpec),
    File(Graph),
}

impl Source {
    pub fn graph(&self) -> Result<Graph> {
        match self {
            Source::Spec(s) => s.make(),
            Source::File(g) => Ok(g.clone()),
        }
    }

    pub fn spec(&self) -> Option<&FamilySpec> {
        match self {
            Source::Spec(s) => Some(s),
            Source::File(..) => None,
        }
    }
}

/// An existing file wins over a spec of the same spelling.
pub fn load(arg: &str) -> Result<Source> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg)
            .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {arg}: {e}") })?;
        return Ok(Source::File(parse_edge_list(&text)?));
    }
    match arg.parse::<FamilySpec>() {
        Ok(spec) => Ok(Source::Spec(spec)),
        Err(Error::Parse { msg, .. }) if !arg.contains(':') && !arg.contains('(') => {
            Err(Error::Parse { line: 0, msg: format!("`{arg}` is neither a readable file nor a family spec ({msg})") })
        }
        Err(e) => Err(e),
    }
}
