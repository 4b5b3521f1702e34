//! Direct constructions of proper weightings. Every constructor checks its own output and
//! reports an improper result as [`Error::ConstructionFailed`](crate::Error::ConstructionFailed).

mod bipartite_k2;
mod cycle_blocks;
mod dominant;
mod msp_pattern;
mod multipartite;
mod product;

pub use bipartite_k2::{bipartite_product_k2, degree_component_partition, degree_components, DegreeComponentPartition};
pub use cycle_blocks::{compose_block_weightings, cycle_block_weighting};
pub use dominant::{dominant_vertex_weighting, dominant_vertices};
pub use msp_pattern::{msp_pattern_weighting, msp_pattern_weighting_traced, MspVariant, RepairTrace};
pub use multipartite::multipartite_weighting;
pub use product::product_weighting;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weighting::{is_proper, EdgeWeighting};

fn certify(g: &Graph, w: EdgeWeighting, what: &str) -> Result<EdgeWeighting> {
    let p = is_proper(g, &w)?;
    if p.proper {
        Ok(w)
    } else {
        Err(Error::ConstructionFailed(format!(
            "{what} produced an improper weighting; conflicting edges {:?}",
            p.conflicts
        )))
    }
}
