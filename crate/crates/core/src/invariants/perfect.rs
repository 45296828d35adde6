use super::{cliques::max_clique_masks, coloring::optimal_coloring_masks, full_mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::compact;

pub const DEFAULT_PERFECT_CAP: usize = 12;

/// `χ(G[A]) = ω(G[A])` for every vertex subset `A`, checked directly.
pub fn is_perfect(g: &Graph) -> Result<bool> {
    is_perfect_capped(g, DEFAULT_PERFECT_CAP)
}

pub fn is_perfect_capped(g: &Graph, cap: usize) -> Result<bool> {
    if g.n() > cap {
        return Err(Error::ResourceLimit(format!(
            "perfection check on {} vertices exceeds the cap of {cap}",
            g.n()
        )));
    }
    let adj = g.masks()?;
    for subset in 1..=full_mask(adj.len()) {
        let sub = compact(&adj, subset);
        let omega = max_clique_masks(&sub).count_ones() as usize;
        let chi = optimal_coloring_masks(&sub, u64::MAX)?
            .into_iter()
            .max()
            .map_or(0, |c| c + 1);
        if chi != omega {
            return Ok(false);
        }
    }
    Ok(true)
}
