//! Shedding vertices and vertex decomposability.

use super::{bits, full_mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::compact;
use std::collections::HashMap;

pub const DEFAULT_VD_CAP: usize = 18;

/// Every independent set `S` of `G - N[x]` extends to an independent set by
/// some neighbor of `x`. All independent sets are enumerated, not only the
/// maximal ones.
pub fn is_shedding_vertex(g: &Graph, x: usize) -> Result<bool> {
    g.check_vertex(x)?;
    let adj = g.masks()?;
    Ok(shedding_masks(&adj, full_mask(adj.len()), x))
}

fn shedding_masks(adj: &[u64], alive: u64, x: usize) -> bool {
    let nbrs = adj[x] & alive;
    let rest = alive & !nbrs & !(1 << x);
    // a set S fails when every neighbor of x has a neighbor in S
    fn fails(adj: &[u64], nbrs: u64, chosen: u64, candidates: u64) -> bool {
        let blocked = bits(chosen).fold(0, |acc, s| acc | adj[s]);
        if nbrs & !blocked == 0 {
            return true;
        }
        let mut cand = candidates;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            if fails(adj, nbrs, chosen | 1 << v, cand & !adj[v]) {
                return true;
            }
        }
        false
    }
    !fails(adj, nbrs, 0, rest)
}

pub fn is_vertex_decomposable(g: &Graph) -> Result<bool> {
    is_vertex_decomposable_capped(g, DEFAULT_VD_CAP)
}

pub fn is_vertex_decomposable_capped(g: &Graph, cap: usize) -> Result<bool> {
    if g.n() > cap {
        return Err(Error::ResourceLimit(format!(
            "vertex decomposability on {} vertices exceeds the cap of {cap}",
            g.n()
        )));
    }
    let mut memo = HashMap::new();
    Ok(decomposable(g.masks()?, &mut memo))
}

// memo keyed by the labeled graph6 string of each subproblem
fn decomposable(adj: Vec<u64>, memo: &mut HashMap<String, bool>) -> bool {
    if adj.iter().all(|&m| m == 0) {
        return true;
    }
    let key = Graph::from_masks(&adj).expect("valid masks").to_graph6();
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let all = full_mask(adj.len());
    let result = (0..adj.len()).any(|x| {
        shedding_masks(&adj, all, x)
            && decomposable(compact(&adj, all & !(1 << x)), memo)
            && decomposable(compact(&adj, all & !(adj[x] | 1 << x)), memo)
    });
    memo.insert(key, result);
    result
}
