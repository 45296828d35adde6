use super::{bits, full_mask};
use crate::error::Result;
use crate::graph::{Edge, Graph};
use std::collections::HashMap;

/// The largest number of edges that induce a matching.
pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    Ok(im_masks(&g.masks()?))
}

/// A maximum induced matching, edges in increasing order.
pub fn maximum_induced_matching(g: &Graph) -> Result<Vec<Edge>> {
    let adj = g.masks()?;
    let mut search = Search {
        adj: &adj,
        memo: HashMap::new(),
    };
    let mut alive = full_mask(adj.len());
    let mut out = Vec::new();
    // walk the memoized optimum back down
    while let Some(u) = branch_vertex(&adj, alive) {
        let target = search.best(alive);
        let without = search.best(alive & !(1 << u));
        if without == target {
            alive &= !(1 << u);
            continue;
        }
        for v in bits(adj[u] & alive) {
            let rest = alive & !(adj[u] | adj[v] | 1 << u | 1 << v);
            if 1 + search.best(rest) == target {
                out.push(Edge::new(u, v)?);
                alive = rest;
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

pub(crate) fn im_masks(adj: &[u64]) -> usize {
    let mut search = Search {
        adj,
        memo: HashMap::new(),
    };
    search.best(full_mask(adj.len()))
}

struct Search<'a> {
    adj: &'a [u64],
    memo: HashMap<u64, usize>,
}

/// A vertex of minimum positive degree in `G[alive]`, or `None` if edgeless.
fn branch_vertex(adj: &[u64], alive: u64) -> Option<usize> {
    bits(alive)
        .filter(|&v| adj[v] & alive != 0)
        .min_by_key(|&v| (adj[v] & alive).count_ones())
}

impl Search<'_> {
    // Either `u` is left unmatched, or it is matched to one of its neighbors
    // and the closed neighborhood of that edge leaves the graph.
    fn best(&mut self, alive: u64) -> usize {
        let Some(u) = branch_vertex(self.adj, alive) else {
            return 0;
        };
        if let Some(&v) = self.memo.get(&alive) {
            return v;
        }
        let adj = self.adj;
        let mut best = self.best(alive & !(1 << u));
        for v in bits(adj[u] & alive) {
            let rest = alive & !(adj[u] | adj[v] | 1 << u | 1 << v);
            let nonisolated = bits(rest).filter(|&w| adj[w] & rest != 0).count();
            if nonisolated / 2 < best {
                continue;
            }
            best = best.max(1 + self.best(rest));
        }
        self.memo.insert(alive, best);
        best
    }
}
