use super::{bits, full_mask};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// `∇(G)`: the size of a smallest vertex set whose removal leaves a forest,
/// with one such set.
pub fn decycling_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let adj = g.masks()?;
    let all = full_mask(adj.len());
    for k in 0..=adj.len() {
        if let Some(set) = hit_cycles(&adj, all, k) {
            return Ok((k, VertexSet::from_mask(set)));
        }
    }
    unreachable!("removing every vertex leaves a forest")
}

/// Every decycling set of minimum size, in increasing mask order.
pub fn minimum_decycling_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let adj = g.masks()?;
    let (k, _) = decycling_number(g)?;
    let n = adj.len();
    let all = full_mask(n);
    let mut out = Vec::new();
    let mut subset = if k == 0 { 0 } else { (1u64 << k) - 1 };
    loop {
        if is_forest_masks(&adj, all & !subset) {
            out.push(VertexSet::from_mask(subset));
        }
        if k == 0 || subset == 0 {
            break;
        }
        // next subset of the same size (Gosper)
        let c = subset & subset.wrapping_neg();
        let r = subset + c;
        if r == 0 || r > all {
            break;
        }
        subset = (((r ^ subset) >> 2) / c) | r;
        if subset > all {
            break;
        }
    }
    Ok(out)
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

pub(crate) fn is_forest_masks(adj: &[u64], alive: u64) -> bool {
    let edges: u32 = bits(alive).map(|v| (adj[v] & alive).count_ones()).sum::<u32>() / 2;
    let mut components = 0;
    let mut unseen = alive;
    while unseen != 0 {
        components += 1;
        let mut frontier = unseen & unseen.wrapping_neg();
        while frontier != 0 {
            unseen &= !frontier;
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & unseen;
        }
    }
    edges + components == alive.count_ones()
}

/// A set of at most `k` vertices meeting every cycle of `G[alive]`.
fn hit_cycles(adj: &[u64], mut alive: u64, k: usize) -> Option<u64> {
    // vertices of degree at most one lie on no cycle
    loop {
        let low = bits(alive)
            .filter(|&v| (adj[v] & alive).count_ones() <= 1)
            .fold(0, |acc, v| acc | 1 << v);
        if low == 0 {
            break;
        }
        alive &= !low;
    }
    if alive == 0 {
        return Some(0);
    }
    if k == 0 {
        return None;
    }
    for v in shortest_cycle(adj, alive) {
        if let Some(rest) = hit_cycles(adj, alive & !(1 << v), k - 1) {
            return Some(rest | 1 << v);
        }
    }
    None
}

/// Vertices of a shortest cycle in `G[alive]`, which must contain a cycle.
fn shortest_cycle(adj: &[u64], alive: u64) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for root in bits(alive) {
        let mut parent = [usize::MAX; 64];
        let mut depth = [usize::MAX; 64];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in bits(adj[v] & alive) {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    let len = depth[u] + depth[v] + 1;
                    if best.as_ref().is_none_or(|b| len < b.len()) {
                        let walk = |mut x: usize| {
                            let mut path = vec![x];
                            while x != root {
                                x = parent[x];
                                path.push(x);
                            }
                            path
                        };
                        let mut cycle = walk(u);
                        let mut other = walk(v);
                        other.pop();
                        other.reverse();
                        cycle.extend(other);
                        cycle.dedup();
                        if cycle.len() == len {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
    }
    best.expect("graph has a cycle")
}
