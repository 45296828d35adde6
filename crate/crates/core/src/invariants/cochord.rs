//! Cochordal cover number.
//!
//! An edge set `F ⊆ E(G)` spans a cochordal subgraph exactly when the
//! complement of `(V, F)` is chordal, i.e. when `K_n - F` is a chordal
//! supergraph of the complement `Ḡ`. The maximal such `F` are therefore the
//! complements (within `E(G)`) of the fill sets of minimal triangulations of
//! `Ḡ`. Every minimal triangulation is produced by some elimination ordering,
//! so the candidates are enumerated through the elimination game and the
//! cover is an exact set cover over them.

use super::{bits, complement_masks, full_mask};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use std::collections::HashSet;

pub const DEFAULT_COCHORD_CAP: usize = 10;

/// `cochord(G)`; zero for an edgeless graph.
pub fn cochordal_cover_number(g: &Graph) -> Result<usize> {
    Ok(cochordal_cover_capped(g, DEFAULT_COCHORD_CAP)?.len())
}

pub fn cochordal_cover_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    Ok(cochordal_cover_capped(g, cap)?.len())
}

/// A minimum family of cochordal edge sets covering `E(G)`.
pub fn cochordal_cover(g: &Graph) -> Result<Vec<Vec<Edge>>> {
    cochordal_cover_capped(g, DEFAULT_COCHORD_CAP)
}

pub fn cochordal_cover_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<Edge>>> {
    if g.n() > cap {
        return Err(Error::ResourceLimit(format!(
            "cochordal cover on {} vertices exceeds the cap of {cap}",
            g.n()
        )));
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Ok(Vec::new());
    }
    let candidates = maximal_cochordal_sets(g)?;
    let all = full_mask(edges.len());
    let mut chosen = Vec::new();
    for k in 1..=edges.len() {
        if cover(&candidates, all, k, &mut chosen) {
            break;
        }
    }
    Ok(chosen
        .iter()
        .map(|&set| bits(set).map(|i| edges[i]).collect())
        .collect())
}

/// Inclusion-maximal cochordal edge sets, as masks over `g.edges()`.
pub fn maximal_cochordal_sets(g: &Graph) -> Result<Vec<u64>> {
    let edges = g.edges();
    if edges.len() > 64 {
        return Err(Error::ResourceLimit(format!("{} edges exceeds 64", edges.len())));
    }
    let n = g.n();
    let mut edge_index = vec![[usize::MAX; 64]; n];
    for (i, e) in edges.iter().enumerate() {
        edge_index[e.u][e.v] = i;
        edge_index[e.v][e.u] = i;
    }
    let mut game = EliminationGame {
        edge_index: &edge_index,
        seen: HashSet::new(),
        fills: Vec::new(),
    };
    let comp = complement_masks(&g.masks()?);
    game.run(comp, full_mask(n), 0);

    let mut fills = game.fills;
    fills.sort_by_key(|f| f.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for f in fills {
        if !minimal.iter().any(|&m| m & !f == 0) {
            minimal.push(f);
        }
    }
    let all = full_mask(edges.len());
    let mut sets: Vec<u64> = minimal.into_iter().map(|f| all & !f).collect();
    sets.sort_unstable();
    Ok(sets)
}

struct EliminationGame<'a> {
    edge_index: &'a [[usize; 64]],
    seen: HashSet<(u64, u64)>,
    fills: Vec<u64>,
}

impl EliminationGame<'_> {
    fn run(&mut self, adj: Vec<u64>, remaining: u64, fill: u64) {
        if remaining == 0 {
            self.fills.push(fill);
            return;
        }
        // a fill that already contains a complete fill cannot become minimal
        if self.fills.iter().any(|&f| f & !fill == 0) {
            return;
        }
        if !self.seen.insert((remaining, fill)) {
            return;
        }
        // simplicial vertices carry no fill in any minimal triangulation
        if let Some(v) = bits(remaining).find(|&v| self.missing(&adj, v, remaining) == 0) {
            let mut next = adj;
            for u in bits(next[v] & remaining) {
                next[u] &= !(1 << v);
            }
            self.run(next, remaining & !(1 << v), fill);
            return;
        }
        for v in bits(remaining) {
            let nbrs = adj[v] & remaining;
            let mut next = adj.clone();
            let mut added = 0u64;
            for a in bits(nbrs) {
                let missing = nbrs & !next[a] & !(1 << a);
                for b in bits(missing) {
                    if a < b {
                        added |= 1 << self.edge_index[a][b];
                    }
                }
                next[a] |= nbrs & !(1 << a);
                next[a] &= !(1 << v);
            }
            self.run(next, remaining & !(1 << v), fill | added);
        }
    }

    /// Number of non-adjacent pairs in the neighborhood of `v`.
    fn missing(&self, adj: &[u64], v: usize, remaining: u64) -> u32 {
        let nbrs = adj[v] & remaining;
        bits(nbrs).map(|a| (nbrs & !adj[a] & !(1 << a)).count_ones()).sum()
    }
}

fn cover(candidates: &[u64], uncovered: u64, k: usize, chosen: &mut Vec<u64>) -> bool {
    if uncovered == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let e = uncovered.trailing_zeros();
    for &c in candidates.iter().filter(|&&c| c >> e & 1 == 1) {
        chosen.push(c);
        if cover(candidates, uncovered & !c, k - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
