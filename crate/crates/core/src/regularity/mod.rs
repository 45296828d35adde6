//! Regularity by its homological definition: the largest `j` such that some
//! induced subgraph `G[S]` has `β̃_{j-1}(I(G[S])) ≠ 0`. The empty set always
//! contributes `j = 0`.

mod cache;

pub use cache::{cached_regularity, Cache, CacheEntry, CACHE_ENV};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::homology::{betti_of_masks, compact, fold_reduce_masks, Field, DEFAULT_FACE_CAP};
use crate::invariants::{
    alpha_within, bits, chromatic_number, cochordal_cover_number, decycling_number, full_mask, gallai_graph, im_masks,
    is_chordal, is_chordal_masks, is_induced_cycle_free, DEFAULT_COCHORD_CAP,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Every vertex subset; the reference definition.
    Exhaustive,
    /// Branch and bound on a pivot vertex, finishing with a targeted subset
    /// search when the bounds differ by one.
    Pruned,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegStrategy {
    pub mode: Strategy,
    pub field: Field,
    /// Largest vertex count searched subset by subset.
    pub exhaustive_cap: usize,
    pub face_cap: usize,
}

impl RegStrategy {
    pub fn exhaustive() -> Self {
        Self {
            mode: Strategy::Exhaustive,
            field: Field::GF2,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            face_cap: DEFAULT_FACE_CAP,
        }
    }

    pub fn pruned() -> Self {
        Self {
            mode: Strategy::Pruned,
            ..Self::exhaustive()
        }
    }

    pub fn with_field(self, field: Field) -> Self {
        Self { field, ..self }
    }

    pub fn with_cap(self, exhaustive_cap: usize) -> Self {
        Self { exhaustive_cap, ..self }
    }
}

impl Default for RegStrategy {
    fn default() -> Self {
        Self::exhaustive()
    }
}

/// A subset `S` with `β̃_{j-1}(I(G[S])) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub subset: VertexSet,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegResult {
    pub value: usize,
    /// Present for exhaustive runs: the first subset, by size and then by
    /// mask value, attaining the maximum.
    pub witness: Option<Witness>,
    pub field: Field,
}

pub fn regularity(g: &Graph, strategy: RegStrategy) -> Result<RegResult> {
    let adj = g.masks()?;
    match strategy.mode {
        Strategy::Exhaustive => exhaustive(&adj, strategy),
        Strategy::Pruned => {
            let mut search = Pruned {
                adj: &adj,
                strategy,
                memo: HashMap::new(),
            };
            let value = search.reg(full_mask(adj.len()))?;
            Ok(RegResult {
                value,
                witness: None,
                field: strategy.field,
            })
        }
    }
}

fn limit(adj: &[u64], alive: u64, cap: usize) -> Error {
    let sub = Graph::from_masks(&compact(adj, alive)).expect("valid masks");
    Error::ResourceLimit(format!(
        "subset search on {} vertices exceeds the cap of {cap} (subproblem {})",
        alive.count_ones(),
        sub.to_graph6()
    ))
}

/// Largest `d + 1` with `β̃_d(I(G[S])) ≠ 0`, or `None` when `G[S]` has an
/// isolated vertex or its complex is acyclic.
fn subset_degree(adj: &[u64], subset: u64, strategy: RegStrategy) -> Result<Option<usize>> {
    if bits(subset).any(|v| adj[v] & subset == 0) {
        return Ok(None);
    }
    let folded = fold_reduce_masks(&compact(adj, subset));
    let betti = betti_of_masks(&folded, strategy.field, strategy.face_cap)?;
    Ok(betti.top_dimension().map(|d| (d + 1) as usize))
}

fn exhaustive(adj: &[u64], strategy: RegStrategy) -> Result<RegResult> {
    let n = adj.len();
    if n > strategy.exhaustive_cap {
        return Err(limit(adj, full_mask(n), strategy.exhaustive_cap));
    }
    let mut order: Vec<u64> = (0..=full_mask(n)).collect();
    order.sort_by_key(|&s| (s.count_ones(), s));
    let best = AtomicUsize::new(0);
    let found: Vec<Option<(usize, usize)>> = order
        .par_iter()
        .enumerate()
        .map(|(pos, &s)| -> Result<Option<(usize, usize)>> {
            if s == 0 {
                return Ok(Some((0, pos)));
            }
            // β̃_{j-1} ≠ 0 needs a face of size j, so α(G[S]) bounds j
            if alpha_within(adj, s) < best.load(Ordering::Relaxed) {
                return Ok(None);
            }
            let j = subset_degree(adj, s, strategy)?;
            if let Some(j) = j {
                best.fetch_max(j, Ordering::Relaxed);
            }
            Ok(j.map(|j| (j, pos)))
        })
        .collect::<Result<_>>()?;
    let (value, pos) = found
        .into_iter()
        .flatten()
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .expect("the empty set always contributes");
    Ok(RegResult {
        value,
        witness: Some(Witness {
            subset: VertexSet::from_mask(order[pos]),
            j: value,
        }),
        field: strategy.field,
    })
}

struct Pruned<'a> {
    adj: &'a [u64],
    strategy: RegStrategy,
    memo: HashMap<u64, usize>,
}

impl Pruned<'_> {
    fn reg(&mut self, mut alive: u64) -> Result<usize> {
        let adj = self.adj;
        // isolated vertices are cone points of every complex containing them
        alive &= !bits(alive).filter(|&v| adj[v] & alive == 0).fold(0, |a, v| a | 1 << v);
        if alive == 0 {
            return Ok(0);
        }
        if let Some(&known) = self.memo.get(&alive) {
            return Ok(known);
        }
        let parts = components(adj, alive);
        let value = if parts.len() > 1 {
            let mut sum = 0;
            for part in parts {
                sum += self.reg(part)?;
            }
            sum
        } else {
            self.connected(alive)?
        };
        self.memo.insert(alive, value);
        Ok(value)
    }

    fn connected(&mut self, alive: u64) -> Result<usize> {
        let adj = self.adj;
        let sub = compact(adj, alive);
        let im = im_masks(&sub);
        if is_chordal_masks(adj, alive) {
            return Ok(im);
        }
        let pivot = bits(alive)
            .max_by_key(|&v| ((adj[v] & alive).count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty");
        let without = self.reg(alive & !(1 << pivot))?;
        let link = self.reg(alive & !adj[pivot] & !(1 << pivot))?;
        let upper = without.max(link + 1);
        let lower = im.max(without).max(link);
        if lower >= upper {
            return Ok(upper);
        }
        // Here upper = link + 1 = lower + 1, and any subset attaining it
        // must contain the pivot.
        debug_assert_eq!(upper, lower + 1);
        if alive.count_ones() as usize > self.strategy.exhaustive_cap {
            return Err(limit(adj, alive, self.strategy.exhaustive_cap));
        }
        let others: Vec<usize> = bits(alive & !(1 << pivot)).collect();
        let strategy = self.strategy;
        let hit = (0u64..1 << others.len())
            .into_par_iter()
            .map(|k| {
                let s = bits(k).fold(1u64 << pivot, |acc, i| acc | 1 << others[i]);
                if alpha_within(adj, s) < upper {
                    return Ok(false);
                }
                if bits(s).any(|v| adj[v] & s == 0) {
                    return Ok(false);
                }
                let folded = fold_reduce_masks(&compact(adj, s));
                let betti = betti_of_masks(&folded, strategy.field, strategy.face_cap)?;
                Ok(betti.get(upper as isize - 1) != 0)
            })
            .find_any(|r: &Result<bool>| !matches!(r, Ok(false)));
        match hit {
            None => Ok(lower),
            Some(Ok(_)) => Ok(upper),
            Some(Err(e)) => Err(e),
        }
    }
}

fn components(adj: &[u64], alive: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut unseen = alive;
    while unseen != 0 {
        let mut comp = 0u64;
        let mut frontier = unseen & unseen.wrapping_neg();
        while frontier != 0 {
            comp |= frontier;
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            frontier = next & alive & !comp;
        }
        unseen &= !comp;
        out.push(comp);
    }
    out
}

/// Bounds on `reg(G)` from its invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegBounds {
    pub lower: usize,
    pub upper: usize,
}

/// `im(G) = ω(G*)` below; above, the least of `im(G) + ∇(G)`, the cochordal
/// cover number when within its cap, `χ(G*)` for `(C_3, C_5)`-free graphs,
/// and `im(G)` itself for chordal graphs.
pub fn regularity_bounds(g: &Graph) -> Result<RegBounds> {
    let im = im_masks(&g.masks()?);
    if g.is_edgeless() {
        return Ok(RegBounds { lower: 0, upper: 0 });
    }
    let mut upper = im + decycling_number(g)?.0;
    if is_chordal(g) {
        upper = upper.min(im);
    }
    if g.n() <= DEFAULT_COCHORD_CAP {
        upper = upper.min(cochordal_cover_number(g)?);
    }
    if is_induced_cycle_free(g, &[3, 5]) {
        match chromatic_number(&gallai_graph(g)?.star) {
            Ok(chi) => upper = upper.min(chi),
            Err(Error::ResourceLimit(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(RegBounds { lower: im, upper })
}

#[cfg(test)]
mod tests;
