use super::{bits, cliques::max_clique_masks};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Search-node budget for exact coloring.
pub const DEFAULT_COLORING_BUDGET: u64 = 200_000_000;

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_budgeted(g, DEFAULT_COLORING_BUDGET)
}

pub fn chromatic_number_budgeted(g: &Graph, budget: u64) -> Result<usize> {
    Ok(optimal_coloring_masks(&g.masks()?, budget)?
        .iter()
        .copied()
        .max()
        .map_or(0, |c| c + 1))
}

/// An optimal proper coloring, colors `0..χ`.
pub fn optimal_coloring(g: &Graph) -> Result<Vec<usize>> {
    optimal_coloring_masks(&g.masks()?, DEFAULT_COLORING_BUDGET)
}

/// Exact coloring: iterative deepening from the clique bound, each round a
/// DSATUR backtracking search.
pub(crate) fn optimal_coloring_masks(adj: &[u64], budget: u64) -> Result<Vec<usize>> {
    let n = adj.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lower = max_clique_masks(adj).count_ones() as usize;
    let mut search = Dsatur {
        adj,
        colors: vec![usize::MAX; n],
        nodes: 0,
        budget,
    };
    let greedy = search.greedy();
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    for k in lower..upper {
        search.colors.iter_mut().for_each(|c| *c = usize::MAX);
        if search.extend(k, 0, 0)? {
            return Ok(search.colors);
        }
    }
    Ok(greedy)
}

struct Dsatur<'a> {
    adj: &'a [u64],
    colors: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> u64 {
        bits(self.adj[v])
            .filter(|&u| self.colors[u] != usize::MAX)
            .fold(0, |acc, u| acc | 1 << self.colors[u])
    }

    fn pick(&self) -> Option<(usize, u64)> {
        let mut best: Option<(usize, u32, u32, u64)> = None;
        for v in 0..self.adj.len() {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let sat = self.saturation(v);
            let uncolored_deg = bits(self.adj[v]).filter(|&u| self.colors[u] == usize::MAX).count() as u32;
            let key = (sat.count_ones(), uncolored_deg);
            if best.is_none_or(|(_, s, d, _)| key > (s, d)) {
                best = Some((v, key.0, key.1, sat));
            }
        }
        best.map(|(v, _, _, sat)| (v, sat))
    }

    fn greedy(&mut self) -> Vec<usize> {
        while let Some((v, sat)) = self.pick() {
            self.colors[v] = (!sat).trailing_zeros() as usize;
        }
        std::mem::replace(&mut self.colors, vec![usize::MAX; self.adj.len()])
    }

    fn extend(&mut self, k: usize, colored: usize, used: usize) -> Result<bool> {
        if colored == self.adj.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit(format!(
                "coloring search exceeded {} nodes",
                self.budget
            )));
        }
        let (v, sat) = self.pick().expect("uncolored vertex remains");
        // a fresh color is only tried once, as color `used`
        for c in 0..(used + 1).min(k) {
            if sat >> c & 1 == 1 {
                continue;
            }
            self.colors[v] = c;
            if self.extend(k, colored + 1, used.max(c + 1))? {
                return Ok(true);
            }
        }
        self.colors[v] = usize::MAX;
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedFamily};
    use crate::invariants::gallai_graph;

    fn chi(g: &Graph) -> usize {
        chromatic_number(g).unwrap()
    }

    /// Smallest k admitting a proper coloring, by trying all k^n assignments.
    fn chi_oracle(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut assign = vec![0usize; n];
            loop {
                if g.edges().iter().all(|e| assign[e.u] != assign[e.v]) {
                    return k;
                }
                let mut i = 0;
                while i < n && assign[i] == k - 1 {
                    assign[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
                assign[i] += 1;
            }
        }
        n
    }

    #[test]
    fn named_values() {
        assert_eq!(chi(&build_named(NamedFamily::Cycle(5)).unwrap()), 3);
        assert_eq!(chi(&build_named(NamedFamily::Cycle(6)).unwrap()), 2);
        for n in 1..7 {
            assert_eq!(chi(&build_named(NamedFamily::Complete(n)).unwrap()), n);
        }
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
    }

    #[test]
    fn gallai_of_c8() {
        let star = gallai_graph(&build_named(NamedFamily::Cycle(8)).unwrap()).unwrap();
        assert_eq!(star.star.n(), 8);
        assert_eq!(chi(&star.star), chi_oracle(&star.star));
        assert_eq!(chi(&star.star), 3);
    }

    #[test]
    fn coloring_is_proper() {
        let g = build_named(NamedFamily::R(1)).unwrap().complement();
        let colors = optimal_coloring(&g).unwrap();
        assert!(g.edges().iter().all(|e| colors[e.u] != colors[e.v]));
        assert_eq!(colors.iter().max().unwrap() + 1, chi(&g));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_oracle(n in 1usize..7, bits in proptest::collection::vec(proptest::bool::ANY, 21)) {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits.iter()).filter(|(_, &b)| b).map(|(e, _)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            proptest::prop_assert_eq!(chi(&g), chi_oracle(&g));
        }
    }
}
