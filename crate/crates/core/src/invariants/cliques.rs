#[cfg(test)]
use super::bits;
use super::{complement_masks, full_mask};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_clique_masks(&g.masks()?).count_ones() as usize)
}

pub fn maximum_clique(g: &Graph) -> Result<VertexSet> {
    Ok(VertexSet::from_mask(max_clique_masks(&g.masks()?)))
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    Ok(alpha_masks(&g.masks()?))
}

pub fn maximum_independent_set(g: &Graph) -> Result<VertexSet> {
    Ok(VertexSet::from_mask(max_clique_masks(&complement_masks(&g.masks()?))))
}

pub(crate) fn alpha_masks(adj: &[u64]) -> usize {
    max_clique_masks(&complement_masks(adj)).count_ones() as usize
}

pub(crate) fn alpha_within(adj: &[u64], alive: u64) -> usize {
    let comp: Vec<u64> = adj.iter().enumerate().map(|(v, &m)| !m & alive & !(1 << v)).collect();
    let mut best = 0;
    expand(&comp, 0, alive, &mut best);
    best.count_ones() as usize
}

/// Maximum clique by branch and bound with a greedy coloring bound.
pub(crate) fn max_clique_masks(adj: &[u64]) -> u64 {
    let mut best = 0u64;
    expand(adj, 0, full_mask(adj.len()), &mut best);
    best
}

fn expand(adj: &[u64], clique: u64, mut candidates: u64, best: &mut u64) {
    if candidates == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    let (order, colors) = greedy_color_order(adj, candidates);
    for i in (0..order.len()).rev() {
        if clique.count_ones() as usize + colors[i] <= best.count_ones() as usize {
            return;
        }
        let v = order[i];
        expand(adj, clique | 1 << v, candidates & adj[v], best);
        candidates &= !(1 << v);
    }
}

/// Vertices of `set` in color-class order, with the running color count.
fn greedy_color_order(adj: &[u64], set: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(set.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = set;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncolored &= !(1 << v);
            order.push(v);
            colors.push(color);
        }
    }
    (order, colors)
}

#[cfg(test)]
fn is_clique(adj: &[u64], set: u64) -> bool {
    bits(set).all(|v| set & !(1 << v) & !adj[v] == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedFamily};

    #[test]
    fn named_values() {
        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        assert_eq!(clique_number(&c5).unwrap(), 2);
        for n in 1..8 {
            let k = build_named(NamedFamily::Complete(n)).unwrap();
            assert_eq!(independence_number(&k).unwrap(), 1);
            assert_eq!(clique_number(&k).unwrap(), n);
        }
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(independence_number(&Graph::empty(5)).unwrap(), 5);
    }

    #[test]
    fn witnesses() {
        let g = build_named(NamedFamily::R(1)).unwrap();
        let s = maximum_independent_set(&g).unwrap();
        assert_eq!(s.len(), independence_number(&g).unwrap());
        assert_eq!(s.len(), 5);
        for u in s.iter() {
            assert!(g.neighbors(u).is_disjoint(&s));
        }
    }

    proptest::proptest! {
        #[test]
        fn omega_matches_brute_force(n in 1usize..9, bits in proptest::collection::vec(proptest::bool::ANY, 36)) {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits.iter()).filter(|(_, &b)| b).map(|(e, _)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            let adj = g.masks().unwrap();
            let brute = (0u64..1 << n).filter(|&s| is_clique(&adj, s)).map(|s| s.count_ones()).max().unwrap();
            proptest::prop_assert_eq!(clique_number(&g).unwrap(), brute as usize);
            proptest::prop_assert_eq!(alpha_within(&adj, full_mask(n)), independence_number(&g).unwrap());
        }
    }
}
