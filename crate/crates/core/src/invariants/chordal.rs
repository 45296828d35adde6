use super::bits;
use crate::graph::{Graph, VertexSet};

/// A perfect elimination ordering if `g` is chordal.
///
/// Vertices are visited by maximum cardinality search; the reverse visiting
/// order is a perfect elimination ordering exactly when the graph is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::new();
    let mut position = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited.contains(v))
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited.insert(v);
        position[v] = step;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !visited.contains(u) {
                weight[u] += 1;
            }
        }
    }
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).iter().filter(|&u| position[u] < position[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| position[u]) {
            let nbrs = g.neighbors(parent);
            if earlier.iter().any(|&u| u != parent && !nbrs.contains(u)) {
                return None;
            }
        }
    }
    order.reverse();
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_order(g).is_some()
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement())
}

/// Mask version of [`is_chordal`] restricted to the vertices in `alive`.
pub(crate) fn is_chordal_masks(adj: &[u64], alive: u64) -> bool {
    let mut weight = [0u32; 64];
    let mut stamp = [0u32; 64];
    let mut unvisited = alive;
    let mut visited = 0u64;
    let mut step = 0;
    while unvisited != 0 {
        let v = bits(unvisited)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("nonempty");
        let earlier = adj[v] & visited;
        if earlier != 0 {
            let parent = bits(earlier).max_by_key(|&u| stamp[u]).expect("nonempty");
            if earlier & !(1 << parent) & !adj[parent] != 0 {
                return false;
            }
        }
        stamp[v] = step;
        step += 1;
        visited |= 1 << v;
        unvisited &= !(1 << v);
        for u in bits(adj[v] & unvisited) {
            weight[u] += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedFamily};
    use crate::invariants::full_mask;

    /// Chordal iff no induced cycle of length >= 4, by checking every subset.
    fn chordal_oracle(g: &Graph) -> bool {
        let n = g.n();
        let adj = g.masks().unwrap();
        for s in 0u64..1 << n {
            let k = s.count_ones();
            if k < 4 {
                continue;
            }
            let sub = crate::homology::compact(&adj, s);
            let is_cycle =
                sub.iter().all(|m| m.count_ones() == 2) && Graph::from_masks(&sub).unwrap().components().len() == 1;
            if is_cycle {
                return false;
            }
        }
        true
    }

    #[test]
    fn examples() {
        assert!(!is_chordal(&build_named(NamedFamily::Cycle(4)).unwrap()));
        assert!(is_chordal(&build_named(NamedFamily::Cycle(3)).unwrap()));
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        assert!(is_chordal(&tree));
        assert!(is_cochordal(&build_named(NamedFamily::Path(4)).unwrap()));
        assert!(!is_cochordal(&build_named(NamedFamily::TwoK2).unwrap()));
        assert!(!is_cochordal(&build_named(NamedFamily::Path(5)).unwrap()));
        assert!(is_chordal(&Graph::empty(0)));
    }

    #[test]
    fn peo_is_valid() {
        let g = build_named(NamedFamily::Complete(4))
            .unwrap()
            .disjoint_union(&build_named(NamedFamily::Path(3)).unwrap());
        let order = perfect_elimination_order(&g).unwrap();
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> = order[i + 1..].iter().copied().filter(|&u| g.has_edge(u, v)).collect();
            for &a in &later {
                for &b in &later {
                    assert!(a == b || g.has_edge(a, b));
                }
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_oracle(n in 1usize..8, bits in proptest::collection::vec(proptest::bool::ANY, 28)) {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits.iter()).filter(|(_, &b)| b).map(|(e, _)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            let expected = chordal_oracle(&g);
            proptest::prop_assert_eq!(is_chordal(&g), expected);
            proptest::prop_assert_eq!(is_chordal_masks(&g.masks().unwrap(), full_mask(n)), expected);
        }
    }
}
