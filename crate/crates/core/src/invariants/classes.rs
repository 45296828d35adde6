//! Girth, bipartiteness, forbidden induced subgraphs and the class `𝓛(m)`:
//! girth above `3m+3`, no induced `H_1..H_{3m+3}`, maximum degree at most 3,
//! bipartite.

use crate::error::{Error, Result};
use crate::graph::{build_named, Edge, Graph, NamedFamily};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Length of a shortest cycle, `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for root in 0..g.n() {
        let mut depth = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if best.is_some_and(|b| 2 * depth[v] + 1 >= b) {
                break;
            }
            for u in g.neighbors(v).iter() {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if parent[v] != u {
                    let len = depth[u] + depth[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![None; g.n()];
    for root in 0..g.n() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for u in g.neighbors(v).iter() {
                match side[u] {
                    None => {
                        side[u] = Some(!s);
                        queue.push_back(u);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// No cycle of length `3..=k`, i.e. girth above `k`.
pub fn is_ck_free_up_to(g: &Graph, k: usize) -> bool {
    short_cycle_edge(g, k).is_none()
}

/// The closing edge of a shortest cycle, if that cycle has length at most
/// `limit`. BFS from each root; a non-tree edge `uv` closes a cycle of length
/// `d(u) + d(v) + 1` that contains `uv`, so the search stops at depth
/// `limit / 2`.
pub(crate) fn short_cycle_edge(g: &Graph, limit: usize) -> Option<Edge> {
    let n = g.n();
    let mut best: Option<(usize, Edge)> = None;
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut visited = Vec::new();
    for root in 0..n {
        for &v in &visited {
            depth[v] = usize::MAX;
        }
        visited.clear();
        depth[root] = 0;
        parent[root] = usize::MAX;
        visited.push(root);
        let mut head = 0;
        while head < visited.len() {
            let v = visited[head];
            head += 1;
            if 2 * depth[v] >= limit {
                continue;
            }
            for u in g.neighbors(v).iter() {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    parent[u] = v;
                    visited.push(u);
                }
            }
        }
        let mut local: Option<(usize, Edge)> = None;
        for &v in &visited {
            for u in g.neighbors(v).iter().filter(|&u| u > v && depth[u] != usize::MAX) {
                if parent[u] == v || parent[v] == u {
                    continue;
                }
                let len = depth[u] + depth[v] + 1;
                let e = Edge { u: v, v: u };
                if len <= limit && local.is_none_or(|l| (len, e) < l) {
                    local = Some((len, e));
                }
            }
        }
        if let Some((len, e)) = local {
            if best.is_none_or(|(b, _)| len < b) {
                best = Some((len, e));
            }
            if len == 3 {
                break;
            }
        }
    }
    best.map(|(_, e)| e)
}

/// `H_n`, the path on `n` vertices with two pendants at each end.
pub fn h_graph(n: usize) -> Result<Graph> {
    build_named(NamedFamily::H(n))
}

/// No induced `H_1, …, H_l`.
pub fn is_hn_free_up_to(g: &Graph, l: usize) -> bool {
    (1..=l).all(|n| {
        let pattern = h_graph(n).expect("n >= 1");
        pattern.n() > g.n() || !contains_induced(g, &pattern)
    })
}

/// Whether some induced subgraph of `g` is isomorphic to the connected
/// graph `pattern`.
pub fn contains_induced(g: &Graph, pattern: &Graph) -> bool {
    find_induced(g, pattern).is_some()
}

/// An induced copy of the connected graph `pattern`: entry `i` is the vertex
/// of `g` playing pattern vertex `i`.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() == 0 {
        return Some(Vec::new());
    }
    // order the pattern so every vertex after the first has an earlier neighbor
    let mut order = vec![0];
    let mut placed = vec![false; pattern.n()];
    placed[0] = true;
    let mut i = 0;
    while i < order.len() {
        for u in pattern.neighbors(order[i]).iter() {
            if !placed[u] {
                placed[u] = true;
                order.push(u);
            }
        }
        i += 1;
    }
    assert_eq!(order.len(), pattern.n(), "pattern must be connected");
    let anchor: Vec<usize> = order
        .iter()
        .enumerate()
        .map(|(k, &p)| {
            order[..k]
                .iter()
                .position(|&q| pattern.has_edge(p, q))
                .unwrap_or(usize::MAX)
        })
        .collect();
    let mut image = Vec::with_capacity(order.len());
    // an induced copy maps each pattern vertex to one of at least its degree
    for start in (0..g.n()).filter(|&v| g.degree(v) >= pattern.degree(order[0])) {
        image.clear();
        image.push(start);
        if embed(g, pattern, &order, &anchor, &mut image) {
            let mut placed = vec![0; order.len()];
            for (k, &p) in order.iter().enumerate() {
                placed[p] = image[k];
            }
            return Some(placed);
        }
    }
    None
}

fn embed(g: &Graph, pattern: &Graph, order: &[usize], anchor: &[usize], image: &mut Vec<usize>) -> bool {
    let k = image.len();
    if k == order.len() {
        return true;
    }
    let p = order[k];
    let candidates: Vec<usize> = g.neighbors(image[anchor[k]]).iter().collect();
    for c in candidates {
        if g.degree(c) < pattern.degree(p) || image.contains(&c) {
            continue;
        }
        let consistent = (0..k).all(|j| pattern.has_edge(p, order[j]) == g.has_edge(c, image[j]));
        if consistent {
            image.push(c);
            if embed(g, pattern, order, anchor, image) {
                return true;
            }
            image.pop();
        }
    }
    false
}

/// No induced cycle of any of the given lengths.
pub fn is_induced_cycle_free(g: &Graph, lengths: &[usize]) -> bool {
    lengths.iter().all(|&k| {
        let cycle = build_named(NamedFamily::Cycle(k)).expect("k >= 3");
        k > g.n() || !contains_induced(g, &cycle)
    })
}

/// Exactly one cycle: cyclomatic number one.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n() + 1
}

/// The class `𝓛(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    m: usize,
}

impl ClassSpec {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("class parameter m must be positive".into()));
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The common bound `3m + 3` on cycle lengths and `H_i` indices.
    pub fn threshold(&self) -> usize {
        3 * self.m + 3
    }
}

pub fn in_class(g: &Graph, spec: ClassSpec) -> bool {
    let k = spec.threshold();
    g.max_degree() <= 3 && is_bipartite(g) && is_ck_free_up_to(g, k) && is_hn_free_up_to(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(f: NamedFamily) -> Graph {
        build_named(f).unwrap()
    }

    /// Brute-force induced-subgraph test: every injective map of the pattern.
    fn contains_oracle(g: &Graph, pattern: &Graph) -> bool {
        fn go(g: &Graph, p: &Graph, image: &mut Vec<usize>) -> bool {
            if image.len() == p.n() {
                return true;
            }
            let k = image.len();
            for c in 0..g.n() {
                if !image.contains(&c) && (0..k).all(|j| p.has_edge(k, j) == g.has_edge(c, image[j])) {
                    image.push(c);
                    if go(g, p, image) {
                        return true;
                    }
                    image.pop();
                }
            }
            false
        }
        go(g, pattern, &mut Vec::new())
    }

    #[test]
    fn girth_values() {
        for n in 3..10 {
            assert_eq!(girth(&named(NamedFamily::Cycle(n))), Some(n));
        }
        assert_eq!(girth(&named(NamedFamily::Path(6))), None);
        assert_eq!(girth(&named(NamedFamily::Complete(4))), Some(3));
        assert_eq!(girth(&named(NamedFamily::R(1))), Some(5));
    }

    #[test]
    fn class_examples() {
        let l1 = ClassSpec::new(1).unwrap();
        assert!(in_class(&named(NamedFamily::Cycle(8)), l1));
        assert!(!in_class(&named(NamedFamily::Cycle(5)), l1));
        assert!(!in_class(&named(NamedFamily::Complete(4)), l1));
        assert!(in_class(&named(NamedFamily::Complete(2)), l1));
        assert!(!in_class(&named(NamedFamily::Cycle(6)), l1));
        // a tree that is exactly H_2 is excluded by the H scan alone
        let h2 = named(NamedFamily::H(2));
        assert!(h2.max_degree() <= 3 && is_bipartite(&h2) && girth(&h2).is_none());
        assert!(!in_class(&h2, l1));
        assert!(ClassSpec::new(0).is_err());
    }

    #[test]
    fn h_scan_finds_embedded_copy() {
        // H_3 with one pendant extended; its degree-3 vertices stay apart
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6), (3, 7)]).unwrap();
        assert!(!is_hn_free_up_to(&g, 3));
        assert!(is_hn_free_up_to(&g, 2));
    }

    #[test]
    fn unicyclic() {
        assert!(is_unicyclic(&named(NamedFamily::Cycle(5))));
        assert!(!is_unicyclic(&named(NamedFamily::Path(5))));
        assert!(!is_unicyclic(&named(NamedFamily::Complete(4))));
        let c3_plus_edge = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        assert!(is_unicyclic(&c3_plus_edge));
    }

    proptest::proptest! {
        #[test]
        fn induced_search_agrees(n in 1usize..8, bits in proptest::collection::vec(proptest::bool::ANY, 28), k in 3usize..6) {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .zip(bits.iter()).filter(|(_, &b)| b).map(|(e, _)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            for pattern in [named(NamedFamily::Cycle(k)), named(NamedFamily::Path(k)), named(NamedFamily::H(1))] {
                proptest::prop_assert_eq!(contains_induced(&g, &pattern), contains_oracle(&g, &pattern));
            }
            // girth against induced cycles: the shortest cycle is induced
            let shortest = (3..=n).find(|&len| contains_oracle(&g, &named(NamedFamily::Cycle(len))));
            proptest::prop_assert_eq!(girth(&g), shortest);
        }
    }
}
