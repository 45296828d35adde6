//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! A [`Graph`] is an immutable value. Every operation returns a fresh graph,
//! and every constructor validates symmetry and irreflexivity.

mod edgelist;
mod graph6;
mod named;
mod set;

pub use edgelist::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};
pub use named::{build_named, NamedFamily};
pub use set::VertexSet;

use crate::error::{Error, Result};
use std::fmt;

/// An undirected edge with normalized endpoints `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn endpoints(&self) -> VertexSet {
        [self.u, self.v].into()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.u, self.v)
    }
}

/// Serialized as its graph6 string.
#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl TryFrom<String> for Graph {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        parse_graph6(s.as_bytes())
    }
}

impl From<Graph> for String {
    fn from(g: Graph) -> String {
        g.to_graph6()
    }
}

/// A graph produced from another by keeping a subset of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub graph: Graph,
    /// `new_to_old[i]` is the host vertex that became vertex `i`.
    pub new_to_old: Vec<usize>,
}

impl Relabeled {
    pub fn old_to_new(&self, old: usize) -> Option<usize> {
        self.new_to_old.binary_search(&old).ok()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from neighbor sets, checking symmetry and irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let graph = Graph { n: adj.len(), adj };
        graph.validate()?;
        Ok(graph)
    }

    /// Builds a graph on at most 64 vertices from neighbor masks.
    pub fn from_masks(masks: &[u64]) -> Result<Self> {
        Self::from_adjacency(masks.iter().map(|&m| VertexSet::from_mask(m)).collect())
    }

    pub fn validate(&self) -> Result<()> {
        for (v, nbrs) in self.adj.iter().enumerate() {
            if nbrs.contains(v) {
                return Err(Error::InvalidParameter(format!("loop at vertex {v}")));
            }
            for u in nbrs.iter() {
                if u >= self.n {
                    return Err(Error::InvalidVertex { vertex: u, n: self.n });
                }
                if !self.adj[u].contains(v) {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric between {u} and {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All edges in lexicographic order of their normalized endpoints.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidVertex { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.bound() > self.n {
            return Err(Error::InvalidVertex {
                vertex: set.bound() - 1,
                n: self.n,
            });
        }
        Ok(())
    }

    pub fn check_edge(&self, e: Edge) -> Result<()> {
        self.check_vertex(e.v)?;
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge { u: e.u, v: e.v });
        }
        Ok(())
    }

    /// Neighbor masks, for graphs with at most 64 vertices.
    pub fn masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::ResourceLimit(format!(
                "{} vertices exceeds the 64-vertex word size",
                self.n
            )));
        }
        Ok(self.adj.iter().map(|s| s.to_mask().unwrap_or(0)).collect())
    }

    /// `G[S]`, with vertices renumbered in increasing order of their old index.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Relabeled> {
        self.check_set(set)?;
        let new_to_old: Vec<usize> = set.iter().collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = i;
        }
        let adj = new_to_old
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&u| set.contains(u))
                    .map(|u| old_to_new[u])
                    .collect()
            })
            .collect();
        Ok(Relabeled {
            graph: Graph {
                n: new_to_old.len(),
                adj,
            },
            new_to_old,
        })
    }

    /// `G - S`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<Relabeled> {
        self.check_set(set)?;
        self.induced_subgraph(&self.vertices().difference(set))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Relabeled> {
        self.delete_vertices(&[v].into())
    }

    /// `G - F`: same vertex set, edge set `E \ F`.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &e in edges {
            self.check_edge(e)?;
            adj[e.u].remove(e.v);
            adj[e.v].remove(e.u);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn add_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &e in edges {
            self.check_vertex(e.v)?;
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = full.difference(&self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph { n: self.n, adj }
    }

    /// `G ∪ H` with the vertices of `H` shifted by `|V(G)|`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| s.iter().map(|u| u + shift).collect::<VertexSet>()),
        );
        Graph {
            n: self.n + other.n,
            adj,
        }
    }

    /// `N(U)` when `closed` is false, `N[U] = N(U) ∪ U` otherwise.
    pub fn neighborhood(&self, set: &VertexSet, closed: bool) -> Result<VertexSet> {
        self.check_set(set)?;
        let mut out = VertexSet::new();
        for v in set.iter() {
            out = out.union(&self.adj[v]);
        }
        if closed {
            out = out.union(set);
        }
        Ok(out)
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[e] = N[{u, v}]`.
    pub fn edge_closed_neighborhood(&self, e: Edge) -> VertexSet {
        self.closed_neighborhood(e.u).union(&self.closed_neighborhood(e.v))
    }

    /// Appends `count` isolated vertices and returns the enlarged graph.
    pub fn with_new_vertices(&self, count: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.resize(self.n + count, VertexSet::new());
        Graph { n: self.n + count, adj }
    }

    /// Vertices in the same connected component, one set per component,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for u in self.adj[v].iter() {
                    if seen.insert(u) {
                        stack.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Degree sequence, sorted in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    pub fn to_graph6(&self) -> String {
        to_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({} {:?})",
            self.n,
            self.edges().iter().map(|e| (e.u, e.v)).collect::<Vec<_>>()
        )
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}
