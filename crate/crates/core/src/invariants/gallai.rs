use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// The graph `G*` on the edges of `G`, two edges adjacent exactly when their
/// four endpoints induce `2K_2`. Its clique number is the induced matching
/// number of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiGraph {
    pub base: Graph,
    pub star: Graph,
    /// Star vertex `i` is the base edge `edges[i]`; lexicographic order.
    pub edges: Vec<Edge>,
}

impl GallaiGraph {
    pub fn index_of(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }
}

/// Whether `e` and `f` have four distinct endpoints and no edge between them.
pub fn forms_induced_2k2(g: &Graph, e: Edge, f: Edge) -> bool {
    [e.u, e.v]
        .iter()
        .all(|&a| [f.u, f.v].iter().all(|&b| a != b && !g.has_edge(a, b)))
}

pub fn gallai_graph(g: &Graph) -> Result<GallaiGraph> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let mut pairs = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if forms_induced_2k2(g, e, f) {
                pairs.push((i, j));
            }
        }
    }
    Ok(GallaiGraph {
        base: g.clone(),
        star: Graph::from_edges(edges.len(), pairs)?,
        edges,
    })
}
