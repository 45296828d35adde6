//! Graph rewrites: Lozin's transformation, triple subdivision, whiskers and a
//! constructive sequence of Lozin steps into the class `𝓛(m)`.
//!
//! New vertices are appended after the existing ones. Lozin's transformation
//! also deletes `x`, so every vertex above `x` moves down by one; the new
//! vertices `y, a, b, z` then take indices `n-1 .. n+2`.

use crate::error::{Error, Result};
use crate::graph::{build_named, Edge, Graph, NamedFamily, VertexSet};
use crate::invariants::{find_induced, in_class, short_cycle_edge, ClassSpec};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// A vertex `x` with its neighborhood split as `Y ⊔ Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LozinSpec {
    pub x: usize,
    /// Neighbors joined to the new vertex `y`.
    pub y_side: VertexSet,
    /// Neighbors joined to the new vertex `z`.
    pub z_side: VertexSet,
}

impl LozinSpec {
    pub fn new(x: usize, y_side: VertexSet, z_side: VertexSet) -> Self {
        Self { x, y_side, z_side }
    }

    /// Puts `y_side` on `y` and the rest of `N(x)` on `z`.
    pub fn from_y_side(g: &Graph, x: usize, y_side: VertexSet) -> Result<Self> {
        g.check_vertex(x)?;
        let z_side = g.neighbors(x).difference(&y_side);
        let spec = Self { x, y_side, z_side };
        spec.validate(g)?;
        Ok(spec)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_vertex(self.x)?;
        let bad = |message: String| Err(Error::InvalidPartition { x: self.x, message });
        if !self.y_side.is_disjoint(&self.z_side) {
            return bad(format!("Y and Z share {:?}", self.y_side.intersection(&self.z_side)));
        }
        let union = self.y_side.union(&self.z_side);
        let nbrs = g.neighbors(self.x);
        if &union != nbrs {
            return bad(format!("Y ∪ Z = {union:?} but N({}) = {nbrs:?}", self.x));
        }
        Ok(())
    }

    /// Every split of `N(x)`, `Y` running over subsets in mask order.
    pub fn all_partitions(g: &Graph, x: usize) -> Result<Vec<Self>> {
        g.check_vertex(x)?;
        let nbrs: Vec<usize> = g.neighbors(x).iter().collect();
        if nbrs.len() > 20 {
            return Err(Error::ResourceLimit(format!("2^{} partitions of N({x})", nbrs.len())));
        }
        Ok((0u32..1 << nbrs.len())
            .map(|mask| {
                let y: VertexSet = (0..nbrs.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| nbrs[i])
                    .collect();
                Self::from_y_side(g, x, y).expect("split of N(x)")
            })
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum TransformOp {
    Lozin {
        x: usize,
        y_side: Vec<usize>,
        z_side: Vec<usize>,
    },
    TripleSubdivision {
        u: usize,
        v: usize,
    },
    Whisker {
        set: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformReceipt {
    #[serde(flatten)]
    pub op: TransformOp,
    pub input: String,
    pub output: String,
    /// Indices of the added vertices in the output: `y, a, b, z` for Lozin,
    /// `y, a, b` for a triple subdivision, one pendant per whiskered vertex.
    pub new_vertices: Vec<usize>,
}

/// `L_x(G; Y, Z)`: delete `x`, add the path `y - a - b - z`, join `y` to `Y`
/// and `z` to `Z`.
pub fn lozin_transform(g: &Graph, spec: &LozinSpec) -> Result<(Graph, TransformReceipt)> {
    let out = lozin_graph(g, spec)?;
    let base = g.n() - 1;
    let receipt = TransformReceipt {
        op: TransformOp::Lozin {
            x: spec.x,
            y_side: spec.y_side.iter().collect(),
            z_side: spec.z_side.iter().collect(),
        },
        input: g.to_graph6(),
        output: out.to_graph6(),
        new_vertices: vec![base, base + 1, base + 2, base + 3],
    };
    Ok((out, receipt))
}

fn lozin_graph(g: &Graph, spec: &LozinSpec) -> Result<Graph> {
    spec.validate(g)?;
    let x = spec.x;
    let shift = |u: usize| if u > x { u - 1 } else { u };
    let base = g.n() - 1;
    let (y, a, b, z) = (base, base + 1, base + 2, base + 3);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| !e.contains(x))
        .map(|e| (shift(e.u), shift(e.v)))
        .collect();
    edges.extend([(y, a), (a, b), (b, z)]);
    edges.extend(spec.y_side.iter().map(|u| (shift(u), y)));
    edges.extend(spec.z_side.iter().map(|u| (shift(u), z)));
    Graph::from_edges(g.n() + 3, edges)
}

/// Replaces the edge `uv` by the path `u - y - a - b - v`. This is Lozin's
/// transformation at `v` with `Y = {u}`, up to renaming `v` as `z`.
pub fn triple_subdivision(g: &Graph, e: Edge) -> Result<(Graph, TransformReceipt)> {
    let out = subdivision_graph(g, e)?;
    let n = g.n();
    let receipt = TransformReceipt {
        op: TransformOp::TripleSubdivision { u: e.u, v: e.v },
        input: g.to_graph6(),
        output: out.to_graph6(),
        new_vertices: vec![n, n + 1, n + 2],
    };
    Ok((out, receipt))
}

fn subdivision_graph(g: &Graph, e: Edge) -> Result<Graph> {
    g.check_edge(e)?;
    let n = g.n();
    let (y, a, b) = (n, n + 1, n + 2);
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&f| f != e).map(|f| (f.u, f.v)).collect();
    edges.extend([(e.u, y), (y, a), (a, b), (b, e.v)]);
    Graph::from_edges(n + 3, edges)
}

/// `W_S(G)`: a new pendant on each vertex of `S`, in increasing order.
pub fn whisker(g: &Graph, set: &VertexSet) -> Result<(Graph, TransformReceipt)> {
    g.check_set(set)?;
    let n = g.n();
    let pendants: Vec<(usize, usize)> = set.iter().enumerate().map(|(i, s)| (s, n + i)).collect();
    let out = g.with_new_vertices(set.len()).add_edges(
        &pendants
            .iter()
            .map(|&(s, p)| Edge::new(s, p))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let receipt = TransformReceipt {
        op: TransformOp::Whisker {
            set: set.iter().collect(),
        },
        input: g.to_graph6(),
        output: out.to_graph6(),
        new_vertices: (n..n + set.len()).collect(),
    };
    Ok((out, receipt))
}

/// `W(G) = W_V(G)`.
pub fn whisker_all(g: &Graph) -> Graph {
    whisker(g, &g.vertices()).expect("own vertex set").0
}

/// Result of [`lozinize`]. `steps` bounds the Lozin index from above; it is
/// not claimed minimal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lozinized {
    pub graph: Graph,
    pub steps: usize,
    pub receipts: Vec<TransformReceipt>,
}

/// `10 · |E| · (3m + 3)`, at least one step per class threshold.
pub fn default_lozinize_budget(g: &Graph, m: usize) -> usize {
    10 * g.edge_count().max(1) * (3 * m + 3)
}

/// Applies Lozin steps until the graph lies in `𝓛(m)`. Priorities, first
/// match wins each round:
/// 1. split a vertex of degree at least 4, `|Y| = ⌈deg/2⌉`;
/// 2. triple-subdivide an edge on a cycle of length at most `3m + 3`, or on
///    an odd cycle;
/// 3. triple-subdivide the central path edge of an induced `H_i`,
///    `i ≤ 3m + 3`.
pub fn lozinize(g: &Graph, m: usize, budget: usize) -> Result<Lozinized> {
    let mut receipts = Vec::new();
    let graph = run_lozinize(g, m, budget, &mut receipts)?;
    Ok(Lozinized {
        graph,
        steps: receipts.len(),
        receipts,
    })
}

/// The step count of [`lozinize`] without building receipts.
pub fn lozinize_steps(g: &Graph, m: usize, budget: usize) -> Result<usize> {
    let mut steps = 0;
    lozinize_loop(g, m, budget, |graph, step| {
        steps += 1;
        match step {
            Step::Split(spec) => lozin_graph(graph, &spec),
            Step::Subdivide(e) => subdivision_graph(graph, e),
        }
    })?;
    Ok(steps)
}

fn run_lozinize(g: &Graph, m: usize, budget: usize, receipts: &mut Vec<TransformReceipt>) -> Result<Graph> {
    lozinize_loop(g, m, budget, |graph, step| {
        let (next, receipt) = match step {
            Step::Split(spec) => lozin_transform(graph, &spec)?,
            Step::Subdivide(e) => triple_subdivision(graph, e)?,
        };
        receipts.push(receipt);
        Ok(next)
    })
}

enum Step {
    Split(LozinSpec),
    Subdivide(Edge),
}

fn lozinize_loop(
    g: &Graph,
    m: usize,
    budget: usize,
    mut apply: impl FnMut(&Graph, Step) -> Result<Graph>,
) -> Result<Graph> {
    let spec = ClassSpec::new(m)?;
    let threshold = spec.threshold();
    let mut graph = g.clone();
    let mut steps = 0;
    while !in_class(&graph, spec) {
        if steps >= budget {
            return Err(Error::BudgetExceeded {
                budget,
                steps,
                partial: graph.to_graph6(),
            });
        }
        let step = if let Some(x) = (0..graph.n()).find(|&x| graph.degree(x) >= 4) {
            let nbrs: Vec<usize> = graph.neighbors(x).iter().collect();
            let y: VertexSet = nbrs[..nbrs.len().div_ceil(2)].iter().copied().collect();
            Step::Split(LozinSpec::from_y_side(&graph, x, y)?)
        } else if let Some(e) = short_cycle_edge(&graph, threshold).or_else(|| odd_cycle_edge(&graph)) {
            Step::Subdivide(e)
        } else if let Some(e) = h_central_edge(&graph, threshold) {
            Step::Subdivide(e)
        } else {
            unreachable!("a graph outside the class violates one of the tests")
        };
        graph = apply(&graph, step)?;
        steps += 1;
    }
    Ok(graph)
}

/// An edge joining two vertices at equal BFS depth; it lies on an odd cycle.
fn odd_cycle_edge(g: &Graph) -> Option<Edge> {
    let mut seen = vec![false; g.n()];
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        let (depth, _) = bfs(g, root);
        for v in 0..g.n() {
            seen[v] |= depth[v] != usize::MAX;
        }
        if let Some(e) = g
            .edges()
            .into_iter()
            .find(|e| depth[e.u] != usize::MAX && depth[e.u] == depth[e.v])
        {
            return Some(e);
        }
    }
    None
}

fn bfs(g: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut depth = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v).iter() {
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    (depth, parent)
}

/// The middle edge of the path of an induced `H_i`, `2 ≤ i ≤ limit`.
/// `H_1` has maximum degree 4 and is handled by the split rule.
fn h_central_edge(g: &Graph, limit: usize) -> Option<Edge> {
    (2..=limit).find_map(|i| {
        let pattern = build_named(NamedFamily::H(i)).expect("i >= 1");
        let image = find_induced(g, &pattern)?;
        let mid = (i - 1) / 2;
        Edge::new(image[mid], image[mid + 1]).ok()
    })
}
