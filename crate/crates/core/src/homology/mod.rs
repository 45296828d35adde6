//! Independence complexes and their reduced homology over prime fields.
//!
//! The independence complex `I(G)` has the independent sets of `G` as faces.
//! The graph on zero vertices has complex `{∅}`, whose reduced homology is
//! one-dimensional in degree `-1`.

mod linalg;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use std::fmt;

/// Default cap on the total number of nonempty faces of a complex.
pub const DEFAULT_FACE_CAP: usize = 1 << 26;

/// A prime field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Field {
    p: u32,
}

impl Field {
    pub const GF2: Field = Field { p: 2 };

    pub fn new(p: u32) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if !prime || p >= 1 << 31 {
            return Err(Error::InvalidParameter(format!("{p} is not a supported prime")));
        }
        Ok(Field { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::GF2
    }
}

impl TryFrom<u32> for Field {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Field::new(p)
    }
}

impl From<Field> for u32 {
    fn from(f: Field) -> u32 {
        f.p
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Reduced Betti numbers `β̃_d` for `d = -1, 0, 1, ...`.
///
/// Trailing zeros are dropped, so two vectors compare equal exactly when
/// they agree in every dimension.
#[derive(Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct BettiVector {
    field: Field,
    /// `betti[i]` is `β̃_{i-1}`.
    betti: Vec<usize>,
}

impl BettiVector {
    pub fn new(field: Field, mut betti: Vec<usize>) -> Self {
        while betti.last() == Some(&0) {
            betti.pop();
        }
        BettiVector { field, betti }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `β̃_d`; zero outside the stored range.
    pub fn get(&self, d: isize) -> usize {
        if d < -1 {
            return 0;
        }
        self.betti.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// Stored values, starting at dimension `-1`.
    pub fn as_slice(&self) -> &[usize] {
        &self.betti
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.is_empty()
    }

    /// Largest `d` with `β̃_d ≠ 0`.
    pub fn top_dimension(&self) -> Option<isize> {
        (!self.betti.is_empty()).then(|| self.betti.len() as isize - 2)
    }

    pub fn nonzero_dimensions(&self) -> impl Iterator<Item = isize> + '_ {
        self.betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b != 0)
            .map(|(i, _)| i as isize - 1)
    }

    /// `Σ_d (-1)^d β̃_d`.
    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// The vector of the suspension: `β̃_d ↦ β̃_{d+1}`.
    pub fn suspension(&self) -> BettiVector {
        let mut betti = self.betti.clone();
        if !betti.is_empty() {
            betti.insert(0, 0);
        }
        BettiVector::new(self.field, betti)
    }
}

impl fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "β̃{:?}@{}", self.betti, self.field)
    }
}

/// The independence complex of a graph on at most 64 vertices, faces grouped
/// by dimension and sorted lexicographically as sorted vertex lists.
#[derive(Clone, Debug)]
pub struct IndependenceComplex {
    host: Graph,
    faces: Vec<Vec<u64>>,
}

impl IndependenceComplex {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Number of nonempty faces of each dimension `0, 1, ...`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Faces of dimension `d`, as sorted vertex lists.
    pub fn faces(&self, d: usize) -> Vec<Vec<usize>> {
        self.faces
            .get(d)
            .map(|fs| fs.iter().map(|&m| bits(m).collect()).collect())
            .unwrap_or_default()
    }

    pub fn dimension(&self) -> isize {
        self.faces.len() as isize - 1
    }

    pub fn betti(&self, field: Field) -> BettiVector {
        betti_from_faces(&self.faces, field)
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

pub fn independence_complex(g: &Graph, face_cap: usize) -> Result<IndependenceComplex> {
    let adj = g.masks()?;
    Ok(IndependenceComplex {
        host: g.clone(),
        faces: enumerate_faces(&adj, face_cap)?,
    })
}

/// Independent sets of size `d + 1` in `faces[d]`, each list in lex order.
pub(crate) fn enumerate_faces(adj: &[u64], face_cap: usize) -> Result<Vec<Vec<u64>>> {
    fn grow(
        adj: &[u64],
        face: u64,
        size: usize,
        candidates: u64,
        faces: &mut Vec<Vec<u64>>,
        count: &mut usize,
        cap: usize,
    ) -> Result<()> {
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = face | 1 << v;
            *count += 1;
            if *count > cap {
                return Err(Error::ResourceLimit(format!(
                    "independence complex exceeds {cap} faces"
                )));
            }
            if faces.len() <= size {
                faces.push(Vec::new());
            }
            faces[size].push(next);
            grow(adj, next, size + 1, rest & !adj[v], faces, count, cap)?;
        }
        Ok(())
    }

    let n = adj.len();
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut faces = Vec::new();
    let mut count = 0;
    grow(adj, 0, 0, all, &mut faces, &mut count, face_cap)?;
    Ok(faces)
}

fn betti_from_faces(faces: &[Vec<u64>], field: Field) -> BettiVector {
    // ranks[d] = rank of ∂_d : C_d -> C_{d-1}, for d = 0..=top
    let top = faces.len();
    let mut ranks = vec![0usize; top + 1];
    if top > 0 {
        ranks[0] = 1;
    }
    for d in 1..top {
        ranks[d] = boundary_rank(&faces[d], &faces[d - 1], field);
    }
    let mut betti = Vec::with_capacity(top + 1);
    // d = -1: C_{-1} is spanned by the empty face
    betti.push(1 - ranks[0]);
    for d in 0..top {
        betti.push(faces[d].len() - ranks[d] - ranks[d + 1]);
    }
    BettiVector::new(field, betti)
}

fn boundary_rank(rows: &[u64], cols: &[u64], field: Field) -> usize {
    let mut index: Vec<(u64, usize)> = cols.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    index.sort_unstable();
    let lookup = |m: u64| {
        index[index
            .binary_search_by_key(&m, |&(k, _)| k)
            .expect("faces are closed downward")]
        .1
    };

    if field.p() == 2 {
        let words = cols.len().div_ceil(64);
        let matrix = rows
            .iter()
            .map(|&face| {
                let mut row = vec![0u64; words];
                for v in bits(face) {
                    let c = lookup(face & !(1 << v));
                    row[c / 64] |= 1 << (c % 64);
                }
                row
            })
            .collect();
        linalg::rank_gf2(matrix, cols.len())
    } else {
        let p = field.p();
        let matrix = rows
            .iter()
            .map(|&face| {
                bits(face)
                    .enumerate()
                    .map(|(i, v)| {
                        let sign = if i % 2 == 0 { 1 } else { p - 1 };
                        (lookup(face & !(1 << v)), sign)
                    })
                    .collect()
            })
            .collect();
        linalg::rank_mod_p(matrix, cols.len(), p)
    }
}

/// Reduced Betti numbers of `I(G)` computed directly from the full complex.
pub fn betti_numbers(g: &Graph, field: Field) -> Result<BettiVector> {
    betti_numbers_capped(g, field, DEFAULT_FACE_CAP)
}

pub fn betti_numbers_capped(g: &Graph, field: Field, face_cap: usize) -> Result<BettiVector> {
    Ok(independence_complex(g, face_cap)?.betti(field))
}

/// Reduced Betti numbers of the complex of a graph given by neighbor masks.
pub(crate) fn betti_of_masks(adj: &[u64], field: Field, face_cap: usize) -> Result<BettiVector> {
    Ok(betti_from_faces(&enumerate_faces(adj, face_cap)?, field))
}

/// Betti numbers after shrinking the graph with [`fold_reduce`].
pub fn betti_numbers_folded(g: &Graph, field: Field) -> Result<BettiVector> {
    let adj = fold_reduce_masks(&g.masks()?);
    betti_of_masks(&adj, field, DEFAULT_FACE_CAP)
}

/// Repeatedly deletes a vertex `v` for which some other vertex `u` has
/// `N(u) ⊆ N(v)`, scanning `v` then `u` in increasing order. The independence
/// complex keeps its homotopy type at every step.
pub fn fold_reduce(g: &Graph) -> Graph {
    let mut alive = g.vertices();
    loop {
        let dominated = alive.iter().find(|&v| {
            let nv = g.neighbors(v).intersection(&alive);
            alive
                .iter()
                .any(|u| u != v && g.neighbors(u).intersection(&alive).is_subset(&nv))
        });
        match dominated {
            Some(v) => {
                alive.remove(v);
            }
            None => break,
        }
    }
    g.induced_subgraph(&alive).expect("subset of own vertices").graph
}

/// Mask version of [`fold_reduce`]; the result is compacted to `0..k`.
pub(crate) fn fold_reduce_masks(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    let mut alive: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    'outer: loop {
        let mut vs = alive;
        while vs != 0 {
            let v = vs.trailing_zeros() as usize;
            vs &= vs - 1;
            let nv = adj[v] & alive;
            let mut us = alive & !(1 << v);
            while us != 0 {
                let u = us.trailing_zeros() as usize;
                us &= us - 1;
                if adj[u] & alive & !nv == 0 {
                    alive &= !(1 << v);
                    continue 'outer;
                }
            }
        }
        break;
    }
    compact(adj, alive)
}

/// Induced subgraph on `keep`, renumbered to `0..popcount(keep)`.
pub(crate) fn compact(adj: &[u64], keep: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(keep.count_ones() as usize);
    for v in bits(keep) {
        out.push(pext(adj[v] & keep, keep));
    }
    out
}

fn pext(x: u64, mask: u64) -> u64 {
    let mut out = 0;
    for (k, b) in bits(mask).enumerate() {
        if x >> b & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

/// Whether `w` is isolated in `G - N[e]`.
pub fn is_isolating_edge(g: &Graph, e: Edge, w: usize) -> Result<bool> {
    g.check_edge(e)?;
    g.check_vertex(w)?;
    let closed = g.edge_closed_neighborhood(e);
    Ok(!closed.contains(w) && g.neighbors(w).is_subset(&closed))
}

/// For `N[u] ⊆ N[v]`, `I(G) ≃ I(G - v) ∨ Σ I(G - N[v])`. Returns the Betti
/// vectors of `G - v` and `G - N[v]`.
pub fn wedge_split_betti(g: &Graph, u: usize, v: usize, field: Field) -> Result<(BettiVector, BettiVector)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || !g.closed_neighborhood(u).is_subset(&g.closed_neighborhood(v)) {
        return Err(Error::DominationRequired { u, v });
    }
    let minus_v = g.delete_vertex(v)?.graph;
    let minus_nv = g.delete_vertices(&g.closed_neighborhood(v))?.graph;
    Ok((betti_numbers(&minus_v, field)?, betti_numbers(&minus_nv, field)?))
}
