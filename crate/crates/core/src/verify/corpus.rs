//! Exhaustive corpora of unlabeled graphs. Each isomorphism class is stored
//! once, under a canonical labeling: vertices are split by iterated degree
//! refinement, and within that ordered partition the labeling maximizing the
//! column-wise upper-triangle bit string is chosen by branch and bound.

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};
use std::collections::HashSet;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

/// Largest vertex count [`all_graphs`] will enumerate (274,668 classes).
pub const MAX_CORPUS_N: usize = 9;

/// The canonical labeling of `g`, at most 16 vertices.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let adj = g.masks()?;
    if adj.len() > 16 {
        return Err(Error::ResourceLimit(format!(
            "canonical form of {} vertices",
            adj.len()
        )));
    }
    let perm = canonical_labeling(&adj);
    Ok(relabel(&adj, &perm))
}

/// Whether two graphs are isomorphic, by comparing canonical forms.
pub fn isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn relabel(adj: &[u64], perm: &[usize]) -> Graph {
    let n = perm.len();
    let edges = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| adj[perm[i]] >> perm[j] & 1 == 1);
    Graph::from_edges(n, edges).expect("relabeling of a valid graph")
}

/// `perm[position] = vertex`.
fn canonical_labeling(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let colors = refine(adj);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (v, &c) in colors.iter().enumerate() {
        let c = c as usize;
        if cells.len() <= c {
            cells.resize(c + 1, Vec::new());
        }
        cells[c].push(v);
    }
    let cell_of_position: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len()))
        .collect();
    let mut search = Labeling {
        adj,
        cells: &cells,
        cell_of_position: &cell_of_position,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    search.best.map(|(_, p)| p).unwrap_or_default()
}

/// Iterated degree refinement; colors are ranks of invariant keys.
fn refine(adj: &[u64]) -> Vec<u32> {
    let n = adj.len();
    let mut colors: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut classes = usize::MAX;
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colors[u]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        colors = keys.iter().map(|k| distinct.binary_search(k).unwrap() as u32).collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Labeling<'a> {
    adj: &'a [u64],
    cells: &'a [Vec<usize>],
    cell_of_position: &'a [usize],
    perm: Vec<usize>,
    used: u64,
    best: Option<(u128, Vec<usize>)>,
}

impl Labeling<'_> {
    fn total_bits(&self) -> u32 {
        let n = self.adj.len() as u32;
        n * n.saturating_sub(1) / 2
    }

    fn run(&mut self, pos: usize, prefix: u128) {
        let n = self.adj.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix > *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let len = (pos * (pos + 1) / 2) as u32;
        for &v in &self.cells[self.cell_of_position[pos]] {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let mut next = prefix;
            for &u in &self.perm {
                next = next << 1 | (self.adj[v] >> u & 1) as u128;
            }
            if let Some((best, _)) = &self.best {
                let shift = self.total_bits() - len;
                if next < best >> shift {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, next);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// One canonical representative of every graph on exactly `n` vertices,
/// sorted by graph6 string.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_N {
        return Err(Error::ResourceLimit(format!("enumerating all graphs on {n} vertices")));
    }
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        level = extend(&level, k);
    }
    Ok(level)
}

/// Every graph on `0..=n` vertices, by vertex count.
pub fn all_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CORPUS_N {
        return Err(Error::ResourceLimit(format!("enumerating all graphs on {n} vertices")));
    }
    let mut out = vec![Graph::empty(0)];
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        level = extend(&level, k);
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// Adds a vertex with every possible neighborhood and keeps one graph per
/// isomorphism class.
fn extend(smaller: &[Graph], k: usize) -> Vec<Graph> {
    use rayon::prelude::*;
    let found: HashSet<Vec<u64>> = smaller
        .par_iter()
        .flat_map_iter(|h| {
            let base = h.masks().expect("small graph");
            (0u64..1 << (k - 1)).map(move |nbrs| {
                let mut adj = base.clone();
                adj.push(nbrs);
                for (u, m) in adj.iter_mut().enumerate().take(k - 1) {
                    *m |= (nbrs >> u & 1) << (k - 1);
                }
                let perm = canonical_labeling(&adj);
                relabel(&adj, &perm).masks().expect("small graph")
            })
        })
        .collect();
    let mut graphs: Vec<Graph> = found
        .into_iter()
        .map(|m| Graph::from_masks(&m).expect("valid masks"))
        .collect();
    graphs.sort_by_cached_key(|g| g.to_graph6());
    graphs
}

/// Reads a graph6 file, one graph per line. Blank lines are skipped; a bad
/// line yields an error in its slot and reading continues.
pub fn read_corpus(path: impl AsRef<Path>) -> Result<Vec<Result<Graph>>> {
    let file =
        std::fs::File::open(path.as_ref()).map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        let text = line.trim_end();
        if text.is_empty() {
            continue;
        }
        out.push(parse_graph6(text.as_bytes()));
    }
    Ok(out)
}

pub fn write_corpus<'a>(graphs: impl IntoIterator<Item = &'a Graph>, path: impl AsRef<Path>) -> Result<()> {
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    for g in graphs {
        writeln!(file, "{}", g.to_graph6())?;
    }
    file.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedFamily};

    /// Isomorphism by trying every permutation.
    fn iso_oracle(a: &Graph, b: &Graph) -> bool {
        fn go(a: &Graph, b: &Graph, perm: &mut Vec<usize>) -> bool {
            let k = perm.len();
            if k == a.n() {
                return true;
            }
            for c in 0..b.n() {
                if !perm.contains(&c) && (0..k).all(|j| a.has_edge(k, j) == b.has_edge(c, perm[j])) {
                    perm.push(c);
                    if go(a, b, perm) {
                        return true;
                    }
                    perm.pop();
                }
            }
            false
        }
        a.n() == b.n() && a.edge_count() == b.edge_count() && go(a, b, &mut Vec::new())
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn five_vertex_classes_are_pairwise_distinct() {
        let graphs = all_graphs(5).unwrap();
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(!iso_oracle(a, b));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let c5 = build_named(NamedFamily::Cycle(5)).unwrap();
        let star = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&star).unwrap());
        assert!(isomorphic(&c5, &star).unwrap());
        let p5 = build_named(NamedFamily::Path(5)).unwrap();
        assert!(!isomorphic(&c5, &p5).unwrap());
    }

    proptest::proptest! {
        #[test]
        fn canonical_form_decides_isomorphism(
            n in 1usize..8,
            bits_a in proptest::collection::vec(proptest::bool::ANY, 28),
            shuffle in proptest::collection::vec(0usize..1000, 8),
            bits_b in proptest::collection::vec(proptest::bool::ANY, 28),
        ) {
            let make = |bits: &[bool]| {
                let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .zip(bits.iter()).filter(|(_, &b)| b).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            };
            let a = make(&bits_a);
            let b = make(&bits_b);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.sort_by_key(|&i| (shuffle[i], i));
            let a_moved = Graph::from_edges(n, a.edges().iter().map(|e| (perm[e.u], perm[e.v]))).unwrap();
            proptest::prop_assert_eq!(canonical_form(&a).unwrap(), canonical_form(&a_moved).unwrap());
            proptest::prop_assert_eq!(isomorphic(&a, &b).unwrap(), iso_oracle(&a, &b));
        }
    }

    #[test]
    fn corpus_file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.g6");
        let graphs = all_graphs(4).unwrap();
        write_corpus(&graphs, &path).unwrap();
        std::fs::write(&path, std::fs::read_to_string(&path).unwrap() + "\n~~bad\n").unwrap();
        let back = read_corpus(&path).unwrap();
        assert_eq!(back.len(), 12);
        assert!(back[11].is_err());
        let ok: Vec<Graph> = back.into_iter().take(11).map(|g| g.unwrap()).collect();
        assert_eq!(ok, graphs);
    }
}
