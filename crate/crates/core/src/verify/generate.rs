//! Seeded graph generators. The same spec always yields the same sequence.

use super::corpus::{all_graphs, read_corpus};
use crate::error::{Error, Result};
use crate::graph::{Graph, NamedFamily};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

pub const DEFAULT_COUNT: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    /// `count` graphs, each on a uniform vertex count in `n_min..=n_max`,
    /// every edge present with probability `p`.
    ErdosRenyi {
        n_min: usize,
        n_max: usize,
        p: f64,
        seed: u64,
        count: usize,
    },
    /// Random chordal graphs: each new vertex is joined to a random clique.
    RandomChordal {
        n_min: usize,
        n_max: usize,
        seed: u64,
        count: usize,
    },
    /// Connected graphs with exactly one cycle: a random tree plus one edge.
    RandomUnicyclic {
        n_min: usize,
        n_max: usize,
        seed: u64,
        count: usize,
    },
    /// A named family over a parameter range, e.g. `C` over `8..=16`.
    NamedSweep { family: String, from: usize, to: usize },
    /// Every isomorphism class on `n_min..=n_max` vertices.
    AllGraphs { n_min: usize, n_max: usize },
    /// A graph6 file, one graph per line.
    CorpusFile { path: PathBuf },
}

/// One generated graph, or the reason the generator could not produce it.
pub type Generated = std::result::Result<Graph, String>;

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Vec<Generated>> {
        use GeneratorSpec::*;
        Ok(match self {
            ErdosRenyi {
                n_min,
                n_max,
                p,
                seed,
                count,
            } => {
                check_range(*n_min, *n_max)?;
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::InvalidParameter(format!("edge probability {p} outside [0, 1]")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let n = rng.gen_range(*n_min..=*n_max);
                        Ok(erdos_renyi(n, *p, &mut rng))
                    })
                    .collect()
            }
            RandomChordal {
                n_min,
                n_max,
                seed,
                count,
            } => {
                check_range(*n_min, *n_max)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let n = rng.gen_range(*n_min..=*n_max);
                        Ok(random_chordal(n, &mut rng))
                    })
                    .collect()
            }
            RandomUnicyclic {
                n_min,
                n_max,
                seed,
                count,
            } => {
                check_range(*n_min, *n_max)?;
                if *n_min < 3 {
                    return Err(Error::InvalidParameter(
                        "unicyclic graphs need at least 3 vertices".into(),
                    ));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|_| {
                        let n = rng.gen_range(*n_min..=*n_max);
                        Ok(random_unicyclic(n, &mut rng))
                    })
                    .collect()
            }
            NamedSweep { family, from, to } => {
                check_range(*from, *to)?;
                (*from..=*to)
                    .map(|k| {
                        let f: NamedFamily = format!("{family}{k}").parse()?;
                        crate::graph::build_named(f)
                    })
                    .map(|g| g.map_err(|e| e.to_string()))
                    .collect()
            }
            AllGraphs { n_min, n_max } => {
                check_range(*n_min, *n_max)?;
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    out.extend(all_graphs(n)?.into_iter().map(Ok));
                }
                out
            }
            CorpusFile { path } => read_corpus(path)?
                .into_iter()
                .map(|g| g.map_err(|e| e.to_string()))
                .collect(),
        })
    }
}

fn check_range(lo: usize, hi: usize) -> Result<()> {
    if lo > hi {
        return Err(Error::InvalidParameter(format!("empty range {lo}..={hi}")));
    }
    Ok(())
}

pub fn erdos_renyi(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid endpoints")
}

/// Vertices arrive in a random order; each is joined to a random clique of
/// the graph so far (a random earlier vertex plus some of its earlier
/// neighbors that stay pairwise adjacent), so the arrival order reversed is a
/// perfect elimination order.
pub fn random_chordal(n: usize, rng: &mut impl Rng) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut pool = adj[u].clone();
        pool.shuffle(rng);
        for w in pool {
            if rng.gen_bool(0.6) && clique.iter().all(|&c| adj[c].contains(&w)) {
                clique.push(w);
            }
        }
        for c in clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((label[c], label[v]));
        }
    }
    Graph::from_edges(n, edges).expect("valid endpoints")
}

/// A random recursive tree plus one edge between nonadjacent vertices,
/// randomly relabeled.
pub fn random_unicyclic(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 3);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let tree = Graph::from_edges(n, edges.iter().copied()).expect("valid endpoints");
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    edges.push(*non_edges.choose(rng).expect("a tree on 3+ vertices is not complete"));
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (label[u], label[v]))).expect("valid endpoints")
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorSpec::*;
        let range = |a: usize, b: usize| if a == b { a.to_string() } else { format!("{a}..{b}") };
        match self {
            ErdosRenyi {
                n_min,
                n_max,
                p,
                seed,
                count,
            } => {
                write!(f, "er:{},{p},seed={seed},count={count}", range(*n_min, *n_max))
            }
            RandomChordal {
                n_min,
                n_max,
                seed,
                count,
            } => {
                write!(f, "chordal:{},seed={seed},count={count}", range(*n_min, *n_max))
            }
            RandomUnicyclic {
                n_min,
                n_max,
                seed,
                count,
            } => {
                write!(f, "unicyclic:{},seed={seed},count={count}", range(*n_min, *n_max))
            }
            NamedSweep { family, from, to } => write!(f, "named:{family}{}", range(*from, *to)),
            AllGraphs { n_min, n_max } => write!(f, "all:{}", range(*n_min, *n_max)),
            CorpusFile { path } => write!(f, "corpus:{}", path.display()),
        }
    }
}

/// Parses the generator mini-language:
///
/// * `er:N,P[,seed=S][,count=K]`
/// * `chordal:N[,seed=S][,count=K]`, `unicyclic:N[,seed=S][,count=K]`
/// * `named:FAMILYA..B`, e.g. `named:C8..16`
/// * `all:N`
/// * `corpus:PATH`
///
/// `N` is a vertex count or a range `A..B` (inclusive).
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameter(format!("generator '{s}': {why}"));
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected KIND:ARGS"))?;
        if kind == "corpus" {
            return Ok(GeneratorSpec::CorpusFile { path: rest.into() });
        }
        let mut positional = Vec::new();
        let (mut seed, mut count) = (0u64, DEFAULT_COUNT);
        for part in rest.split(',').map(str::trim) {
            match part.split_once('=') {
                Some(("seed", v)) => seed = v.parse().map_err(|_| bad("seed is not an integer"))?,
                Some(("count", v)) => count = v.parse().map_err(|_| bad("count is not an integer"))?,
                Some((k, _)) => return Err(bad(&format!("unknown option '{k}'"))),
                None => positional.push(part),
            }
        }
        let range = |text: &str| -> Result<(usize, usize)> {
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| bad(&format!("'{t}' is not a vertex count")))
            };
            match text.split_once("..") {
                Some((a, b)) => Ok((parse(a)?, parse(b.trim_start_matches('='))?)),
                None => parse(text).map(|n| (n, n)),
            }
        };
        match (kind, positional.as_slice()) {
            ("er", [n, p]) => {
                let (n_min, n_max) = range(n)?;
                let p: f64 = p.parse().map_err(|_| bad("edge probability is not a number"))?;
                Ok(GeneratorSpec::ErdosRenyi {
                    n_min,
                    n_max,
                    p,
                    seed,
                    count,
                })
            }
            ("chordal", [n]) => {
                let (n_min, n_max) = range(n)?;
                Ok(GeneratorSpec::RandomChordal {
                    n_min,
                    n_max,
                    seed,
                    count,
                })
            }
            ("unicyclic", [n]) => {
                let (n_min, n_max) = range(n)?;
                Ok(GeneratorSpec::RandomUnicyclic {
                    n_min,
                    n_max,
                    seed,
                    count,
                })
            }
            ("named", [spec]) => {
                let split = spec
                    .find(|c: char| c.is_ascii_digit())
                    .ok_or_else(|| bad("missing range"))?;
                let (family, nums) = spec.split_at(split);
                let family = family.trim_end_matches(':');
                let (from, to) = range(nums)?;
                Ok(GeneratorSpec::NamedSweep {
                    family: family.to_string(),
                    from,
                    to,
                })
            }
            ("all", [n]) => {
                let (n_min, n_max) = range(n)?;
                Ok(GeneratorSpec::AllGraphs { n_min, n_max })
            }
            _ => Err(bad("unknown kind or wrong number of arguments")),
        }
    }
}
