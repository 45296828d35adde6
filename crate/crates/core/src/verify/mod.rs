//! Theorem-checking harness: generators, instance expansion, checkers and
//! machine-readable reports.

mod corpus;
mod generate;
mod theorems;

pub use corpus::{all_graphs, all_graphs_up_to, canonical_form, isomorphic, read_corpus, write_corpus, MAX_CORPUS_N};
pub use generate::{erdos_renyi, random_chordal, random_unicyclic, Generated, GeneratorSpec, DEFAULT_COUNT};
pub use theorems::{parse_theorem_list, Caps, Checker, TheoremId};

use crate::error::Result;
use crate::graph::{Edge, Graph, VertexSet};
use crate::homology::Field;
use crate::invariants::minimum_decycling_sets;
use crate::transforms::LozinSpec;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

pub const SCHEMA: &str = "reglab.report/1";

/// Partitions sampled per vertex when its degree rules out enumeration.
pub const SAMPLED_PARTITIONS: usize = 8;
/// Degrees up to this value get every partition of the neighborhood.
pub const ENUMERATE_PARTITIONS_MAX_DEGREE: usize = 4;
/// Cap on the number of minimum decycling sets tried per graph.
pub const MAX_DECYCLING_SETS: usize = 16;

/// Instance parameters; which ones matter depends on the theorem.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_side: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alt_y_side: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Hypothesis not met, or an engine limit was hit.
    Skipped {
        reason: String,
    },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped { .. } => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub graph6: String,
    pub field: Field,
    #[serde(flatten)]
    pub params: Params,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema: String,
    pub theorem: TheoremId,
    pub instance: Instance,
    pub computed: BTreeMap<String, Value>,
    pub verdict: Verdict,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Counts {
    fn add(&mut self, v: &Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped { .. } => self.skipped += 1,
        }
    }
}

/// Per-theorem tallies. `non_vacuous` counts checked instances whose graph
/// has a cycle, for the theorems where acyclic instances are trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: Counts,
    pub by_theorem: BTreeMap<TheoremId, Counts>,
    pub non_vacuous: BTreeMap<TheoremId, usize>,
}

impl Summary {
    pub fn of(reports: &[TheoremReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            s.total.add(&r.verdict);
            s.by_theorem.entry(r.theorem).or_default().add(&r.verdict);
            if !matches!(r.verdict, Verdict::Skipped { .. })
                && r.computed.get("non_vacuous") == Some(&Value::Bool(true))
            {
                *s.non_vacuous.entry(r.theorem).or_default() += 1;
            }
        }
        s
    }

    pub fn has_failures(&self) -> bool {
        self.total.fail > 0
    }
}

fn sorted(set: &VertexSet) -> Vec<usize> {
    set.iter().collect()
}

/// FNV-1a, so seeds do not depend on the std hasher.
fn seed_for(g: &Graph, x: usize, seed: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in g.to_graph6().bytes().chain(x.to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// The `Y` sides tried at `x`: every subset of `N(x)` for small degree,
/// otherwise both extremes, all singletons and a seeded sample.
pub fn partition_sides(g: &Graph, x: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(x)?;
    let nbrs = sorted(g.neighbors(x));
    if nbrs.len() <= ENUMERATE_PARTITIONS_MAX_DEGREE {
        return Ok(LozinSpec::all_partitions(g, x)?
            .iter()
            .map(|s| sorted(&s.y_side))
            .collect());
    }
    let mut sides = vec![nbrs.clone(), Vec::new()];
    sides.extend(nbrs.iter().map(|&u| vec![u]));
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(g, x, seed));
    for _ in 0..SAMPLED_PARTITIONS {
        let k = rng.gen_range(0..=nbrs.len());
        let mut y: Vec<usize> = nbrs.choose_multiple(&mut rng, k).copied().collect();
        y.sort_unstable();
        sides.push(y);
    }
    let mut seen = std::collections::HashSet::new();
    sides.retain(|s| seen.insert(s.clone()));
    Ok(sides)
}

/// Expands a graph into the parameter choices checked for `theorem`. Always
/// returns at least one instance so an unmet hypothesis shows up as a skip.
pub fn instances(theorem: TheoremId, g: &Graph, seed: u64) -> Result<Vec<Params>> {
    use TheoremId::*;
    let n = g.n();
    let mut out = Vec::new();
    match theorem {
        LozinReg | LozinIm | LozinSuspension => {
            for x in 0..n {
                for y in partition_sides(g, x, seed)? {
                    out.push(Params {
                        x: Some(x),
                        y_side: Some(y),
                        ..Params::default()
                    });
                }
            }
        }
        PartitionIndep => {
            for x in (0..n).filter(|&x| g.degree(x) > 0) {
                let sides = partition_sides(g, x, seed)?;
                let base = sorted(g.neighbors(x));
                for y in sides.into_iter().filter(|y| *y != base) {
                    out.push(Params {
                        x: Some(x),
                        y_side: Some(base.clone()),
                        alt_y_side: Some(y),
                        ..Params::default()
                    });
                }
            }
        }
        TripleSubdivReg | DecyclingSubdiv => {
            out.extend(g.edges().into_iter().map(|e| Params {
                edge: Some(e),
                ..Params::default()
            }));
        }
        FoldBetti | WedgeBetti => {
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    let ok = if theorem == FoldBetti {
                        g.neighbors(u).is_subset(g.neighbors(v))
                    } else {
                        g.closed_neighborhood(u).is_subset(&g.closed_neighborhood(v))
                    };
                    if ok {
                        out.push(Params {
                            u: Some(u),
                            v: Some(v),
                            ..Params::default()
                        });
                    }
                }
            }
            if theorem == FoldBetti {
                out.push(Params::default());
            }
        }
        IsolatingBetti | IsolatingReg => {
            for e in g.edges() {
                for w in 0..n {
                    if crate::homology::is_isolating_edge(g, e, w)? {
                        out.push(Params {
                            edge: Some(e),
                            w: Some(w),
                            ..Params::default()
                        });
                    }
                }
            }
        }
        RecursionBound => {
            out.extend((0..n).map(|v| Params {
                v: Some(v),
                ..Params::default()
            }));
        }
        WhiskerVd => {
            for s in minimum_decycling_sets(g)?.into_iter().take(MAX_DECYCLING_SETS) {
                out.push(Params {
                    subset: Some(sorted(&s)),
                    ..Params::default()
                });
            }
        }
        RatioBoundLm | LozinIndexBound => {
            out.extend([1, 2].map(|m| Params {
                m: Some(m),
                ..Params::default()
            }));
        }
        _ => {}
    }
    if out.is_empty() {
        out.push(Params::default());
    }
    Ok(out)
}

/// Checks every theorem on every graph, in parallel on the current rayon
/// pool. Reports come back in (graph, theorem, instance) order.
pub fn run_graphs(graphs: &[Generated], theorems: &[TheoremId], checker: &Checker, seed: u64) -> Vec<TheoremReport> {
    enum Task<'a> {
        Check(TheoremId, &'a Graph, Params),
        Broken(TheoremId, String),
    }
    let mut tasks = Vec::new();
    for g in graphs {
        for &t in theorems {
            match g {
                Err(reason) => tasks.push(Task::Broken(t, format!("generator: {reason}"))),
                Ok(g) => match instances(t, g, seed) {
                    Ok(ps) => tasks.extend(ps.into_iter().map(|p| Task::Check(t, g, p))),
                    Err(e) => tasks.push(Task::Broken(t, format!("instance expansion: {e}"))),
                },
            }
        }
    }
    tasks
        .into_par_iter()
        .map(|task| match task {
            Task::Check(t, g, p) => checker.check(t, g, &p),
            Task::Broken(theorem, reason) => TheoremReport {
                schema: SCHEMA.to_string(),
                theorem,
                instance: Instance {
                    graph6: String::new(),
                    field: checker.caps.field,
                    params: Params::default(),
                },
                computed: BTreeMap::new(),
                verdict: Verdict::Skipped { reason },
                wall_ms: 0.0,
            },
        })
        .collect()
}

/// Generates graphs from `spec` and checks them. Generator parameter errors
/// are returned; per-graph failures become skipped reports.
pub fn run_suite(
    spec: &GeneratorSpec,
    theorems: &[TheoremId],
    checker: &Checker,
    seed: u64,
) -> Result<Vec<TheoremReport>> {
    Ok(run_graphs(&spec.generate()?, theorems, checker, seed))
}

#[cfg(test)]
mod tests;
