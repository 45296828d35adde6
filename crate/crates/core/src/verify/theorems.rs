use super::{Instance, Params, TheoremReport, Verdict, SCHEMA};
use crate::error::{Error, Result};
use crate::graph::{build_named, Graph, NamedFamily, VertexSet};
use crate::homology::{betti_numbers, fold_reduce, is_isolating_edge, wedge_split_betti, BettiVector, Field};
use crate::invariants::{
    chromatic_number, clique_number, cochordal_cover_number, decycling_number, gallai_graph, girth, in_class,
    independence_number, induced_matching_number, is_chordal, is_forest, is_induced_cycle_free, is_perfect,
    is_unicyclic, is_vertex_decomposable, ClassSpec,
};
use crate::regularity::{cached_regularity, Cache, RegStrategy};
use crate::transforms::{
    default_lozinize_budget, lozin_transform, lozinize_steps, triple_subdivision, whisker, LozinSpec,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

macro_rules! theorems {
    ($($variant:ident => $tag:literal, $claim:literal;)*) => {
        /// One checkable claim about regularity and its neighbors.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(try_from = "String", into = "String")]
        pub enum TheoremId { $($variant),* }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn tag(self) -> &'static str {
                match self { $(TheoremId::$variant => $tag),* }
            }

            /// The claim in symbols.
            pub fn claim(self) -> &'static str {
                match self { $(TheoremId::$variant => $claim),* }
            }
        }

        impl FromStr for TheoremId {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($tag => Ok(TheoremId::$variant),)*
                    _ => Err(Error::InvalidParameter(format!("unknown theorem tag {s:?}"))),
                }
            }
        }
    };
}

theorems! {
    LozinReg => "LOZIN_REG", "reg(L_x(G)) = reg(G) + 1";
    LozinIm => "LOZIN_IM", "im(L_x(G; Y, Z)) = im(G) + 1";
    LozinSuspension => "LOZIN_SUSPENSION", "β̃_d(L_x(G)) = β̃_{d-1}(G) for all d";
    PartitionIndep => "PARTITION_INDEP", "β̃ and reg of L_x(G; Y, Z) do not depend on the split";
    TripleSubdivReg => "TRIPLE_SUBDIV_REG", "reg(L(G; e)) = reg(G) + 1";
    ImRegCochord => "IM_REG_COCHORD", "im(G) ≤ reg(G) ≤ cochord(G)";
    ChordalEq => "CHORDAL_EQ", "G chordal ⇒ im(G) = reg(G) = cochord(G)";
    VdC4c5Eq => "VD_C4C5_EQ", "G (C4, C5)-free and vertex decomposable ⇒ reg(G) = im(G)";
    FoldBetti => "FOLD_BETTI", "N(u) ⊆ N(v) ⇒ β̃(G) = β̃(G - v)";
    WedgeBetti => "WEDGE_BETTI", "N[u] ⊆ N[v] ⇒ β̃_d(G) = β̃_d(G - v) + β̃_{d-1}(G - N[v])";
    IsolatingBetti => "ISOLATING_BETTI", "e isolating for w ⇒ β̃(G) = β̃(G - e)";
    IsolatingReg => "ISOLATING_REG", "e isolating for w, w with a degree-2 neighbor ⇒ reg(H) = reg(H - e)";
    GstarOmegaIm => "GSTAR_OMEGA_IM", "ω(G*) = im(G)";
    GstarChiCochord => "GSTAR_CHI_COCHORD", "G (C3, C5)-free ⇒ χ(G*) = cochord(G)";
    GstarSandwich => "GSTAR_SANDWICH", "G (C3, C5)-free ⇒ ω(G*) ≤ reg(G) ≤ χ(G*)";
    PerfectGstarEq => "PERFECT_GSTAR_EQ", "G (C3, C5)-free, G* perfect ⇒ reg(G) = im(G)";
    RatioBoundLm => "RATIO_BOUND_LM", "G ∈ 𝓛(m) ⇒ m·χ(G*) ≤ (m+1)·ω(G*)";
    LozinIndexBound => "LOZIN_INDEX_BOUND", "m·reg(G) ≤ (m+1)·im(G) + (Lozin steps into 𝓛(m))";
    DecyclingSubdiv => "DECYCLING_SUBDIV", "∇(L(G; e)) = ∇(G)";
    WhiskerVd => "WHISKER_VD", "S decycling ⇒ W_S(G) vertex decomposable";
    RegImDecycling => "REG_IM_DECYCLING", "reg(G) ≤ im(G) + ∇(G)";
    Unicyclic => "UNICYCLIC", "G unicyclic ⇒ im(G) ≤ reg(G) ≤ im(G) + 1";
    WhiskerAlpha => "WHISKER_ALPHA", "reg(W(G)) = im(W(G)) = α(G)";
    RecursionBound => "RECURSION_BOUND", "reg(G) ≤ max(reg(G - v), reg(G - N[v]) + 1)";
    RnGap => "RN_GAP", "reg(R_n) = im(R_n) + n";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl TryFrom<String> for TheoremId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TheoremId> for String {
    fn from(t: TheoremId) -> String {
        t.tag().to_string()
    }
}

/// Parses `all` or a comma-separated list of tags.
pub fn parse_theorem_list(s: &str) -> Result<Vec<TheoremId>> {
    if s.trim() == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse())
        .collect()
}

/// Engine limits for the checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Graphs up to this size use the exhaustive regularity search; larger
    /// ones the pruned search.
    pub exhaustive_max_n: usize,
    /// Subset-search cap inside the pruned search.
    pub pruned_cap: usize,
    pub field: Field,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            exhaustive_max_n: 12,
            pruned_cap: 18,
            field: Field::GF2,
        }
    }
}

/// Evaluates theorem instances. Regularity values go through a shared cache.
#[derive(Clone, Debug)]
pub struct Checker {
    pub caps: Caps,
    cache: Arc<Cache>,
}

impl Default for Checker {
    fn default() -> Self {
        Checker::new(Caps::default(), Arc::new(Cache::in_memory()))
    }
}

/// `Ok(None)` passes, `Ok(Some(reason))` is a hypothesis failure.
type Outcome = Result<Verdict>;

fn skip(reason: impl Into<String>) -> Outcome {
    Ok(Verdict::Skipped { reason: reason.into() })
}

fn holds(ok: bool) -> Outcome {
    Ok(if ok { Verdict::Pass } else { Verdict::Fail })
}

fn betti_json(b: &BettiVector) -> Value {
    json!(b.as_slice())
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

impl Checker {
    pub fn new(caps: Caps, cache: Arc<Cache>) -> Self {
        Checker { caps, cache }
    }

    pub fn cache(&self) -> &Cache {
        &self.cache
    }

    pub fn reg(&self, g: &Graph) -> Result<usize> {
        let strategy = if g.n() <= self.caps.exhaustive_max_n {
            RegStrategy::exhaustive()
        } else {
            RegStrategy::pruned().with_cap(self.caps.pruned_cap)
        };
        cached_regularity(g, strategy.with_field(self.caps.field), &self.cache)
    }

    fn betti(&self, g: &Graph) -> Result<BettiVector> {
        betti_numbers(g, self.caps.field)
    }

    pub fn check(&self, theorem: TheoremId, g: &Graph, params: &Params) -> TheoremReport {
        let start = Instant::now();
        let mut computed = BTreeMap::new();
        let verdict = match self.evaluate(theorem, g, params, &mut computed) {
            Ok(v) => v,
            Err(e @ (Error::ResourceLimit(_) | Error::BudgetExceeded { .. })) => Verdict::Skipped {
                reason: format!("resource: {e}"),
            },
            Err(e) => Verdict::Skipped {
                reason: format!("invalid instance: {e}"),
            },
        };
        TheoremReport {
            schema: SCHEMA.to_string(),
            theorem,
            instance: Instance {
                graph6: g.to_graph6(),
                field: self.caps.field,
                params: params.clone(),
            },
            computed,
            verdict,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    fn evaluate(&self, theorem: TheoremId, g: &Graph, p: &Params, out: &mut BTreeMap<String, Value>) -> Outcome {
        use TheoremId::*;
        let mut put = |k: &str, v: Value| {
            out.insert(k.to_string(), v);
        };
        match theorem {
            LozinReg | LozinIm | LozinSuspension => {
                let (Some(x), Some(y)) = (p.x, &p.y_side) else {
                    return skip("needs a vertex x and a side Y");
                };
                let (after, _) = lozin_transform(g, &LozinSpec::from_y_side(g, x, set(y))?)?;
                match theorem {
                    LozinReg => {
                        let (b, a) = (self.reg(g)?, self.reg(&after)?);
                        put("reg_before", json!(b));
                        put("reg_after", json!(a));
                        holds(a == b + 1)
                    }
                    LozinIm => {
                        let (b, a) = (induced_matching_number(g)?, induced_matching_number(&after)?);
                        put("im_before", json!(b));
                        put("im_after", json!(a));
                        holds(a == b + 1)
                    }
                    _ => {
                        let (b, a) = (self.betti(g)?, self.betti(&after)?);
                        put("betti_before", betti_json(&b));
                        put("betti_after", betti_json(&a));
                        holds(a == b.suspension())
                    }
                }
            }
            PartitionIndep => {
                let (Some(x), Some(y), Some(y2)) = (p.x, &p.y_side, &p.alt_y_side) else {
                    return skip("needs a vertex x and two sides Y, Y'");
                };
                let (first, _) = lozin_transform(g, &LozinSpec::from_y_side(g, x, set(y))?)?;
                let (second, _) = lozin_transform(g, &LozinSpec::from_y_side(g, x, set(y2))?)?;
                let (b1, b2) = (self.betti(&first)?, self.betti(&second)?);
                let (r1, r2) = (self.reg(&first)?, self.reg(&second)?);
                put("betti_first", betti_json(&b1));
                put("betti_second", betti_json(&b2));
                put("reg_first", json!(r1));
                put("reg_second", json!(r2));
                holds(b1 == b2 && r1 == r2)
            }
            TripleSubdivReg | DecyclingSubdiv => {
                let Some(e) = p.edge else {
                    return skip("needs an edge");
                };
                let (after, _) = triple_subdivision(g, e)?;
                if theorem == TripleSubdivReg {
                    let (b, a) = (self.reg(g)?, self.reg(&after)?);
                    put("reg_before", json!(b));
                    put("reg_after", json!(a));
                    holds(a == b + 1)
                } else {
                    let (b, a) = (decycling_number(g)?.0, decycling_number(&after)?.0);
                    put("decycling_before", json!(b));
                    put("decycling_after", json!(a));
                    holds(a == b)
                }
            }
            ImRegCochord => {
                let (im, reg, cochord) = (induced_matching_number(g)?, self.reg(g)?, cochordal_cover_number(g)?);
                put("im", json!(im));
                put("reg", json!(reg));
                put("cochord", json!(cochord));
                holds(im <= reg && reg <= cochord)
            }
            ChordalEq => {
                if !is_chordal(g) {
                    return skip("not chordal");
                }
                let (im, reg, cochord) = (induced_matching_number(g)?, self.reg(g)?, cochordal_cover_number(g)?);
                put("im", json!(im));
                put("reg", json!(reg));
                put("cochord", json!(cochord));
                holds(im == reg && reg == cochord)
            }
            VdC4c5Eq => {
                if !is_induced_cycle_free(g, &[4, 5]) {
                    return skip("not (C4, C5)-free");
                }
                if !is_vertex_decomposable(g)? {
                    return skip("not vertex decomposable");
                }
                let (im, reg) = (induced_matching_number(g)?, self.reg(g)?);
                put("im", json!(im));
                put("reg", json!(reg));
                holds(im == reg)
            }
            FoldBetti => {
                let before = self.betti(g)?;
                put("betti", betti_json(&before));
                match (p.u, p.v) {
                    (Some(u), Some(v)) => {
                        g.check_vertex(u)?;
                        g.check_vertex(v)?;
                        if u == v || !g.neighbors(u).is_subset(g.neighbors(v)) {
                            return skip("needs u ≠ v with N(u) ⊆ N(v)");
                        }
                        let after = self.betti(&g.delete_vertex(v)?.graph)?;
                        put("betti_minus_v", betti_json(&after));
                        holds(before == after)
                    }
                    _ => {
                        let reduced = fold_reduce(g);
                        let after = self.betti(&reduced)?;
                        put("folded_n", json!(reduced.n()));
                        put("betti_folded", betti_json(&after));
                        holds(before == after)
                    }
                }
            }
            WedgeBetti => {
                let (Some(u), Some(v)) = (p.u, p.v) else {
                    return skip("needs u, v with N[u] ⊆ N[v]");
                };
                let whole = self.betti(g)?;
                let (minus_v, link) = match wedge_split_betti(g, u, v, self.caps.field) {
                    Err(Error::DominationRequired { .. }) => return skip("needs u ≠ v with N[u] ⊆ N[v]"),
                    other => other?,
                };
                put("betti", betti_json(&whole));
                put("betti_minus_v", betti_json(&minus_v));
                put("betti_minus_closed_v", betti_json(&link));
                let top = whole
                    .as_slice()
                    .len()
                    .max(minus_v.as_slice().len())
                    .max(link.as_slice().len() + 1);
                holds((-1..top as isize).all(|d| whole.get(d) == minus_v.get(d) + link.get(d - 1)))
            }
            IsolatingBetti | IsolatingReg => {
                let (Some(e), Some(w)) = (p.edge, p.w) else {
                    return skip("needs an edge e and a vertex w");
                };
                if !is_isolating_edge(g, e, w)? {
                    return skip("e is not isolating for w");
                }
                let minus = g.delete_edges(&[e])?;
                if theorem == IsolatingBetti {
                    let (b, a) = (self.betti(g)?, self.betti(&minus)?);
                    put("betti", betti_json(&b));
                    put("betti_minus_e", betti_json(&a));
                    holds(a == b)
                } else {
                    if !g.neighbors(w).iter().any(|x| g.degree(x) == 2) {
                        return skip("w has no neighbor of degree 2");
                    }
                    let (b, a) = (self.reg(g)?, self.reg(&minus)?);
                    put("reg", json!(b));
                    put("reg_minus_e", json!(a));
                    holds(a == b)
                }
            }
            GstarOmegaIm | GstarChiCochord | GstarSandwich | PerfectGstarEq => {
                if g.is_edgeless() {
                    return skip("no edges");
                }
                if theorem != GstarOmegaIm && !is_induced_cycle_free(g, &[3, 5]) {
                    return skip("not (C3, C5)-free");
                }
                let star = gallai_graph(g)?.star;
                match theorem {
                    GstarOmegaIm => {
                        let (omega, im) = (clique_number(&star)?, induced_matching_number(g)?);
                        put("omega_star", json!(omega));
                        put("im", json!(im));
                        holds(omega == im)
                    }
                    GstarChiCochord => {
                        let (chi, cochord) = (chromatic_number(&star)?, cochordal_cover_number(g)?);
                        put("chi_star", json!(chi));
                        put("cochord", json!(cochord));
                        holds(chi == cochord)
                    }
                    GstarSandwich => {
                        let (omega, reg, chi) = (clique_number(&star)?, self.reg(g)?, chromatic_number(&star)?);
                        put("omega_star", json!(omega));
                        put("reg", json!(reg));
                        put("chi_star", json!(chi));
                        holds(omega <= reg && reg <= chi)
                    }
                    _ => {
                        if !is_perfect(&star)? {
                            return skip("G* is not perfect");
                        }
                        let (im, reg) = (induced_matching_number(g)?, self.reg(g)?);
                        put("im", json!(im));
                        put("reg", json!(reg));
                        holds(im == reg)
                    }
                }
            }
            RatioBoundLm => {
                let m = p.m.unwrap_or(1);
                let spec = ClassSpec::new(m)?;
                if !in_class(g, spec) {
                    return skip(format!("not in class L({m})"));
                }
                if g.is_edgeless() {
                    return skip("no edges");
                }
                let star = gallai_graph(g)?.star;
                let (omega, chi) = (clique_number(&star)?, chromatic_number(&star)?);
                put("m", json!(m));
                put("omega_star", json!(omega));
                put("chi_star", json!(chi));
                put("non_vacuous", json!(girth(g).is_some()));
                holds(m * chi <= (m + 1) * omega)
            }
            LozinIndexBound => {
                let m = p.m.unwrap_or(1);
                let steps = lozinize_steps(g, m, default_lozinize_budget(g, m))?;
                let (im, reg) = (induced_matching_number(g)?, self.reg(g)?);
                put("m", json!(m));
                put("lozin_steps", json!(steps));
                put("im", json!(im));
                put("reg", json!(reg));
                holds(m * reg <= (m + 1) * im + steps)
            }
            WhiskerVd => {
                let s = match &p.subset {
                    Some(s) => set(s),
                    None => decycling_number(g)?.1,
                };
                g.check_set(&s)?;
                if !is_forest(&g.delete_vertices(&s)?.graph) {
                    return skip("S is not a decycling set");
                }
                let (w, _) = whisker(g, &s)?;
                let vd = is_vertex_decomposable(&w)?;
                put("whiskered", json!(w.to_graph6()));
                put("vertex_decomposable", json!(vd));
                holds(vd)
            }
            RegImDecycling => {
                let (im, reg, nabla) = (induced_matching_number(g)?, self.reg(g)?, decycling_number(g)?.0);
                put("im", json!(im));
                put("reg", json!(reg));
                put("decycling", json!(nabla));
                holds(reg <= im + nabla)
            }
            Unicyclic => {
                if !is_unicyclic(g) {
                    return skip("not unicyclic");
                }
                let (im, reg) = (induced_matching_number(g)?, self.reg(g)?);
                put("im", json!(im));
                put("reg", json!(reg));
                holds(im <= reg && reg <= im + 1)
            }
            WhiskerAlpha => {
                let w = crate::transforms::whisker_all(g);
                let (reg, im, alpha) = (self.reg(&w)?, induced_matching_number(&w)?, independence_number(g)?);
                put("reg_whiskered", json!(reg));
                put("im_whiskered", json!(im));
                put("alpha", json!(alpha));
                holds(reg == im && im == alpha)
            }
            RecursionBound => {
                let Some(v) = p.v else {
                    return skip("needs a vertex v");
                };
                g.check_vertex(v)?;
                let reg = self.reg(g)?;
                let minus = self.reg(&g.delete_vertex(v)?.graph)?;
                let link = self.reg(&g.delete_vertices(&g.closed_neighborhood(v))?.graph)?;
                put("reg", json!(reg));
                put("reg_minus_v", json!(minus));
                put("reg_minus_closed_v", json!(link));
                holds(reg <= minus.max(link + 1))
            }
            RnGap => {
                let n = g.n();
                let k = if n >= 11 && (n - 1).is_multiple_of(5) {
                    (n - 1) / 5 - 1
                } else {
                    0
                };
                if k == 0 || build_named(NamedFamily::R(k))? != *g {
                    return skip("not R_n in its standard labeling");
                }
                let (im, reg) = (induced_matching_number(g)?, self.reg(g)?);
                put("n", json!(k));
                put("im", json!(im));
                put("reg", json!(reg));
                holds(reg == im + k)
            }
        }
    }
}
