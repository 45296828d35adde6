//! Exact combinatorial invariants. Graph algorithms here run on 64-bit
//! adjacency masks and return a resource-limit error beyond 64 vertices.

mod chordal;
mod classes;
mod cliques;
mod cochord;
mod coloring;
mod decomposable;
mod decycling;
mod gallai;
mod matching;
mod perfect;

pub use chordal::{is_chordal, is_cochordal, perfect_elimination_order};
pub use classes::{
    contains_induced, find_induced, girth, h_graph, in_class, is_bipartite, is_ck_free_up_to, is_hn_free_up_to,
    is_induced_cycle_free, is_unicyclic, ClassSpec,
};
pub use cliques::{clique_number, independence_number, maximum_clique, maximum_independent_set};
pub use cochord::{
    cochordal_cover, cochordal_cover_capped, cochordal_cover_number, cochordal_cover_number_capped,
    maximal_cochordal_sets, DEFAULT_COCHORD_CAP,
};
pub use coloring::{chromatic_number, chromatic_number_budgeted, optimal_coloring, DEFAULT_COLORING_BUDGET};
pub use decomposable::{is_shedding_vertex, is_vertex_decomposable, is_vertex_decomposable_capped, DEFAULT_VD_CAP};
pub use decycling::{decycling_number, is_forest, minimum_decycling_sets};
pub use gallai::{forms_induced_2k2, gallai_graph, GallaiGraph};
pub use matching::{induced_matching_number, maximum_induced_matching};
pub use perfect::{is_perfect, is_perfect_capped, DEFAULT_PERFECT_CAP};

pub(crate) use chordal::is_chordal_masks;
pub(crate) use classes::short_cycle_edge;
pub(crate) use cliques::alpha_within;
pub(crate) use matching::im_masks;

/// Set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn complement_masks(adj: &[u64]) -> Vec<u64> {
    let all = full_mask(adj.len());
    adj.iter().enumerate().map(|(v, &m)| all & !m & !(1 << v)).collect()
}
