//! Decycling sets, and whiskering: pendants on a decycling set give a vertex
//! decomposable graph, and whiskering every vertex gives reg = im = α.
//!
//! cargo run --example decycling_whiskers

use reglab::graph::{build_named, NamedFamily};
use reglab::invariants::{
    decycling_number, independence_number, induced_matching_number, is_vertex_decomposable, minimum_decycling_sets,
};
use reglab::regularity::{regularity, RegStrategy};
use reglab::transforms::{whisker, whisker_all};

fn main() -> reglab::Result<()> {
    for family in [NamedFamily::Cycle(5), NamedFamily::Complete(4), NamedFamily::R(1)] {
        let g = build_named(family)?;
        let (nabla, witness) = decycling_number(&g)?;
        let all = minimum_decycling_sets(&g)?;
        let (w, _) = whisker(&g, &witness)?;
        println!(
            "{family}: ∇ = {nabla}, {} minimum sets, W_S vertex decomposable: {}",
            all.len(),
            is_vertex_decomposable(&w)?
        );
    }
    for family in [NamedFamily::Cycle(5), NamedFamily::Path(5), NamedFamily::Complete(4)] {
        let g = build_named(family)?;
        let w = whisker_all(&g);
        println!(
            "W({family}): reg {} im {} α(G) {}",
            regularity(&w, RegStrategy::exhaustive())?.value,
            induced_matching_number(&w)?,
            independence_number(&g)?
        );
    }
    Ok(())
}
