//! The graph G* whose vertices are the edges of G, two adjacent when they
//! form an induced 2K2. Its clique number is im(G); for (C3, C5)-free graphs
//! its chromatic number is the cochordal cover number.
//!
//! cargo run --example gallai

use reglab::graph::{build_named, NamedFamily};
use reglab::invariants::{
    chromatic_number, clique_number, cochordal_cover, gallai_graph, induced_matching_number, is_induced_cycle_free,
};
use reglab::regularity::{regularity, RegStrategy};

fn main() -> reglab::Result<()> {
    for family in [
        NamedFamily::Cycle(6),
        NamedFamily::Cycle(8),
        NamedFamily::Path(7),
        NamedFamily::H(3),
    ] {
        let g = build_named(family)?;
        let star = gallai_graph(&g)?.star;
        let reg = regularity(&g, RegStrategy::exhaustive())?.value;
        println!(
            "{family}: im {} = ω(G*) {}, reg {}, χ(G*) {}, (C3,C5)-free {}",
            induced_matching_number(&g)?,
            clique_number(&star)?,
            reg,
            chromatic_number(&star)?,
            is_induced_cycle_free(&g, &[3, 5])
        );
        for (i, part) in cochordal_cover(&g)?.iter().enumerate() {
            println!(
                "  cochordal part {i}: {:?}",
                part.iter().map(|e| (e.u, e.v)).collect::<Vec<_>>()
            );
        }
    }
    Ok(())
}
