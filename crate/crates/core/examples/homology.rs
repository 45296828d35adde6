//! Reduced Betti numbers of independence complexes, over GF(2) and GF(3),
//! and the fold reduction that leaves them unchanged.
//!
//! cargo run --example homology

use reglab::graph::{build_named, Graph, NamedFamily};
use reglab::homology::{betti_numbers, fold_reduce, Field};

fn main() -> reglab::Result<()> {
    let gf3 = Field::new(3)?;
    // the graph on no vertices has complex {∅}, nonzero only in degree -1
    println!(
        "empty graph: {:?}",
        betti_numbers(&Graph::empty(0), Field::GF2)?.as_slice()
    );
    for family in [
        NamedFamily::Path(4),
        NamedFamily::Cycle(5),
        NamedFamily::Cycle(6),
        NamedFamily::Cycle(9),
        NamedFamily::TwoK2,
        NamedFamily::R(1),
    ] {
        let g = build_named(family)?;
        let folded = fold_reduce(&g);
        let b2 = betti_numbers(&g, Field::GF2)?;
        let b3 = betti_numbers(&g, gf3)?;
        // index 0 of the slice is degree -1
        println!(
            "{family:<4} β̃(GF2) from degree -1: {:?}  GF3 agrees: {}  folded to {} of {} vertices, same: {}",
            b2.as_slice(),
            b2.as_slice() == b3.as_slice(),
            folded.n(),
            g.n(),
            betti_numbers(&folded, Field::GF2)? == b2
        );
    }
    Ok(())
}
