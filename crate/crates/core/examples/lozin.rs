//! Lozin's transformation and triple subdivision: regularity and induced
//! matching number both rise by exactly one, and the Betti vector shifts up.
//!
//! cargo run --example lozin

use reglab::graph::{build_named, Edge, NamedFamily};
use reglab::homology::{betti_numbers, Field};
use reglab::invariants::induced_matching_number;
use reglab::regularity::{regularity, RegStrategy};
use reglab::transforms::{default_lozinize_budget, lozin_transform, lozinize, triple_subdivision, LozinSpec};

fn main() -> reglab::Result<()> {
    let g = build_named(NamedFamily::Cycle(5))?;
    let reg = |h: &reglab::Graph| regularity(h, RegStrategy::exhaustive()).map(|r| r.value);
    println!(
        "C5: reg {} im {} β̃ {:?}",
        reg(&g)?,
        induced_matching_number(&g)?,
        betti_numbers(&g, Field::GF2)?.as_slice()
    );

    for spec in LozinSpec::all_partitions(&g, 0)? {
        let (h, receipt) = lozin_transform(&g, &spec)?;
        println!(
            "  Y={:?} Z={:?} -> {} : reg {} im {} β̃ {:?}",
            spec.y_side.iter().collect::<Vec<_>>(),
            spec.z_side.iter().collect::<Vec<_>>(),
            receipt.output,
            reg(&h)?,
            induced_matching_number(&h)?,
            betti_numbers(&h, Field::GF2)?.as_slice()
        );
    }

    let (c8, _) = triple_subdivision(&g, Edge::new(0, 1)?)?;
    println!("subdivide 01: n={} reg {}", c8.n(), reg(&c8)?);

    for m in [1, 2] {
        let k4 = build_named(NamedFamily::Complete(4))?;
        let out = lozinize(&k4, m, default_lozinize_budget(&k4, m))?;
        println!(
            "K4 into the class with m={m}: {} steps, {} vertices",
            out.steps,
            out.graph.n()
        );
    }
    Ok(())
}
