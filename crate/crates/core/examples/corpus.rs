//! Enumerates graphs up to isomorphism and checks canonical forms.
//!
//! cargo run --release --example corpus [-- MAX_N]

use reglab::graph::{build_named, NamedFamily};
use reglab::verify::{all_graphs, canonical_form, isomorphic};
use std::time::Instant;

fn main() -> reglab::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for n in 0..=max_n {
        let start = Instant::now();
        let graphs = all_graphs(n)?;
        println!("n = {n}: {:>6} classes in {:.1?}", graphs.len(), start.elapsed());
    }
    let c6 = build_named(NamedFamily::Cycle(6))?;
    let relabeled = reglab::Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)])?;
    println!(
        "C6 canonical {} equals relabeled canonical {}: {}",
        canonical_form(&c6)?.to_graph6(),
        canonical_form(&relabeled)?.to_graph6(),
        isomorphic(&c6, &relabeled)?
    );
    Ok(())
}
