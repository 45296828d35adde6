//! Regularity of a few named graphs with both strategies, plus the cheap
//! bounds that bracket it.
//!
//! cargo run --example regularity [-- C11]

use reglab::graph::{build_named, NamedFamily};
use reglab::regularity::{regularity, regularity_bounds, RegStrategy};

fn main() -> reglab::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() {
        ["P4", "C5", "2K2", "C8", "K5", "R1", "H3"].map(String::from).to_vec()
    } else {
        names
    };
    println!(
        "{:<6} {:>3} {:>6} {:>6} {:>10}  witness",
        "graph", "n", "exh", "pruned", "bounds"
    );
    for name in names {
        let g = build_named(name.parse::<NamedFamily>()?)?;
        let exhaustive = regularity(&g, RegStrategy::exhaustive())?;
        let pruned = regularity(&g, RegStrategy::pruned())?;
        let b = regularity_bounds(&g)?;
        let witness = exhaustive
            .witness
            .map(|w| {
                format!(
                    "{:?} in degree {}",
                    w.subset.iter().collect::<Vec<_>>(),
                    w.j as isize - 1
                )
            })
            .unwrap_or_default();
        println!(
            "{:<6} {:>3} {:>6} {:>6} {:>10}  {witness}",
            name,
            g.n(),
            exhaustive.value,
            pruned.value,
            format!("[{}, {}]", b.lower, b.upper)
        );
    }
    Ok(())
}
