//! Runs the theorem checkers over a generator and prints the summary.
//!
//! cargo run --release --example verify_suite [-- GENERATOR [TAGS]]
//! e.g. `-- er:6..8,0.4,seed=3,count=50 LOZIN_REG,UNICYCLIC`

use reglab::verify::{parse_theorem_list, run_suite, Checker, GeneratorSpec, Summary, Verdict};

fn main() -> reglab::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec: GeneratorSpec = args.next().as_deref().unwrap_or("all:0..5").parse()?;
    let theorems = parse_theorem_list(args.next().as_deref().unwrap_or("all"))?;
    let reports = run_suite(&spec, &theorems, &Checker::default(), 0)?;
    let summary = Summary::of(&reports);
    for (t, c) in &summary.by_theorem {
        println!(
            "{:<18} pass {:>6} fail {:>3} skip {:>6}",
            t.tag(),
            c.pass,
            c.fail,
            c.skipped
        );
    }
    if let Some(r) = reports.iter().find(|r| r.verdict == Verdict::Fail) {
        println!("first failure: {}", serde_json::to_string(r).expect("serializes"));
    }
    println!("{spec}: {} reports, {} failures", reports.len(), summary.total.fail);
    Ok(())
}
