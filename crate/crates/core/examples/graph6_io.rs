//! Reading and writing graphs: graph6, edge lists and the named families.
//!
//! cargo run --example graph6_io

use reglab::graph::{build_named, parse_edge_list, parse_graph6, to_edge_list, NamedFamily};

fn main() -> reglab::Result<()> {
    let c5 = build_named("C5".parse::<NamedFamily>()?)?;
    let text = c5.to_graph6();
    println!("C5 as graph6: {text}");
    assert_eq!(parse_graph6(text.as_bytes())?, c5);

    let list = to_edge_list(&c5);
    print!("as an edge list:\n{list}");
    assert_eq!(parse_edge_list(&list)?, c5);

    // Graph serializes as its graph6 string
    println!("as JSON: {}", serde_json::to_string(&c5).expect("serializes"));

    match parse_graph6(b"D?{!") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad input is reported: {e}"),
    }
    Ok(())
}
