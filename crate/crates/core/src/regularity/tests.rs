use super::*;
use crate::graph::{build_named, NamedFamily};
use crate::homology::betti_numbers;
use crate::invariants::induced_matching_number;

fn named(f: NamedFamily) -> Graph {
    build_named(f).unwrap()
}

/// The definition with no shortcuts: every subset, full homology.
fn reg_oracle(g: &Graph, field: Field) -> usize {
    (0u64..1 << g.n())
        .map(|s| {
            let sub = g.induced_subgraph(&VertexSet::from_mask(s)).unwrap().graph;
            let betti = betti_numbers(&sub, field).unwrap();
            betti.top_dimension().map_or(0, |d| (d + 1) as usize)
        })
        .max()
        .unwrap()
}

fn reg(g: &Graph, strategy: RegStrategy) -> usize {
    regularity(g, strategy).unwrap().value
}

#[test]
fn named_values() {
    let ex = RegStrategy::exhaustive();
    assert_eq!(reg(&Graph::empty(0), ex), 0);
    assert_eq!(reg(&Graph::empty(6), ex), 0);
    assert_eq!(reg(&named(NamedFamily::Path(4)), ex), 1);
    assert_eq!(reg(&named(NamedFamily::Cycle(5)), ex), 2);
    assert_eq!(reg(&named(NamedFamily::TwoK2), ex), 2);
    assert_eq!(reg(&named(NamedFamily::Cycle(8)), ex), 3);
    for n in 2..7 {
        assert_eq!(reg(&named(NamedFamily::Complete(n)), ex), 1);
    }
    let c5_k2 = named(NamedFamily::Cycle(5)).disjoint_union(&named(NamedFamily::Complete(2)));
    assert_eq!(reg(&c5_k2, ex), 3);
}

#[test]
fn oracle_agrees_on_named_graphs() {
    for g in [
        named(NamedFamily::Cycle(5)),
        named(NamedFamily::Cycle(7)),
        named(NamedFamily::H(2)),
        named(NamedFamily::Path(6)),
    ] {
        assert_eq!(reg(&g, RegStrategy::exhaustive()), reg_oracle(&g, Field::GF2));
    }
}

#[test]
fn c5_witness_is_whole_cycle() {
    let r = regularity(&named(NamedFamily::Cycle(5)), RegStrategy::exhaustive()).unwrap();
    let w = r.witness.unwrap();
    assert_eq!(w.subset, VertexSet::from_mask(0b11111));
    assert_eq!(w.j, 2);
}

#[test]
fn r1_gap() {
    let r1 = named(NamedFamily::R(1));
    let im = induced_matching_number(&r1).unwrap();
    assert_eq!(reg(&r1, RegStrategy::exhaustive()), im + 1);
    assert_eq!(reg(&r1, RegStrategy::pruned()), im + 1);
}

#[test]
fn caps_are_reported() {
    let g = named(NamedFamily::Cycle(17));
    let err = regularity(&g, RegStrategy::exhaustive()).unwrap_err();
    assert!(matches!(err, Error::ResourceLimit(ref m) if m.contains("17 vertices")));
    // the pruned search still needs one subset search through the pivot
    assert!(regularity(&g, RegStrategy::pruned()).is_err());
    assert_eq!(reg(&g, RegStrategy::pruned().with_cap(17)), reg_cycle(17));
}

// reg(C_n) is ⌊(n+1)/3⌋ by the oracle on small n; checked below
fn reg_cycle(n: usize) -> usize {
    (n + 1) / 3
}

#[test]
fn cycles_follow_the_small_pattern() {
    for n in 3..12 {
        let g = named(NamedFamily::Cycle(n));
        let oracle = reg_oracle(&g, Field::GF2);
        assert_eq!(oracle, reg_cycle(n), "C{n}");
        assert_eq!(reg(&g, RegStrategy::pruned()), oracle);
    }
}

#[test]
fn odd_characteristic() {
    let gf3 = Field::new(3).unwrap();
    for g in [
        named(NamedFamily::Cycle(5)),
        named(NamedFamily::Cycle(8)),
        named(NamedFamily::TwoK2),
    ] {
        let ex = RegStrategy::exhaustive().with_field(gf3);
        assert_eq!(reg(&g, ex), reg_oracle(&g, gf3));
        assert_eq!(reg(&g, RegStrategy::pruned().with_field(gf3)), reg_oracle(&g, gf3));
    }
}

#[test]
fn bounds() {
    let c8 = regularity_bounds(&named(NamedFamily::Cycle(8))).unwrap();
    assert_eq!(c8, RegBounds { lower: 2, upper: 3 });
    let tree = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]).unwrap();
    let b = regularity_bounds(&tree).unwrap();
    assert_eq!(b.lower, b.upper);
    assert_eq!(
        regularity_bounds(&Graph::empty(3)).unwrap(),
        RegBounds { lower: 0, upper: 0 }
    );
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]
    #[test]
    fn strategies_agree_with_oracle(n in 1usize..8, bits in proptest::collection::vec(proptest::bool::ANY, 28)) {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .zip(bits.iter()).filter(|(_, &b)| b).map(|(e, _)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        let oracle = reg_oracle(&g, Field::GF2);
        let ex = regularity(&g, RegStrategy::exhaustive()).unwrap();
        proptest::prop_assert_eq!(ex.value, oracle);
        proptest::prop_assert_eq!(reg(&g, RegStrategy::pruned()), oracle);
        let w = ex.witness.unwrap();
        let sub = g.induced_subgraph(&w.subset).unwrap().graph;
        proptest::prop_assert!(betti_numbers(&sub, Field::GF2).unwrap().get(w.j as isize - 1) != 0);
        let b = regularity_bounds(&g).unwrap();
        proptest::prop_assert!(b.lower <= oracle && oracle <= b.upper);
    }
}
