use super::*;
use crate::graph::{build_named, NamedFamily};

fn named(f: NamedFamily) -> Graph {
    build_named(f).unwrap()
}

fn verdicts(t: TheoremId, g: &Graph) -> Vec<Verdict> {
    let checker = Checker::default();
    instances(t, g, 0)
        .unwrap()
        .iter()
        .map(|p| checker.check(t, g, p).verdict)
        .collect()
}

#[test]
fn tags_round_trip() {
    assert_eq!(TheoremId::ALL.len(), 25);
    for &t in TheoremId::ALL {
        assert_eq!(t.tag().parse::<TheoremId>().unwrap(), t);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, format!("\"{}\"", t.tag()));
    }
    assert!("NOT_A_TAG".parse::<TheoremId>().is_err());
    assert_eq!(parse_theorem_list("all").unwrap().len(), 25);
    assert_eq!(
        parse_theorem_list("LOZIN_REG, UNICYCLIC").unwrap(),
        vec![TheoremId::LozinReg, TheoremId::Unicyclic]
    );
}

#[test]
fn every_theorem_passes_on_small_named_graphs() {
    let graphs = [
        named(NamedFamily::Cycle(5)),
        named(NamedFamily::Path(5)),
        named(NamedFamily::TwoK2),
        named(NamedFamily::Complete(4)),
        named(NamedFamily::Cycle(6)),
    ];
    for g in &graphs {
        for &t in TheoremId::ALL {
            for v in verdicts(t, g) {
                assert_ne!(v, Verdict::Fail, "{t} on {}", g.to_graph6());
            }
        }
    }
}

#[test]
fn hypotheses_are_respected() {
    let c4 = named(NamedFamily::Cycle(4));
    assert!(matches!(
        &verdicts(TheoremId::ChordalEq, &c4)[..],
        [Verdict::Skipped { .. }]
    ));
    assert!(matches!(
        &verdicts(TheoremId::Unicyclic, &named(NamedFamily::Path(4)))[..],
        [Verdict::Skipped { .. }]
    ));
    let r1 = named(NamedFamily::R(1));
    assert_eq!(verdicts(TheoremId::RnGap, &r1), vec![Verdict::Pass]);
    assert!(matches!(
        &verdicts(TheoremId::RnGap, &c4)[..],
        [Verdict::Skipped { .. }]
    ));
    // a hand-built instance that violates the domination hypothesis
    let checker = Checker::default();
    let p = Params {
        u: Some(0),
        v: Some(2),
        ..Params::default()
    };
    let r = checker.check(TheoremId::WedgeBetti, &named(NamedFamily::Path(4)), &p);
    assert!(matches!(r.verdict, Verdict::Skipped { .. }));
}

#[test]
fn resource_limits_become_skips() {
    let checker = Checker::new(
        Caps {
            exhaustive_max_n: 4,
            pruned_cap: 4,
            field: Field::GF2,
        },
        std::sync::Arc::new(crate::regularity::Cache::in_memory()),
    );
    let r = checker.check(
        TheoremId::RegImDecycling,
        &named(NamedFamily::Cycle(17)),
        &Params::default(),
    );
    match r.verdict {
        Verdict::Skipped { reason } => assert!(reason.starts_with("resource")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn partition_sampling() {
    let k7 = named(NamedFamily::Complete(7));
    let sides = partition_sides(&k7, 0, 1).unwrap();
    assert!(sides.len() >= 8 && sides.len() <= 2 + 6 + SAMPLED_PARTITIONS);
    assert_eq!(sides, partition_sides(&k7, 0, 1).unwrap());
    let p4 = named(NamedFamily::Path(4));
    assert_eq!(partition_sides(&p4, 1, 0).unwrap().len(), 4);
}

#[test]
fn report_json_shape() {
    let g = named(NamedFamily::Cycle(5));
    let reports = run_graphs(
        &[Ok(g), Err("bad line".into())],
        &[TheoremId::ImRegCochord],
        &Checker::default(),
        0,
    );
    assert_eq!(reports.len(), 2);
    let v = serde_json::to_value(&reports[0]).unwrap();
    assert_eq!(v["schema"], SCHEMA);
    assert_eq!(v["theorem"], "IM_REG_COCHORD");
    assert_eq!(v["instance"]["graph6"], "Dhc");
    assert_eq!(v["instance"]["field"], 2);
    assert_eq!(v["verdict"]["status"], "pass");
    assert_eq!(v["computed"]["reg"], 2);
    let back: TheoremReport = serde_json::from_value(v).unwrap();
    assert_eq!(back.verdict, Verdict::Pass);
    assert!(matches!(reports[1].verdict, Verdict::Skipped { .. }));
    let s = Summary::of(&reports);
    assert_eq!(
        s.total,
        Counts {
            pass: 1,
            fail: 0,
            skipped: 1
        }
    );
}

#[test]
fn ratio_bound_counts_cycles_as_non_vacuous() {
    let spec: GeneratorSpec = "named:C8..10".parse().unwrap();
    let reports = run_suite(&spec, &[TheoremId::RatioBoundLm], &Checker::default(), 0).unwrap();
    let s = Summary::of(&reports);
    assert_eq!(s.total.fail, 0);
    assert!(s.non_vacuous[&TheoremId::RatioBoundLm] >= 3);
}
