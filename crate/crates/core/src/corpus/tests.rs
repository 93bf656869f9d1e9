use super::*;
use crate::lab::Origin;

const SAMPLE: &str = include_str!("../../examples/sample.json");

fn schema_path(e: Error) -> String {
    match e {
        Error::Schema { path, .. } => path,
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn minimal_ring_parses() {
    let ws = Workspace::from_json(r#"{"rings": {"Z6": {"moduli": [6], "mul": [[[1]]], "one": [1]}}}"#).unwrap();
    assert_eq!(ws.ring("Z6").unwrap().order(), 6);
    assert_eq!(ws.caps(), Caps::default());
}

#[test]
fn undefined_ring_is_named() {
    let err = Workspace::from_json(r#"{"modules": {"M": {"ring": "S", "moduli": [2], "action": [[[1]]]}}}"#).unwrap_err();
    assert_eq!(schema_path(err.clone()), "modules.M.ring");
    assert!(err.to_string().contains("undefined ring S"));
}

#[test]
fn corrupted_action_is_rejected() {
    let bad = SAMPLE.replace("[[0, 1], [0, 0]],", "[[0, 1], [1, 0]],");
    assert_ne!(bad, SAMPLE);
    assert_eq!(schema_path(Workspace::from_json(&bad).unwrap_err()), "modules.e1R");
}

#[test]
fn unknown_fields_and_bad_generators() {
    assert!(Workspace::from_json(r#"{"ringz": {}}"#).is_err());
    let err = Workspace::from_json(r#"{"corpora": {"c": ["zn:n<x"]}}"#).unwrap_err();
    assert_eq!(schema_path(err), "corpora.c[0]");
    let err = Workspace::from_json(r#"{"corpora": {"c": ["sums:c,max=2"]}}"#).unwrap_err();
    assert!(err.to_string().contains("refers to itself"));
    let err = Workspace::from_json(r#"{"corpora": {"c": ["zn:n<=2"]}, "suites": [{"corpus": "c", "checks": ["nope"]}]}"#)
        .unwrap_err();
    assert_eq!(schema_path(err), "suites[0].checks");
}

#[test]
fn generator_specs_parse() {
    assert_eq!(GeneratorSpec::parse("zn:n≤12").unwrap(), GeneratorSpec::Regular { max: 12 });
    assert_eq!(GeneratorSpec::parse("random:count=100,seed=7").unwrap(), GeneratorSpec::Random { count: 100, seed: Some(7) });
    assert_eq!(GeneratorSpec::parse("sums:c").unwrap(), GeneratorSpec::Sums { corpus: "c".into(), max: 2 });
    assert_eq!(
        GeneratorSpec::parse("incidence:poset=X,ring=A").unwrap(),
        GeneratorSpec::Incidence { poset: "X".into(), ring: "A".into(), module: None }
    );
    assert_eq!(GeneratorSpec::parse("M").unwrap(), GeneratorSpec::Module("M".into()));
    assert!(GeneratorSpec::parse("random:seed=1").is_err());
}

#[test]
fn builtin_rings() {
    let orders: Vec<u128> =
        ["Z/12", "UT2(Z2)", "UT2(Z4)", "Mat2(Z2)", "GF4", "Dual(Z3)"].iter().map(|n| builtin_ring(n).unwrap().order()).collect();
    assert_eq!(orders, [12, 8, 64, 16, 4, 9]);
    assert!(builtin_ring("Z/0").is_none());
    assert!(builtin_ring("UT2(Z)").is_none());
}

#[test]
fn sample_workspace_validates() {
    let ws = Workspace::from_json(SAMPLE).unwrap();
    assert_eq!(ws.module("e1R").unwrap().order(), 4);
    assert_eq!(ws.poset("diamond").unwrap().pairs().len(), 9);
    let examples = ws.corpus("examples").unwrap();
    assert!(matches!(examples.last().unwrap().origin, Origin::Incidence(_)));
    assert_eq!(ws.find("Z2(diamond)").unwrap().module.order(), 2u128.pow(4));
}

#[test]
fn zn_generator_counts() {
    let ws = Workspace::from_json(r#"{"corpora": {"c": ["zn:n<=12"]}}"#).unwrap();
    let members = ws.corpus("c").unwrap();
    assert_eq!(members.len(), 12);
    assert!(members.iter().enumerate().all(|(i, m)| m.module.order() == i as u128 + 1));
}

#[test]
fn idempotent_generator_includes_e1r() {
    let ws = Workspace::from_json(SAMPLE).unwrap();
    let members = ws.expand(&GeneratorSpec::Idempotents("UT2(Z2)".into())).unwrap();
    // UT2(Z2) has 6 idempotents: 0, 1, e11, e22, e11 + e12, e22 + e12
    assert_eq!(members.len(), 6);
    let e1r = ws.module("e1R").unwrap();
    let iso = members
        .iter()
        .filter(|m| m.module.order() == 4)
        .filter_map(|m| crate::hom::find_isomorphism(&m.module, &e1r, &Caps::default()).unwrap())
        .count();
    assert!(iso >= 1);
}

#[test]
fn sums_pair_members_over_one_ring() {
    let ws = Workspace::from_json(r#"{"corpora": {"a": ["zn:n<=3", "eR:Z/2"], "b": ["sums:a,max=3"]}}"#).unwrap();
    let sums = ws.corpus("b").unwrap();
    // over Z/2 the members are Z/2, 0 and Z/2 again: 6 pairs and 10 triples;
    // Z/1 and Z/3 each contribute one pair and one triple
    assert_eq!(sums.len(), 6 + 10 + 2 + 2);
    assert!(sums.iter().all(|m| matches!(&m.origin, Origin::Sum(f) if f.len() >= 2)));
}

#[test]
fn random_corpus_is_deterministic() {
    let ws = Workspace::from_json(r#"{"corpora": {"r": ["random:count=100,seed=7"]}}"#).unwrap();
    let a = ws.corpus("r").unwrap();
    let b = ws.corpus("r").unwrap();
    assert_eq!(a.len(), 100);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.module, y.module);
        assert!(x.module.order() <= 64 && x.module.ring().order() <= 64);
    }
    let other = random_modules(100, 8, &RandomLimits::default());
    assert!(a.iter().zip(&other).any(|(x, y)| x.module != y.module));
}

#[test]
fn sample_suites_pass() {
    let ws = Workspace::from_json(SAMPLE).unwrap();
    let run = ws.run_suites(RunOptions::default()).unwrap();
    let bad: Vec<_> = run.records.iter().filter(|r| r.outcome.is_failure()).collect();
    assert!(bad.is_empty(), "{bad:?}");
    assert_eq!(run.exit_code(), 0);
    let lines = run.to_json_lines();
    assert_eq!(lines.lines().count(), run.records.len());
    let first: ResultRecord = serde_json::from_str(lines.lines().next().unwrap()).unwrap();
    assert_eq!(first, run.records[0]);
    assert_eq!(ws.run_suites(RunOptions::default()).unwrap(), run);
}
