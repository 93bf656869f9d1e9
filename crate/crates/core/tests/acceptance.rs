//! One line per acceptance criterion, then a single assertion over all of them.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::Arc;
use std::time::{Duration, Instant};

use endoregular::corpus::{random_modules, run_corpus, RandomLimits, RunOptions, SuiteSummary, Workspace};
use endoregular::incidence::{build_incidence_algebra, incend_check, Preorder};
use endoregular::lab::ModuleLab;
use endoregular::module::{principal_right_ideal, regular_module, submodule_generated, FiniteModule};
use endoregular::ring::constructions::{upper_triangular, zn};
use endoregular::{Caps, Verdict, Witness};

/// Hom cap for the corpus criteria, raised so that End of every pairwise sum
/// (largest: UT2(Z4) ⊕ UT2(Z4), 2^24 elements) can be swept.
const CORPUS_CAPS: Caps = Caps { elements: 1 << 16, submodules: 4096, homs: 1 << 25 };

const CORPUS: &str = r#"{
  "corpora": {
    "base": ["zn:n<=30", "eR:UT2(Z2)", "eR:UT2(Z4)", "eR:Mat2(Z2)"],
    "pairs": ["sums:base,max=2"],
    "triples": ["sums:base,max=3"]
  }
}"#;

struct Line {
    ok: bool,
    detail: String,
    elapsed: Duration,
    budget: Option<Duration>,
}

impl Line {
    fn passed(&self) -> bool {
        self.ok && self.budget.is_none_or(|b| self.elapsed <= b)
    }
}

/// Runs one criterion; `budget_secs` is its time limit, if it has one.
fn criterion(n: u32, budget_secs: Option<u64>, body: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (ok, detail) = body();
    let line = Line { ok, detail, elapsed: start.elapsed(), budget: budget_secs.map(Duration::from_secs) };
    let limit = match line.budget {
        Some(b) => format!(" of {b:?}"),
        None => String::new(),
    };
    println!(
        "criterion {n}: {} ({:.2?}{limit}) {}",
        if line.passed() { "PASS" } else { "FAIL" },
        line.elapsed,
        line.detail
    );
    line
}

fn workspace() -> Workspace {
    let mut ws = Workspace::from_json(CORPUS).unwrap().file().clone();
    ws.caps = CORPUS_CAPS;
    Workspace::new(ws).unwrap()
}

/// Members of the base corpus and their pairwise sums.
fn corpus(ws: &Workspace, with_triples: bool) -> Vec<endoregular::lab::CorpusMember> {
    let mut members = ws.corpus("base").unwrap();
    members.extend(ws.corpus(if with_triples { "triples" } else { "pairs" }).unwrap());
    members
}

fn tally(members: &[endoregular::lab::CorpusMember], checks: &[&str]) -> (SuiteSummary, Vec<String>) {
    let checks: Vec<String> = checks.iter().map(|c| c.to_string()).collect();
    let records = run_corpus(members, |_| CORPUS_CAPS, &checks, RunOptions::default());
    let bad = records
        .iter()
        .filter(|r| r.outcome.is_failure())
        .map(|r| format!("{} {} {:?}", r.object, r.check, r.outcome))
        .collect();
    (SuiteSummary::from_records(&records), bad)
}

fn describe(summary: &SuiteSummary, bad: &[String]) -> String {
    let t = summary.total();
    let mut s = format!(
        "{} objects: {} pass, {} vacuous, {} fail, {} skip, {} inconsistent",
        summary.objects, t.pass, t.vacuous, t.fail, t.skip, t.inconsistent
    );
    let skipped: Vec<String> =
        summary.checks.iter().filter(|(_, t)| t.skip > 0).map(|(c, t)| format!("{c} {}", t.skip)).collect();
    if !skipped.is_empty() {
        s += &format!(" (skips: {})", skipped.join(", "));
    }
    if let Some(first) = bad.first() {
        s += &format!("; first failure: {first}");
    }
    s
}

fn e1r() -> Arc<FiniteModule> {
    principal_right_ideal(&Arc::new(upper_triangular(2, 2)), &[1, 0, 0]).module
}

fn c1_example() -> (bool, String) {
    let lab = ModuleLab::new(e1r(), Caps::default()).unwrap();
    let end = lab.end().ring().order();
    let abelian = lab.is_abelian_endoregular().unwrap();
    let rad = lab.radical().unwrap();
    let subdirect = lab.is_subdirect_of_simples();
    let ok = end == 2 && abelian.holds() && !rad.is_zero() && subdirect.fails();
    (ok, format!("|End| = {end}, abelian endoregular {}, Rad order {}, subdirect {}", abelian.label(), rad.order(), subdirect.label()))
}

fn c2_diamond() -> (bool, String) {
    let z2 = Arc::new(zn(2));
    let x = Preorder::diamond();
    let alg = build_incidence_algebra(&x, &z2).unwrap();
    let expected = vec![
        vec![true, true, true, true],
        vec![false, true, false, true],
        vec![false, false, true, true],
        vec![false, false, false, true],
    ];
    let m = Arc::new(regular_module(&z2));
    let report = incend_check(&m, &x, &Caps::default()).unwrap();
    let ok = alg.pairs().len() == 9
        && alg.pattern() == expected
        && report.is_isomorphism()
        && report.end_base == 2
        && report.end_incidence == 2;
    (ok, format!("{} pairs, |End_A(M)| = {}, |End(M(X))| = {}, isomorphism {}", alg.pairs().len(), report.end_base, report.end_incidence, report.is_isomorphism()))
}

fn c5_negative() -> (bool, String) {
    let plane = Arc::new(FiniteModule::new(Arc::new(zn(2)), vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap());
    let lab = ModuleLab::new(plane, Caps::default()).unwrap();
    let conds = lab.propinc_conditions().unwrap();
    let all_false = lab.is_endoregular().unwrap().holds() && conds.iter().all(|(_, v)| v.fails());
    (all_false, format!("(Z/2)^2: endoregular, conditions {:?}", conds.iter().map(|(n, v)| (*n, v.label())).collect::<Vec<_>>()))
}

fn c7_z12() -> (bool, String) {
    let m = Arc::new(regular_module(&Arc::new(zn(12))));
    let lab = ModuleLab::new(m.clone(), Caps::default()).unwrap();
    let spec: Vec<Vec<Vec<i64>>> = lab.spec().unwrap().iter().map(|s| s.gens().clone()).collect();
    let four = submodule_generated(&m, &[vec![4]]);
    let semiprime = lab.is_semiprime_in(&four).unwrap();
    let two = submodule_generated(&m, &[vec![2]]);
    let witness_ok = matches!(&semiprime, Verdict::False(Witness::Submodule(k)) if *k == *two.gens());
    let ok = spec == vec![vec![vec![3]], vec![vec![2]]] && witness_ok;
    (ok, format!("Spec = {spec:?}, <4> semiprime {} with witness {:?}", semiprime.label(), semiprime.witness()))
}

fn c8_random() -> (bool, String) {
    let run = || {
        let members = random_modules(1000, 7, &RandomLimits::default());
        run_corpus(&members, |_| Caps::default(), &[], RunOptions::default())
    };
    let first = run();
    let second = run();
    let stream = |rs: &[endoregular::corpus::ResultRecord]| -> String {
        rs.iter().map(|r| serde_json::to_string(r).unwrap() + "\n").collect()
    };
    let identical = stream(&first) == stream(&second);
    let summary = SuiteSummary::from_records(&first);
    let bad: Vec<String> =
        first.iter().filter(|r| r.outcome.is_failure()).map(|r| format!("{} {} {:?}", r.object, r.check, r.outcome)).collect();
    let ok = identical && bad.is_empty() && summary.objects == 1000;
    (ok, format!("{}; rerun bit-identical {identical}", describe(&summary, &bad)))
}

#[test]
fn acceptance() {
    let ws = workspace();
    let pairs = corpus(&ws, false);
    let mut lines = vec![
        criterion(1, Some(1), c1_example),
        criterion(2, Some(1), c2_diamond),
        criterion(3, Some(300), || {
            let (s, bad) = tally(&pairs, &["azumaya"]);
            (bad.is_empty() && s.total().skip == 0, describe(&s, &bad))
        }),
        criterion(4, None, || {
            let (s, bad) = tally(&pairs, &["abelian_routes"]);
            (bad.is_empty() && s.total().skip == 0, describe(&s, &bad))
        }),
        criterion(5, None, || {
            let (neg_ok, neg) = c5_negative();
            let (s, bad) = tally(&pairs, &["propinc"]);
            (neg_ok && bad.is_empty() && s.total().skip == 0, format!("{neg}; {}", describe(&s, &bad)))
        }),
    ];
    let triples = corpus(&ws, true);
    lines.push(criterion(6, None, || {
        let (s, bad) = tally(&pairs, &["endosip", "finmsumand", "dirsummand", "limit", "stqdr", "primmax"]);
        let (t, bad3) = tally(&triples, &["sums"]);
        let ok = bad.is_empty() && bad3.is_empty() && s.total().skip == 0 && t.total().skip == 0;
        (ok, format!("{}; sums over families of <= 3: {}", describe(&s, &bad), describe(&t, &bad3)))
    }));
    lines.push(criterion(7, None, c7_z12));
    lines.push(criterion(8, Some(600), c8_random));
    let failed: Vec<usize> =
        lines.iter().enumerate().filter(|(_, l)| !l.passed()).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
