//! Suite orchestration: corpus members in, result records out.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{ModuleEntry, SuiteSelection, Workspace, WorkspaceFile};
use crate::lab::{run_member_suites, CorpusMember, Origin, Outcome, SUITE_NAMES};
use crate::verdict::Caps;

/// One line of the result stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub object: String,
    pub check: String,
    #[serde(flatten)]
    pub outcome: Outcome,
    /// A self-contained workspace reproducing a failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<WorkspaceFile>,
    /// Off unless [`RunOptions::timing`] is set, so streams stay reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub skip: usize,
    pub inconsistent: usize,
}

impl CheckTally {
    fn count(&mut self, o: &Outcome) {
        match o {
            Outcome::Pass => self.pass += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Fail(_) => self.fail += 1,
            Outcome::Skip(_) => self.skip += 1,
            Outcome::Inconsistent(_) => self.inconsistent += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.vacuous + self.fail + self.skip + self.inconsistent
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub objects: usize,
    pub checks: BTreeMap<String, CheckTally>,
}

impl SuiteSummary {
    pub fn from_records(records: &[ResultRecord]) -> Self {
        let mut checks: BTreeMap<String, CheckTally> = BTreeMap::new();
        let mut objects: Vec<&str> = records.iter().map(|r| r.object.as_str()).collect();
        objects.dedup();
        for r in records {
            checks.entry(r.check.clone()).or_default().count(&r.outcome);
        }
        SuiteSummary { objects: objects.len(), checks }
    }

    pub fn total(&self) -> CheckTally {
        self.checks.values().fold(CheckTally::default(), |a, t| CheckTally {
            pass: a.pass + t.pass,
            vacuous: a.vacuous + t.vacuous,
            fail: a.fail + t.fail,
            skip: a.skip + t.skip,
            inconsistent: a.inconsistent + t.inconsistent,
        })
    }

    /// 0 when nothing failed or disagreed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        let t = self.total();
        i32::from(t.fail + t.inconsistent > 0)
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} objects", self.objects)?;
        writeln!(f, "{:<20} {:>6} {:>8} {:>6} {:>6} {:>13}", "check", "pass", "vacuous", "fail", "skip", "inconsistent")?;
        let mut row = |name: &str, t: &CheckTally| {
            writeln!(f, "{name:<20} {:>6} {:>8} {:>6} {:>6} {:>13}", t.pass, t.vacuous, t.fail, t.skip, t.inconsistent)
        };
        for name in SUITE_NAMES {
            if let Some(t) = self.checks.get(*name) {
                row(name, t)?;
            }
        }
        row("total", &self.total())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRun {
    pub records: Vec<ResultRecord>,
    pub summary: SuiteSummary,
}

impl SuiteRun {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code()
    }

    /// The records as JSON lines.
    pub fn to_json_lines(&self) -> String {
        self.records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
    }
}

/// A workspace holding just this member (and its summands, for sums), set up
/// to rerun `check`.
fn bundle(member: &CorpusMember, check: &str, caps: Caps) -> WorkspaceFile {
    let mut file = WorkspaceFile { caps, ..WorkspaceFile::default() };
    let ring = member.module.ring();
    file.rings.insert("R".into(), ring.presentation());
    let entry = |m: &crate::module::FiniteModule| {
        let p = m.presentation();
        ModuleEntry { ring: "R".into(), moduli: p.moduli, action: p.action, caps: None }
    };
    file.modules.insert("M".into(), entry(&member.module));
    let parts = match &member.origin {
        Origin::Sum(parts) => parts.clone(),
        Origin::Incidence(base) => vec![base.clone()],
        Origin::Plain | Origin::Idempotent => Vec::new(),
    };
    for (i, p) in parts.iter().enumerate() {
        if p.same_ring(&member.module) {
            file.modules.insert(format!("F{i}"), entry(p));
        }
    }
    file.corpora.insert("repro".into(), vec!["M".into()]);
    file.suites.push(SuiteSelection { corpus: "repro".into(), checks: vec![check.into()] });
    file
}

/// Runs checks on every member in parallel; records come back in member order.
pub fn run_corpus(
    members: &[CorpusMember],
    caps: impl Fn(&CorpusMember) -> Caps + Sync,
    only: &[String],
    opts: RunOptions,
) -> Vec<ResultRecord> {
    members
        .par_iter()
        .flat_map_iter(|m| {
            let c = caps(m);
            let start = Instant::now();
            let records = run_member_suites(m, &c, only);
            let ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
            records.into_iter().map(move |r| ResultRecord {
                object: m.id.clone(),
                check: r.check.to_string(),
                bundle: r.outcome.is_failure().then(|| bundle(m, r.check, c)),
                outcome: r.outcome,
                wall_ms: ms,
            })
        })
        .collect()
}

impl Workspace {
    /// Runs every selected suite over its corpus.
    pub fn run_suites(&self, opts: RunOptions) -> crate::Result<SuiteRun> {
        let mut records = Vec::new();
        for sel in self.selections() {
            let members = self.corpus(&sel.corpus)?;
            records.extend(run_corpus(&members, |m| self.caps_for(&m.id), &sel.checks, opts));
        }
        let summary = SuiteSummary::from_records(&records);
        Ok(SuiteRun { records, summary })
    }
}
