//! Workspace files, corpus generators and the suite runner.
//!
//! A workspace is a JSON object with optional sections:
//!
//! ```json
//! {
//!   "rings":   { "R": { "moduli": [2, 2, 2], "mul": [...], "one": [1, 0, 1] } },
//!   "modules": { "M": { "ring": "R", "moduli": [2, 2], "action": [...] } },
//!   "posets":  { "X": { "elements": ["1", "2"], "relation": [["1", "2"]] } },
//!   "corpora": { "small": ["zn:n<=12", "eR:UT2(Z2)", "M"] },
//!   "suites":  [ { "corpus": "small", "checks": ["azumaya"] } ],
//!   "caps":    { "elements": 4096, "submodules": 512, "homs": 4096 },
//!   "seed": 7
//! }
//! ```
//!
//! Module references may also name builtin rings: `Z/n`, `UTk(Zq)`,
//! `Matk(Zq)`, `GF4` and `Dual(Zq)`.

mod generators;
mod random;
mod run;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use generators::{builtin_ring, GeneratorSpec};
pub use random::{random_member, random_modules, RandomLimits};
pub use run::{run_corpus, CheckTally, ResultRecord, RunOptions, SuiteRun, SuiteSummary};

use crate::error::{Error, Result};
use crate::incidence::{PosetPresentation, Preorder};
use crate::lab::CorpusMember;
use crate::linalg::Mat;
use crate::module::FiniteModule;
use crate::ring::{FiniteRing, RingPresentation};
use crate::verdict::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    pub ring: String,
    pub moduli: Vec<i64>,
    pub action: Vec<Mat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Caps>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteSelection {
    pub corpus: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<String>,
}

/// The JSON shape of a workspace file.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rings: BTreeMap<String, RingPresentation>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleEntry>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub posets: BTreeMap<String, PosetPresentation>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub corpora: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub suites: Vec<SuiteSelection>,
    #[serde(default)]
    pub caps: Caps,
    #[serde(default)]
    pub seed: u64,
}

/// A validated workspace: every ring, module and poset checked, every corpus
/// entry parsed and its references resolved.
#[derive(Debug, Clone)]
pub struct Workspace {
    file: WorkspaceFile,
    rings: BTreeMap<String, Arc<FiniteRing>>,
    modules: BTreeMap<String, Arc<FiniteModule>>,
    posets: BTreeMap<String, Preorder>,
    corpora: BTreeMap<String, Vec<GeneratorSpec>>,
}

fn schema(path: impl Into<String>, detail: impl ToString) -> Error {
    Error::Schema { path: path.into(), detail: detail.to_string() }
}

pub fn parse_workspace(path: impl AsRef<Path>) -> Result<Workspace> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Workspace::from_json(&text)
}

impl Workspace {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: WorkspaceFile = serde_json::from_str(text).map_err(|e| schema("$", e))?;
        Workspace::new(file)
    }

    pub fn new(file: WorkspaceFile) -> Result<Self> {
        let mut ws = Workspace {
            file: WorkspaceFile::default(),
            rings: BTreeMap::new(),
            modules: BTreeMap::new(),
            posets: BTreeMap::new(),
            corpora: BTreeMap::new(),
        };
        for (name, p) in &file.rings {
            let r = FiniteRing::new(p.clone()).map_err(|e| schema(format!("rings.{name}"), e))?;
            ws.rings.insert(name.clone(), Arc::new(r));
        }
        for (name, m) in &file.modules {
            let ring = ws.ring(&m.ring).map_err(|_| schema(format!("modules.{name}.ring"), format!("undefined ring {}", m.ring)))?;
            let module = FiniteModule::new(ring, m.moduli.clone(), m.action.clone())
                .map_err(|e| schema(format!("modules.{name}"), e))?;
            ws.modules.insert(name.clone(), Arc::new(module));
        }
        for (name, p) in &file.posets {
            let x = Preorder::from_presentation(p).map_err(|e| schema(format!("posets.{name}"), e))?;
            ws.posets.insert(name.clone(), x);
        }
        for (name, entries) in &file.corpora {
            let specs = entries
                .iter()
                .enumerate()
                .map(|(i, s)| GeneratorSpec::parse(s).map_err(|e| schema(format!("corpora.{name}[{i}]"), e)))
                .collect::<Result<Vec<_>>>()?;
            ws.corpora.insert(name.clone(), specs);
        }
        for (name, specs) in &ws.corpora {
            for (i, s) in specs.iter().enumerate() {
                ws.check_references(s, &mut vec![name.clone()]).map_err(|e| match e {
                    Error::Schema { detail, .. } => schema(format!("corpora.{name}[{i}]"), detail),
                    e => e,
                })?;
            }
        }
        for (i, s) in file.suites.iter().enumerate() {
            if !ws.corpora.contains_key(&s.corpus) {
                return Err(schema(format!("suites[{i}].corpus"), format!("undefined corpus {}", s.corpus)));
            }
            if let Some(c) = s.checks.iter().find(|c| !crate::lab::SUITE_NAMES.contains(&c.as_str())) {
                return Err(schema(format!("suites[{i}].checks"), format!("unknown check {c}")));
            }
        }
        ws.file = file;
        Ok(ws)
    }

    fn check_references(&self, spec: &GeneratorSpec, stack: &mut Vec<String>) -> Result<()> {
        match spec {
            GeneratorSpec::Module(name) => {
                self.modules.get(name).ok_or_else(|| schema("", format!("undefined module {name}")))?;
            }
            GeneratorSpec::Idempotents(ring) => {
                self.ring(ring).map_err(|_| schema("", format!("undefined ring {ring}")))?;
            }
            GeneratorSpec::Sums { corpus, .. } => {
                if stack.contains(corpus) {
                    return Err(schema("", format!("corpus {corpus} refers to itself")));
                }
                let specs = self.corpora.get(corpus).ok_or_else(|| schema("", format!("undefined corpus {corpus}")))?;
                stack.push(corpus.clone());
                for s in specs {
                    self.check_references(s, stack)?;
                }
                stack.pop();
            }
            GeneratorSpec::Incidence { poset, ring, module } => {
                self.poset(poset).map_err(|_| schema("", format!("undefined poset {poset}")))?;
                self.ring(ring).map_err(|_| schema("", format!("undefined ring {ring}")))?;
                if let Some(m) = module {
                    self.modules.get(m).ok_or_else(|| schema("", format!("undefined module {m}")))?;
                }
            }
            GeneratorSpec::Regular { .. } | GeneratorSpec::Random { .. } => {}
        }
        Ok(())
    }

    pub fn file(&self) -> &WorkspaceFile {
        &self.file
    }

    pub fn caps(&self) -> Caps {
        self.file.caps
    }

    pub fn seed(&self) -> u64 {
        self.file.seed
    }

    /// Caps for one object: its own override or the global caps.
    pub fn caps_for(&self, id: &str) -> Caps {
        self.file.modules.get(id).and_then(|m| m.caps).unwrap_or(self.file.caps)
    }

    /// A ring defined in the workspace or a builtin name.
    pub fn ring(&self, name: &str) -> Result<Arc<FiniteRing>> {
        if let Some(r) = self.rings.get(name) {
            return Ok(r.clone());
        }
        builtin_ring(name).map(Arc::new).ok_or_else(|| schema("rings", format!("undefined ring {name}")))
    }

    pub fn module(&self, name: &str) -> Result<Arc<FiniteModule>> {
        self.modules.get(name).cloned().ok_or_else(|| schema("modules", format!("undefined module {name}")))
    }

    pub fn modules(&self) -> impl Iterator<Item = (&String, &Arc<FiniteModule>)> {
        self.modules.iter()
    }

    pub fn poset(&self, name: &str) -> Result<Preorder> {
        self.posets.get(name).cloned().ok_or_else(|| schema("posets", format!("undefined poset {name}")))
    }

    pub fn corpus_names(&self) -> impl Iterator<Item = &String> {
        self.corpora.keys()
    }

    /// Expands every generator of a named corpus, in order.
    pub fn corpus(&self, name: &str) -> Result<Vec<CorpusMember>> {
        let specs = self.corpora.get(name).ok_or_else(|| schema("corpora", format!("undefined corpus {name}")))?;
        let mut out = Vec::new();
        for s in specs {
            out.extend(self.expand(s)?);
        }
        Ok(out)
    }

    /// Finds an object by module name or by corpus member id.
    pub fn find(&self, id: &str) -> Result<CorpusMember> {
        if let Some(m) = self.modules.get(id) {
            return Ok(CorpusMember::plain(id, m.clone()));
        }
        for name in self.corpora.keys() {
            if let Some(m) = self.corpus(name)?.into_iter().find(|m| m.id == id) {
                return Ok(m);
            }
        }
        if let Ok(spec) = GeneratorSpec::parse(id) {
            if self.check_references(&spec, &mut Vec::new()).is_ok() {
                let mut found = self.expand(&spec)?;
                if found.len() == 1 {
                    return Ok(found.remove(0));
                }
            }
        }
        Err(schema("id", format!("no module or corpus member named {id}")))
    }

    /// The `(corpus, checks)` pairs to run: the explicit selection, or every
    /// check on every corpus.
    pub fn selections(&self) -> Vec<SuiteSelection> {
        if !self.file.suites.is_empty() {
            return self.file.suites.clone();
        }
        self.corpora.keys().map(|c| SuiteSelection { corpus: c.clone(), checks: Vec::new() }).collect()
    }
}

#[cfg(test)]
mod tests;
