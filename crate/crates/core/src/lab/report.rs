//! The full property report for one module.

use std::fmt;

use serde::Serialize;

use super::{agree, ModuleLab, Routes};
use crate::error::Result;
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteEntry {
    pub route: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyEntry {
    pub property: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub routes: Vec<RouteEntry>,
}

/// Submodule data that is only available when the lattice fits the caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeSummary {
    pub submodules: usize,
    pub summands: usize,
    pub radical: Vec<Vec<i64>>,
    pub socle: Vec<Vec<i64>>,
    pub spec: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub module: String,
    pub order: u128,
    pub end_order: u128,
    pub end_invariants: Vec<i64>,
    pub properties: Vec<PropertyEntry>,
    pub lattice: Option<LatticeSummary>,
}

impl PropertyReport {
    pub fn get(&self, property: &str) -> Option<&Verdict> {
        self.properties.iter().find(|p| p.property == property).map(|p| &p.verdict)
    }
}

fn single(property: &str, verdict: Verdict) -> PropertyEntry {
    PropertyEntry { property: property.into(), verdict, routes: Vec::new() }
}

fn routed(property: &str, routes: Routes) -> Result<PropertyEntry> {
    let verdict = agree(property, &routes)?;
    let routes = routes.into_iter().map(|(r, v)| RouteEntry { route: r.into(), verdict: v }).collect();
    Ok(PropertyEntry { property: property.into(), verdict, routes })
}

/// Evaluates every property; a route disagreement is returned as an error.
pub fn analyze(id: &str, lab: &ModuleLab) -> Result<PropertyReport> {
    let properties = vec![
        routed("endoregular", lab.endoregular_routes())?,
        routed("abelian_endoregular", lab.abelian_routes()?)?,
        single("unit_endoregular", lab.is_unit_endoregular()),
        single("duo", lab.is_duo()),
        single("quasi_duo", lab.is_quasi_duo()),
        single("subdirect_of_simples", lab.is_subdirect_of_simples()),
        single("ssp", lab.has_ssp()),
        single("sip", lab.has_sip()),
        single("summands_boolean", lab.is_distributive_boolean()),
        routed("k_nonsingular", lab.k_nonsingular_routes())?,
        routed("polyform", lab.polyform_routes())?,
    ];
    let lattice = match (lab.lattice(), lab.summands(), lab.spec()) {
        (Ok(l), Ok(s), Ok(spec)) => Some(LatticeSummary {
            submodules: l.len(),
            summands: s.len(),
            radical: l.radical().gens().clone(),
            socle: l.socle().gens().clone(),
            spec: spec.iter().map(|p| p.gens().clone()).collect(),
        }),
        _ => None,
    };
    Ok(PropertyReport {
        module: id.into(),
        order: lab.module().order(),
        end_order: lab.end().ring().order(),
        end_invariants: lab.end().homs().orders().to_vec(),
        properties,
        lattice,
    })
}

fn show_gens(g: &[Vec<i64>]) -> String {
    if g.is_empty() {
        return "0".into();
    }
    let rows: Vec<String> = g.iter().map(|r| format!("{r:?}")).collect();
    format!("<{}>", rows.join(", "))
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "module {}: |M| = {}, |End| = {} (invariants {:?})", self.module, self.order, self.end_order, self.end_invariants)?;
        for p in &self.properties {
            write!(f, "  {:<22} {}", p.property, p.verdict.label())?;
            if p.routes.len() > 1 {
                let r: Vec<String> = p.routes.iter().map(|r| format!("{}={}", r.route, r.verdict.label())).collect();
                write!(f, "  [{}]", r.join(" "))?;
            }
            if let Some(w) = p.verdict.witness() {
                write!(f, "  witness {}", serde_json::to_string(w).unwrap_or_default())?;
            }
            if let Verdict::Undecided(e) = &p.verdict {
                write!(f, "  ({e})")?;
            }
            writeln!(f)?;
        }
        match &self.lattice {
            Some(l) => {
                writeln!(f, "  submodules {}, summands {}", l.submodules, l.summands)?;
                writeln!(f, "  Rad = {}", show_gens(&l.radical))?;
                writeln!(f, "  Soc = {}", show_gens(&l.socle))?;
                let spec: Vec<String> = l.spec.iter().map(|p| show_gens(p)).collect();
                writeln!(f, "  Spec = {{{}}}", spec.join(", "))
            }
            None => writeln!(f, "  submodule lattice exceeds the caps"),
        }
    }
}
