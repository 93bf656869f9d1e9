//! Corpus generator specs and their expansion into corpus members.

use std::sync::Arc;

use super::{random_modules, RandomLimits, Workspace};
use crate::error::Result;
use crate::incidence::{build_incidence_algebra, build_mx};
use crate::lab::{CorpusMember, Origin};
use crate::module::{direct_sum, principal_right_ideal, regular_module, submodule_generated};
use crate::ring::constructions::{dual_numbers, full_matrix, gf4, upper_triangular, zn};
use crate::ring::FiniteRing;

/// One entry of a corpus list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// `zn:n<=K`: `Z/n` over itself for `1 <= n <= K`.
    Regular { max: i64 },
    /// `eR:<ring>`: `eR` for every idempotent `e`.
    Idempotents(String),
    /// `random:count=N[,seed=S]`.
    Random { count: usize, seed: Option<u64> },
    /// `sums:<corpus>[,max=K]`: direct sums of 2..=K members over a common ring.
    Sums { corpus: String, max: usize },
    /// `incidence:poset=X,ring=A[,module=M]`: `M(X)` over `I(X, A)`, with `M`
    /// defaulting to `A_A`.
    Incidence { poset: String, ring: String, module: Option<String> },
    /// A module defined in the workspace.
    Module(String),
}

fn key_values(s: &str) -> Result<Vec<(&str, &str)>, String> {
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.split_once('=').ok_or_else(|| format!("expected key=value, got {p}")))
        .collect()
}

fn number<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.trim().parse().map_err(|_| format!("{key} must be a non-negative integer, got {v}"))
}

impl GeneratorSpec {
    pub fn parse(s: &str) -> Result<Self, String> {
        let Some((kind, rest)) = s.split_once(':') else {
            return Ok(GeneratorSpec::Module(s.to_string()));
        };
        match kind {
            "zn" => {
                let bound = rest
                    .strip_prefix("n<=")
                    .or_else(|| rest.strip_prefix("n≤"))
                    .ok_or_else(|| format!("expected zn:n<=K, got {s}"))?;
                Ok(GeneratorSpec::Regular { max: number("n", bound)? })
            }
            "eR" => Ok(GeneratorSpec::Idempotents(rest.to_string())),
            "random" => {
                let mut count = None;
                let mut seed = None;
                for (k, v) in key_values(rest)? {
                    match k {
                        "count" => count = Some(number(k, v)?),
                        "seed" => seed = Some(number(k, v)?),
                        _ => return Err(format!("unknown random parameter {k}")),
                    }
                }
                Ok(GeneratorSpec::Random { count: count.ok_or("random needs count=N")?, seed })
            }
            "sums" => {
                let (corpus, params) = rest.split_once(',').unwrap_or((rest, ""));
                let mut max = 2;
                for (k, v) in key_values(params)? {
                    match k {
                        "max" => max = number(k, v)?,
                        _ => return Err(format!("unknown sums parameter {k}")),
                    }
                }
                Ok(GeneratorSpec::Sums { corpus: corpus.to_string(), max })
            }
            "incidence" => {
                let (mut poset, mut ring, mut module) = (None, None, None);
                for (k, v) in key_values(rest)? {
                    match k {
                        "poset" => poset = Some(v.to_string()),
                        "ring" => ring = Some(v.to_string()),
                        "module" => module = Some(v.to_string()),
                        _ => return Err(format!("unknown incidence parameter {k}")),
                    }
                }
                Ok(GeneratorSpec::Incidence {
                    poset: poset.ok_or("incidence needs poset=X")?,
                    ring: ring.ok_or("incidence needs ring=A")?,
                    module,
                })
            }
            _ => Err(format!("unknown generator {kind}")),
        }
    }
}

/// `Z/n`, `UTk(Zq)`, `Matk(Zq)`, `GF4` or `Dual(Zq)`.
pub fn builtin_ring(name: &str) -> Option<FiniteRing> {
    let sized = |prefix: &str| -> Option<(usize, i64)> {
        let rest = name.strip_prefix(prefix)?;
        let (k, q) = rest.split_once("(Z")?;
        Some((k.parse().ok()?, q.strip_suffix(')')?.parse().ok()?))
    };
    let valid = |q: i64| (2..=1 << 20).contains(&q);
    if let Some(n) = name.strip_prefix("Z/") {
        let n: i64 = n.parse().ok()?;
        return (1..=1 << 40).contains(&n).then(|| zn(n));
    }
    if let Some((k, q)) = sized("UT") {
        return (valid(q) && (1..=4).contains(&k)).then(|| upper_triangular(k, q));
    }
    if let Some((k, q)) = sized("Mat") {
        return (valid(q) && (1..=3).contains(&k)).then(|| full_matrix(k, q));
    }
    if name == "GF4" {
        return Some(gf4());
    }
    let q: i64 = name.strip_prefix("Dual(Z")?.strip_suffix(')')?.parse().ok()?;
    valid(q).then(|| dual_numbers(q))
}

fn format_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

impl Workspace {
    pub fn expand(&self, spec: &GeneratorSpec) -> Result<Vec<CorpusMember>> {
        match spec {
            GeneratorSpec::Regular { max } => Ok((1..=*max)
                .map(|n| CorpusMember {
                    id: format!("Z/{n}"),
                    module: Arc::new(regular_module(&Arc::new(zn(n)))),
                    origin: Origin::Idempotent,
                })
                .collect()),
            GeneratorSpec::Idempotents(name) => {
                let ring = self.ring(name)?;
                let idem = ring.idempotents(self.caps().elements)?;
                Ok(idem
                    .iter()
                    .map(|e| CorpusMember {
                        id: format!("eR:{name}{}", format_vec(e)),
                        module: principal_right_ideal(&ring, e).module,
                        origin: Origin::Idempotent,
                    })
                    .collect())
            }
            GeneratorSpec::Random { count, seed } => {
                Ok(random_modules(*count, seed.unwrap_or(self.seed()), &RandomLimits::default()))
            }
            GeneratorSpec::Sums { corpus, max } => {
                let members = self.corpus(corpus)?;
                let mut out = Vec::new();
                for size in 2..=*max {
                    let mut pick = vec![0usize; size];
                    loop {
                        let parts: Vec<&CorpusMember> = pick.iter().map(|&i| &members[i]).collect();
                        if parts.iter().all(|p| p.module.same_ring(&parts[0].module)) {
                            let factors: Vec<_> = parts.iter().map(|p| p.module.clone()).collect();
                            let ids: Vec<&str> = parts.iter().map(|p| p.id.as_str()).collect();
                            out.push(CorpusMember {
                                id: format!("sum({})", ids.join(" + ")),
                                module: direct_sum(&factors)?.module,
                                origin: Origin::Sum(factors),
                            });
                        }
                        // next non-decreasing index tuple
                        let Some(pos) = (0..size).rev().find(|&i| pick[i] + 1 < members.len()) else {
                            break;
                        };
                        let v = pick[pos] + 1;
                        pick[pos..].iter_mut().for_each(|p| *p = v);
                    }
                }
                Ok(out)
            }
            GeneratorSpec::Incidence { poset, ring, module } => {
                let x = self.poset(poset)?;
                let a = self.ring(ring)?;
                let base = match module {
                    Some(m) => self.module(m)?,
                    None => Arc::new(regular_module(&a)),
                };
                let alg = build_incidence_algebra(&x, base.ring())?;
                let mx = Arc::new(build_mx(&base, &alg)?);
                let cyclic = self.caps().check(crate::verdict::Limit::Elements, base.order()).is_ok()
                    && base.elements().any(|v| submodule_generated(&base, &[v]).is_whole());
                let origin =
                    if cyclic && x.bottom().is_some() { Origin::Incidence(base.clone()) } else { Origin::Plain };
                let name = module.clone().unwrap_or_else(|| ring.clone());
                Ok(vec![CorpusMember { id: format!("{name}({poset})"), module: mx, origin }])
            }
            GeneratorSpec::Module(name) => Ok(vec![CorpusMember::plain(name.clone(), self.module(name)?)]),
        }
    }
}
