//! Theorem checks run per corpus member. Every check is an implication or an
//! equivalence between independently computed verdicts; a check whose
//! hypothesis fails is vacuous, and one that needs an undecided verdict is
//! skipped.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{agree, ModuleLab, Routes};
use crate::error::{Error, Result};
use crate::hom::{hom_group, is_fully_invariant, summand_test, HomGroup};
use crate::module::{direct_sum, extract, FiniteModule, Submodule};
use crate::ring::UnitAction;
use crate::verdict::{Caps, Exceeded, Limit, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// The hypothesis does not hold for this module.
    Vacuous,
    Fail(Witness),
    Skip(String),
    Inconsistent(String),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Fail(_) => "fail",
            Outcome::Skip(_) => "skip",
            Outcome::Inconsistent(_) => "inconsistent",
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Outcome::Fail(_) | Outcome::Inconsistent(_))
    }

    fn rank(&self) -> u8 {
        match self {
            Outcome::Vacuous => 0,
            Outcome::Pass => 1,
            Outcome::Skip(_) => 2,
            Outcome::Fail(_) => 3,
            Outcome::Inconsistent(_) => 4,
        }
    }

    /// The more severe of two outcomes.
    fn and(self, other: Outcome) -> Outcome {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }
}

/// How a corpus member was built; some checks only apply to certain origins.
#[derive(Debug, Clone)]
pub enum Origin {
    Plain,
    /// `eR` for an idempotent `e`, hence projective.
    Idempotent,
    /// The direct sum of the listed factors, in order.
    Sum(Vec<Arc<FiniteModule>>),
    /// `M(X)` built from a cyclic base module over a preorder with a bottom.
    Incidence(Arc<FiniteModule>),
}

#[derive(Debug, Clone)]
pub struct CorpusMember {
    pub id: String,
    pub module: Arc<FiniteModule>,
    pub origin: Origin,
}

impl CorpusMember {
    pub fn plain(id: impl Into<String>, module: Arc<FiniteModule>) -> Self {
        CorpusMember { id: id.into(), module, origin: Origin::Plain }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self.origin, Origin::Idempotent)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRecord {
    pub check: &'static str,
    pub outcome: Outcome,
}

pub const SUITE_NAMES: &[&str] = &[
    "azumaya",
    "endoregular_routes",
    "abelian_routes",
    "socle_routes",
    "hierarchy",
    "knonsingular",
    "propinc",
    "endosip",
    "finmsumand",
    "kerdirecsum",
    "dirsummand",
    "limit",
    "fiinsub",
    "ephikerima",
    "unit_hypotheses",
    "sdpse",
    "stqdr",
    "primmax",
    "maxprime",
    "prime_quotient",
    "quotient_abelian",
    "sums",
    "incidence_transfer",
];

fn implies(h: &Verdict, c: &Verdict) -> Outcome {
    match (h, c) {
        (Verdict::False(_), _) => Outcome::Vacuous,
        (Verdict::Undecided(e), _) => Outcome::Skip(e.to_string()),
        (Verdict::True, Verdict::True) => Outcome::Pass,
        (Verdict::True, Verdict::False(w)) => Outcome::Fail(w.clone()),
        (Verdict::True, Verdict::Undecided(e)) => Outcome::Skip(e.to_string()),
    }
}

fn iff(a: &Verdict, b: &Verdict) -> Outcome {
    match (a, b) {
        (Verdict::Undecided(e), _) | (_, Verdict::Undecided(e)) => Outcome::Skip(e.to_string()),
        (Verdict::True, Verdict::True) | (Verdict::False(_), Verdict::False(_)) => Outcome::Pass,
        (Verdict::True, Verdict::False(w)) | (Verdict::False(w), Verdict::True) => Outcome::Fail(w.clone()),
    }
}

fn both(a: Verdict, b: impl FnOnce() -> Verdict) -> Verdict {
    match a {
        Verdict::False(w) => Verdict::False(w),
        Verdict::True => b(),
        Verdict::Undecided(e) => match b() {
            Verdict::False(w) => Verdict::False(w),
            _ => Verdict::Undecided(e),
        },
    }
}

fn from_bool(b: bool, w: impl FnOnce() -> Witness) -> Verdict {
    if b {
        Verdict::True
    } else {
        Verdict::False(w())
    }
}

fn sub_witness(s: &Submodule) -> Witness {
    Witness::Submodule(s.gens().clone())
}

/// Runs the selected checks (all of [`SUITE_NAMES`] when `only` is empty).
pub fn run_member_suites(member: &CorpusMember, caps: &Caps, only: &[String]) -> Vec<SuiteRecord> {
    let selected: Vec<&'static str> =
        SUITE_NAMES.iter().copied().filter(|n| only.is_empty() || only.iter().any(|o| o == n)).collect();
    let lab = match ModuleLab::new(member.module.clone(), *caps) {
        Ok(l) => l,
        Err(e) => {
            return selected.into_iter().map(|check| SuiteRecord { check, outcome: Outcome::Inconsistent(e.to_string()) }).collect()
        }
    };
    selected
        .into_iter()
        .map(|check| {
            let outcome = match run_check(check, member, &lab) {
                Ok(o) => o,
                Err(Error::Exceeded(e)) => Outcome::Skip(e.to_string()),
                Err(e) => Outcome::Inconsistent(e.to_string()),
            };
            SuiteRecord { check, outcome }
        })
        .collect()
}

fn run_check(check: &str, member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    match check {
        "azumaya" => azumaya(lab),
        "endoregular_routes" => Ok(routes_agree("endoregular", lab.endoregular_routes())),
        "abelian_routes" => Ok(routes_agree("abelian endoregular", lab.abelian_routes()?)),
        "socle_routes" => Ok(routes_agree("K-nonsingular", lab.k_nonsingular_routes())
            .and(routes_agree("polyform", lab.polyform_routes()))),
        "hierarchy" => {
            let ae = lab.is_abelian_endoregular()?;
            let unit = lab.is_unit_endoregular();
            Ok(implies(&ae, &unit).and(implies(&unit, &lab.is_endoregular()?)))
        }
        "knonsingular" => Ok(implies(&lab.is_polyform()?, &lab.is_k_nonsingular()?)),
        "propinc" => propinc(lab),
        "endosip" => {
            let reg = lab.is_endoregular()?;
            if !reg.holds() {
                return Ok(implies(&reg, &Verdict::True));
            }
            Ok(implies(&reg, &both(lab.has_ssp(), || lab.has_sip())))
        }
        "finmsumand" => finmsumand(lab),
        "kerdirecsum" => kerdirecsum(lab),
        "dirsummand" => hereditary(lab, lab.summands()),
        "limit" => hereditary(lab, lab.m_generated()),
        "fiinsub" => fiinsub(lab),
        "ephikerima" => ephikerima(lab),
        "unit_hypotheses" => unit_hypotheses(lab),
        "sdpse" => sdpse(lab),
        "stqdr" => stqdr(member, lab),
        "primmax" => primmax(member, lab),
        "maxprime" => maxprime(member, lab),
        "prime_quotient" => prime_quotient(member, lab),
        "quotient_abelian" => quotient_abelian(member, lab),
        "sums" => sums(member, lab),
        "incidence_transfer" => incidence_transfer(member, lab),
        other => Err(Error::Schema { path: "suites".into(), detail: format!("unknown check {other}") }),
    }
}

/// Passes only when every route is decided and all verdicts coincide.
fn routes_agree(property: &str, routes: Routes) -> Outcome {
    if let Some((name, Verdict::Undecided(e))) = routes.iter().find(|(_, v)| v.is_undecided()) {
        return Outcome::Skip(format!("route {name}: {e}"));
    }
    match agree(property, &routes) {
        Ok(_) => Outcome::Pass,
        Err(e) => Outcome::Inconsistent(e.to_string()),
    }
}

/// Per endomorphism: a quasi-inverse exists in End iff kernel and image are
/// summands. All three sides are unchanged by composing with automorphisms,
/// so one endomorphism per orbit is checked.
fn azumaya(lab: &ModuleLab) -> Result<Outcome> {
    let ring = lab.end().ring();
    let orbits = match ring.orbits(UnitAction::TwoSided, lab.caps().homs) {
        Ok(o) => o,
        Err(e) => return Ok(Outcome::Skip(Exceeded { limit: Limit::Homs, ..e }.to_string())),
    };
    for x in orbits {
        let f = lab.end().to_hom(&x);
        let regular = ring.regularity_witness(&x).is_some();
        if regular != (lab.is_summand(&f.kernel()) && lab.is_summand(&f.image())) {
            return Ok(Outcome::Fail(Witness::Hom(f.matrix().clone())));
        }
    }
    Ok(Outcome::Pass)
}

fn propinc(lab: &ModuleLab) -> Result<Outcome> {
    let reg = lab.is_endoregular()?;
    if !reg.holds() {
        return Ok(implies(&reg, &Verdict::True));
    }
    let conds = lab.propinc_conditions()?;
    if let Some((_, Verdict::Undecided(e))) = conds.iter().find(|(_, v)| v.is_undecided()) {
        return Ok(Outcome::Skip(e.to_string()));
    }
    let first = conds[0].1.as_bool();
    match conds.iter().find(|(_, v)| v.as_bool() != first) {
        None => Ok(Outcome::Pass),
        Some(_) => {
            let summary: Vec<String> = conds.iter().map(|(n, v)| format!("{n}={}", v.label())).collect();
            Ok(Outcome::Fail(Witness::Note(summary.join(" "))))
        }
    }
}

fn finmsumand(lab: &ModuleLab) -> Result<Outcome> {
    let reg = lab.is_endoregular()?;
    if !reg.holds() {
        return Ok(implies(&reg, &Verdict::True));
    }
    let (lattice, generated) = match (lab.lattice(), lab.m_generated()) {
        (Ok(l), Ok(g)) => (l, g),
        (Err(e), _) | (_, Err(e)) => return Ok(Outcome::Skip(e.to_string())),
    };
    let generated: HashSet<&Submodule> = generated.iter().collect();
    for n in lattice.submodules() {
        if generated.contains(n) != lab.is_summand(n) {
            return Ok(Outcome::Fail(sub_witness(n)));
        }
    }
    Ok(Outcome::Pass)
}

/// Homs `M^n → M^l` for `n, l ≤ 2` have summand kernels and images.
fn kerdirecsum(lab: &ModuleLab) -> Result<Outcome> {
    let reg = lab.is_endoregular()?;
    if !reg.holds() {
        return Ok(implies(&reg, &Verdict::True));
    }
    let m = lab.module();
    let powers = [m.clone(), direct_sum(&[m.clone(), m.clone()])?.module];
    let ends: Vec<HomGroup> = powers.iter().map(|p| hom_group(p, p)).collect::<Result<_>>()?;
    let mut memo: [HashMap<Submodule, bool>; 2] = Default::default();
    let mut is_summand = |i: usize, s: Submodule| -> bool {
        *memo[i].entry(s).or_insert_with_key(|s| summand_test(s, &ends[i]).is_some())
    };
    let mut outcome = Outcome::Pass;
    for n in 0..2 {
        for l in 0..2 {
            let h = hom_group(&powers[n], &powers[l])?;
            let coeffs = match h.coefficient_vectors(lab.caps()) {
                Ok(c) => c,
                Err(e) => {
                    outcome = outcome.and(Outcome::Skip(format!("M^{} -> M^{}: {e}", n + 1, l + 1)));
                    continue;
                }
            };
            for c in coeffs {
                let f = h.hom(&c);
                if !is_summand(n, f.kernel()) || !is_summand(l, f.image()) {
                    return Ok(Outcome::Fail(Witness::Hom(f.matrix().clone())));
                }
            }
        }
    }
    Ok(outcome)
}

/// Abelian endoregularity passes to every member of the given family.
fn hereditary(
    lab: &ModuleLab,
    family: std::result::Result<&[Submodule], crate::verdict::Exceeded>,
) -> Result<Outcome> {
    let ae = lab.is_abelian_endoregular()?;
    if !ae.holds() {
        return Ok(implies(&ae, &Verdict::True));
    }
    let family = match family {
        Ok(f) => f,
        Err(e) => return Ok(Outcome::Skip(e.to_string())),
    };
    let mut outcome = Outcome::Pass;
    for s in family {
        let sub = ModuleLab::new(extract(s).module, *lab.caps())?;
        match sub.abelian_by_ring()? {
            Verdict::True => {}
            Verdict::False(_) => return Ok(Outcome::Fail(sub_witness(s))),
            Verdict::Undecided(e) => outcome = outcome.and(Outcome::Skip(e.to_string())),
        }
    }
    Ok(outcome)
}

/// A fully invariant summand `L` stays fully invariant in every `N ⊇ L`.
fn fiinsub(lab: &ModuleLab) -> Result<Outcome> {
    let (lattice, summands) = match (lab.lattice(), lab.summands()) {
        (Ok(l), Ok(s)) => (l, s),
        (Err(e), _) | (_, Err(e)) => return Ok(Outcome::Skip(e.to_string())),
    };
    let fi: Vec<&Submodule> =
        summands.iter().filter(|l| !l.is_zero() && lab.is_fully_invariant(l)).collect();
    if fi.is_empty() {
        return Ok(Outcome::Vacuous);
    }
    for n in lattice.submodules() {
        let inside: Vec<&&Submodule> = fi.iter().filter(|l| l.is_contained_in(n) && **l != n).collect();
        if inside.is_empty() {
            continue;
        }
        let e = extract(n);
        let end_n = hom_group(&e.module, &e.module)?;
        for l in inside {
            let pulled = e.pull_back(l).expect("contained in N");
            if !is_fully_invariant(&pulled, &end_n) {
                return Ok(Outcome::Fail(Witness::SubmodulePair(l.gens().clone(), n.gens().clone())));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// For idempotent `e`: `eM` abelian endoregular iff `M = Ker(eφe) ⊕ Im(eφe)`
/// for all `φ`.
fn ephikerima(lab: &ModuleLab) -> Result<Outcome> {
    let elems = match lab.end_elements() {
        Ok(e) => e,
        Err(e) => return Ok(Outcome::Skip(e.to_string())),
    };
    let ring = lab.end().ring();
    let mut outcome = Outcome::Pass;
    for e in elems.iter().filter(|e| ring.is_idempotent(e)) {
        let corner: HashSet<Vec<i64>> = elems.iter().map(|x| ring.mul(&ring.mul(e, x), e)).collect();
        let split = corner.iter().all(|y| {
            let f = lab.end().to_hom(y);
            f.kernel().intersect(&f.image()).expect("same ambient").is_zero()
        });
        let em = lab.end().to_hom(e).image();
        let sub = ModuleLab::new(extract(&em).module, *lab.caps())?;
        let o = iff(&sub.abelian_by_ring()?, &from_bool(split, || Witness::Element(e.clone())));
        if let Outcome::Fail(_) = o {
            return Ok(Outcome::Fail(Witness::Hom(lab.end().to_hom(e).matrix().clone())));
        }
        outcome = outcome.and(o);
    }
    Ok(outcome)
}

fn unit_hypotheses(lab: &ModuleLab) -> Result<Outcome> {
    let unit = lab.is_unit_endoregular();
    if !unit.holds() {
        return Ok(implies(&unit, &Verdict::True));
    }
    let ae = lab.is_abelian_endoregular()?;
    let first = implies(&lab.kernel_plus_image_everywhere(), &ae);
    Ok(first.and(implies(&lab.idempotents_commute_with_units(), &ae)))
}

/// Quasi-duo with zero radical: idempotents of End are central, and
/// endoregular then means abelian endoregular.
fn sdpse(lab: &ModuleLab) -> Result<Outcome> {
    let hyp = both(lab.is_quasi_duo(), || lab.is_subdirect_of_simples());
    if !hyp.holds() {
        return Ok(implies(&hyp, &Verdict::True));
    }
    let ring = lab.end().ring();
    let central = match ring.idempotents(lab.caps().homs) {
        Ok(idem) => match idem.into_iter().find(|e| !ring.is_central(e)) {
            None => Verdict::True,
            Some(e) => Verdict::False(Witness::Hom(lab.end().to_hom(&e).matrix().clone())),
        },
        Err(e) => Verdict::Undecided(e),
    };
    let reg = lab.is_endoregular()?;
    Ok(implies(&hyp, &central).and(implies(&reg, &lab.is_abelian_endoregular()?)))
}

fn stqdr(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    let reg = lab.is_endoregular()?;
    let c1 = both(reg, || both(lab.is_quasi_duo(), || lab.is_subdirect_of_simples()));
    let ae = lab.is_abelian_endoregular()?;
    let c2 = both(ae, || lab.is_subdirect_of_simples());
    Ok(if member.is_projective() { iff(&c1, &c2) } else { implies(&c1, &c2) })
}

/// On projective abelian endoregular members the prime submodules are
/// exactly the maximal ones, and the module is quasi-duo.
fn primmax(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    if !member.is_projective() {
        return Ok(Outcome::Vacuous);
    }
    let ae = lab.is_abelian_endoregular()?;
    if !ae.holds() {
        return Ok(implies(&ae, &Verdict::True));
    }
    let (lattice, spec) = match (lab.lattice(), lab.spec()) {
        (Ok(l), Ok(s)) => (l, s),
        (Err(e), _) | (_, Err(e)) => return Ok(Outcome::Skip(e.to_string())),
    };
    let maximal: HashSet<Submodule> = lattice.maximal().into_iter().collect();
    let spec: HashSet<Submodule> = spec.into_iter().collect();
    if let Some(p) = spec.symmetric_difference(&maximal).min_by(|a, b| a.gens().cmp(b.gens())) {
        return Ok(Outcome::Fail(sub_witness(p)));
    }
    Ok(implies(&ae, &lab.is_quasi_duo()))
}

/// On projective members every maximal proper fully invariant submodule is
/// prime.
fn maxprime(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    if !member.is_projective() {
        return Ok(Outcome::Vacuous);
    }
    let fi = match lab.fully_invariant() {
        Ok(f) => f,
        Err(e) => return Ok(Outcome::Skip(e.to_string())),
    };
    let proper: Vec<&Submodule> = fi.iter().filter(|n| !n.is_whole()).collect();
    for n in &proper {
        let maximal = !proper.iter().any(|t| t.order() > n.order() && n.is_contained_in(t));
        if maximal && !lab.is_prime_in(n)?.holds() {
            return Ok(Outcome::Fail(sub_witness(n)));
        }
    }
    Ok(Outcome::Pass)
}

/// `N` (semi)prime in `M` implies `M/N` is a (semi)prime module; the
/// converse is asserted on projective members.
fn prime_quotient(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    let fi = match lab.fully_invariant() {
        Ok(f) => f,
        Err(e) => return Ok(Outcome::Skip(e.to_string())),
    };
    let mut outcome = Outcome::Vacuous;
    for n in fi.iter().filter(|n| !n.is_whole()) {
        let q = lab.quotient_lab(n)?;
        let pairs = [(lab.is_prime_in(n)?, q.is_prime_module()?), (lab.is_semiprime_in(n)?, q.is_semiprime_module()?)];
        for (inside, quotient) in &pairs {
            let o = if member.is_projective() { iff(inside, quotient) } else { implies(inside, quotient) };
            if let Outcome::Fail(_) = o {
                return Ok(Outcome::Fail(sub_witness(n)));
            }
            outcome = outcome.and(o);
        }
    }
    Ok(outcome)
}

/// On projective members, for fully invariant `N`: `M` is abelian
/// endoregular iff `M/N` is, and every `φ: M → N` has summand kernel and
/// image with `N = (Ker φ ∩ N) ⊕ Im φ`.
fn quotient_abelian(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    if !member.is_projective() {
        return Ok(Outcome::Vacuous);
    }
    let fi = match lab.fully_invariant() {
        Ok(f) => f,
        Err(e) => return Ok(Outcome::Skip(e.to_string())),
    };
    let ae = lab.is_abelian_endoregular()?;
    let mut outcome = Outcome::Pass;
    for n in fi.iter().filter(|n| !n.is_zero() && !n.is_whole()) {
        let q = lab.quotient_lab(n)?;
        let e = extract(n);
        let h = hom_group(lab.module(), &e.module)?;
        let maps = match h.elements(lab.caps()) {
            Ok(m) => m,
            Err(err) => {
                outcome = outcome.and(Outcome::Skip(err.to_string()));
                continue;
            }
        };
        let split = maps.iter().all(|f| {
            let f = e.inclusion.compose(f).expect("matching");
            let (ker, img) = (f.kernel(), f.image());
            let kn = ker.intersect(n).expect("same ambient");
            lab.is_summand(&ker)
                && lab.is_summand(&img)
                && kn.intersect(&img).expect("same ambient").is_zero()
                && kn.sum(&img).expect("same ambient") == *n
        });
        let rhs = both(q.is_abelian_endoregular()?, || from_bool(split, || sub_witness(n)));
        let o = iff(&ae, &rhs);
        if let Outcome::Fail(_) = o {
            return Ok(Outcome::Fail(sub_witness(n)));
        }
        outcome = outcome.and(o);
    }
    Ok(outcome)
}

/// A direct sum is abelian endoregular iff every factor is and every factor
/// is fully invariant in the sum.
fn sums(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    let Origin::Sum(factors) = &member.origin else {
        return Ok(Outcome::Vacuous);
    };
    let ds = direct_sum(factors)?;
    let mut rhs = Verdict::True;
    for (i, f) in factors.iter().enumerate() {
        let embedded = ds.embeddings[i].image();
        let part = both(ModuleLab::new(f.clone(), *lab.caps())?.is_abelian_endoregular()?, || {
            from_bool(lab.is_fully_invariant(&embedded), || sub_witness(&embedded))
        });
        rhs = both(rhs, || part);
    }
    Ok(iff(&lab.is_abelian_endoregular()?, &rhs))
}

/// `M` over `A` and `M(X)` over `I(X, A)` agree on abelian endoregularity.
fn incidence_transfer(member: &CorpusMember, lab: &ModuleLab) -> Result<Outcome> {
    let Origin::Incidence(base) = &member.origin else {
        return Ok(Outcome::Vacuous);
    };
    let base = ModuleLab::new(base.clone(), *lab.caps())?;
    Ok(iff(&base.is_abelian_endoregular()?, &lab.is_abelian_endoregular()?))
}
