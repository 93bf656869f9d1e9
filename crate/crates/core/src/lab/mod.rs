//! Decision procedures for properties of a single module that are phrased in
//! terms of its endomorphism ring and its submodule lattice.
//!
//! A [`ModuleLab`] computes `End(M)` once and lazily caches the End elements,
//! the submodule lattice and the derived submodule families. Properties with
//! more than one decision route evaluate every feasible route and fail with
//! [`Error::InternalInconsistency`] when two decided routes disagree.

mod prime;
mod report;
mod suites;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

pub use prime::submodule_product;
pub use report::{analyze, PropertyEntry, PropertyReport, RouteEntry};
pub use suites::{
    run_member_suites, CorpusMember, Outcome, Origin, SuiteRecord, SUITE_NAMES,
};

use crate::error::{Error, Result};
use crate::hom::{
    end_ring, find_embedding, find_isomorphism, hom_group, is_fully_invariant, is_m_generated, summand_test,
    EndRing, ModuleHom,
};
use crate::linalg::Mat;
use crate::ring::UnitAction;
use crate::module::{
    direct_sum, enumerate_submodules, extract, quotient, FiniteModule, Submodule, SubmoduleLattice,
};
use crate::verdict::{Caps, Exceeded, Limit, Verdict, Witness};

/// Unwraps a capped computation or returns `Undecided` from the caller.
macro_rules! decide {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Verdict::Undecided(e),
        }
    };
}

/// Named verdicts of the independent routes for one property.
pub type Routes = Vec<(&'static str, Verdict)>;

/// The common verdict of all decided routes; an error if two disagree.
pub fn agree(property: &str, routes: &Routes) -> Result<Verdict> {
    let decided: Vec<&(&str, Verdict)> = routes.iter().filter(|(_, v)| !v.is_undecided()).collect();
    if let Some((first, v)) = decided.first() {
        if let Some((other, w)) = decided.iter().find(|(_, w)| w.as_bool() != v.as_bool()) {
            return Err(Error::InternalInconsistency(format!(
                "{property}: route {first} says {} but route {other} says {}",
                v.label(),
                w.label()
            )));
        }
        return Ok(v.clone());
    }
    Ok(routes.first().map(|(_, v)| v.clone()).unwrap_or(Verdict::True))
}

/// Re-labels an End-ring enumeration overflow as a hom-cap overflow.
fn hom_limited(v: Verdict) -> Verdict {
    match v {
        Verdict::Undecided(e) => Verdict::Undecided(Exceeded { limit: Limit::Homs, ..e }),
        v => v,
    }
}

fn to_verdict(r: std::result::Result<Option<Witness>, Exceeded>) -> Verdict {
    match r {
        Ok(None) => Verdict::True,
        Ok(Some(w)) => Verdict::False(w),
        Err(e) => Verdict::Undecided(e),
    }
}

pub struct ModuleLab {
    module: Arc<FiniteModule>,
    caps: Caps,
    end: EndRing,
    end_elements: OnceLock<std::result::Result<Vec<Vec<i64>>, Exceeded>>,
    candidates: OnceLock<Vec<Vec<i64>>>,
    lattice: OnceLock<std::result::Result<SubmoduleLattice, Exceeded>>,
    summands: OnceLock<std::result::Result<Vec<Submodule>, Exceeded>>,
    m_generated: OnceLock<std::result::Result<Vec<Submodule>, Exceeded>>,
    fully_invariant: OnceLock<std::result::Result<Vec<Submodule>, Exceeded>>,
    prime_maps: OnceLock<std::result::Result<Vec<(Submodule, Vec<Mat>)>, Exceeded>>,
    summand_memo: Mutex<HashMap<Submodule, bool>>,
}

impl std::fmt::Debug for ModuleLab {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleLab")
            .field("order", &self.module.order())
            .field("end_order", &self.end.ring().order())
            .finish_non_exhaustive()
    }
}

impl ModuleLab {
    pub fn new(module: Arc<FiniteModule>, caps: Caps) -> Result<Self> {
        let end = end_ring(&module)?;
        Ok(ModuleLab {
            module,
            caps,
            end,
            end_elements: OnceLock::new(),
            candidates: OnceLock::new(),
            lattice: OnceLock::new(),
            summands: OnceLock::new(),
            m_generated: OnceLock::new(),
            fully_invariant: OnceLock::new(),
            prime_maps: OnceLock::new(),
            summand_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn end(&self) -> &EndRing {
        &self.end
    }

    /// Caps for enumerating End as a ring.
    fn end_caps(&self) -> Caps {
        Caps { elements: self.caps.homs, ..self.caps }
    }

    fn hom_witness(&self, w: Witness) -> Witness {
        match w {
            Witness::Element(x) => Witness::Hom(self.end.to_hom(&x).matrix().clone()),
            w => w,
        }
    }

    fn end_verdict(&self, v: Verdict) -> Verdict {
        match hom_limited(v) {
            Verdict::False(w) => Verdict::False(self.hom_witness(w)),
            v => v,
        }
    }

    /// End-ring coordinates of every endomorphism.
    pub fn end_elements(&self) -> std::result::Result<&[Vec<i64>], Exceeded> {
        self.end_elements
            .get_or_init(|| {
                self.caps.check(Limit::Homs, self.end.ring().order())?;
                Ok(self.end.ring().moduli().elements().collect())
            })
            .as_deref()
            .map_err(|e| *e)
    }

    /// One endomorphism per orbit of the unit action on End, in enumeration
    /// order. Summands, kernels and images are moved by automorphisms, so any
    /// test invariant under the action only needs these.
    pub fn endomorphism_orbits(
        &self,
        action: UnitAction,
    ) -> std::result::Result<impl Iterator<Item = ModuleHom> + '_, Exceeded> {
        let orbits =
            self.end.ring().orbits(action, self.caps.homs).map_err(|e| Exceeded { limit: Limit::Homs, ..e })?;
        Ok(orbits.map(|x| self.end.to_hom(&x)))
    }

    /// A short list of End elements tried before any sweep, so that a
    /// property failing on a simple element is refuted without enumerating
    /// End: the basis, pairwise sums and pairwise products.
    pub fn candidates(&self) -> &[Vec<i64>] {
        self.candidates.get_or_init(|| {
            let ring = self.end.ring();
            let basis: Vec<Vec<i64>> = (0..ring.dim()).map(|i| ring.basis(i)).collect();
            let mut seen = HashSet::new();
            let sums = basis.iter().enumerate().flat_map(|(i, a)| basis[i + 1..].iter().map(|b| ring.add(a, b)));
            let products = basis.iter().flat_map(|a| basis.iter().map(|b| ring.mul(a, b)));
            basis
                .iter()
                .cloned()
                .chain(sums.collect::<Vec<_>>())
                .chain(products.collect::<Vec<_>>())
                .filter(|x| !ring.is_zero(x) && seen.insert(x.clone()))
                .collect()
        })
    }

    fn candidate_homs(&self) -> impl Iterator<Item = ModuleHom> + '_ {
        self.candidates().iter().map(|x| self.end.to_hom(x))
    }

    pub fn endomorphisms(&self) -> std::result::Result<impl Iterator<Item = ModuleHom> + '_, Exceeded> {
        Ok(self.end_elements()?.iter().map(|x| self.end.to_hom(x)))
    }

    pub fn lattice(&self) -> std::result::Result<&SubmoduleLattice, Exceeded> {
        self.lattice.get_or_init(|| enumerate_submodules(&self.module, &self.caps)).as_ref().map_err(|e| *e)
    }

    fn filtered(&self, keep: impl Fn(&Submodule) -> bool) -> std::result::Result<Vec<Submodule>, Exceeded> {
        Ok(self.lattice()?.submodules().iter().filter(|s| keep(s)).cloned().collect())
    }

    /// Direct summands, in lattice order.
    pub fn summands(&self) -> std::result::Result<&[Submodule], Exceeded> {
        self.summands
            .get_or_init(|| self.filtered(|s| self.is_summand(s)))
            .as_deref()
            .map_err(|e| *e)
    }

    /// M-generated submodules, in lattice order.
    pub fn m_generated(&self) -> std::result::Result<&[Submodule], Exceeded> {
        self.m_generated
            .get_or_init(|| {
                self.filtered(|s| is_m_generated(s).expect("submodules share the ring"))
            })
            .as_deref()
            .map_err(|e| *e)
    }

    /// Fully invariant submodules, in lattice order.
    pub fn fully_invariant(&self) -> std::result::Result<&[Submodule], Exceeded> {
        self.fully_invariant
            .get_or_init(|| self.filtered(|s| self.is_fully_invariant(s)))
            .as_deref()
            .map_err(|e| *e)
    }

    pub fn is_summand(&self, n: &Submodule) -> bool {
        if let Some(&b) = self.summand_memo.lock().expect("memo lock").get(n) {
            return b;
        }
        let b = self.projection_onto(n).is_some();
        self.summand_memo.lock().expect("memo lock").insert(n.clone(), b);
        b
    }

    pub fn projection_onto(&self, n: &Submodule) -> Option<ModuleHom> {
        summand_test(n, self.end.homs())
    }

    pub fn is_fully_invariant(&self, n: &Submodule) -> bool {
        is_fully_invariant(n, self.end.homs())
    }

    pub fn radical(&self) -> std::result::Result<Submodule, Exceeded> {
        Ok(self.lattice()?.radical())
    }

    pub fn socle(&self) -> std::result::Result<Submodule, Exceeded> {
        Ok(self.lattice()?.socle())
    }

    // ---- endoregular ----

    /// Every endomorphism has kernel and image direct summands.
    pub fn endoregular_by_summands(&self) -> Verdict {
        let split = |f: &ModuleHom| self.is_summand(&f.kernel()) && self.is_summand(&f.image());
        if let Some(f) = self.candidate_homs().find(|f| !split(f)) {
            return Verdict::False(Witness::Hom(f.matrix().clone()));
        }
        let endos = decide!(self.endomorphism_orbits(UnitAction::TwoSided));
        for f in endos {
            if !split(&f) {
                return Verdict::False(Witness::Hom(f.matrix().clone()));
            }
        }
        Verdict::True
    }

    pub fn endoregular_by_ring(&self) -> Verdict {
        let ring = self.end.ring();
        if let Some(x) = self.candidates().iter().find(|x| ring.regularity_witness(x).is_none()) {
            return self.end_verdict(Verdict::False(Witness::Element(x.clone())));
        }
        self.end_verdict(ring.is_regular(&self.end_caps()))
    }

    pub fn endoregular_routes(&self) -> Routes {
        vec![("summands", self.endoregular_by_summands()), ("end_ring", self.endoregular_by_ring())]
    }

    pub fn is_endoregular(&self) -> Result<Verdict> {
        agree("endoregular", &self.endoregular_routes())
    }

    // ---- abelian endoregular ----

    /// A candidate that is not regular, is a non-central idempotent or is
    /// nonzero with zero square already rules out abelian regularity.
    pub fn abelian_by_ring(&self) -> Result<Verdict> {
        let ring = self.end.ring();
        let bad = |x: &Vec<i64>| {
            ring.regularity_witness(x).is_none()
                || (ring.is_idempotent(x) && !ring.is_central(x))
                || ring.is_zero(&ring.mul(x, x))
        };
        if let Some(x) = self.candidates().iter().find(|x| bad(x)) {
            return Ok(self.end_verdict(Verdict::False(Witness::Element(x.clone()))));
        }
        Ok(self.end_verdict(ring.is_abelian_regular(&self.end_caps())?))
    }

    /// `M = Ker φ ⊕ Im φ` for every endomorphism.
    pub fn abelian_by_kernel_image(&self) -> Verdict {
        let meets = |f: &ModuleHom| !f.kernel().intersect(&f.image()).expect("same ambient").is_zero();
        if let Some(f) = self.candidate_homs().find(|f| meets(f)) {
            return Verdict::False(Witness::Hom(f.matrix().clone()));
        }
        let endos = decide!(self.endomorphism_orbits(UnitAction::Conjugation));
        for f in endos {
            if meets(&f) {
                return Verdict::False(Witness::Hom(f.matrix().clone()));
            }
        }
        Verdict::True
    }

    /// Endoregular and every M-generated submodule fully invariant.
    pub fn abelian_by_generated(&self) -> Verdict {
        // images of endomorphisms are M-generated, so candidates refute cheaply
        let ring = self.end.ring();
        if let Some(x) = self.candidates().iter().find(|x| ring.regularity_witness(x).is_none()) {
            return self.end_verdict(Verdict::False(Witness::Element(x.clone())));
        }
        if let Some(img) = self.candidate_homs().map(|f| f.image()).find(|i| !self.is_fully_invariant(i)) {
            return Verdict::False(Witness::Submodule(img.gens().clone()));
        }
        let invariant = match self.m_generated() {
            Ok(gen) => match gen.iter().find(|s| !self.is_fully_invariant(s)) {
                Some(s) => return Verdict::False(Witness::Submodule(s.gens().clone())),
                None => Verdict::True,
            },
            Err(e) => Verdict::Undecided(e),
        };
        match self.endoregular_by_ring() {
            Verdict::True => invariant,
            reg => reg,
        }
    }

    pub fn abelian_routes(&self) -> Result<Routes> {
        Ok(vec![
            ("end_ring", self.abelian_by_ring()?),
            ("kernel_image", self.abelian_by_kernel_image()),
            ("generated_fully_invariant", self.abelian_by_generated()),
        ])
    }

    pub fn is_abelian_endoregular(&self) -> Result<Verdict> {
        agree("abelian endoregular", &self.abelian_routes()?)
    }

    pub fn is_unit_endoregular(&self) -> Verdict {
        self.end_verdict(self.end.ring().is_unit_regular(&self.end_caps()))
    }

    // ---- summand lattice ----

    pub fn has_ssp(&self) -> Verdict {
        self.summand_closure(|a, b| a.sum(b).expect("same ambient"))
    }

    pub fn has_sip(&self) -> Verdict {
        self.summand_closure(|a, b| a.intersect(b).expect("same ambient"))
    }

    fn summand_closure(&self, op: impl Fn(&Submodule, &Submodule) -> Submodule) -> Verdict {
        let s = decide!(self.summands());
        let set: HashSet<&Submodule> = s.iter().collect();
        for (i, a) in s.iter().enumerate() {
            for b in &s[i + 1..] {
                if !set.contains(&op(a, b)) {
                    return Verdict::False(Witness::SubmodulePair(a.gens().clone(), b.gens().clone()));
                }
            }
        }
        Verdict::True
    }

    pub fn summand_lattice(&self) -> std::result::Result<SummandLattice, Exceeded> {
        Ok(SummandLattice::new(self.summands()?.to_vec()))
    }

    /// The summands form a distributive, complemented lattice.
    pub fn is_distributive_boolean(&self) -> Verdict {
        let l = decide!(self.summand_lattice());
        if let Some((a, b)) = l.missing_bound() {
            return Verdict::False(Witness::SubmodulePair(l.elements[a].gens().clone(), l.elements[b].gens().clone()));
        }
        if let Some((a, b, c)) = l.distributivity_violation() {
            return Verdict::False(Witness::SubmoduleTriple(
                l.elements[a].gens().clone(),
                l.elements[b].gens().clone(),
                l.elements[c].gens().clone(),
            ));
        }
        if let Some(a) = l.uncomplemented() {
            return Verdict::False(Witness::Submodule(l.elements[a].gens().clone()));
        }
        Verdict::True
    }

    // ---- conditions equivalent to abelian endoregularity for endoregular M ----

    /// Distinct M-generated submodules are never isomorphic.
    pub fn isomorphic_generated_equal(&self) -> Verdict {
        let gen = decide!(self.m_generated());
        for (i, a) in gen.iter().enumerate() {
            for b in gen[i + 1..].iter().filter(|b| b.order() == a.order()) {
                let (ea, eb) = (extract(a), extract(b));
                match find_isomorphism(&ea.module, &eb.module, &self.caps) {
                    Ok(Some(_)) => {
                        return Verdict::False(Witness::SubmodulePair(a.gens().clone(), b.gens().clone()))
                    }
                    Ok(None) => {}
                    Err(Error::Exceeded(e)) => return Verdict::Undecided(e),
                    Err(e) => return Verdict::False(Witness::Note(e.to_string())),
                }
            }
        }
        Verdict::True
    }

    /// No nonzero M-generated `B` with `B ⊕ B` embedding in `M`.
    pub fn no_square_embeds(&self) -> Verdict {
        let gen = decide!(self.m_generated());
        let order = self.module.order();
        for b in gen.iter().filter(|b| !b.is_zero() && b.order() * b.order() <= order) {
            let eb = extract(b).module;
            let square = direct_sum(&[eb.clone(), eb]).expect("same ring");
            match find_embedding(&square.module, &self.module, &self.caps) {
                Ok(Some(_)) => return Verdict::False(Witness::Submodule(b.gens().clone())),
                Ok(None) => {}
                Err(Error::Exceeded(e)) => return Verdict::Undecided(e),
                Err(e) => return Verdict::False(Witness::Note(e.to_string())),
            }
        }
        Verdict::True
    }

    /// `Hom(A, B) = 0` for M-generated `A, B` with `A ∩ B = 0`.
    pub fn disjoint_generated_orthogonal(&self) -> Verdict {
        let gen = decide!(self.m_generated());
        for a in gen.iter().filter(|s| !s.is_zero()) {
            for b in gen.iter().filter(|s| !s.is_zero() && *s != a) {
                if !a.intersect(b).expect("same ambient").is_zero() {
                    continue;
                }
                let h = hom_group(&extract(a).module, &extract(b).module).expect("same ring");
                if !h.is_trivial() {
                    return Verdict::False(Witness::SubmodulePair(a.gens().clone(), b.gens().clone()));
                }
            }
        }
        Verdict::True
    }

    pub fn summands_distributive(&self) -> Verdict {
        let l = decide!(self.summand_lattice());
        if let Some((a, b)) = l.missing_bound() {
            return Verdict::False(Witness::SubmodulePair(l.elements[a].gens().clone(), l.elements[b].gens().clone()));
        }
        match l.distributivity_violation() {
            Some((a, b, c)) => Verdict::False(Witness::SubmoduleTriple(
                l.elements[a].gens().clone(),
                l.elements[b].gens().clone(),
                l.elements[c].gens().clone(),
            )),
            None => Verdict::True,
        }
    }

    /// The five conditions (a)–(e), in order.
    pub fn propinc_conditions(&self) -> Result<Routes> {
        Ok(vec![
            ("abelian_endoregular", self.is_abelian_endoregular()?),
            ("isomorphic_generated_equal", self.isomorphic_generated_equal()),
            ("no_square_embeds", self.no_square_embeds()),
            ("disjoint_generated_orthogonal", self.disjoint_generated_orthogonal()),
            ("summands_distributive", self.summands_distributive()),
        ])
    }

    // ---- unit endoregular hypotheses ----

    /// `M = Im φ + Ker φ` for every endomorphism.
    pub fn kernel_plus_image_everywhere(&self) -> Verdict {
        let endos = decide!(self.endomorphism_orbits(UnitAction::Conjugation));
        let order = self.module.order();
        for f in endos {
            if f.kernel().sum(&f.image()).expect("same ambient").order() != order {
                return Verdict::False(Witness::Hom(f.matrix().clone()));
            }
        }
        Verdict::True
    }

    /// Every idempotent endomorphism commutes with every automorphism.
    pub fn idempotents_commute_with_units(&self) -> Verdict {
        let ring = self.end.ring();
        let cap = self.caps.homs;
        let idem = decide!(ring.idempotents(cap).map_err(|e| Exceeded { limit: Limit::Homs, ..e }));
        let units = decide!(ring.units(cap).map_err(|e| Exceeded { limit: Limit::Homs, ..e }));
        for e in &idem {
            for u in &units {
                if ring.mul(e, u) != ring.mul(u, e) {
                    return Verdict::False(Witness::ElementPair(e.clone(), u.clone()));
                }
            }
        }
        Verdict::True
    }

    // ---- lattice-shaped properties ----

    pub fn is_duo(&self) -> Verdict {
        let l = decide!(self.lattice());
        to_verdict(Ok(l
            .submodules()
            .iter()
            .find(|s| !self.is_fully_invariant(s))
            .map(|s| Witness::Submodule(s.gens().clone()))))
    }

    pub fn is_quasi_duo(&self) -> Verdict {
        let l = decide!(self.lattice());
        to_verdict(Ok(l
            .maximal()
            .into_iter()
            .find(|s| !self.is_fully_invariant(s))
            .map(|s| Witness::Submodule(s.gens().clone()))))
    }

    /// Zero radical, the finite form of being a subdirect product of simples.
    pub fn is_subdirect_of_simples(&self) -> Verdict {
        let rad = decide!(self.radical());
        if rad.is_zero() {
            Verdict::True
        } else {
            Verdict::False(Witness::Submodule(rad.gens().clone()))
        }
    }

    // ---- K-nonsingular and polyform ----

    /// A kernel is essential iff it contains the socle, so a nonzero
    /// endomorphism with essential kernel is a nonzero map `M/Soc(M) → M`.
    pub fn k_nonsingular_by_socle(&self) -> Verdict {
        let soc = decide!(self.socle());
        let q = quotient(&soc);
        let h = hom_group(&q.module, &self.module).expect("same ring");
        match h.generators().first() {
            None => Verdict::True,
            Some(g) => Verdict::False(Witness::Hom(g.compose(&q.projection).expect("matching").matrix().clone())),
        }
    }

    pub fn k_nonsingular_by_enumeration(&self) -> Verdict {
        let l = decide!(self.lattice());
        let endos = decide!(self.endomorphism_orbits(UnitAction::TwoSided));
        for f in endos.filter(|f| !f.is_zero()) {
            if l.is_essential(&f.kernel()) {
                return Verdict::False(Witness::Hom(f.matrix().clone()));
            }
        }
        Verdict::True
    }

    pub fn k_nonsingular_routes(&self) -> Routes {
        vec![("socle", self.k_nonsingular_by_socle()), ("enumeration", self.k_nonsingular_by_enumeration())]
    }

    pub fn is_k_nonsingular(&self) -> Result<Verdict> {
        agree("K-nonsingular", &self.k_nonsingular_routes())
    }

    /// For every `K ≤ M`, no nonzero map `K → M` kills `Soc(K) = Soc(M) ∩ K`.
    pub fn polyform_by_socle(&self) -> Verdict {
        let l = decide!(self.lattice());
        let soc = l.socle();
        for k in l.submodules().iter().filter(|k| !k.is_zero()) {
            let e = extract(k);
            let sk = e.pull_back(&soc.intersect(k).expect("same ambient")).expect("contained in K");
            let q = quotient(&sk);
            if !hom_group(&q.module, &self.module).expect("same ring").is_trivial() {
                return Verdict::False(Witness::Submodule(k.gens().clone()));
            }
        }
        Verdict::True
    }

    pub fn polyform_by_enumeration(&self) -> Verdict {
        let l = decide!(self.lattice());
        for k in l.submodules().iter().filter(|k| !k.is_zero()) {
            let e = extract(k);
            let h = hom_group(&e.module, &self.module).expect("same ring");
            let maps = decide!(h.elements(&self.caps));
            for f in maps.iter().filter(|f| !f.is_zero()) {
                let ker = e.inclusion.image_of(&f.kernel());
                if l.is_essential_in(&ker, k) {
                    return Verdict::False(Witness::Submodule(k.gens().clone()));
                }
            }
        }
        Verdict::True
    }

    pub fn polyform_routes(&self) -> Routes {
        vec![("socle", self.polyform_by_socle()), ("enumeration", self.polyform_by_enumeration())]
    }

    pub fn is_polyform(&self) -> Result<Verdict> {
        agree("polyform", &self.polyform_routes())
    }
}

/// Direct summands ordered by inclusion, with least upper and greatest lower
/// bounds taken inside the summand poset.
#[derive(Debug, Clone)]
pub struct SummandLattice {
    elements: Vec<Submodule>,
    join: Vec<Vec<Option<usize>>>,
    meet: Vec<Vec<Option<usize>>>,
}

impl SummandLattice {
    fn new(elements: Vec<Submodule>) -> Self {
        let n = elements.len();
        let le: Vec<Vec<bool>> =
            elements.iter().map(|a| elements.iter().map(|b| a.is_contained_in(b)).collect()).collect();
        let index = |s: &Submodule| elements.iter().position(|t| t == s);
        let bound = |cands: Vec<usize>, least: bool| -> Option<usize> {
            cands.iter().copied().find(|&c| cands.iter().all(|&d| if least { le[c][d] } else { le[d][c] }))
        };
        let mut join = vec![vec![None; n]; n];
        let mut meet = vec![vec![None; n]; n];
        for a in 0..n {
            for b in a..n {
                let j = index(&elements[a].sum(&elements[b]).expect("same ambient"))
                    .or_else(|| bound((0..n).filter(|&c| le[a][c] && le[b][c]).collect(), true));
                let m = index(&elements[a].intersect(&elements[b]).expect("same ambient"))
                    .or_else(|| bound((0..n).filter(|&c| le[c][a] && le[c][b]).collect(), false));
                join[a][b] = j;
                join[b][a] = j;
                meet[a][b] = m;
                meet[b][a] = m;
            }
        }
        SummandLattice { elements, join, meet }
    }

    pub fn elements(&self) -> &[Submodule] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet[a][b]
    }

    /// A pair without a join or a meet, if the poset is not a lattice.
    pub fn missing_bound(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).find(|&(a, b)| self.join[a][b].is_none() || self.meet[a][b].is_none())
    }

    /// A triple with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub fn distributivity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in b + 1..n {
                    let lhs = self.join[b][c].and_then(|bc| self.meet[a][bc]);
                    let rhs = match (self.meet[a][b], self.meet[a][c]) {
                        (Some(x), Some(y)) => self.join[x][y],
                        _ => None,
                    };
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// An element with no complement.
    pub fn uncomplemented(&self) -> Option<usize> {
        let n = self.len();
        if n == 0 {
            return None;
        }
        // elements are sorted by order: first is 0, last is M
        let (bottom, top) = (0, n - 1);
        (0..n).find(|&a| !(0..n).any(|b| self.join[a][b] == Some(top) && self.meet[a][b] == Some(bottom)))
    }
}

#[cfg(test)]
mod tests;
