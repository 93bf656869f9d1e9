//! Enumeration of the full submodule lattice and the lattice-derived
//! invariants (maximal submodules, radical, socle, essentiality).

use std::collections::HashSet;
use std::sync::Arc;

use super::submodule::{submodule_generated, Submodule};
use super::FiniteModule;
use crate::verdict::{Caps, Exceeded, Limit};

/// Every submodule of a module, sorted by order and then by generators.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    module: Arc<FiniteModule>,
    subs: Vec<Submodule>,
}

/// Closes the set of cyclic submodules under sums. Needs `|M| <= caps.elements`
/// and stops once more than `caps.submodules` submodules are found.
pub fn enumerate_submodules(m: &Arc<FiniteModule>, caps: &Caps) -> Result<SubmoduleLattice, Exceeded> {
    caps.check(Limit::Elements, m.order())?;
    let mut seen: HashSet<Submodule> = HashSet::new();
    let mut cyclic: Vec<Submodule> = Vec::new();
    seen.insert(Submodule::zero(m));
    for x in m.elements() {
        let c = submodule_generated(m, &[x]);
        if seen.insert(c.clone()) {
            cyclic.push(c);
            caps.check(Limit::Submodules, seen.len() as u128)?;
        }
    }
    let mut queue: Vec<Submodule> = cyclic.clone();
    while let Some(s) = queue.pop() {
        for c in &cyclic {
            if c.is_contained_in(&s) {
                continue;
            }
            let t = s.sum(c).expect("same ambient");
            if !seen.contains(&t) {
                seen.insert(t.clone());
                caps.check(Limit::Submodules, seen.len() as u128)?;
                queue.push(t);
            }
        }
    }
    let mut subs: Vec<Submodule> = seen.into_iter().collect();
    subs.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.gens().cmp(b.gens())));
    Ok(SubmoduleLattice { module: m.clone(), subs })
}

impl SubmoduleLattice {
    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn submodules(&self) -> &[Submodule] {
        &self.subs
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    /// Submodules contained in `top` (including `top` itself and zero).
    pub fn below<'a>(&'a self, top: &'a Submodule) -> impl Iterator<Item = &'a Submodule> + 'a {
        self.subs.iter().filter(move |s| s.is_contained_in(top))
    }

    /// Maximal proper submodules.
    pub fn maximal(&self) -> Vec<Submodule> {
        let order = self.module.order();
        let proper: Vec<&Submodule> = self.subs.iter().filter(|s| s.order() < order).collect();
        proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.order() > s.order() && s.is_contained_in(t)))
            .map(|s| (*s).clone())
            .collect()
    }

    /// Minimal nonzero submodules.
    pub fn minimal(&self) -> Vec<Submodule> {
        let nonzero: Vec<&Submodule> = self.subs.iter().filter(|s| !s.is_zero()).collect();
        nonzero
            .iter()
            .filter(|s| !nonzero.iter().any(|t| t.order() < s.order() && t.is_contained_in(s)))
            .map(|s| (*s).clone())
            .collect()
    }

    /// Intersection of the maximal submodules (zero for the zero module).
    pub fn radical(&self) -> Submodule {
        let mut acc = Submodule::whole(&self.module);
        let maximal = self.maximal();
        if maximal.is_empty() {
            return Submodule::zero(&self.module);
        }
        for s in &maximal {
            acc = acc.intersect(s).expect("same ambient");
        }
        acc
    }

    /// Sum of the minimal nonzero submodules.
    pub fn socle(&self) -> Submodule {
        let mut acc = Submodule::zero(&self.module);
        for s in self.minimal() {
            acc = acc.sum(&s).expect("same ambient");
        }
        acc
    }

    pub fn is_simple(&self) -> bool {
        self.subs.len() == 2
    }

    /// `N` meets every nonzero submodule of `L` (with `N ≤ L`).
    pub fn is_essential_in(&self, n: &Submodule, l: &Submodule) -> bool {
        self.below(l)
            .filter(|k| !k.is_zero())
            .all(|k| !n.intersect(k).expect("same ambient").is_zero())
    }

    /// `N` meets every nonzero submodule of `M`.
    pub fn is_essential(&self, n: &Submodule) -> bool {
        self.is_essential_in(n, &Submodule::whole(&self.module))
    }

    /// `N` has no proper essential extension inside `M`.
    pub fn is_essentially_closed(&self, n: &Submodule) -> bool {
        self.subs
            .iter()
            .filter(|l| l.order() > n.order() && n.is_contained_in(l))
            .all(|l| !self.is_essential_in(n, l))
    }

    /// Index of a submodule in the sorted list.
    pub fn position(&self, s: &Submodule) -> Option<usize> {
        self.subs.iter().position(|t| t == s)
    }
}
