//! Prime and semiprime submodules through the product `K_M L`.

use super::ModuleLab;
use crate::error::{Error, Result};
use crate::hom::hom_group;
use crate::linalg::{subgroup_canonical_form, Mat};
use crate::module::{extract, mat_mul, quotient, vec_mat, Submodule};
use crate::verdict::{Exceeded, Verdict, Witness};

/// Generators of `Hom(M, K)` as endomorphisms of `M` with image in `K`.
fn maps_into(k: &Submodule) -> Vec<Mat> {
    let m = k.ambient();
    let e = extract(k);
    let h = hom_group(m, &e.module).expect("same ring");
    h.generator_matrices().iter().map(|g| mat_mul(g, e.inclusion.matrix(), m.moduli())).collect()
}

fn apply_all(maps: &[Mat], l: &Submodule) -> Submodule {
    let m = l.ambient();
    let rows: Vec<Vec<i64>> =
        maps.iter().flat_map(|g| l.gens().iter().map(move |x| vec_mat(x, g, m.moduli()))).collect();
    Submodule::from_canonical(m, subgroup_canonical_form(&rows, m.moduli()))
}

/// `K_M L = Σ { f(L) | f ∈ Hom(M, K) }`, computed inside `M`.
pub fn submodule_product(k: &Submodule, l: &Submodule) -> Submodule {
    apply_all(&maps_into(k), l)
}

impl ModuleLab {
    /// Fully invariant submodules, largest first, with `Hom(M, K)` generators.
    fn prime_maps(&self) -> std::result::Result<&[(Submodule, Vec<Mat>)], Exceeded> {
        self.prime_maps
            .get_or_init(|| {
                let mut fi = self.fully_invariant()?.to_vec();
                fi.reverse();
                Ok(fi.into_iter().map(|k| {
                    let maps = maps_into(&k);
                    (k, maps)
                }).collect())
            })
            .as_deref()
            .map_err(|e| *e)
    }

    fn check_candidate(&self, n: &Submodule) -> Result<Option<Verdict>> {
        if **n.ambient() != *self.module {
            return Err(Error::AmbientMismatch);
        }
        if !self.is_fully_invariant(n) {
            return Err(Error::NotFullyInvariant);
        }
        if n.is_whole() {
            return Ok(Some(Verdict::False(Witness::Note("not a proper submodule".into()))));
        }
        Ok(None)
    }

    /// `N` proper and fully invariant with `K_M L ⊆ N ⟹ K ⊆ N or L ⊆ N` for
    /// all fully invariant `K, L`. The witness is the first failing pair with
    /// both sides taken largest first.
    pub fn is_prime_in(&self, n: &Submodule) -> Result<Verdict> {
        if let Some(v) = self.check_candidate(n)? {
            return Ok(v);
        }
        let maps = match self.prime_maps() {
            Ok(m) => m,
            Err(e) => return Ok(Verdict::Undecided(e)),
        };
        let outside: Vec<&(Submodule, Vec<Mat>)> = maps.iter().filter(|(k, _)| !k.is_contained_in(n)).collect();
        for (k, into_k) in &outside {
            for (l, _) in &outside {
                if apply_all(into_k, l).is_contained_in(n) {
                    return Ok(Verdict::False(Witness::SubmodulePair(k.gens().clone(), l.gens().clone())));
                }
            }
        }
        Ok(Verdict::True)
    }

    /// `K_M K ⊆ N ⟹ K ⊆ N` for fully invariant `K`; the witness is the
    /// largest failing `K`.
    pub fn is_semiprime_in(&self, n: &Submodule) -> Result<Verdict> {
        if let Some(v) = self.check_candidate(n)? {
            return Ok(v);
        }
        let maps = match self.prime_maps() {
            Ok(m) => m,
            Err(e) => return Ok(Verdict::Undecided(e)),
        };
        for (k, into_k) in maps.iter().filter(|(k, _)| !k.is_contained_in(n)) {
            if apply_all(into_k, k).is_contained_in(n) {
                return Ok(Verdict::False(Witness::Submodule(k.gens().clone())));
            }
        }
        Ok(Verdict::True)
    }

    /// All prime submodules, smallest first.
    pub fn spec(&self) -> std::result::Result<Vec<Submodule>, Exceeded> {
        let mut out = Vec::new();
        for n in self.fully_invariant()?.iter().filter(|n| !n.is_whole()) {
            match self.is_prime_in(n).expect("fully invariant by construction") {
                Verdict::True => out.push(n.clone()),
                Verdict::Undecided(e) => return Err(e),
                Verdict::False(_) => {}
            }
        }
        Ok(out)
    }

    /// Zero is prime in `M`.
    pub fn is_prime_module(&self) -> Result<Verdict> {
        self.is_prime_in(&Submodule::zero(&self.module))
    }

    pub fn is_semiprime_module(&self) -> Result<Verdict> {
        self.is_semiprime_in(&Submodule::zero(&self.module))
    }

    /// The quotient `M/N` as a fresh lab with the same caps.
    pub fn quotient_lab(&self, n: &Submodule) -> Result<ModuleLab> {
        ModuleLab::new(quotient(n).module, self.caps)
    }
}
