use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_traits::ToPrimitive;

use super::FiniteModule;
use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::linalg::{
    present_subgroup, smith_normal_form, subgroup_canonical_form, subgroup_elements, subgroup_order,
    subgroup_reduce, IntMatrix, Mat, Presentation,
};

/// A submodule, identified by the canonical generator matrix of its
/// underlying subgroup. Equality and hashing look only at the generators, so
/// only compare submodules of the same ambient module.
#[derive(Clone)]
pub struct Submodule {
    ambient: Arc<FiniteModule>,
    gens: Mat,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.gens.hash(state);
    }
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{:?}", self.gens)
    }
}

/// Smallest submodule containing `elems`: the subgroup spanned by all
/// `x·b_i` (the identity is a combination of basis elements, so this already
/// contains `x` and is closed under the action).
pub fn submodule_generated(m: &Arc<FiniteModule>, elems: &[Vec<i64>]) -> Submodule {
    let mut gens = Vec::with_capacity(elems.len() * m.ring().dim());
    for x in elems {
        for i in 0..m.ring().dim() {
            gens.push(m.act_basis(x, i));
        }
    }
    Submodule { ambient: m.clone(), gens: subgroup_canonical_form(&gens, m.moduli()) }
}

impl Submodule {
    /// Wraps an arbitrary generating set after checking closure under the action.
    pub fn from_generators(m: &Arc<FiniteModule>, gens: &[Vec<i64>]) -> Result<Self> {
        for g in gens {
            m.moduli().check_len(g)?;
        }
        let canon = subgroup_canonical_form(gens, m.moduli());
        let s = Submodule { ambient: m.clone(), gens: canon };
        for g in &s.gens {
            for i in 0..m.ring().dim() {
                if !s.contains(&m.act_basis(g, i)) {
                    return Err(Error::InvalidModule {
                        law: "submodule closure",
                        detail: format!("{g:?}·b{i} leaves the generated subgroup"),
                    });
                }
            }
        }
        Ok(s)
    }

    pub fn zero(m: &Arc<FiniteModule>) -> Self {
        Submodule { ambient: m.clone(), gens: Vec::new() }
    }

    pub fn whole(m: &Arc<FiniteModule>) -> Self {
        let gens: Vec<Vec<i64>> = (0..m.dim()).map(|j| m.basis_vector(j)).collect();
        Submodule { ambient: m.clone(), gens: subgroup_canonical_form(&gens, m.moduli()) }
    }

    pub fn ambient(&self) -> &Arc<FiniteModule> {
        &self.ambient
    }

    pub fn gens(&self) -> &Mat {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        subgroup_order(&self.gens, self.ambient.moduli())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.ambient.order()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.ambient.moduli().is_zero(&subgroup_reduce(x, &self.gens, self.ambient.moduli()))
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Submodule) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn elements(&self) -> Vec<Vec<i64>> {
        subgroup_elements(&self.gens, self.ambient.moduli())
    }

    fn check_ambient(&self, other: &Submodule) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let gens: Vec<Vec<i64>> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Submodule { ambient: self.ambient.clone(), gens: subgroup_canonical_form(&gens, self.ambient.moduli()) })
    }

    /// `A ∩ B` as the second block of `{(a + b, a)}` rows whose first block vanishes.
    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check_ambient(other)?;
        let m = self.ambient.moduli();
        let k = m.len();
        let doubled = m.concat(m);
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for a in &self.gens {
            rows.push(a.iter().chain(a).copied().collect());
        }
        for b in &other.gens {
            rows.push(b.iter().copied().chain(std::iter::repeat_n(0, k)).collect());
        }
        let canon = subgroup_canonical_form(&rows, &doubled);
        let gens: Vec<Vec<i64>> = canon
            .into_iter()
            .filter(|r| r[..k].iter().all(|&x| x == 0))
            .map(|r| r[k..].to_vec())
            .collect();
        Ok(Submodule { ambient: self.ambient.clone(), gens: subgroup_canonical_form(&gens, m) })
    }

    pub(crate) fn from_canonical(ambient: &Arc<FiniteModule>, gens: Mat) -> Submodule {
        Submodule { ambient: ambient.clone(), gens }
    }
}

/// `M/N` with SNF coordinates and the projection `M → M/N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: Arc<FiniteModule>,
    pub projection: ModuleHom,
}

pub fn quotient(n: &Submodule) -> Quotient {
    let m = n.ambient();
    let dim = m.dim();
    let mut rel: Vec<Vec<i64>> = (0..dim)
        .map(|j| {
            let mut r = vec![0; dim];
            r[j] = m.moduli().as_slice()[j];
            r
        })
        .collect();
    rel.extend(n.gens().iter().cloned());
    let rel = IntMatrix::from_vec(rel.len(), dim, rel.iter().flatten().map(|&x| x.into()).collect())
        .expect("consistent shape");
    let snf = smith_normal_form(&rel);
    let inv = snf.invariants();
    let kept: Vec<usize> = (0..dim).filter(|&i| inv[i] != 1.into()).collect();
    let orders: Vec<i64> = kept.iter().map(|&i| inv[i].to_i64().expect("divides the exponent")).collect();
    let q_moduli = crate::linalg::Moduli::new(orders.clone()).expect("positive invariants");
    let big_mod = |x: &num_bigint::BigInt, d: i64| -> i64 {
        let d = num_bigint::BigInt::from(d);
        (((x % &d) + &d) % &d).to_i64().expect("reduced")
    };
    // projection: x ↦ (x · V⁻¹)_kept
    let proj: Mat = (0..dim)
        .map(|r| kept.iter().zip(&orders).map(|(&c, &d)| big_mod(&snf.v_inv[(r, c)], d)).collect())
        .collect();
    let project = |x: &[i64]| -> Vec<i64> { super::vec_mat(x, &proj, &q_moduli) };
    let lifts: Vec<Vec<i64>> = kept
        .iter()
        .map(|&i| m.moduli().reduced(&(0..dim).map(|c| big_mod(&snf.v[(i, c)], m.moduli().as_slice()[c])).collect::<Vec<_>>()))
        .collect();
    let action: Vec<Mat> = (0..m.ring().dim())
        .map(|b| lifts.iter().map(|y| project(&m.act_basis(y, b))).collect())
        .collect();
    let module = Arc::new(FiniteModule::new(m.ring().clone(), orders, action).expect("quotients are modules"));
    let projection = ModuleHom::new(m.clone(), module.clone(), proj).expect("projection is R-linear");
    Quotient { module, projection }
}

/// A submodule realized as a module in its own right, with its inclusion.
#[derive(Debug, Clone)]
pub struct Extracted {
    pub module: Arc<FiniteModule>,
    pub inclusion: ModuleHom,
    presentation: Presentation,
}

impl Extracted {
    /// Coordinates in the extracted module of an ambient element of the submodule.
    pub fn coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.presentation.coordinates(x)
    }

    /// Pulls a submodule of the ambient module contained in `N` back into the
    /// extracted coordinates.
    pub fn pull_back(&self, s: &Submodule) -> Option<Submodule> {
        let gens: Option<Vec<Vec<i64>>> = s.gens().iter().map(|g| self.coordinates(g)).collect();
        Some(Submodule::from_canonical(
            &self.module,
            subgroup_canonical_form(&gens?, self.module.moduli()),
        ))
    }
}

pub fn extract(n: &Submodule) -> Extracted {
    let m = n.ambient();
    let presentation = present_subgroup(n.gens(), m.moduli());
    let action: Vec<Mat> = (0..m.ring().dim())
        .map(|b| {
            presentation
                .basis
                .iter()
                .map(|g| presentation.coordinates(&m.act_basis(g, b)).expect("submodules are closed"))
                .collect()
        })
        .collect();
    let module = Arc::new(
        FiniteModule::new(m.ring().clone(), presentation.orders.clone(), action).expect("submodules are modules"),
    );
    let inclusion =
        ModuleHom::new(module.clone(), m.clone(), presentation.basis.clone()).expect("inclusion is R-linear");
    Extracted { module, inclusion, presentation }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::ring::constructions::*;

    fn zmod(n: i64) -> Arc<FiniteModule> {
        Arc::new(regular_module(&Arc::new(zn(n))))
    }

    #[test]
    fn generated_submodules() {
        let m = zmod(6);
        assert!(submodule_generated(&m, &[]).is_zero());
        let s = submodule_generated(&m, &[vec![2]]);
        let mut e = s.elements();
        e.sort();
        assert_eq!(e, vec![vec![0], vec![2], vec![4]]);
        assert!(submodule_generated(&m, &[vec![5]]).is_whole());
    }

    #[test]
    fn sums_and_intersections_in_z6() {
        let m = zmod(6);
        let a = submodule_generated(&m, &[vec![2]]);
        let b = submodule_generated(&m, &[vec![3]]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert!(a.sum(&b).unwrap().is_whole());
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.sum(&Submodule::zero(&m)).unwrap(), a);
        assert_eq!(a.intersect(&Submodule::whole(&m)).unwrap(), a);
    }

    #[test]
    fn quotients() {
        let m = zmod(6);
        let q = quotient(&submodule_generated(&m, &[vec![2]]));
        assert_eq!(q.module.order(), 2);
        assert_eq!(quotient(&Submodule::zero(&m)).module.order(), 6);
        assert!(quotient(&Submodule::whole(&m)).module.is_zero_module());
        let k = q.projection.kernel();
        assert_eq!(k, submodule_generated(&m, &[vec![2]]));
    }

    #[test]
    fn extraction() {
        let m = zmod(6);
        let e = extract(&submodule_generated(&m, &[vec![2]]));
        assert_eq!(e.module.order(), 3);
        assert_eq!(extract(&Submodule::whole(&m)).module.order(), 6);
        assert!(extract(&Submodule::zero(&m)).module.is_zero_module());
        assert!(e.inclusion.kernel().is_zero());
    }
}
