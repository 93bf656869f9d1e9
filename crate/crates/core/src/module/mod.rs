//! Finite right modules over a [`FiniteRing`], given by additive moduli and one
//! action matrix per ring basis element (elements are row vectors, `m·r = m·ρ(r)`).

mod lattice;
mod submodule;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use lattice::{enumerate_submodules, SubmoduleLattice};
pub use submodule::{extract, quotient, submodule_generated, Extracted, Quotient, Submodule};

use crate::error::{Error, Result};
use crate::hom::ModuleHom;
use crate::linalg::zn::reduce_acc;
use crate::linalg::{Mat, Moduli};
use crate::ring::FiniteRing;

/// Serialized module body (the ring is referenced by name at workspace level).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePresentation {
    pub moduli: Vec<i64>,
    pub action: Vec<Mat>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    moduli: Moduli,
    action: Vec<Mat>,
}

fn module_err(law: &'static str, detail: String) -> Error {
    Error::InvalidModule { law, detail }
}

/// `x · a` for a row vector and a square matrix, reduced mod `moduli`.
pub(crate) fn vec_mat(x: &[i64], a: &Mat, moduli: &Moduli) -> Vec<i64> {
    let cols = moduli.len();
    let mut acc = vec![0i128; cols];
    for (&xi, row) in x.iter().zip(a) {
        if xi == 0 {
            continue;
        }
        for (t, &v) in acc.iter_mut().zip(row) {
            *t += xi as i128 * v as i128;
        }
    }
    acc.iter().zip(moduli.as_slice()).map(|(&v, &m)| reduce_acc(v, m)).collect()
}

/// Matrix product `a · b` with the result reduced mod `moduli` (columns of `b`).
pub(crate) fn mat_mul(a: &Mat, b: &Mat, moduli: &Moduli) -> Mat {
    a.iter().map(|row| vec_mat(row, b, moduli)).collect()
}

impl FiniteModule {
    /// Validates and builds a module. A module whose moduli are all 1 is
    /// normalized to the zero module with no coordinates.
    pub fn new(ring: Arc<FiniteRing>, moduli: Vec<i64>, action: Vec<Mat>) -> Result<Self> {
        let moduli = Moduli::new(moduli).map_err(|e| module_err("moduli", e.to_string()))?;
        let k = ring.dim();
        let m = moduli.len();
        if action.len() != k {
            return Err(module_err("shape", format!("{} action matrices for {k} ring basis elements", action.len())));
        }
        if action.iter().any(|a| a.len() != m || a.iter().any(|r| r.len() != m)) {
            return Err(module_err("shape", format!("action matrices must be {m}x{m}")));
        }
        if moduli.as_slice().iter().all(|&d| d == 1) {
            let action = vec![Vec::new(); k];
            return Ok(FiniteModule { ring, moduli: Moduli::empty(), action });
        }
        let action: Vec<Mat> = action.iter().map(|a| a.iter().map(|r| moduli.reduced(r)).collect()).collect();
        let module = FiniteModule { ring, moduli, action };
        module.check_laws()?;
        Ok(module)
    }

    fn check_laws(&self) -> Result<()> {
        let m = &self.moduli;
        let ring = &self.ring;
        for (i, a) in self.action.iter().enumerate() {
            for (j, row) in a.iter().enumerate() {
                let d = m.as_slice()[j];
                if !m.is_zero(&m.scale(row, d)) {
                    return Err(module_err(
                        "well-definedness",
                        format!("row {j} of rho(b{i}) = {row:?} is not killed by the order {d}"),
                    ));
                }
                let c = ring.moduli().as_slice()[i];
                if !m.is_zero(&m.scale(row, c)) {
                    return Err(module_err(
                        "additive compatibility",
                        format!("rho(b{i}) is not killed by the additive order {c} of b{i}"),
                    ));
                }
            }
        }
        let one = self.action_of(&ring.one());
        for (j, row) in one.iter().enumerate() {
            let mut e = m.zero();
            e[j] = 1;
            if *row != m.reduced(&e) {
                return Err(module_err("identity", format!("rho(one) moves basis vector {j}")));
            }
        }
        for i in 0..ring.dim() {
            for j in 0..ring.dim() {
                let lhs = mat_mul(&self.action[i], &self.action[j], m);
                let rhs = self.action_of(ring.structure_constant(i, j));
                if lhs != rhs {
                    return Err(module_err(
                        "multiplicativity",
                        format!("rho(b{i}) rho(b{j}) differs from rho(b{i} b{j})"),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn moduli(&self) -> &Moduli {
        &self.moduli
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u128 {
        self.moduli.order()
    }

    pub fn is_zero_module(&self) -> bool {
        self.moduli.is_empty()
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    pub fn presentation(&self) -> ModulePresentation {
        ModulePresentation { moduli: self.moduli.as_slice().to_vec(), action: self.action.clone() }
    }

    pub fn zero(&self) -> Vec<i64> {
        self.moduli.zero()
    }

    pub fn basis_vector(&self, j: usize) -> Vec<i64> {
        let mut e = self.zero();
        e[j] = 1;
        self.moduli.reduced(&e)
    }

    /// ρ(r) for an arbitrary ring element.
    pub fn action_of(&self, r: &[i64]) -> Mat {
        let m = self.dim();
        let mut acc = vec![vec![0i128; m]; m];
        for (&c, a) in r.iter().zip(&self.action) {
            if c == 0 {
                continue;
            }
            for (arow, row) in acc.iter_mut().zip(a) {
                for (t, &v) in arow.iter_mut().zip(row) {
                    *t += c as i128 * v as i128;
                }
            }
        }
        acc.iter()
            .map(|row| row.iter().zip(self.moduli.as_slice()).map(|(&v, &d)| reduce_acc(v, d)).collect())
            .collect()
    }

    /// `x · r`.
    pub fn act(&self, x: &[i64], r: &[i64]) -> Vec<i64> {
        vec_mat(x, &self.action_of(r), &self.moduli)
    }

    /// `x · b_i`.
    pub fn act_basis(&self, x: &[i64], i: usize) -> Vec<i64> {
        vec_mat(x, &self.action[i], &self.moduli)
    }

    pub fn elements(&self) -> crate::linalg::MixedRadix {
        self.moduli.elements()
    }

    pub fn same_ring(&self, other: &FiniteModule) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }
}

/// `R_R`: the ring acting on itself by right multiplication.
pub fn regular_module(ring: &Arc<FiniteRing>) -> FiniteModule {
    let k = ring.dim();
    let action = (0..k)
        .map(|i| (0..k).map(|j| ring.structure_constant(j, i).to_vec()).collect())
        .collect();
    FiniteModule::new(ring.clone(), ring.moduli().as_slice().to_vec(), action).expect("R_R is a module")
}

/// `e·R` for an element `e` of the ring, as a standalone module.
pub fn principal_right_ideal(ring: &Arc<FiniteRing>, e: &[i64]) -> Extracted {
    let r = Arc::new(regular_module(ring));
    extract(&submodule_generated(&r, &[e.to_vec()]))
}

/// A direct sum together with its canonical embeddings and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: Arc<FiniteModule>,
    pub embeddings: Vec<ModuleHom>,
    pub projections: Vec<ModuleHom>,
}

/// `⊕ M_i` with block-diagonal action.
pub fn direct_sum(parts: &[Arc<FiniteModule>]) -> Result<DirectSum> {
    let Some(first) = parts.first() else {
        return Err(Error::DimensionMismatch("direct sum of an empty family needs a ring".into()));
    };
    if parts.iter().any(|p| !p.same_ring(first)) {
        return Err(Error::RingMismatch);
    }
    let ring = first.ring.clone();
    let total: usize = parts.iter().map(|p| p.dim()).sum();
    let moduli: Vec<i64> = parts.iter().flat_map(|p| p.moduli.as_slice().to_vec()).collect();
    let mut action = vec![vec![vec![0; total]; total]; ring.dim()];
    let mut offset = 0;
    for p in parts {
        for (i, a) in p.action.iter().enumerate() {
            for (r, row) in a.iter().enumerate() {
                action[i][offset + r][offset..offset + p.dim()].copy_from_slice(row);
            }
        }
        offset += p.dim();
    }
    let sum = Arc::new(FiniteModule::new(ring, moduli, action)?);
    let mut embeddings = Vec::new();
    let mut projections = Vec::new();
    let mut offset = 0;
    for p in parts {
        let emb: Mat = (0..p.dim())
            .map(|r| {
                let mut row = vec![0; total];
                row[offset + r] = 1;
                row
            })
            .collect();
        let proj: Mat = (0..total)
            .map(|r| {
                let mut row = vec![0; p.dim()];
                if r >= offset && r < offset + p.dim() {
                    row[r - offset] = 1;
                }
                row
            })
            .collect();
        embeddings.push(ModuleHom::new(p.clone(), sum.clone(), emb)?);
        projections.push(ModuleHom::new(sum.clone(), p.clone(), proj)?);
        offset += p.dim();
    }
    Ok(DirectSum { module: sum, embeddings, projections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::constructions::*;

    #[test]
    fn regular_and_small_modules_validate() {
        let z6 = Arc::new(zn(6));
        let r = regular_module(&z6);
        assert_eq!(r.order(), 6);
        let z2 = FiniteModule::new(z6.clone(), vec![2], vec![vec![vec![1]]]).unwrap();
        assert_eq!(z2.order(), 2);
        let ut = Arc::new(upper_triangular(2, 2));
        assert_eq!(regular_module(&ut).order(), 8);
    }

    #[test]
    fn identity_law_is_checked() {
        let z6 = Arc::new(zn(6));
        match FiniteModule::new(z6, vec![2], vec![vec![vec![0]]]) {
            Err(Error::InvalidModule { law, .. }) => assert_eq!(law, "identity"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn additive_compatibility_is_checked() {
        // Z/4 cannot be a module over Z/2 via the identity action.
        let z2 = Arc::new(zn(2));
        match FiniteModule::new(z2, vec![4], vec![vec![vec![1]]]) {
            Err(Error::InvalidModule { law, .. }) => assert_eq!(law, "additive compatibility"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn zero_module_is_normalized() {
        let z6 = Arc::new(zn(6));
        let m = FiniteModule::new(z6.clone(), vec![1], vec![vec![vec![0]]]).unwrap();
        assert!(m.is_zero_module());
        assert_eq!(m.order(), 1);
        let z1 = Arc::new(zn(1));
        assert!(regular_module(&z1).is_zero_module());
    }

    #[test]
    fn direct_sums() {
        let z6 = Arc::new(zn(6));
        let a = Arc::new(FiniteModule::new(z6.clone(), vec![2], vec![vec![vec![1]]]).unwrap());
        let b = Arc::new(FiniteModule::new(z6.clone(), vec![3], vec![vec![vec![1]]]).unwrap());
        let s = direct_sum(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(s.module.order(), 6);
        for (i, e) in s.embeddings.iter().enumerate() {
            for (j, p) in s.projections.iter().enumerate() {
                let c = p.compose(e).unwrap();
                if i == j {
                    assert!(c.is_identity());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
        let single = direct_sum(std::slice::from_ref(&a)).unwrap();
        assert_eq!(*single.module, *a);
        assert!(single.embeddings[0].is_identity());
        let z0 = Arc::new(FiniteModule::new(z6, vec![], vec![vec![]]).unwrap());
        assert_eq!(direct_sum(&[a.clone(), z0]).unwrap().module.order(), 2);
    }

    #[test]
    fn mixed_rings_are_rejected() {
        let a = Arc::new(regular_module(&Arc::new(zn(6))));
        let b = Arc::new(regular_module(&Arc::new(zn(4))));
        assert_eq!(direct_sum(&[a, b]).unwrap_err(), Error::RingMismatch);
    }
}
