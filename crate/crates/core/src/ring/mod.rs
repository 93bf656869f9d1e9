//! Finite associative unital rings presented by additive moduli and structure
//! constants, with exact decision procedures for (abelian, unit) regularity.

pub mod constructions;
mod orbits;

pub use orbits::{Orbits, UnitAction};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::zn::reduce_acc;
use crate::linalg::{subgroup_elements, GroupMap, Moduli};
use crate::verdict::{Caps, Exceeded, Limit, Verdict, Witness};

/// Serialized form of a ring: `moduli`, `mul[i][j]` = coordinates of
/// `b_i·b_j`, and `one`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentation {
    pub moduli: Vec<i64>,
    pub mul: Vec<Vec<Vec<i64>>>,
    pub one: Vec<i64>,
}

/// A validated finite ring. Elements are plain coordinate vectors reduced
/// componentwise modulo [`FiniteRing::moduli`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    moduli: Moduli,
    mul: Vec<Vec<Vec<i64>>>,
    one: Vec<i64>,
    /// Nonzero entries of `mul[i][j]`, flattened as `i * k + j`.
    terms: Vec<Vec<(usize, i64)>>,
    exponent: i64,
}

/// Diagnostic for the first ring axiom a presentation violates.
pub fn validate_ring(p: &RingPresentation) -> Result<()> {
    FiniteRing::new(p.clone()).map(|_| ())
}

fn ring_err(axiom: &'static str, detail: String) -> Error {
    Error::InvalidRing { axiom, detail }
}

impl FiniteRing {
    pub fn new(p: RingPresentation) -> Result<Self> {
        let moduli = Moduli::new(p.moduli).map_err(|e| ring_err("moduli", e.to_string()))?;
        let k = moduli.len();
        if p.mul.len() != k
            || p.mul.iter().any(|row| row.len() != k || row.iter().any(|v| v.len() != k))
        {
            return Err(ring_err("shape", format!("mul must be {k}x{k} vectors of length {k}")));
        }
        if p.one.len() != k {
            return Err(ring_err("shape", format!("one must have length {k}")));
        }
        let mul: Vec<Vec<Vec<i64>>> =
            p.mul.iter().map(|row| row.iter().map(|v| moduli.reduced(v)).collect()).collect();
        let terms = mul
            .iter()
            .flatten()
            .map(|v| v.iter().enumerate().filter(|(_, &s)| s != 0).map(|(t, &s)| (t, s)).collect())
            .collect();
        let exponent = moduli.exponent();
        let ring = FiniteRing { one: moduli.reduced(&p.one), moduli, mul, terms, exponent };
        ring.check_axioms()?;
        Ok(ring)
    }

    fn check_axioms(&self) -> Result<()> {
        let k = self.dim();
        let m = &self.moduli;
        for i in 0..k {
            for j in 0..k {
                let t = &self.mul[i][j];
                let ci = m.as_slice()[i];
                let cj = m.as_slice()[j];
                if !m.is_zero(&m.scale(t, ci)) || !m.is_zero(&m.scale(t, cj)) {
                    return Err(ring_err(
                        "well-definedness",
                        format!("b{i}*b{j} = {t:?} is not killed by the orders {ci} and {cj}"),
                    ));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = self.mul(&self.mul[i][j], &self.basis(l));
                    let right = self.mul(&self.basis(i), &self.mul[j][l]);
                    if left != right {
                        return Err(ring_err(
                            "associativity",
                            format!("(b{i}b{j})b{l} = {left:?} but b{i}(b{j}b{l}) = {right:?}"),
                        ));
                    }
                }
            }
        }
        for i in 0..k {
            let b = self.basis(i);
            if self.mul(&self.one, &b) != b || self.mul(&b, &self.one) != b {
                return Err(ring_err("identity law", format!("one does not fix b{i}")));
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> RingPresentation {
        RingPresentation { moduli: self.moduli.as_slice().to_vec(), mul: self.mul.clone(), one: self.one.clone() }
    }

    pub fn moduli(&self) -> &Moduli {
        &self.moduli
    }

    /// Number of basis elements.
    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u128 {
        self.moduli.order()
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &[i64] {
        &self.mul[i][j]
    }

    pub fn zero(&self) -> Vec<i64> {
        self.moduli.zero()
    }

    pub fn one(&self) -> Vec<i64> {
        self.one.clone()
    }

    pub fn basis(&self, i: usize) -> Vec<i64> {
        let mut e = self.zero();
        e[i] = 1;
        self.moduli.reduced(&e)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.moduli.add(a, b)
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.moduli.sub(a, b)
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.moduli.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let k = self.dim();
        let m = self.moduli.as_slice();
        let small = self.exponent <= 1 << 31;
        let mut acc = vec![0i128; k];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &x)| x != 0) {
                let mut c = ai as i128 * bj as i128;
                if !small {
                    c = c.rem_euclid(self.exponent as i128);
                }
                for &(t, s) in &self.terms[i * k + j] {
                    acc[t] += c * s as i128;
                    if !small {
                        acc[t] = acc[t].rem_euclid(m[t] as i128);
                    }
                }
            }
        }
        acc.iter().zip(m).map(|(&x, &m)| reduce_acc(x, m)).collect()
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        self.moduli.is_zero(a)
    }

    pub fn is_commutative(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (0..k).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    /// All elements, or `Exceeded` when `|R| > cap`.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Vec<i64>>, Exceeded> {
        Caps { elements: cap, ..Caps::default() }.check(Limit::Elements, self.order())?;
        Ok(self.moduli.elements().collect())
    }

    /// The additive map `y ↦ l·y·r`.
    fn sandwich_map(&self, l: &[i64], r: &[i64]) -> GroupMap {
        let k = self.dim();
        // b_t·r once, then l·b_i·r = Σ_t (l·b_i)_t (b_t·r)
        let right: Vec<Vec<i64>> = (0..k).map(|t| self.mul(&self.basis(t), r)).collect();
        let images = (0..k)
            .map(|i| {
                let lb = self.mul(l, &self.basis(i));
                let mut acc = vec![0i128; k];
                for (c, row) in lb.iter().zip(&right) {
                    if *c != 0 {
                        for (a, &v) in acc.iter_mut().zip(row) {
                            *a += *c as i128 * v as i128;
                        }
                    }
                }
                acc.iter().zip(self.moduli.as_slice()).map(|(&x, &m)| reduce_acc(x, m)).collect()
            })
            .collect();
        GroupMap::new(self.moduli.clone(), self.moduli.clone(), images).expect("ring multiplication is additive")
    }

    /// Some `y` with `x·y·x = x`, found by solving the linear system in the
    /// coordinates of `y`.
    pub fn regularity_witness(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.sandwich_map(x, x).solver().preimage(x)
    }

    /// Two-sided inverse, if `x` is a unit.
    pub fn inverse(&self, x: &[i64]) -> Option<Vec<i64>> {
        let right = self.sandwich_map(x, &self.one).solver().preimage(&self.one)?;
        let left = self.sandwich_map(&self.one, x).solver().preimage(&self.one)?;
        // In any ring a left and a right inverse coincide.
        debug_assert_eq!(left, right);
        Some(right)
    }

    pub fn is_unit(&self, x: &[i64]) -> bool {
        self.inverse(x).is_some()
    }

    pub fn is_idempotent(&self, x: &[i64]) -> bool {
        self.mul(x, x) == self.moduli.reduced(x)
    }

    /// `x` commutes with every basis element (enough by bilinearity).
    pub fn is_central(&self, x: &[i64]) -> bool {
        (0..self.dim()).all(|i| {
            let b = self.basis(i);
            self.mul(x, &b) == self.mul(&b, x)
        })
    }

    pub fn is_regular(&self, caps: &Caps) -> Verdict {
        let mut orbits = match self.orbits(UnitAction::TwoSided, caps.elements) {
            Ok(o) => o,
            Err(e) => return Verdict::Undecided(e),
        };
        match orbits.find(|x| self.regularity_witness(x).is_none()) {
            Some(x) => Verdict::False(Witness::Element(x)),
            None => Verdict::True,
        }
    }

    pub fn idempotents(&self, cap: u64) -> Result<Vec<Vec<i64>>, Exceeded> {
        Ok(self.enumerate_elements(cap)?.into_iter().filter(|x| self.is_idempotent(x)).collect())
    }

    pub fn units(&self, cap: u64) -> Result<Vec<Vec<i64>>, Exceeded> {
        Ok(self.enumerate_elements(cap)?.into_iter().filter(|x| self.is_unit(x)).collect())
    }

    /// A nonzero `x` with `x² = 0`, if any.
    pub fn square_zero_element(&self, cap: u64) -> Result<Option<Vec<i64>>, Exceeded> {
        Ok(self.orbits(UnitAction::Conjugation, cap)?.find(|x| !self.is_zero(x) && self.is_zero(&self.mul(x, x))))
    }

    /// Regular with all idempotents central; cross-checked against "regular
    /// with no nonzero nilpotents". Disagreement is an internal error.
    pub fn is_abelian_regular(&self, caps: &Caps) -> Result<Verdict> {
        let regular = self.is_regular(caps);
        if !regular.holds() {
            return Ok(regular);
        }
        let classes: Vec<Vec<i64>> = match self.orbits(UnitAction::Conjugation, caps.elements) {
            Ok(o) => o.collect(),
            Err(e) => return Ok(Verdict::Undecided(e)),
        };
        let noncentral = classes.iter().find(|e| self.is_idempotent(e) && !self.is_central(e)).cloned();
        let nilpotent = classes.iter().find(|x| !self.is_zero(x) && self.is_zero(&self.mul(x, x)));
        match (noncentral, nilpotent) {
            (None, None) => Ok(Verdict::True),
            (Some(e), Some(_)) => Ok(Verdict::False(Witness::Element(e))),
            (a, b) => Err(Error::InternalInconsistency(format!(
                "abelian regularity routes disagree: non-central idempotent {a:?}, square-zero element {b:?}"
            ))),
        }
    }

    /// Every element has a unit quasi-inverse.
    pub fn is_unit_regular(&self, caps: &Caps) -> Verdict {
        let elems = match self.enumerate_elements(caps.elements) {
            Ok(e) => e,
            Err(e) => return Verdict::Undecided(e),
        };
        let units: std::collections::HashSet<Vec<i64>> =
            elems.iter().filter(|x| self.is_unit(x)).cloned().collect();
        for x in &elems {
            let map = self.sandwich_map(x, x);
            let solver = map.solver();
            let Some(y0) = solver.preimage(x) else {
                return Verdict::False(Witness::Element(x.clone()));
            };
            let kernel = solver.kernel();
            let coset_size = crate::linalg::subgroup_order(&kernel, &self.moduli);
            let found = if coset_size <= units.len() as u128 {
                subgroup_elements(&kernel, &self.moduli).iter().any(|k| units.contains(&self.add(&y0, k)))
            } else {
                units.iter().any(|u| self.mul(&self.mul(x, u), x) == *x)
            };
            if !found {
                return Verdict::False(Witness::Element(x.clone()));
            }
        }
        Verdict::True
    }

    /// No nonzero nilpotent elements.
    pub fn is_reduced(&self, caps: &Caps) -> Verdict {
        match self.square_zero_element(caps.elements) {
            Ok(None) => Verdict::True,
            Ok(Some(x)) => Verdict::False(Witness::Element(x)),
            Err(e) => Verdict::Undecided(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::constructions::*;
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn z6_is_valid_and_identity_is_checked() {
        let p = RingPresentation { moduli: vec![6], mul: vec![vec![vec![1]]], one: vec![1] };
        assert!(validate_ring(&p).is_ok());
        let bad = RingPresentation { one: vec![0], ..p };
        match validate_ring(&bad) {
            Err(Error::InvalidRing { axiom, .. }) => assert_eq!(axiom, "identity law"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ill_defined_structure_constants() {
        // Z/2 x Z/3 with b0*b1 = b1 is not killed by ord(b0) = 2.
        let p = RingPresentation {
            moduli: vec![2, 3],
            mul: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 1]]],
            one: vec![1, 0],
        };
        match validate_ring(&p) {
            Err(Error::InvalidRing { axiom, .. }) => assert_eq!(axiom, "well-definedness"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ut2_z2_matches_matrix_arithmetic() {
        let r = upper_triangular(2, 2);
        assert_eq!(r.order(), 8);
        assert_eq!(r.enumerate_elements(100).unwrap().len(), 8);
    }

    #[test]
    fn enumeration_cap() {
        assert_eq!(zn(6).enumerate_elements(10).unwrap().len(), 6);
        let e = full_matrix(2, 2).enumerate_elements(10).unwrap_err();
        assert_eq!(e.size, 16);
    }

    #[test]
    fn regularity_witnesses() {
        let z4 = zn(4);
        assert_eq!(z4.regularity_witness(&[2]), None);
        assert!(z4.regularity_witness(&[0]).is_some());
        let z6 = zn(6);
        let y = z6.regularity_witness(&[2]).unwrap();
        assert_eq!(z6.mul(&z6.mul(&[2], &y), &[2]), vec![2]);
    }

    #[test]
    fn regular_rings() {
        assert!(zn(6).is_regular(&caps()).holds());
        assert_eq!(zn(4).is_regular(&caps()), Verdict::False(Witness::Element(vec![2])));
        assert!(full_matrix(2, 2).is_regular(&caps()).holds());
    }

    #[test]
    fn idempotents_of_small_rings() {
        assert_eq!(zn(4).idempotents(100).unwrap(), vec![vec![0], vec![1]]);
        assert_eq!(zn(6).idempotents(100).unwrap(), vec![vec![0], vec![1], vec![3], vec![4]]);
    }

    #[test]
    fn centrality() {
        let m2 = full_matrix(2, 2);
        assert!(m2.is_central(&m2.one()));
        // basis order e11, e12, e21, e22
        assert!(!m2.is_central(&[1, 0, 0, 0]));
        assert!(zn(9).is_central(&[5]));
    }

    #[test]
    fn abelian_and_unit_regularity() {
        assert!(zn(6).is_abelian_regular(&caps()).unwrap().holds());
        assert!(full_matrix(2, 2).is_abelian_regular(&caps()).unwrap().fails());
        assert!(zn(4).is_abelian_regular(&caps()).unwrap().fails());
        assert!(zn(6).is_unit_regular(&caps()).holds());
        assert!(zn(5).is_unit_regular(&caps()).holds());
        assert!(zn(4).is_unit_regular(&caps()).fails());
        assert!(full_matrix(2, 2).is_unit_regular(&caps()).holds());
    }

    #[test]
    fn undecided_past_cap() {
        let small = Caps { elements: 8, ..Caps::default() };
        assert!(full_matrix(2, 2).is_regular(&small).is_undecided());
    }
}
