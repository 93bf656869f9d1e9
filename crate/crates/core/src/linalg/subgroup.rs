//! Finite abelian groups `⊕ Z/m_j`, their subgroups in canonical (Howell) form,
//! and homomorphisms between them.
//!
//! Every group is embedded coordinate-wise into `(Z/N)^k` with `N` the lcm of
//! the moduli (`x_j ↦ x_j · N/m_j`), which turns subgroup questions into
//! Z/N-module questions answered by the Howell form.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::int_matrix::{smith_normal_form, IntMatrix};
use super::zn::{lcm, pivot_of, reduce_acc, HowellBuilder, MAX_MODULUS};
use crate::error::{Error, Result};

/// Additive orders of the coordinates of `⊕ Z/m_j`. A modulus of 1 is a zero
/// coordinate kept in place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Moduli(Vec<i64>);

impl TryFrom<Vec<i64>> for Moduli {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Moduli::new(v)
    }
}

impl From<Moduli> for Vec<i64> {
    fn from(m: Moduli) -> Self {
        m.0
    }
}

impl Moduli {
    pub fn new(moduli: Vec<i64>) -> Result<Self> {
        if let Some(bad) = moduli.iter().find(|&&m| m < 1) {
            return Err(Error::InvalidModuli(format!("modulus {bad} (all moduli must be >= 1)")));
        }
        let mut exp: i128 = 1;
        for &m in &moduli {
            exp = lcm(exp, m as i128);
            if exp > MAX_MODULUS {
                return Err(Error::ModulusTooLarge(format!("lcm of {moduli:?}")));
            }
        }
        Ok(Moduli(moduli))
    }

    pub fn empty() -> Self {
        Moduli(Vec::new())
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Group order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.0.iter().fold(1u128, |acc, &m| acc.saturating_mul(m as u128))
    }

    /// Exponent (lcm of the moduli); 1 for the zero group.
    pub fn exponent(&self) -> i64 {
        self.0.iter().fold(1i128, |acc, &m| lcm(acc, m as i128)) as i64
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.0.len()]
    }

    pub fn reduce(&self, x: &mut [i64]) {
        for (v, &m) in x.iter_mut().zip(&self.0) {
            *v = v.rem_euclid(m);
        }
    }

    pub fn reduced(&self, x: &[i64]) -> Vec<i64> {
        let mut v = x.to_vec();
        self.reduce(&mut v);
        v
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.0).map(|((&x, &y), &m)| (x + y).rem_euclid(m)).collect()
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter().zip(b).zip(&self.0).map(|((&x, &y), &m)| (x - y).rem_euclid(m)).collect()
    }

    pub fn scale(&self, a: &[i64], c: i64) -> Vec<i64> {
        a.iter()
            .zip(&self.0)
            .map(|(&x, &m)| reduce_acc(x as i128 * c as i128, m))
            .collect()
    }

    /// `a + c·b`, reduced.
    pub fn add_scaled(&self, a: &[i64], c: i64, b: &[i64]) -> Vec<i64> {
        a.iter()
            .zip(b)
            .zip(&self.0)
            .map(|((&x, &y), &m)| reduce_acc(x as i128 + c as i128 * y as i128, m))
            .collect()
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().zip(&self.0).all(|(&x, &m)| x.rem_euclid(m) == 0)
    }

    pub fn concat(&self, other: &Moduli) -> Moduli {
        Moduli(self.0.iter().chain(&other.0).copied().collect())
    }

    /// All elements in mixed-radix order (first coordinate fastest).
    pub fn elements(&self) -> MixedRadix {
        MixedRadix::new(self.0.clone())
    }

    pub fn check_len(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a group with {} coordinates",
                x.len(),
                self.len()
            )));
        }
        Ok(())
    }
}

/// Iterator over all tuples `0 <= x_j < radix_j`.
#[derive(Debug, Clone)]
pub struct MixedRadix {
    radix: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl MixedRadix {
    pub fn new(radix: Vec<i64>) -> Self {
        let next = if radix.iter().all(|&r| r >= 1) { Some(vec![0; radix.len()]) } else { None };
        MixedRadix { radix, next }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<i64>;
    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for (x, &r) in succ.iter_mut().zip(&self.radix) {
            *x += 1;
            if *x < r {
                self.next = Some(succ);
                return Some(cur);
            }
            *x = 0;
        }
        Some(cur)
    }
}

/// Coordinate embedding of a list of groups into a common `(Z/N)^k`.
#[derive(Debug, Clone)]
struct Embedding {
    n: i128,
    scales: Vec<i128>,
}

impl Embedding {
    fn new(moduli: &[&Moduli]) -> Self {
        let n = moduli.iter().flat_map(|m| m.0.iter()).fold(1i128, |acc, &m| lcm(acc, m as i128));
        let scales = moduli.iter().flat_map(|m| m.0.iter()).map(|&m| n / m as i128).collect();
        Embedding { n, scales }
    }

    fn embed_into(&self, offset: usize, x: &[i64], out: &mut [i128]) {
        for (j, &v) in x.iter().enumerate() {
            out[offset + j] = reduce_acc(v as i128 * self.scales[offset + j], self.n as i64) as i128;
        }
    }

    fn unembed(&self, offset: usize, y: &[i128]) -> Vec<i64> {
        y.iter().enumerate().map(|(j, &v)| (v / self.scales[offset + j]) as i64).collect()
    }
}

/// Canonical generator matrix of the subgroup of `⊕ Z/m_j` spanned by `gens`.
///
/// Rows are in echelon form, each pivot divides its modulus, entries above a
/// pivot are reduced below it, and the Howell property holds; two generating
/// sets of the same subgroup produce identical output.
pub fn subgroup_canonical_form(gens: &[Vec<i64>], moduli: &Moduli) -> Vec<Vec<i64>> {
    let emb = Embedding::new(&[moduli]);
    let mut hb = HowellBuilder::new(emb.n, moduli.len());
    for g in gens {
        let mut y = vec![0i128; moduli.len()];
        emb.embed_into(0, g, &mut y);
        hb.insert(y);
    }
    hb.finish().iter().map(|r| emb.unembed(0, r)).collect()
}

/// Reduces `x` against canonical rows; the result is zero iff `x` is in the
/// subgroup.
pub fn subgroup_reduce(x: &[i64], canon: &[Vec<i64>], moduli: &Moduli) -> Vec<i64> {
    let mut v = moduli.reduced(x);
    for row in canon {
        let p = row.iter().position(|&e| e != 0).expect("canonical rows are nonzero");
        let q = v[p] / row[p];
        if q != 0 {
            v = moduli.add_scaled(&v, -q, row);
        }
    }
    v
}

pub fn subgroup_membership(x: &[i64], canon: &[Vec<i64>], moduli: &Moduli) -> Result<bool> {
    moduli.check_len(x)?;
    Ok(moduli.is_zero(&subgroup_reduce(x, canon, moduli)))
}

/// Additive order of each canonical row (`m_p / pivot`).
pub fn row_orders(canon: &[Vec<i64>], moduli: &Moduli) -> Vec<i64> {
    canon
        .iter()
        .map(|row| {
            let p = row.iter().position(|&e| e != 0).expect("canonical rows are nonzero");
            moduli.as_slice()[p] / row[p]
        })
        .collect()
}

/// Order of the subgroup with the given canonical rows.
pub fn subgroup_order(canon: &[Vec<i64>], moduli: &Moduli) -> u128 {
    row_orders(canon, moduli).iter().fold(1u128, |acc, &o| acc.saturating_mul(o as u128))
}

/// Every element of the subgroup, each exactly once.
pub fn subgroup_elements(canon: &[Vec<i64>], moduli: &Moduli) -> Vec<Vec<i64>> {
    let orders = row_orders(canon, moduli);
    MixedRadix::new(orders)
        .map(|coeffs| {
            let mut v = moduli.zero();
            for (c, row) in coeffs.iter().zip(canon) {
                v = moduli.add_scaled(&v, *c, row);
            }
            v
        })
        .collect()
}

/// A homomorphism `⊕ Z/d_i → ⊕ Z/m_j` given by the images of the domain's unit
/// vectors (row-vector convention: `x ↦ x · images`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMap {
    domain: Moduli,
    codomain: Moduli,
    images: Vec<Vec<i64>>,
}

impl GroupMap {
    pub fn new(domain: Moduli, codomain: Moduli, images: Vec<Vec<i64>>) -> Result<Self> {
        if images.len() != domain.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for a domain with {} coordinates",
                images.len(),
                domain.len()
            )));
        }
        let mut reduced = Vec::with_capacity(images.len());
        for (img, &d) in images.iter().zip(domain.as_slice()) {
            codomain.check_len(img)?;
            let r = codomain.reduced(img);
            if !codomain.is_zero(&codomain.scale(&r, d)) {
                return Err(Error::InvalidHom(format!(
                    "image {r:?} of a generator of order {d} does not have order dividing {d}"
                )));
            }
            reduced.push(r);
        }
        Ok(GroupMap { domain, codomain, images: reduced })
    }

    pub fn domain(&self) -> &Moduli {
        &self.domain
    }

    pub fn codomain(&self) -> &Moduli {
        &self.codomain
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut out = self.codomain.zero();
        for (&c, img) in x.iter().zip(&self.images) {
            if c != 0 {
                out = self.codomain.add_scaled(&out, c, img);
            }
        }
        out
    }

    pub fn image(&self) -> Vec<Vec<i64>> {
        subgroup_canonical_form(&self.images, &self.codomain)
    }

    pub fn kernel(&self) -> Vec<Vec<i64>> {
        self.solver().kernel()
    }

    /// Precomputes the Howell form of the graph for repeated preimage queries.
    pub fn solver(&self) -> PreimageSolver {
        let h = self.codomain.len();
        let emb = Embedding::new(&[&self.codomain, &self.domain]);
        let mut hb = HowellBuilder::new(emb.n, h + self.domain.len());
        for (j, img) in self.images.iter().enumerate() {
            let mut y = vec![0i128; h + self.domain.len()];
            emb.embed_into(0, img, &mut y);
            y[h + j] = emb.scales[h + j] % emb.n;
            hb.insert(y);
        }
        PreimageSolver { emb, split: h, domain: self.domain.clone(), rows: hb.finish() }
    }
}

/// Howell form of the graph `{(f(x), x)}` of a [`GroupMap`], codomain columns
/// first. Rows whose codomain part vanishes span the kernel.
#[derive(Debug, Clone)]
pub struct PreimageSolver {
    emb: Embedding,
    split: usize,
    domain: Moduli,
    rows: Vec<Vec<i128>>,
}

impl PreimageSolver {
    /// Some `x` with `f(x) = b`, or `None` when `b` is not in the image.
    pub fn preimage(&self, b: &[i64]) -> Option<Vec<i64>> {
        let n = self.emb.n;
        let width = self.split + self.domain.len();
        let mut v = vec![0i128; width];
        self.emb.embed_into(0, b, &mut v);
        for row in &self.rows {
            let c = pivot_of(row);
            if c >= self.split {
                break;
            }
            let p = row[c];
            if v[c] % p != 0 {
                return None;
            }
            let q = v[c] / p;
            if q != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = super::zn::lin_mod(1, *x, -q, y, n);
                }
            }
        }
        if v[..self.split].iter().any(|&x| x != 0) {
            return None;
        }
        let neg: Vec<i128> = v[self.split..].iter().map(|&x| (-x).rem_euclid(n)).collect();
        Some(self.emb.unembed(self.split, &neg))
    }

    /// Canonical generators of the kernel.
    pub fn kernel(&self) -> Vec<Vec<i64>> {
        let gens: Vec<Vec<i64>> = self
            .rows
            .iter()
            .filter(|r| pivot_of(r) >= self.split)
            .map(|r| self.emb.unembed(self.split, &r[self.split..]))
            .collect();
        subgroup_canonical_form(&gens, &self.domain)
    }
}

/// A subgroup rewritten as `⊕ Z/s_i` (invariant factors, all `s_i > 1`) with
/// explicit basis elements in ambient coordinates.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub orders: Vec<i64>,
    pub basis: Vec<Vec<i64>>,
    solver: PreimageSolver,
}

impl Presentation {
    pub fn moduli(&self) -> Moduli {
        Moduli(self.orders.clone())
    }

    /// Coordinates of an ambient element in the presentation basis, or `None`
    /// if it is not in the subgroup.
    pub fn coordinates(&self, x: &[i64]) -> Option<Vec<i64>> {
        self.solver.preimage(x)
    }
}

/// Invariant-factor presentation of the subgroup spanned by `gens`.
pub fn present_subgroup(gens: &[Vec<i64>], moduli: &Moduli) -> Presentation {
    let canon = subgroup_canonical_form(gens, moduli);
    let r = canon.len();
    let l = moduli.exponent();
    let free = Moduli(vec![l; r]);
    let map = GroupMap::new(free, moduli.clone(), canon.clone()).expect("canonical rows are valid images");
    let mut rel: Vec<Vec<i64>> = map.kernel();
    for i in 0..r {
        let mut e = vec![0; r];
        e[i] = l;
        rel.push(e);
    }
    let rel = IntMatrix::from_vec(rel.len(), r, rel.iter().flatten().map(|&x| BigInt::from(x)).collect())
        .expect("shape is consistent");
    let snf = smith_normal_form(&rel);
    let mut orders = Vec::new();
    let mut basis = Vec::new();
    for (i, d) in snf.invariants().iter().enumerate() {
        debug_assert!(!d.is_zero());
        let d = d.to_i64().expect("invariant factors divide the exponent");
        if d == 1 {
            continue;
        }
        let mut b = moduli.zero();
        for (k, row) in canon.iter().enumerate() {
            let c = (&snf.v[(i, k)] % BigInt::from(l)).to_i64().expect("reduced");
            b = moduli.add_scaled(&b, c, row);
        }
        orders.push(d);
        basis.push(b);
    }
    let pres_moduli = Moduli(orders.clone());
    let solver = GroupMap::new(pres_moduli, moduli.clone(), basis.clone())
        .expect("basis elements have the stated orders")
        .solver();
    Presentation { orders, basis, solver }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn md(v: &[i64]) -> Moduli {
        Moduli::new(v.to_vec()).unwrap()
    }

    #[test]
    fn moduli_reject_zero() {
        assert!(Moduli::new(vec![2, 0]).is_err());
        assert!(Moduli::new(vec![1, 1]).is_ok());
    }

    #[test]
    fn empty_generators_give_zero_subgroup() {
        assert!(subgroup_canonical_form(&[], &md(&[4, 6])).is_empty());
    }

    #[test]
    fn redundant_generators_in_z8() {
        let m = md(&[8]);
        let a = subgroup_canonical_form(&[vec![2]], &m);
        let b = subgroup_canonical_form(&[vec![2], vec![4]], &m);
        assert_eq!(a, b);
        assert_eq!(subgroup_elements(&a, &m).len(), 4);
        assert!(subgroup_membership(&[2], &a, &m).unwrap());
        assert!(!subgroup_membership(&[1], &a, &m).unwrap());
        assert!(subgroup_membership(&[0], &a, &m).unwrap());
    }

    #[test]
    fn full_klein_group_in_any_order() {
        let m = md(&[2, 2]);
        let a = subgroup_canonical_form(&[vec![1, 0], vec![0, 1]], &m);
        let b = subgroup_canonical_form(&[vec![1, 1], vec![0, 1]], &m);
        let c = subgroup_canonical_form(&[vec![0, 1], vec![1, 1], vec![1, 0]], &m);
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn mixed_moduli_kernel() {
        // x ↦ 2x from Z/4 to Z/4: kernel {0, 2}.
        let f = GroupMap::new(md(&[4]), md(&[4]), vec![vec![2]]).unwrap();
        assert_eq!(f.kernel(), vec![vec![2]]);
        assert_eq!(f.image(), vec![vec![2]]);
        assert_eq!(f.solver().preimage(&[1]), None);
        let x = f.solver().preimage(&[2]).unwrap();
        assert_eq!(f.apply(&x), vec![2]);
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        assert!(GroupMap::new(md(&[2]), md(&[4]), vec![vec![1]]).is_err());
    }

    #[test]
    fn presentation_of_z2_cross_z4_diagonal() {
        let m = md(&[2, 4]);
        let p = present_subgroup(&[vec![1, 1], vec![0, 2]], &m);
        let elems: BTreeSet<_> = subgroup_elements(&subgroup_canonical_form(&[vec![1, 1], vec![0, 2]], &m), &m)
            .into_iter()
            .collect();
        assert_eq!(p.orders.iter().product::<i64>() as usize, elems.len());
        for e in &elems {
            let c = p.coordinates(e).unwrap();
            let mut back = m.zero();
            for (ci, b) in c.iter().zip(&p.basis) {
                back = m.add_scaled(&back, *ci, b);
            }
            assert_eq!(&back, e);
        }
        assert_eq!(p.coordinates(&[1, 0]), None);
    }
}
