//! Homomorphism groups between finite modules, endomorphism rings, traces,
//! products of submodules, and the summand / invariance / isomorphism tests
//! built on top of them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{
    present_subgroup, subgroup_canonical_form, GroupMap, Mat, MixedRadix, Moduli, Presentation,
};
use crate::module::{extract, mat_mul, quotient, vec_mat, FiniteModule, Submodule};
use crate::ring::{FiniteRing, RingPresentation};
use crate::verdict::{Caps, Exceeded, Limit};

/// An R-linear map; the image of a row vector `x` is `x · matrix`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleHom {
    domain: Arc<FiniteModule>,
    codomain: Arc<FiniteModule>,
    matrix: Mat,
}

impl ModuleHom {
    pub fn new(domain: Arc<FiniteModule>, codomain: Arc<FiniteModule>, matrix: Mat) -> Result<Self> {
        if !domain.same_ring(&codomain) {
            return Err(Error::RingMismatch);
        }
        if matrix.len() != domain.dim() || matrix.iter().any(|r| r.len() != codomain.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "hom matrix must be {}x{}",
                domain.dim(),
                codomain.dim()
            )));
        }
        let cm = codomain.moduli();
        let matrix: Mat = matrix.iter().map(|r| cm.reduced(r)).collect();
        for (j, row) in matrix.iter().enumerate() {
            let d = domain.moduli().as_slice()[j];
            if !cm.is_zero(&cm.scale(row, d)) {
                return Err(Error::InvalidHom(format!("row {j} is not killed by the order {d}")));
            }
        }
        for i in 0..domain.ring().dim() {
            let lhs = mat_mul(&domain.action()[i], &matrix, cm);
            let rhs = mat_mul(&matrix, &codomain.action()[i], cm);
            if lhs != rhs {
                return Err(Error::InvalidHom(format!("does not commute with the action of b{i}")));
            }
        }
        Ok(ModuleHom { domain, codomain, matrix })
    }

    fn trusted(domain: &Arc<FiniteModule>, codomain: &Arc<FiniteModule>, matrix: Mat) -> Self {
        ModuleHom { domain: domain.clone(), codomain: codomain.clone(), matrix }
    }

    pub fn identity(m: &Arc<FiniteModule>) -> Self {
        let matrix = (0..m.dim()).map(|j| m.basis_vector(j)).collect();
        Self::trusted(m, m, matrix)
    }

    pub fn zero(domain: &Arc<FiniteModule>, codomain: &Arc<FiniteModule>) -> Self {
        Self::trusted(domain, codomain, vec![codomain.zero(); domain.dim()])
    }

    pub fn domain(&self) -> &Arc<FiniteModule> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteModule> {
        &self.codomain
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        vec_mat(x, &self.matrix, self.codomain.moduli())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleHom) -> Result<ModuleHom> {
        if inner.codomain.dim() != self.domain.dim() || *inner.codomain != *self.domain {
            return Err(Error::DimensionMismatch("composing non-matching homs".into()));
        }
        let matrix = mat_mul(&inner.matrix, &self.matrix, self.codomain.moduli());
        Ok(Self::trusted(&inner.domain, &self.codomain, matrix))
    }

    pub fn group_map(&self) -> GroupMap {
        GroupMap::new(self.domain.moduli().clone(), self.codomain.moduli().clone(), self.matrix.clone())
            .expect("validated homs are well defined")
    }

    pub fn kernel(&self) -> Submodule {
        Submodule::from_canonical(&self.domain, self.group_map().kernel())
    }

    pub fn image(&self) -> Submodule {
        Submodule::from_canonical(&self.codomain, subgroup_canonical_form(&self.matrix, self.codomain.moduli()))
    }

    /// `f(S)` for a submodule of the domain.
    pub fn image_of(&self, s: &Submodule) -> Submodule {
        let rows: Vec<Vec<i64>> = s.gens().iter().map(|g| self.apply(g)).collect();
        Submodule::from_canonical(&self.codomain, subgroup_canonical_form(&rows, self.codomain.moduli()))
    }

    /// `f⁻¹(L)` for a submodule of the codomain.
    pub fn preimage(&self, l: &Submodule) -> Submodule {
        let q = quotient(l);
        let composite = q.projection.compose(self).expect("matching codomain");
        composite.kernel()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| self.codomain.moduli().is_zero(r))
    }

    pub fn is_identity(&self) -> bool {
        *self.domain == *self.codomain && (0..self.domain.dim()).all(|j| self.matrix[j] == self.domain.basis_vector(j))
    }

    pub fn is_injective(&self) -> bool {
        self.group_map().kernel().is_empty()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        let cm = self.codomain.moduli();
        let matrix = self.matrix.iter().zip(&other.matrix).map(|(a, b)| cm.add(a, b)).collect();
        Self::trusted(&self.domain, &self.codomain, matrix)
    }
}

/// `Hom_R(M, N)` as `⊕ Z/s_i` with explicit generator matrices.
#[derive(Debug, Clone)]
pub struct HomGroup {
    domain: Arc<FiniteModule>,
    codomain: Arc<FiniteModule>,
    generators: Vec<Mat>,
    orders: Vec<i64>,
    /// Parameter space: entry (j, k) ranges over Z/gcd(d_j, n_k) scaled by n_k/gcd.
    param_scale: Vec<i64>,
    param_moduli: Moduli,
    presentation: Presentation,
}

/// Solves the commuting-matrix congruences `ρ_M(b_i)·F ≡ F·ρ_N(b_i)` over the
/// group of well-defined Z-linear maps.
pub fn hom_group(m: &Arc<FiniteModule>, n: &Arc<FiniteModule>) -> Result<HomGroup> {
    if !m.same_ring(n) {
        return Err(Error::RingMismatch);
    }
    let (dm, dn) = (m.dim(), n.dim());
    let mut param_moduli = Vec::with_capacity(dm * dn);
    let mut param_scale = Vec::with_capacity(dm * dn);
    for &d in m.moduli().as_slice() {
        for &c in n.moduli().as_slice() {
            let g = num_integer::gcd(d, c);
            param_moduli.push(g);
            param_scale.push(c / g);
        }
    }
    let param_moduli = Moduli::new(param_moduli)?;
    let k = m.ring().dim();
    let constraint_moduli: Vec<i64> =
        (0..k * dm).flat_map(|_| n.moduli().as_slice().to_vec()).collect();
    let constraint_moduli = Moduli::new(constraint_moduli)?;
    let nm = n.moduli();
    let mut images = Vec::with_capacity(dm * dn);
    for j in 0..dm {
        for c in 0..dn {
            let f = param_scale[j * dn + c];
            let mut img = Vec::with_capacity(k * dm * dn);
            for i in 0..k {
                let rm = &m.action()[i];
                let rn = &n.action()[i];
                for l in 0..dm {
                    // e_l ρ_M(b_i) F - e_l F ρ_N(b_i), with F = f·E_{jc}
                    let mut v = vec![0i64; dn];
                    v[c] = ((rm[l][j] as i128 * f as i128) % nm.as_slice()[c] as i128) as i64;
                    if l == j {
                        v = nm.add_scaled(&v, -f, &rn[c]);
                    }
                    img.extend(nm.reduced(&v));
                }
            }
            images.push(img);
        }
    }
    let constraints = GroupMap::new(param_moduli.clone(), constraint_moduli, images)?;
    let kernel = constraints.kernel();
    let presentation = present_subgroup(&kernel, &param_moduli);
    let to_matrix = |p: &[i64]| -> Mat {
        (0..dm)
            .map(|j| (0..dn).map(|c| p[j * dn + c] * param_scale[j * dn + c] % nm.as_slice()[c]).collect())
            .collect()
    };
    let generators = presentation.basis.iter().map(|p| to_matrix(p)).collect();
    Ok(HomGroup {
        domain: m.clone(),
        codomain: n.clone(),
        generators,
        orders: presentation.orders.clone(),
        param_scale,
        param_moduli,
        presentation,
    })
}

impl HomGroup {
    pub fn domain(&self) -> &Arc<FiniteModule> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<FiniteModule> {
        &self.codomain
    }

    /// Invariant factors `s_1 | s_2 | ...` of the group.
    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn generator_matrices(&self) -> &[Mat] {
        &self.generators
    }

    pub fn generators(&self) -> Vec<ModuleHom> {
        self.generators.iter().map(|g| ModuleHom::trusted(&self.domain, &self.codomain, g.clone())).collect()
    }

    pub fn order(&self) -> u128 {
        self.orders.iter().fold(1u128, |a, &s| a.saturating_mul(s as u128))
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    /// `Σ c_i · g_i`.
    pub fn combination(&self, coeffs: &[i64]) -> Mat {
        let cm = self.codomain.moduli();
        let mut acc = vec![cm.zero(); self.domain.dim()];
        for (&c, g) in coeffs.iter().zip(&self.generators) {
            if c == 0 {
                continue;
            }
            for (row, grow) in acc.iter_mut().zip(g) {
                *row = cm.add_scaled(row, c, grow);
            }
        }
        acc
    }

    pub fn hom(&self, coeffs: &[i64]) -> ModuleHom {
        ModuleHom::trusted(&self.domain, &self.codomain, self.combination(coeffs))
    }

    /// Coordinates of a hom matrix with respect to the generators.
    pub fn coordinates(&self, matrix: &Mat) -> Option<Vec<i64>> {
        let dn = self.codomain.dim();
        let nm = self.codomain.moduli();
        let mut p = Vec::with_capacity(self.param_moduli.len());
        for (j, row) in matrix.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let x = x.rem_euclid(nm.as_slice()[c]);
                let s = self.param_scale[j * dn + c];
                if x % s != 0 {
                    return None;
                }
                p.push(x / s);
            }
        }
        self.presentation.coordinates(&p)
    }

    /// Coefficient vectors of every element, in mixed-radix order.
    pub fn coefficient_vectors(&self, caps: &Caps) -> Result<MixedRadix, Exceeded> {
        caps.check(Limit::Homs, self.order())?;
        Ok(MixedRadix::new(self.orders.clone()))
    }

    /// Every element, or `Exceeded` past the hom cap.
    pub fn elements(&self, caps: &Caps) -> Result<Vec<ModuleHom>, Exceeded> {
        Ok(self.coefficient_vectors(caps)?.map(|c| self.hom(&c)).collect())
    }
}

/// `End_R(M)` as a [`FiniteRing`] on the hom-group generators, with the
/// dictionaries between ring elements and endomorphisms. Multiplication is
/// composition: `x·y ↦ to_hom(x) ∘ to_hom(y)`.
#[derive(Debug, Clone)]
pub struct EndRing {
    homs: HomGroup,
    ring: Arc<FiniteRing>,
}

pub fn end_ring(m: &Arc<FiniteModule>) -> Result<EndRing> {
    let homs = hom_group(m, m)?;
    let k = homs.generators.len();
    let cm = m.moduli();
    let coords = |mat: &Mat| homs.coordinates(mat).expect("compositions of endomorphisms are endomorphisms");
    let mut mul = vec![vec![Vec::new(); k]; k];
    for a in 0..k {
        for b in 0..k {
            // (g_a ∘ g_b)(x) = (x·G_b)·G_a
            mul[a][b] = coords(&mat_mul(&homs.generators[b], &homs.generators[a], cm));
        }
    }
    let identity: Mat = (0..m.dim()).map(|j| m.basis_vector(j)).collect();
    let one = coords(&identity);
    let ring = FiniteRing::new(RingPresentation { moduli: homs.orders.clone(), mul, one }).map_err(|e| {
        Error::InternalInconsistency(format!("endomorphism ring failed validation: {e}"))
    })?;
    Ok(EndRing { homs, ring: Arc::new(ring) })
}

impl EndRing {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn homs(&self) -> &HomGroup {
        &self.homs
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.homs.domain
    }

    pub fn to_hom(&self, x: &[i64]) -> ModuleHom {
        self.homs.hom(x)
    }

    pub fn from_hom(&self, f: &ModuleHom) -> Option<Vec<i64>> {
        self.homs.coordinates(f.matrix())
    }
}

/// `Σ f(M)` over `f ∈ Hom(M, N)`, as a submodule of `N`.
pub fn trace(m: &Arc<FiniteModule>, n: &Arc<FiniteModule>) -> Result<Submodule> {
    let h = hom_group(m, n)?;
    let rows: Vec<Vec<i64>> = h.generators.iter().flatten().cloned().collect();
    Ok(Submodule::from_canonical(n, subgroup_canonical_form(&rows, n.moduli())))
}

/// `N ≤ M` is M-generated iff the trace of `M` in `N` is all of `N`.
pub fn is_m_generated(n: &Submodule) -> Result<bool> {
    let e = extract(n);
    Ok(trace(n.ambient(), &e.module)?.is_whole())
}

/// `N_M K = Σ { f(K) | f ∈ Hom(M, N) }` as a submodule of `N`.
pub fn product_submodules(n: &Arc<FiniteModule>, k: &Submodule) -> Result<Submodule> {
    let h = hom_group(k.ambient(), n)?;
    let cm = n.moduli();
    let rows: Vec<Vec<i64>> = h
        .generators
        .iter()
        .flat_map(|g| k.gens().iter().map(move |x| vec_mat(x, g, cm)))
        .collect();
    Ok(Submodule::from_canonical(n, subgroup_canonical_form(&rows, cm)))
}

/// `φ(N) ⊆ N` for the Z-generators of `End(M)` (enough by additivity).
pub fn is_fully_invariant(n: &Submodule, end: &HomGroup) -> bool {
    let cm = n.ambient().moduli();
    end.generators.iter().all(|g| n.gens().iter().all(|x| n.contains(&vec_mat(x, g, cm))))
}

/// An idempotent endomorphism with image `N`, found by solving the linear
/// conditions `Im φ ⊆ N` and `φ(g) = g` on the generators of `N`.
pub fn summand_test(n: &Submodule, end: &HomGroup) -> Option<ModuleHom> {
    let m = n.ambient();
    let q = quotient(n);
    let dm = m.dim();
    let qm = q.module.moduli().clone();
    let mut target_moduli: Vec<i64> = Vec::new();
    for _ in 0..dm {
        target_moduli.extend_from_slice(qm.as_slice());
    }
    for _ in n.gens() {
        target_moduli.extend_from_slice(m.moduli().as_slice());
    }
    let target_moduli = Moduli::new(target_moduli).expect("valid moduli");
    let images: Vec<Vec<i64>> = end
        .generators
        .iter()
        .map(|g| {
            let mut v: Vec<i64> = Vec::new();
            for row in g {
                v.extend(q.projection.apply(row));
            }
            for x in n.gens() {
                v.extend(vec_mat(x, g, m.moduli()));
            }
            v
        })
        .collect();
    let map = GroupMap::new(Moduli::new(end.orders.clone()).expect("valid"), target_moduli, images)
        .expect("combinations of homs are well defined");
    let mut target = vec![0i64; dm * qm.len()];
    for x in n.gens() {
        target.extend_from_slice(x);
    }
    let coeffs = map.solver().preimage(&target)?;
    Some(end.hom(&coeffs))
}

/// Invariant factors of the underlying abelian group.
pub fn additive_invariants(m: &FiniteModule) -> Vec<i64> {
    let gens: Vec<Vec<i64>> = (0..m.dim()).map(|j| m.basis_vector(j)).collect();
    present_subgroup(&gens, m.moduli()).orders
}

/// A bijective hom `A → B`, if one exists among at most `caps.homs` homs.
pub fn find_isomorphism(
    a: &Arc<FiniteModule>,
    b: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<Option<ModuleHom>> {
    if a.order() != b.order() || additive_invariants(a) != additive_invariants(b) {
        return Ok(None);
    }
    find_injective(a, b, caps)
}

/// An injective hom `A → B`, if one exists among at most `caps.homs` homs.
pub fn find_embedding(
    a: &Arc<FiniteModule>,
    b: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<Option<ModuleHom>> {
    if a.order() > b.order() || !b.order().is_multiple_of(a.order()) {
        return Ok(None);
    }
    find_injective(a, b, caps)
}

fn find_injective(a: &Arc<FiniteModule>, b: &Arc<FiniteModule>, caps: &Caps) -> Result<Option<ModuleHom>> {
    let h = hom_group(a, b)?;
    let size = a.order();
    for c in h.coefficient_vectors(caps)? {
        let f = h.hom(&c);
        if f.image().order() == size {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{direct_sum, regular_module, submodule_generated};
    use crate::ring::constructions::*;

    fn zmod(n: i64) -> Arc<FiniteModule> {
        Arc::new(regular_module(&Arc::new(zn(n))))
    }

    fn cyclic_over(r: &Arc<FiniteRing>, d: i64) -> Arc<FiniteModule> {
        Arc::new(FiniteModule::new(r.clone(), vec![d], vec![vec![vec![1]]]).unwrap())
    }

    fn klein() -> Arc<FiniteModule> {
        Arc::new(FiniteModule::new(Arc::new(zn(2)), vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap())
    }

    #[test]
    fn hom_group_orders() {
        let z6 = Arc::new(zn(6));
        let m = Arc::new(regular_module(&z6));
        let zero = Arc::new(FiniteModule::new(z6.clone(), vec![], vec![vec![]]).unwrap());
        assert!(hom_group(&m, &zero).unwrap().is_trivial());
        assert!(hom_group(&cyclic_over(&z6, 2), &cyclic_over(&z6, 3)).unwrap().is_trivial());
        let e = hom_group(&m, &m).unwrap();
        assert_eq!(e.orders(), &[6]);
        assert_eq!(hom_group(&klein(), &klein()).unwrap().order(), 16);
    }

    #[test]
    fn kernels_and_images() {
        let m = zmod(6);
        let id = ModuleHom::identity(&m);
        assert!(id.kernel().is_zero());
        assert!(id.image().is_whole());
        let z = ModuleHom::zero(&m, &m);
        assert!(z.kernel().is_whole());
        assert!(z.image().is_zero());
        let two = ModuleHom::new(m.clone(), m.clone(), vec![vec![2]]).unwrap();
        assert_eq!(two.kernel(), submodule_generated(&m, &[vec![3]]));
        assert_eq!(two.image(), submodule_generated(&m, &[vec![2]]));
        assert!(ModuleHom::new(m.clone(), zmod(4), vec![vec![1]]).is_err());
    }

    #[test]
    fn end_rings() {
        let e = end_ring(&zmod(6)).unwrap();
        assert_eq!(e.ring().order(), 6);
        assert!(e.ring().is_commutative());
        let k = end_ring(&klein()).unwrap();
        assert_eq!(k.ring().order(), 16);
        assert!(!k.ring().is_commutative());
        // dictionaries are mutually inverse and multiplicative
        let elems = k.ring().enumerate_elements(100).unwrap();
        for x in &elems {
            assert_eq!(k.from_hom(&k.to_hom(x)).unwrap(), *x);
        }
        for x in elems.iter().step_by(3) {
            for y in elems.iter().step_by(5) {
                let lhs = k.to_hom(&k.ring().mul(x, y));
                let rhs = k.to_hom(x).compose(&k.to_hom(y)).unwrap();
                assert_eq!(lhs.matrix(), rhs.matrix());
            }
        }
        assert!(k.to_hom(&k.ring().one()).is_identity());
    }

    #[test]
    fn traces_and_generation() {
        let z6 = Arc::new(zn(6));
        let m = Arc::new(regular_module(&z6));
        assert!(trace(&m, &m).unwrap().is_whole());
        assert!(trace(&cyclic_over(&z6, 2), &cyclic_over(&z6, 3)).unwrap().is_zero());
        let two = submodule_generated(&m, &[vec![2]]);
        let e = extract(&two);
        assert!(trace(&m, &e.module).unwrap().is_whole());
        assert!(is_m_generated(&two).unwrap());
        assert!(is_m_generated(&Submodule::whole(&m)).unwrap());
    }

    #[test]
    fn ideal_products_in_z12() {
        let m = zmod(12);
        let two = submodule_generated(&m, &[vec![2]]);
        let three = submodule_generated(&m, &[vec![3]]);
        let six = submodule_generated(&m, &[vec![6]]);
        let four = submodule_generated(&m, &[vec![4]]);
        assert_eq!(product_submodules(&m, &three).unwrap(), three);
        let e2 = extract(&two);
        let p = product_submodules(&e2.module, &three).unwrap();
        assert_eq!(e2.inclusion.image_of(&p), six);
        let p = product_submodules(&e2.module, &two).unwrap();
        assert_eq!(e2.inclusion.image_of(&p), four);
        assert!(product_submodules(&m, &Submodule::zero(&m)).unwrap().is_zero());
    }

    #[test]
    fn fully_invariant_submodules() {
        let m = zmod(12);
        let end = hom_group(&m, &m).unwrap();
        for x in 0..12 {
            assert!(is_fully_invariant(&submodule_generated(&m, &[vec![x]]), &end));
        }
        let k = klein();
        let kend = hom_group(&k, &k).unwrap();
        assert!(!is_fully_invariant(&submodule_generated(&k, &[vec![1, 0]]), &kend));
        assert!(is_fully_invariant(&Submodule::zero(&k), &kend));
        assert!(is_fully_invariant(&Submodule::whole(&k), &kend));
    }

    #[test]
    fn summands() {
        let m6 = zmod(6);
        let e6 = hom_group(&m6, &m6).unwrap();
        let p = summand_test(&submodule_generated(&m6, &[vec![2]]), &e6).unwrap();
        assert_eq!(p.compose(&p).unwrap(), p);
        assert_eq!(p.image(), submodule_generated(&m6, &[vec![2]]));
        assert!(summand_test(&Submodule::whole(&m6), &e6).unwrap().is_identity());
        let m4 = zmod(4);
        let e4 = hom_group(&m4, &m4).unwrap();
        assert!(summand_test(&submodule_generated(&m4, &[vec![2]]), &e4).is_none());
    }

    #[test]
    fn isomorphism_search() {
        let caps = Caps::default();
        let z6 = Arc::new(zn(6));
        let m = Arc::new(regular_module(&z6));
        assert!(find_isomorphism(&m, &m, &caps).unwrap().is_some());
        assert!(find_isomorphism(&cyclic_over(&z6, 2), &cyclic_over(&z6, 3), &caps).unwrap().is_none());
        let k = klein();
        let a = extract(&submodule_generated(&k, &[vec![1, 0]]));
        let b = extract(&submodule_generated(&k, &[vec![0, 1]]));
        assert!(find_isomorphism(&a.module, &b.module, &caps).unwrap().is_some());
        let s = direct_sum(&[a.module.clone(), b.module.clone()]).unwrap();
        assert!(find_embedding(&s.module, &k, &caps).unwrap().is_some());
        assert!(find_embedding(&k, &a.module, &caps).unwrap().is_none());
    }
}
