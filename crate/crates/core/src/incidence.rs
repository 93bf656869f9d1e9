//! Finite preorders, incidence algebras `I(X, A)` over a commutative ring,
//! the modules `M(X)`, and a checker for `End_A(M) ≅ End_{I(X,A)}(M(X))`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom::{end_ring, ModuleHom};
use crate::linalg::{GroupMap, Mat, Moduli};
use crate::module::{submodule_generated, FiniteModule};
use crate::ring::{FiniteRing, RingPresentation};
use crate::verdict::{Caps, Limit};

/// Wire form of a preorder: element names and related pairs `[x, y]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetPresentation {
    pub elements: Vec<String>,
    pub relation: Vec<[String; 2]>,
}

/// A reflexive, transitive relation on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    names: Vec<String>,
    rel: Vec<Vec<bool>>,
}

/// Whether a square boolean matrix is reflexive and transitive.
pub fn validate_preorder(rel: &[Vec<bool>]) -> bool {
    let n = rel.len();
    rel.iter().all(|r| r.len() == n)
        && (0..n).all(|x| rel[x][x])
        && (0..n).all(|x| (0..n).all(|y| !rel[x][y] || (0..n).all(|z| !rel[y][z] || rel[x][z])))
}

impl Preorder {
    /// Applies the reflexive closure; a relation that is not transitive is
    /// rejected rather than closed.
    pub fn new(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        let mut rel = vec![vec![false; n]; n];
        for (x, row) in rel.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::InvalidPreorder(format!("pair ({x}, {y}) is out of range")));
            }
            rel[x][y] = true;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if rel[x][y] && rel[y][z] && !rel[x][z] {
                        return Err(Error::InvalidPreorder(format!(
                            "not transitive: {0} <= {1} and {1} <= {2} but not {0} <= {2}",
                            names[x], names[y], names[z]
                        )));
                    }
                }
            }
        }
        Ok(Preorder { names, rel })
    }

    pub fn from_presentation(p: &PosetPresentation) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, name) in p.elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::InvalidPreorder(format!("duplicate element {name}")));
            }
        }
        let lookup = |s: &String| {
            index.get(s.as_str()).copied().ok_or_else(|| Error::InvalidPreorder(format!("unknown element {s}")))
        };
        let pairs = p.relation.iter().map(|[x, y]| Ok((lookup(x)?, lookup(y)?))).collect::<Result<Vec<_>>>()?;
        Preorder::new(p.elements.clone(), &pairs)
    }

    pub fn presentation(&self) -> PosetPresentation {
        let relation = self
            .pairs()
            .into_iter()
            .filter(|(x, y)| x != y)
            .map(|(x, y)| [self.names[x].clone(), self.names[y].clone()])
            .collect();
        PosetPresentation { elements: self.names.clone(), relation }
    }

    /// `0 < 1 < ... < n-1`, named `1..=n`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
        Preorder::new((1..=n).map(|i| i.to_string()).collect(), &pairs).expect("a chain is transitive")
    }

    /// The four-element poset with bottom 1, top 4 and incomparable 2, 3.
    pub fn diamond() -> Self {
        let names = ["1", "2", "3", "4"].map(String::from).to_vec();
        Preorder::new(names, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).expect("the diamond is transitive")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.rel[x][y]
    }

    pub fn relation(&self) -> &[Vec<bool>] {
        &self.rel
    }

    /// Related pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| self.rel[x][y]).collect()
    }

    /// `[x, z] = { y | x R y R z }`.
    pub fn interval(&self, x: usize, z: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.rel[x][y] && self.rel[y][z]).collect()
    }

    /// The first `w` with `w R x` for every `x`.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&w| (0..self.len()).all(|x| self.rel[w][x]))
    }
}

/// `I(X, A)` with coordinates ordered by pair, then by the basis of `A`.
#[derive(Debug, Clone)]
pub struct IncidenceAlgebra {
    ring: Arc<FiniteRing>,
    base: Arc<FiniteRing>,
    poset: Preorder,
    pairs: Vec<(usize, usize)>,
}

impl IncidenceAlgebra {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn poset(&self) -> &Preorder {
        &self.poset
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair_index(&self, x: usize, y: usize) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (x, y))
    }

    /// `a·e_xy` in ring coordinates.
    pub fn element(&self, x: usize, y: usize, a: &[i64]) -> Option<Vec<i64>> {
        let p = self.pair_index(x, y)?;
        let k = self.base.dim();
        let mut v = self.ring.zero();
        v[p * k..(p + 1) * k].copy_from_slice(&self.base.moduli().reduced(a));
        Some(v)
    }

    /// Which matrix positions carry a coordinate.
    pub fn pattern(&self) -> Vec<Vec<bool>> {
        self.poset.relation().to_vec()
    }
}

/// Convolution algebra on the related pairs: `e_xy · e_zw = δ_yz e_xw`.
pub fn build_incidence_algebra(poset: &Preorder, base: &Arc<FiniteRing>) -> Result<IncidenceAlgebra> {
    if !base.is_commutative() {
        return Err(Error::NonCommutativeBase);
    }
    let pairs = poset.pairs();
    let k = base.dim();
    let dim = pairs.len() * k;
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let moduli: Vec<i64> = pairs.iter().flat_map(|_| base.moduli().as_slice().to_vec()).collect();
    let mut mul = vec![vec![vec![0i64; dim]; dim]; dim];
    for (p, &(x, y)) in pairs.iter().enumerate() {
        for (q, &(z, w)) in pairs.iter().enumerate() {
            if y != z {
                continue;
            }
            let r = index[&(x, w)];
            for i in 0..k {
                for j in 0..k {
                    let c = base.structure_constant(i, j);
                    mul[p * k + i][q * k + j][r * k..(r + 1) * k].copy_from_slice(c);
                }
            }
        }
    }
    let mut one = vec![0i64; dim];
    for x in 0..poset.len() {
        let p = index[&(x, x)];
        one[p * k..(p + 1) * k].copy_from_slice(&base.one());
    }
    let ring = FiniteRing::new(RingPresentation { moduli, mul, one })?;
    Ok(IncidenceAlgebra { ring: Arc::new(ring), base: base.clone(), poset: poset.clone(), pairs })
}

/// `M^(X)` with `(m_x)_x · f = (Σ_x m_x f(x, y))_y`; coordinates ordered by
/// point, then by the coordinates of `M`.
pub fn build_mx(m: &FiniteModule, alg: &IncidenceAlgebra) -> Result<FiniteModule> {
    if **m.ring() != **alg.base() {
        return Err(Error::RingMismatch);
    }
    let n = alg.poset().len();
    let dm = m.dim();
    let k = alg.base().dim();
    let dim = n * dm;
    let moduli: Vec<i64> = (0..n).flat_map(|_| m.moduli().as_slice().to_vec()).collect();
    let mut action = Vec::with_capacity(alg.pairs().len() * k);
    for &(u, v) in alg.pairs() {
        for i in 0..k {
            let mut rho: Mat = vec![vec![0; dim]; dim];
            for (r, row) in m.action()[i].iter().enumerate() {
                rho[u * dm + r][v * dm..(v + 1) * dm].copy_from_slice(row);
            }
            action.push(rho);
        }
    }
    FiniteModule::new(alg.ring().clone(), moduli, action)
}

/// Outcome of comparing `End_A(M)` with `End_R(M(X))` through
/// `φ ↦ Φ`, `Φ((m_x)_x) = (φ(m_x))_x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub pairs: usize,
    pub end_base: u128,
    pub end_incidence: u128,
    pub additive: bool,
    pub injective: bool,
    pub surjective: bool,
    pub multiplicative: bool,
    pub unital: bool,
}

impl IsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.additive && self.injective && self.surjective && self.multiplicative && self.unital
    }
}

fn block_diagonal(phi: &Mat, copies: usize) -> Mat {
    let d = phi.len();
    let mut out = vec![vec![0; d * copies]; d * copies];
    for c in 0..copies {
        for (r, row) in phi.iter().enumerate() {
            out[c * d + r][c * d..(c + 1) * d].copy_from_slice(row);
        }
    }
    out
}

/// Builds both endomorphism rings and checks that `φ ↦ Φ` is a unital ring
/// isomorphism. Needs `M` cyclic and a bottom element in `X`.
pub fn incend_check(m: &Arc<FiniteModule>, poset: &Preorder, caps: &Caps) -> Result<IsoReport> {
    caps.check(Limit::Elements, m.order())?;
    if !m.elements().any(|x| submodule_generated(m, &[x]).is_whole()) {
        return Err(Error::NotCyclic);
    }
    poset.bottom().ok_or(Error::NoBottomElement)?;
    let alg = build_incidence_algebra(poset, m.ring())?;
    let mx = Arc::new(build_mx(m, &alg)?);
    let end_a = end_ring(m)?;
    let end_r = end_ring(&mx)?;
    let lift = |f: &ModuleHom| ModuleHom::new(mx.clone(), mx.clone(), block_diagonal(f.matrix(), poset.len()));
    let mut images = Vec::new();
    for g in end_a.homs().generators() {
        let big = lift(&g)?;
        let c = end_r.from_hom(&big).ok_or_else(|| {
            Error::InternalInconsistency("a lifted endomorphism has no End coordinates".into())
        })?;
        images.push(c);
    }
    let domain = Moduli::new(end_a.homs().orders().to_vec())?;
    let codomain = end_r.ring().moduli().clone();
    let map = GroupMap::new(domain, codomain, images);
    let additive = map.is_ok();
    let (injective, surjective, multiplicative, unital) = match &map {
        Ok(map) => {
            let ra = end_a.ring();
            let rr = end_r.ring();
            let k = ra.dim();
            let multiplicative = (0..k).all(|i| {
                (0..k).all(|j| map.apply(&ra.mul(&ra.basis(i), &ra.basis(j))) == rr.mul(&map.apply(&ra.basis(i)), &map.apply(&ra.basis(j))))
            });
            let image_order = crate::linalg::subgroup_order(&map.image(), rr.moduli());
            (map.kernel().is_empty(), image_order == rr.order(), multiplicative, map.apply(&ra.one()) == rr.one())
        }
        Err(_) => (false, false, false, false),
    };
    Ok(IsoReport {
        pairs: alg.pairs().len(),
        end_base: end_a.ring().order(),
        end_incidence: end_r.ring().order(),
        additive,
        injective,
        surjective,
        multiplicative,
        unital,
    })
}
