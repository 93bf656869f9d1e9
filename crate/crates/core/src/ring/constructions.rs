//! Standard ring presentations used by fixtures, generators and tests.

use super::{FiniteRing, RingPresentation};

/// Z/n with basis {1}.
pub fn zn(n: i64) -> FiniteRing {
    FiniteRing::new(RingPresentation { moduli: vec![n], mul: vec![vec![vec![1]]], one: vec![1] })
        .expect("Z/n is a ring")
}

/// Subring of `Mat_size(Z/q)` spanned by the matrix units `e_ij` for the given
/// index pairs (which must contain the diagonal and be closed under
/// composition). Basis order follows `pairs`.
pub fn matrix_pattern_ring(size: usize, q: i64, pairs: &[(usize, usize)]) -> Option<FiniteRing> {
    let k = pairs.len();
    let pos = |p: (usize, usize)| pairs.iter().position(|&x| x == p);
    let mut mul = vec![vec![vec![0; k]; k]; k];
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(l, m)) in pairs.iter().enumerate() {
            if j == l {
                mul[a][b][pos((i, m))?] = 1;
            }
        }
    }
    let mut one = vec![0; k];
    for d in 0..size {
        one[pos((d, d))?] = 1;
    }
    FiniteRing::new(RingPresentation { moduli: vec![q; k], mul, one }).ok()
}

/// Upper triangular `size × size` matrices over Z/q, basis `e_ij` (i ≤ j) in
/// row-major order; for size 2 that is e11, e12, e22.
pub fn upper_triangular(size: usize, q: i64) -> FiniteRing {
    let pairs: Vec<_> = (0..size).flat_map(|i| (i..size).map(move |j| (i, j))).collect();
    matrix_pattern_ring(size, q, &pairs).expect("upper triangular pattern is closed")
}

/// Full matrix ring `Mat_size(Z/q)`, basis `e_ij` in row-major order.
pub fn full_matrix(size: usize, q: i64) -> FiniteRing {
    let pairs: Vec<_> = (0..size).flat_map(|i| (0..size).map(move |j| (i, j))).collect();
    matrix_pattern_ring(size, q, &pairs).expect("full pattern is closed")
}

/// Direct product `R × S` with the concatenated basis.
pub fn product(r: &FiniteRing, s: &FiniteRing) -> FiniteRing {
    let (a, b) = (r.dim(), s.dim());
    let k = a + b;
    let mut mul = vec![vec![vec![0; k]; k]; k];
    for i in 0..a {
        for j in 0..a {
            mul[i][j][..a].copy_from_slice(r.structure_constant(i, j));
        }
    }
    for i in 0..b {
        for j in 0..b {
            mul[a + i][a + j][a..].copy_from_slice(s.structure_constant(i, j));
        }
    }
    let one = r.one().into_iter().chain(s.one()).collect();
    let moduli = r.moduli().as_slice().iter().chain(s.moduli().as_slice()).copied().collect();
    FiniteRing::new(RingPresentation { moduli, mul, one }).expect("products of rings are rings")
}

/// The field with four elements, basis {1, x} with x² = x + 1.
pub fn gf4() -> FiniteRing {
    FiniteRing::new(RingPresentation {
        moduli: vec![2, 2],
        mul: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]],
        one: vec![1, 0],
    })
    .expect("GF(4) is a ring")
}

/// Z/q[x]/(x²), basis {1, x}.
pub fn dual_numbers(q: i64) -> FiniteRing {
    FiniteRing::new(RingPresentation {
        moduli: vec![q, q],
        mul: vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
        one: vec![1, 0],
    })
    .expect("dual numbers form a ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ut2_products() {
        let r = upper_triangular(2, 2);
        // e11 * e12 = e12, e12 * e22 = e12, e12 * e11 = 0
        assert_eq!(r.mul(&[1, 0, 0], &[0, 1, 0]), vec![0, 1, 0]);
        assert_eq!(r.mul(&[0, 1, 0], &[0, 0, 1]), vec![0, 1, 0]);
        assert_eq!(r.mul(&[0, 1, 0], &[1, 0, 0]), vec![0, 0, 0]);
        assert_eq!(r.one(), vec![1, 0, 1]);
    }

    #[test]
    fn pattern_must_be_closed() {
        // {11, 12, 21, 22} minus 22 is not closed (e21 e12 = e22)
        assert!(matrix_pattern_ring(2, 2, &[(0, 0), (0, 1), (1, 0)]).is_none());
    }

    #[test]
    fn small_fields_and_products() {
        assert_eq!(gf4().order(), 4);
        assert!(gf4().is_regular(&Default::default()).holds());
        assert!(dual_numbers(2).is_regular(&Default::default()).fails());
        let p = product(&zn(2), &zn(3));
        assert_eq!(p.order(), 6);
        assert!(p.is_commutative());
    }
}
