//! Linear congruence systems `(x·A)_j ≡ b_j (mod m_j)` over integer unknowns.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::int_matrix::IntMatrix;
use super::subgroup::{subgroup_elements, subgroup_membership, GroupMap, Moduli};
use crate::error::{Error, Result};

/// Full solution set of a congruence system: `particular + span(homogeneous)`
/// over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub particular: Vec<BigInt>,
    pub homogeneous: Vec<Vec<BigInt>>,
    /// The period `L` (exponent of the moduli); `L·e_i` are among the
    /// homogeneous generators.
    pub period: i64,
    kernel: Vec<Vec<i64>>,
}

impl CongruenceSolution {
    /// Membership of an integer vector in the solution set.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        let l = BigInt::from(self.period);
        let m = Moduli::new(vec![self.period; self.particular.len()]).expect("valid period");
        let diff: Vec<i64> = x
            .iter()
            .zip(&self.particular)
            .map(|(a, p)| {
                let d = (a - p) % &l;
                let d = if d < BigInt::from(0) { d + &l } else { d };
                d.to_i64().expect("reduced mod period")
            })
            .collect();
        subgroup_membership(&diff, &self.kernel, &m).unwrap_or(false)
    }

    /// All solutions reduced into `[0, L)^k`.
    pub fn solutions_mod_period(&self) -> Vec<Vec<i64>> {
        let m = Moduli::new(vec![self.period; self.particular.len()]).expect("valid period");
        let p: Vec<i64> = self.particular.iter().map(|x| x.to_i64().expect("reduced")).collect();
        subgroup_elements(&self.kernel, &m).into_iter().map(|h| m.add(&p, &h)).collect()
    }
}

/// Solves `(x·A)_j ≡ b_j (mod m_j)` for `x ∈ Z^k`, where `A` is `k × len(m)`.
///
/// Returns `Ok(None)` when the system is inconsistent.
pub fn solve_congruence_system(
    a: &IntMatrix,
    b: &[BigInt],
    m: &Moduli,
) -> Result<Option<CongruenceSolution>> {
    if a.cols() != m.len() || b.len() != m.len() {
        return Err(Error::DimensionMismatch(format!(
            "A is {}x{}, b has {} entries, {} moduli",
            a.rows(),
            a.cols(),
            b.len(),
            m.len()
        )));
    }
    let l = m.exponent();
    let reduce = |x: &BigInt, md: i64| -> i64 {
        let md = BigInt::from(md);
        let r = ((x % &md) + &md) % &md;
        r.to_i64().expect("reduced")
    };
    let images: Vec<Vec<i64>> = (0..a.rows())
        .map(|i| a.row(i).iter().zip(m.as_slice()).map(|(x, &mj)| reduce(x, mj)).collect())
        .collect();
    let domain = Moduli::new(vec![l; a.rows()])?;
    let map = GroupMap::new(domain, m.clone(), images)?;
    let target: Vec<i64> = b.iter().zip(m.as_slice()).map(|(x, &mj)| reduce(x, mj)).collect();
    let solver = map.solver();
    let Some(x) = solver.preimage(&target) else {
        return Ok(None);
    };
    let kernel = solver.kernel();
    let mut homogeneous: Vec<Vec<BigInt>> =
        kernel.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    for i in 0..a.rows() {
        let mut e = vec![BigInt::from(0); a.rows()];
        e[i] = BigInt::from(l);
        homogeneous.push(e);
    }
    Ok(Some(CongruenceSolution {
        particular: x.into_iter().map(BigInt::from).collect(),
        homogeneous,
        period: l,
        kernel,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn two_x_is_one_mod_four_has_no_solution() {
        let a = IntMatrix::from_rows(&[vec![2i64]]).unwrap();
        let m = Moduli::new(vec![4]).unwrap();
        assert_eq!(solve_congruence_system(&a, &bi(&[1]), &m).unwrap(), None);
        // 2x ≡ 2 (mod 4) is solvable by x = 1, 3.
        let s = solve_congruence_system(&a, &bi(&[2]), &m).unwrap().unwrap();
        let mut sols = s.solutions_mod_period();
        sols.sort();
        assert_eq!(sols, vec![vec![1], vec![3]]);
    }

    #[test]
    fn homogeneous_two_x_mod_four() {
        let a = IntMatrix::from_rows(&[vec![2i64]]).unwrap();
        let m = Moduli::new(vec![4]).unwrap();
        let s = solve_congruence_system(&a, &bi(&[0]), &m).unwrap().unwrap();
        let mut sols = s.solutions_mod_period();
        sols.sort();
        assert_eq!(sols, vec![vec![0], vec![2]]);
        assert!(s.contains(&bi(&[-2])));
        assert!(!s.contains(&bi(&[5])));
    }

    #[test]
    fn identity_system() {
        let a = IntMatrix::identity(2);
        let m = Moduli::new(vec![3, 5]).unwrap();
        let s = solve_congruence_system(&a, &bi(&[2, 4]), &m).unwrap().unwrap();
        assert!(s.contains(&bi(&[2, 4])));
        assert!(s.contains(&bi(&[5, 9])));
        assert!(!s.contains(&bi(&[2, 5])));
    }

    #[test]
    fn dimension_mismatch() {
        let a = IntMatrix::identity(2);
        let m = Moduli::new(vec![3]).unwrap();
        assert!(solve_congruence_system(&a, &bi(&[1]), &m).is_err());
    }
}
