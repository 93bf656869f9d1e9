//! Seeded random modules over small rings.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lab::CorpusMember;
use crate::module::{direct_sum, extract, quotient, regular_module, submodule_generated, FiniteModule};
use crate::ring::constructions::{dual_numbers, full_matrix, gf4, matrix_pattern_ring, product, upper_triangular, zn};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomLimits {
    pub ring_order: u128,
    pub module_order: u128,
    /// Largest `k` for the ambient free module `R^k`.
    pub rank: usize,
}

impl Default for RandomLimits {
    fn default() -> Self {
        RandomLimits { ring_order: 64, module_order: 64, rank: 2 }
    }
}

fn ring_pool(limit: u128) -> Vec<(String, Arc<FiniteRing>)> {
    let mut pool: Vec<(String, FiniteRing)> = (2..=64).map(|n| (format!("Z/{n}"), zn(n))).collect();
    for a in 2..=8 {
        for b in a..=32 {
            if a * b <= 64 {
                pool.push((format!("Z/{a}xZ/{b}"), product(&zn(a), &zn(b))));
            }
        }
    }
    for q in 2..=4 {
        pool.push((format!("UT2(Z{q})"), upper_triangular(2, q)));
    }
    pool.push(("UT3(Z2)".into(), upper_triangular(3, 2)));
    pool.push(("Mat2(Z2)".into(), full_matrix(2, 2)));
    pool.push(("GF4".into(), gf4()));
    pool.push(("GF4xZ/2".into(), product(&gf4(), &zn(2))));
    for q in 2..=8 {
        pool.push((format!("Dual(Z{q})"), dual_numbers(q)));
    }
    // three-point posets other than the chain
    let shapes: [(&str, &[(usize, usize)]); 3] = [
        ("I(V,Z2)", &[(0, 0), (0, 1), (0, 2), (1, 1), (2, 2)]),
        ("I(Λ,Z2)", &[(0, 0), (0, 2), (1, 1), (1, 2), (2, 2)]),
        ("I(1+2,Z2)", &[(0, 0), (1, 1), (1, 2), (2, 2)]),
    ];
    for (name, pairs) in shapes {
        pool.push((name.into(), matrix_pattern_ring(3, 2, pairs).expect("closed pattern")));
    }
    pool.into_iter().filter(|(_, r)| r.order() <= limit).map(|(n, r)| (n, Arc::new(r))).collect()
}

fn random_vector(m: &FiniteModule, rng: &mut ChaCha8Rng) -> Vec<i64> {
    m.moduli().as_slice().iter().map(|&d| rng.gen_range(0..d)).collect()
}

/// One random module: a submodule, quotient or subquotient of `R^k`.
/// Returns a short description of the construction with the module.
pub fn random_member(rng: &mut ChaCha8Rng, limits: &RandomLimits) -> (String, Arc<FiniteModule>) {
    draw(&ring_pool(limits.ring_order), rng, limits)
}

fn draw(
    pool: &[(String, Arc<FiniteRing>)],
    rng: &mut ChaCha8Rng,
    limits: &RandomLimits,
) -> (String, Arc<FiniteModule>) {
    loop {
        let (name, ring) = pool.choose(rng).expect("non-empty ring pool");
        let k = rng.gen_range(1..=limits.rank.max(1));
        let free = Arc::new(regular_module(ring));
        let ambient =
            if k == 1 { free } else { direct_sum(&vec![free; k]).expect("same ring").module };
        let gens = |m: &Arc<FiniteModule>, rng: &mut ChaCha8Rng| -> Vec<Vec<i64>> {
            (0..rng.gen_range(1..=2)).map(|_| random_vector(m, rng)).collect()
        };
        let (kind, m) = match rng.gen_range(0..4) {
            0 => ("R", ambient),
            1 => ("sub", extract(&submodule_generated(&ambient, &gens(&ambient, rng))).module),
            2 => ("quo", quotient(&submodule_generated(&ambient, &gens(&ambient, rng))).module),
            _ => {
                let s = extract(&submodule_generated(&ambient, &gens(&ambient, rng))).module;
                let g = vec![random_vector(&s, rng)];
                ("subquo", quotient(&submodule_generated(&s, &g)).module)
            }
        };
        if m.order() <= limits.module_order {
            return (format!("{kind}({name}^{k})"), m);
        }
    }
}

/// `count` random modules from one ChaCha stream seeded with `seed`.
pub fn random_modules(count: usize, seed: u64, limits: &RandomLimits) -> Vec<CorpusMember> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = ring_pool(limits.ring_order);
    (0..count)
        .map(|i| {
            let (desc, module) = draw(&pool, &mut rng, limits);
            CorpusMember::plain(format!("random:{seed}#{i}:{desc}"), module)
        })
        .collect()
}
