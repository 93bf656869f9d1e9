//! Orbits of a ring under multiplication by units.
//!
//! Regularity, idempotence, nilpotence, centrality, and the kernel and image
//! of an endomorphism up to automorphism are all unchanged along
//! `x ↦ u·x·v` or `x ↦ u·x·u⁻¹`. A quantifier over the whole ring can then
//! visit one element per orbit. The sweep still touches every element, but
//! only through a cheap linear map, so the expensive test runs once per orbit.
//!
//! The units are sampled with a fixed seed. Any set of units works; a larger
//! subgroup only means fewer orbits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FiniteRing;
use crate::linalg::zn::reduce_acc;
use crate::verdict::{Caps, Exceeded, Limit};

const UNIT_SEED: u64 = 0x5eed;
const UNIT_SAMPLES: usize = 3;
const UNIT_TRIES: usize = 256;

/// Which unit action to quotient by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitAction {
    /// `x ↦ u·x` and `x ↦ x·u`.
    TwoSided,
    /// `x ↦ u·x·u⁻¹`.
    Conjugation,
}

impl FiniteRing {
    /// A few units other than 1, with their inverses, drawn deterministically.
    pub fn sample_units(&self) -> Vec<(Vec<i64>, Vec<i64>)> {
        let mut rng = ChaCha8Rng::seed_from_u64(UNIT_SEED);
        let m = self.moduli().as_slice();
        let one = self.one();
        let mut out: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for _ in 0..UNIT_TRIES {
            if out.len() == UNIT_SAMPLES {
                break;
            }
            let x: Vec<i64> = m.iter().map(|&q| rng.gen_range(0..q)).collect();
            if x == one || out.iter().any(|(u, _)| *u == x) {
                continue;
            }
            if let Some(inv) = self.inverse(&x) {
                out.push((x, inv));
            }
        }
        out
    }

    /// Coordinate rows of `y ↦ l·y·r`: row `i` is the image of `b_i`.
    fn action_rows(&self, l: &[i64], r: &[i64]) -> Vec<Vec<i64>> {
        (0..self.dim()).map(|i| self.mul(&self.mul(l, &self.basis(i)), r)).collect()
    }

    /// One representative per orbit, each the first element of its orbit in
    /// [`crate::linalg::Moduli::elements`] order, yielded in that order. So the
    /// first representative failing an invariant test is also the first
    /// failing element overall.
    pub fn orbits(&self, action: UnitAction, cap: u64) -> Result<Orbits, Exceeded> {
        Caps { elements: cap, ..Caps::default() }.check(Limit::Elements, self.order())?;
        let one = self.one();
        let maps = self
            .sample_units()
            .into_iter()
            .flat_map(|(u, inv)| match action {
                UnitAction::TwoSided => vec![self.action_rows(&u, &one), self.action_rows(&one, &u)],
                UnitAction::Conjugation => vec![self.action_rows(&u, &inv)],
            })
            .collect();
        Ok(Orbits::new(self.moduli().as_slice().to_vec(), maps))
    }
}

/// Lazy orbit sweep; see [`FiniteRing::orbits`].
pub struct Orbits {
    moduli: Vec<i64>,
    place: Vec<usize>,
    maps: Vec<Vec<Vec<i64>>>,
    seen: Vec<bool>,
    next: usize,
    stack: Vec<usize>,
}

impl Orbits {
    fn new(moduli: Vec<i64>, maps: Vec<Vec<Vec<i64>>>) -> Self {
        let mut place = Vec::with_capacity(moduli.len());
        let mut p = 1usize;
        for &m in &moduli {
            place.push(p);
            p *= m as usize;
        }
        Orbits { moduli, place, maps, seen: vec![false; p], next: 0, stack: Vec::new() }
    }

    fn decode(&self, mut i: usize, out: &mut [i64]) {
        for (x, &m) in out.iter_mut().zip(&self.moduli) {
            *x = (i % m as usize) as i64;
            i /= m as usize;
        }
    }

    fn apply(&self, rows: &[Vec<i64>], y: &[i64]) -> usize {
        let mut idx = 0;
        for (t, (&m, &p)) in self.moduli.iter().zip(&self.place).enumerate() {
            let mut acc = 0i128;
            for (row, &c) in rows.iter().zip(y) {
                if c != 0 {
                    acc += c as i128 * row[t] as i128;
                }
            }
            idx += reduce_acc(acc, m) as usize * p;
        }
        idx
    }
}

impl Iterator for Orbits {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        while self.next < self.seen.len() && self.seen[self.next] {
            self.next += 1;
        }
        if self.next == self.seen.len() {
            return None;
        }
        let start = self.next;
        self.seen[start] = true;
        self.stack.push(start);
        let mut y = vec![0; self.moduli.len()];
        while let Some(i) = self.stack.pop() {
            self.decode(i, &mut y);
            for k in 0..self.maps.len() {
                let j = self.apply(&self.maps[k], &y);
                if !self.seen[j] {
                    self.seen[j] = true;
                    self.stack.push(j);
                }
            }
        }
        let mut rep = vec![0; self.moduli.len()];
        self.decode(start, &mut rep);
        Some(rep)
    }
}
