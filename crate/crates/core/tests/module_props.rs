//! Brute-force oracles for the hom engine and the lab on seeded random
//! modules (|M| ≤ 64 over rings of at most 64 elements).

use std::collections::BTreeSet;

use endoregular::corpus::{random_modules, RandomLimits};
use endoregular::hom::{end_ring, hom_group, trace};
use endoregular::lab::{CorpusMember, ModuleLab};
use endoregular::module::{enumerate_submodules, quotient, Submodule};
use endoregular::Caps;
use proptest::prelude::*;

fn member(seed: u64) -> CorpusMember {
    random_modules(1, seed, &RandomLimits::default()).remove(0)
}

fn span(s: &Submodule) -> BTreeSet<Vec<i64>> {
    s.elements().into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn kernel_and_image_orders_multiply_to_module_order(seed in any::<u64>()) {
        let m = member(seed).module;
        let end = end_ring(&m).unwrap();
        prop_assume!(end.ring().order() <= 4096);
        for x in end.ring().moduli().elements() {
            let f = end.to_hom(&x);
            prop_assert_eq!(f.kernel().order() * f.image().order(), m.order());
            // brute-force kernel
            let zero = m.zero();
            let ker: BTreeSet<Vec<i64>> = m.elements().filter(|v| f.apply(v) == zero).collect();
            prop_assert_eq!(ker, span(&f.kernel()));
        }
    }

    #[test]
    fn end_multiplication_is_composition(seed in any::<u64>()) {
        let m = member(seed).module;
        let end = end_ring(&m).unwrap();
        let ring = end.ring();
        let basis: Vec<Vec<i64>> = (0..ring.dim()).map(|i| ring.basis(i)).collect();
        for a in &basis {
            for b in &basis {
                let composed = end.to_hom(a).compose(&end.to_hom(b)).unwrap();
                let product = end.to_hom(&ring.mul(a, b));
                for v in m.elements() {
                    prop_assert_eq!(composed.apply(&v), product.apply(&v));
                }
            }
        }
    }

    #[test]
    fn homs_respect_the_action(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let m = member(seed).module;
        let lattice = enumerate_submodules(&m, &Caps::default()).unwrap();
        let n = quotient(&lattice.submodules()[pick.index(lattice.submodules().len())]).module;
        let h = hom_group(&m, &n).unwrap();
        let ring = m.ring();
        for c in h.coefficient_vectors(&Caps::default()).unwrap() {
            let f = h.hom(&c);
            for v in m.elements() {
                for i in 0..ring.dim() {
                    prop_assert_eq!(f.apply(&m.act_basis(&v, i)), n.act_basis(&f.apply(&v), i));
                }
            }
        }
    }

    #[test]
    fn quotient_order_and_projection(seed in any::<u64>()) {
        let m = member(seed).module;
        let lattice = enumerate_submodules(&m, &Caps::default()).unwrap();
        for s in lattice.submodules() {
            let q = quotient(s);
            prop_assert_eq!(q.module.order() * s.order(), m.order());
            prop_assert_eq!(span(&q.projection.kernel()), span(s));
        }
    }

    #[test]
    fn lab_families_match_brute_force(seed in any::<u64>()) {
        let m = member(seed).module;
        let lab = ModuleLab::new(m.clone(), Caps::default()).unwrap();
        prop_assume!(lab.lattice().is_ok() && lab.end_elements().is_ok());
        let lattice = lab.lattice().unwrap();
        let endos: Vec<_> = lab.end_elements().unwrap().iter().map(|x| lab.end().to_hom(x)).collect();
        let all: Vec<BTreeSet<Vec<i64>>> = lattice.submodules().iter().map(span).collect();

        for s in lab.fully_invariant().unwrap() {
            let set = span(s);
            prop_assert!(endos.iter().all(|f| set.iter().all(|v| set.contains(&f.apply(v)))));
        }
        let invariant: BTreeSet<_> = lab.fully_invariant().unwrap().iter().map(span).collect();
        for (s, set) in lattice.submodules().iter().zip(&all) {
            let stable = endos.iter().all(|f| set.iter().all(|v| set.contains(&f.apply(v))));
            prop_assert_eq!(stable, invariant.contains(set), "{:?}", s.gens());
        }

        // summands: some submodule meets it in zero and sums to M
        let summands: BTreeSet<_> = lab.summands().unwrap().iter().map(span).collect();
        let order = m.order();
        for (s, set) in lattice.submodules().iter().zip(&all) {
            let has_complement = lattice.submodules().iter().any(|t| {
                s.intersect(t).unwrap().is_zero() && s.sum(t).unwrap().order() == order
            });
            prop_assert_eq!(has_complement, summands.contains(set));
        }

        // images of endomorphisms are M-generated, and the trace of M in M is M
        let generated: BTreeSet<_> = lab.m_generated().unwrap().iter().map(span).collect();
        for f in &endos {
            prop_assert!(generated.contains(&span(&f.image())));
        }
        prop_assert!(trace(&m, &m).unwrap().is_whole());
    }

    #[test]
    fn routes_agree_on_random_modules(seed in any::<u64>()) {
        let lab = ModuleLab::new(member(seed).module, Caps::default()).unwrap();
        prop_assert!(lab.is_endoregular().is_ok());
        prop_assert!(lab.is_abelian_endoregular().is_ok());
        prop_assert!(lab.is_k_nonsingular().is_ok());
        prop_assert!(lab.is_polyform().is_ok());
    }
}
