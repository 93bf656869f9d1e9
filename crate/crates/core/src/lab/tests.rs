use super::*;
use crate::module::{direct_sum, principal_right_ideal, regular_module, submodule_generated};
use crate::ring::constructions::*;
use crate::ring::FiniteRing;

fn lab(m: Arc<FiniteModule>) -> ModuleLab {
    ModuleLab::new(m, Caps::default()).unwrap()
}

fn zmod(n: i64) -> Arc<FiniteModule> {
    Arc::new(regular_module(&Arc::new(zn(n))))
}

fn cyclic_over(r: &Arc<FiniteRing>, d: i64) -> Arc<FiniteModule> {
    Arc::new(FiniteModule::new(r.clone(), vec![d], vec![vec![vec![1]]]).unwrap())
}

fn plane() -> Arc<FiniteModule> {
    Arc::new(FiniteModule::new(Arc::new(zn(2)), vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]]]).unwrap())
}

fn z2_plus_z3() -> Arc<FiniteModule> {
    let r = Arc::new(zn(6));
    direct_sum(&[cyclic_over(&r, 2), cyclic_over(&r, 3)]).unwrap().module
}

fn e1r() -> Arc<FiniteModule> {
    let r = Arc::new(upper_triangular(2, 2));
    principal_right_ideal(&r, &[1, 0, 0]).module
}

fn zero_module() -> Arc<FiniteModule> {
    Arc::new(FiniteModule::new(Arc::new(zn(6)), vec![], vec![vec![]]).unwrap())
}

fn bools(routes: &Routes) -> Vec<Option<bool>> {
    routes.iter().map(|(_, v)| v.as_bool()).collect()
}

#[test]
fn endoregular_examples() {
    assert!(lab(zmod(6)).is_endoregular().unwrap().holds());
    assert!(lab(plane()).is_endoregular().unwrap().holds());
    let z4 = lab(zmod(4));
    let v = z4.is_endoregular().unwrap();
    assert_eq!(v.witness(), Some(&Witness::Hom(vec![vec![2]])));
    assert_eq!(bools(&z4.endoregular_routes()), vec![Some(false), Some(false)]);
}

#[test]
fn abelian_endoregular_examples() {
    let e = lab(e1r());
    assert_eq!(e.end().ring().order(), 2);
    assert_eq!(bools(&e.abelian_routes().unwrap()), vec![Some(true); 3]);
    assert_eq!(bools(&lab(plane()).abelian_routes().unwrap()), vec![Some(false); 3]);
    assert!(lab(z2_plus_z3()).is_abelian_endoregular().unwrap().holds());
    assert!(lab(zero_module()).is_abelian_endoregular().unwrap().holds());
}

#[test]
fn unit_endoregular_examples() {
    assert!(lab(plane()).is_unit_endoregular().holds());
    assert!(lab(zmod(4)).is_unit_endoregular().fails());
    assert!(lab(zero_module()).is_unit_endoregular().holds());
}

#[test]
fn summand_properties() {
    for m in [zmod(5), zmod(6), plane()] {
        let l = lab(m);
        assert!(l.has_ssp().holds());
        assert!(l.has_sip().holds());
    }
    let z6 = lab(zmod(6));
    assert_eq!(z6.summand_lattice().unwrap().len(), 4);
    assert!(z6.is_distributive_boolean().holds());
    let simple = lab(zmod(5));
    assert_eq!(simple.summand_lattice().unwrap().len(), 2);
    assert!(simple.is_distributive_boolean().holds());
    let p = lab(plane());
    assert_eq!(p.summands().unwrap().len(), 5);
    assert!(matches!(p.is_distributive_boolean(), Verdict::False(Witness::SubmoduleTriple(..))));
}

#[test]
fn propinc_agreement() {
    assert_eq!(bools(&lab(z2_plus_z3()).propinc_conditions().unwrap()), vec![Some(true); 5]);
    assert_eq!(bools(&lab(plane()).propinc_conditions().unwrap()), vec![Some(false); 5]);
    assert_eq!(bools(&lab(zmod(7)).propinc_conditions().unwrap()), vec![Some(true); 5]);
}

#[test]
fn unit_hypotheses() {
    let z6 = lab(zmod(6));
    assert!(z6.kernel_plus_image_everywhere().holds());
    assert!(z6.idempotents_commute_with_units().holds());
    let p = lab(plane());
    // a nilpotent map has kernel = image, a single line
    assert!(p.kernel_plus_image_everywhere().fails());
    assert!(p.idempotents_commute_with_units().fails());
}

#[test]
fn primes_in_z12() {
    let m = zmod(12);
    let l = lab(m.clone());
    let g = |x: i64| submodule_generated(&m, &[vec![x]]);
    assert!(l.is_prime_in(&g(2)).unwrap().holds());
    assert!(l.is_prime_in(&g(3)).unwrap().holds());
    assert_eq!(l.spec().unwrap(), vec![g(3), g(2)]);
    let v = l.is_semiprime_in(&g(4)).unwrap();
    assert_eq!(v.witness(), Some(&Witness::Submodule(g(2).gens().clone())));
    assert!(l.is_semiprime_in(&g(6)).unwrap().holds());
    assert!(l.is_prime_in(&g(6)).unwrap().fails());
    assert!(l.is_prime_in(&Submodule::whole(&m)).unwrap().fails());
    assert_eq!(submodule_product(&g(2), &g(3)), g(6));
    assert_eq!(submodule_product(&g(2), &g(2)), g(4));
    let p = lab(plane());
    let line = submodule_generated(p.module(), &[vec![1, 0]]);
    assert_eq!(p.is_prime_in(&line), Err(Error::NotFullyInvariant));
}

#[test]
fn zero_is_prime_in_simple_modules() {
    for m in [zmod(2), zmod(5), plane()] {
        assert!(lab(m).is_prime_module().unwrap().holds());
    }
}

#[test]
fn duo_and_radical() {
    for n in [4, 6, 12] {
        let l = lab(zmod(n));
        assert!(l.is_duo().holds());
        assert!(l.is_quasi_duo().holds());
    }
    assert!(lab(plane()).is_quasi_duo().fails());
    let e = lab(e1r());
    assert!(e.is_quasi_duo().holds());
    assert!(e.is_subdirect_of_simples().fails());
    assert!(!e.radical().unwrap().is_zero());
    assert!(lab(zmod(6)).is_subdirect_of_simples().holds());
    assert!(lab(zmod(5)).is_subdirect_of_simples().holds());
}

#[test]
fn nonsingularity() {
    let z4 = lab(zmod(4));
    assert_eq!(bools(&z4.k_nonsingular_routes()), vec![Some(false); 2]);
    assert_eq!(bools(&lab(z2_plus_z3()).k_nonsingular_routes()), vec![Some(true); 2]);
    for m in [zmod(4), zmod(6), zmod(8), plane(), e1r(), z2_plus_z3()] {
        let l = lab(m);
        let poly = l.is_polyform().unwrap();
        if poly.holds() {
            assert!(l.is_k_nonsingular().unwrap().holds());
        }
    }
}

#[test]
fn route_disagreement_is_an_error() {
    let routes: Routes = vec![("a", Verdict::True), ("b", Verdict::False(Witness::Note("x".into())))];
    assert!(matches!(agree("p", &routes), Err(Error::InternalInconsistency(_))));
    let undecided = Verdict::Undecided(Exceeded { limit: Limit::Homs, size: 10, cap: 1 });
    assert!(agree("p", &vec![("a", undecided), ("b", Verdict::True)]).unwrap().holds());
}

#[test]
fn caps_make_verdicts_undecided() {
    let caps = Caps { elements: 4096, submodules: 512, homs: 3 };
    let l = ModuleLab::new(zmod(4), caps).unwrap();
    assert!(l.endoregular_by_summands().is_undecided());
    assert!(l.endoregular_by_ring().is_undecided());
    assert!(l.is_endoregular().unwrap().is_undecided());
}

#[test]
fn reports() {
    let r = analyze("e1R", &lab(e1r())).unwrap();
    assert_eq!(r.end_order, 2);
    assert!(r.get("abelian_endoregular").unwrap().holds());
    assert!(r.get("subdirect_of_simples").unwrap().fails());
    assert!(!r.lattice.as_ref().unwrap().radical.is_empty());
    let p = analyze("plane", &lab(plane())).unwrap();
    assert!(p.get("endoregular").unwrap().holds());
    assert!(p.get("abelian_endoregular").unwrap().fails());
    assert!(p.get("quasi_duo").unwrap().fails());
    let z = analyze("zero", &lab(zero_module())).unwrap();
    assert!(z.properties.iter().all(|p| p.verdict.holds()), "{z}");
}

#[test]
fn suites_pass_on_small_modules() {
    let members = [
        CorpusMember::plain("z12", zmod(12)),
        CorpusMember::plain("plane", plane()),
        CorpusMember { id: "e1R".into(), module: e1r(), origin: Origin::Idempotent },
        CorpusMember {
            id: "z2+z3".into(),
            module: z2_plus_z3(),
            origin: Origin::Sum(vec![cyclic_over(&Arc::new(zn(6)), 2), cyclic_over(&Arc::new(zn(6)), 3)]),
        },
        CorpusMember::plain("zero", zero_module()),
    ];
    let caps = Caps { homs: 1 << 17, ..Caps::default() };
    for m in &members {
        for rec in run_member_suites(m, &caps, &[]) {
            assert!(!rec.outcome.is_failure(), "{} {}: {:?}", m.id, rec.check, rec.outcome);
            assert!(!matches!(rec.outcome, Outcome::Skip(_)), "{} {}: {:?}", m.id, rec.check, rec.outcome);
        }
    }
}

/// Brute force: every test the lab restricts to orbit representatives takes
/// the same value along the whole orbit.
#[test]
fn orbit_representatives_cover_invariant_tests() {
    use crate::ring::UnitAction;
    let r = Arc::new(zn(4));
    let z4z2 = direct_sum(&[cyclic_over(&r, 4), cyclic_over(&r, 2)]).unwrap().module;
    let z2 = Arc::new(zn(2));
    let z2z2z2 = direct_sum(&[cyclic_over(&z2, 2), cyclic_over(&z2, 2), cyclic_over(&z2, 2)]).unwrap().module;
    for module in [z4z2, z2z2z2, e1r(), plane(), z2_plus_z3()] {
        let lab = lab(module);
        let ring = lab.end().ring();
        let two_sided = |x: &Vec<i64>| {
            let f = lab.end().to_hom(x);
            (ring.regularity_witness(x).is_some(), lab.is_summand(&f.kernel()), lab.is_summand(&f.image()))
        };
        let conj = |x: &Vec<i64>| {
            let f = lab.end().to_hom(x);
            let (k, i) = (f.kernel(), f.image());
            (ring.is_idempotent(x), ring.is_central(x), k.intersect(&i).unwrap().is_zero(), k.sum(&i).unwrap().order())
        };
        let units = ring.sample_units();
        for x in lab.end_elements().unwrap() {
            for (u, inv) in &units {
                assert_eq!(two_sided(x), two_sided(&ring.mul(u, x)));
                assert_eq!(two_sided(x), two_sided(&ring.mul(x, u)));
                assert_eq!(conj(x), conj(&ring.mul(&ring.mul(u, x), inv)));
            }
        }
        // the closures of the representatives partition End, and each
        // representative comes first in its orbit
        let elems = lab.end_elements().unwrap();
        let reps: Vec<Vec<i64>> = ring.orbits(UnitAction::TwoSided, 1 << 20).unwrap().collect();
        let mut covered = std::collections::HashSet::new();
        for rep in &reps {
            let mut orbit = std::collections::HashSet::from([rep.clone()]);
            let mut todo = vec![rep.clone()];
            while let Some(y) = todo.pop() {
                for (u, _) in &units {
                    for z in [ring.mul(u, &y), ring.mul(&y, u)] {
                        if orbit.insert(z.clone()) {
                            todo.push(z);
                        }
                    }
                }
            }
            let first = elems.iter().find(|e| orbit.contains(*e)).unwrap();
            assert_eq!(first, rep);
            assert!(orbit.iter().all(|z| covered.insert(z.clone())));
        }
        assert_eq!(covered.len(), elems.len());
    }
}
