//! Hom groups, endomorphism rings, traces and summand tests.
//!
//! `cargo run --example hom_groups`

use std::sync::Arc;

use endoregular::hom::{end_ring, hom_group, summand_test, trace};
use endoregular::module::{direct_sum, regular_module, submodule_generated, FiniteModule};
use endoregular::ring::constructions::zn;

fn main() -> endoregular::Result<()> {
    let z = Arc::new(zn(12));
    let cyclic = |d: i64| Arc::new(FiniteModule::new(z.clone(), vec![d], vec![vec![vec![1]]]).unwrap());
    let (z4, z6) = (cyclic(4), cyclic(6));

    let h = hom_group(&z4, &z6)?;
    println!("Hom(Z/4, Z/6) has order {} ({:?})", h.order(), h.orders());
    for f in h.generators() {
        println!("  generator {:?}, kernel order {}", f.matrix(), f.kernel().order());
    }

    let m = direct_sum(&[z4.clone(), z6.clone()])?.module;
    let end = end_ring(&m)?;
    println!("End(Z/4 + Z/6) has order {}, commutative: {}", end.ring().order(), end.ring().is_commutative());

    let t = trace(&z4, &m)?;
    println!("trace of Z/4 in Z/4 + Z/6: order {}, generators {:?}", t.order(), t.gens());

    let z12 = Arc::new(regular_module(&z));
    let end12 = hom_group(&z12, &z12)?;
    for g in [3, 2] {
        let n = submodule_generated(&z12, &[vec![g]]);
        match summand_test(&n, &end12) {
            Some(p) => println!("<{g}> is a summand of Z/12, projection {:?}", p.matrix()),
            None => println!("<{g}> is not a summand of Z/12"),
        }
    }
    Ok(())
}
