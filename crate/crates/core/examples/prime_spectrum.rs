//! Prime and semiprime submodules of Z/12.
//!
//! `cargo run --example prime_spectrum`

use std::sync::Arc;

use endoregular::lab::{submodule_product, ModuleLab};
use endoregular::module::{regular_module, submodule_generated};
use endoregular::ring::constructions::zn;
use endoregular::Caps;

fn main() -> endoregular::Result<()> {
    let m = Arc::new(regular_module(&Arc::new(zn(12))));
    let lab = ModuleLab::new(m.clone(), Caps::default())?;
    let spec: Vec<_> = lab.spec()?.iter().map(|s| s.gens().clone()).collect();
    println!("Spec(Z/12) = {spec:?}");

    for g in [2, 3, 4, 6] {
        let n = submodule_generated(&m, &[vec![g]]);
        let prime = lab.is_prime_in(&n)?;
        let semiprime = lab.is_semiprime_in(&n)?;
        println!("<{g}>: prime {} {:?}, semiprime {} {:?}", prime.label(), prime.witness(), semiprime.label(), semiprime.witness());
    }

    let two = submodule_generated(&m, &[vec![2]]);
    println!("<2> times <2> = {:?}", submodule_product(&two, &two).gens());
    Ok(())
}
