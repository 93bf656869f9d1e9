//! Submodule lattices, radicals, socles and quotients.
//!
//! `cargo run --example submodules`

use std::sync::Arc;

use endoregular::module::{enumerate_submodules, principal_right_ideal, quotient, regular_module, submodule_generated};
use endoregular::ring::constructions::{upper_triangular, zn};
use endoregular::Caps;

fn main() -> endoregular::Result<()> {
    let z12 = Arc::new(regular_module(&Arc::new(zn(12))));
    let lattice = enumerate_submodules(&z12, &Caps::default())?;
    println!("Z/12 has {} submodules:", lattice.len());
    for s in lattice.submodules() {
        println!("  order {:<2} generated by {:?}", s.order(), s.gens());
    }
    println!("Rad = {:?}, Soc = {:?}", lattice.radical().gens(), lattice.socle().gens());

    let q = quotient(&submodule_generated(&z12, &[vec![4]]));
    println!("Z/12 / <4> has order {} with moduli {:?}", q.module.order(), q.module.moduli().as_slice());

    let e1r = principal_right_ideal(&Arc::new(upper_triangular(2, 2)), &[1, 0, 0]).module;
    let lattice = enumerate_submodules(&e1r, &Caps::default())?;
    println!(
        "e11 UT2(Z/2): {} submodules, simple: {}, Rad = {:?}",
        lattice.len(),
        lattice.is_simple(),
        lattice.radical().gens()
    );
    Ok(())
}
