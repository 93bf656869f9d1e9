//! Regularity, idempotents and units of small rings.
//!
//! `cargo run --example finite_rings`

use endoregular::ring::constructions::{full_matrix, gf4, product, upper_triangular, zn};
use endoregular::Caps;

fn main() -> endoregular::Result<()> {
    let caps = Caps::default();
    let rings = [
        ("Z/12", zn(12)),
        ("Z/2 x Z/3", product(&zn(2), &zn(3))),
        ("GF(4)", gf4()),
        ("UT2(Z/2)", upper_triangular(2, 2)),
        ("Mat2(Z/2)", full_matrix(2, 2)),
    ];
    for (name, r) in &rings {
        let idem = r.idempotents(caps.elements)?;
        let units = r.units(caps.elements)?;
        println!(
            "{name:<10} |R| = {:<3} idempotents {:<2} units {:<2} regular {:<5} abelian regular {:<5} unit regular {}",
            r.order(),
            idem.len(),
            units.len(),
            r.is_regular(&caps).label(),
            r.is_abelian_regular(&caps)?.label(),
            r.is_unit_regular(&caps).label(),
        );
    }
    // e12 in UT2(Z/2) has no quasi-inverse
    let ut = upper_triangular(2, 2);
    println!("UT2(Z/2) regularity witness for e12: {:?}", ut.regularity_witness(&[0, 1, 0]));
    Ok(())
}
