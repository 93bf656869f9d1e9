//! Smith normal form over Z and canonical subgroup forms over (Z/N)^k.
//!
//! `cargo run --example smith_form`

use endoregular::linalg::{present_subgroup, smith_normal_form, subgroup_canonical_form, IntMatrix, Moduli};

fn main() -> endoregular::Result<()> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let snf = smith_normal_form(&a);
    println!("A = {a:?}");
    println!("invariant factors: {:?}", snf.invariants());
    assert_eq!(snf.u.mul(&snf.s)?.mul(&snf.v)?, a);
    println!("U * S * V reproduces A");

    // the subgroup of Z/4 + Z/6 generated by (2, 3) and (0, 2)
    let moduli = Moduli::new(vec![4, 6])?;
    let gens = vec![vec![2, 3], vec![0, 2]];
    let canon = subgroup_canonical_form(&gens, &moduli);
    let shuffled = subgroup_canonical_form(&[vec![0, 2], vec![2, 3], vec![2, 1]], &moduli);
    println!("canonical generators: {canon:?} (same after shuffling: {})", canon == shuffled);
    let p = present_subgroup(&gens, &moduli);
    println!("as an abstract group: Z/{:?}", p.orders);
    Ok(())
}
