//! The incidence algebra of the diamond poset over Z/2 and the transfer of
//! endomorphism rings to M(X).
//!
//! `cargo run --example incidence_diamond`

use std::sync::Arc;

use endoregular::incidence::{build_incidence_algebra, build_mx, incend_check, Preorder};
use endoregular::lab::ModuleLab;
use endoregular::module::regular_module;
use endoregular::ring::constructions::{dual_numbers, zn};
use endoregular::Caps;

fn main() -> endoregular::Result<()> {
    let x = Preorder::diamond();
    for (name, a) in [("Z/2", zn(2)), ("Z/4", zn(4)), ("Z/2[t]/(t^2)", dual_numbers(2))] {
        let a = Arc::new(a);
        let alg = build_incidence_algebra(&x, &a)?;
        let m = Arc::new(regular_module(&a));
        let mx = Arc::new(build_mx(&m, &alg)?);
        let report = incend_check(&m, &x, &Caps::default())?;
        let abelian = |m| ModuleLab::new(m, Caps::default()).and_then(|l| l.is_abelian_endoregular());
        println!(
            "A = {name:<13} |I(X, A)| = {:<7} |End_A(A)| = {:<2} |End(M(X))| = {:<2} isomorphism {:<5} abelian endoregular {} / {}",
            alg.ring().order(),
            report.end_base,
            report.end_incidence,
            report.is_isomorphism(),
            abelian(m)?.label(),
            abelian(mx)?.label(),
        );
    }
    let alg = build_incidence_algebra(&x, &Arc::new(zn(2)))?;
    println!("basis pairs: {:?}", alg.pairs());
    for row in alg.pattern() {
        println!("  {}", row.iter().map(|&b| if b { "* " } else { ". " }).collect::<String>());
    }
    Ok(())
}
