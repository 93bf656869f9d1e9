//! Full property report for e11 UT2(Z/2) and for the plane (Z/2)^2.
//!
//! `cargo run --example analyze_module`

use std::sync::Arc;

use endoregular::lab::{analyze, ModuleLab};
use endoregular::module::{principal_right_ideal, FiniteModule};
use endoregular::ring::constructions::{upper_triangular, zn};
use endoregular::Caps;

fn main() -> endoregular::Result<()> {
    let e1r = principal_right_ideal(&Arc::new(upper_triangular(2, 2)), &[1, 0, 0]).module;
    let lab = ModuleLab::new(e1r, Caps::default())?;
    print!("{}", analyze("e11 UT2(Z/2)", &lab)?);

    let plane = Arc::new(FiniteModule::new(Arc::new(zn(2)), vec![2, 2], vec![vec![vec![1, 0], vec![0, 1]]])?);
    let lab = ModuleLab::new(plane, Caps::default())?;
    let report = analyze("(Z/2)^2", &lab)?;
    println!();
    print!("{report}");
    println!("\nas JSON:\n{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    Ok(())
}
