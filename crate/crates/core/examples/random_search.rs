//! Seeded random modules checked against every theorem suite.
//!
//! `cargo run --example random_search -- [count] [seed]`

use endoregular::corpus::{random_modules, run_corpus, RandomLimits, RunOptions, SuiteSummary};
use endoregular::Caps;

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|a| a.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(7);
    let members = random_modules(count, seed, &RandomLimits::default());
    for m in members.iter().take(5) {
        println!("{}: |M| = {}, |R| = {}", m.id, m.module.order(), m.module.ring().order());
    }
    let records = run_corpus(&members, |_| Caps::default(), &[], RunOptions::default());
    let summary = SuiteSummary::from_records(&records);
    print!("{summary}");
    std::process::exit(summary.exit_code());
}
