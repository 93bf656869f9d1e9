//! Loads a JSON workspace and runs its suites, printing the result stream.
//!
//! `cargo run --example run_workspace [path]` (defaults to the bundled sample.json)

use endoregular::corpus::{parse_workspace, RunOptions};

fn main() -> endoregular::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sample.json").into());
    let ws = parse_workspace(&path)?;
    for name in ws.corpus_names() {
        let ids: Vec<String> = ws.corpus(name)?.into_iter().map(|m| m.id).collect();
        println!("corpus {name}: {ids:?}");
    }
    let run = ws.run_suites(RunOptions::default())?;
    for r in run.records.iter().filter(|r| r.object == "e1R") {
        println!("{}", serde_json::to_string(r).expect("records serialize"));
    }
    print!("{}", run.summary);
    std::process::exit(run.exit_code());
}
