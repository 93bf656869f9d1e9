//! Command-line front end over a JSON workspace.
//!
//! Exit codes: 0 ok, 1 suite failure or internal inconsistency, 2 input error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use endoregular::corpus::{parse_workspace, random_modules, run_corpus, RandomLimits, RunOptions, SuiteRun, SuiteSummary, Workspace};
use endoregular::incidence::{build_incidence_algebra, incend_check};
use endoregular::lab::{analyze, ModuleLab};
use endoregular::module::regular_module;
use endoregular::Error;

#[derive(Parser)]
#[command(name = "endoreg", version, about = "Endoregularity checks for finite modules")]
struct Cli {
    /// Machine-readable output (JSON; one object per line for result streams).
    #[arg(long, global = true)]
    json: bool,
    /// Override the element enumeration cap.
    #[arg(long, global = true)]
    elements: Option<u64>,
    /// Override the submodule enumeration cap.
    #[arg(long, global = true)]
    submodules: Option<u64>,
    /// Override the Hom enumeration cap.
    #[arg(long, global = true)]
    homs: Option<u64>,
    /// Record wall time per object (makes streams non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a workspace.
    Validate { file: PathBuf },
    /// Full property report for a module or corpus member.
    Analyze { file: PathBuf, id: String },
    /// Run the selected theorem suites.
    Suite { file: PathBuf },
    /// Run every suite on seeded random modules.
    Search {
        file: PathBuf,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build I(X, A) and compare End_A(M) with End(M(X)).
    Incidence {
        file: PathBuf,
        poset: String,
        ring: String,
        #[arg(long)]
        module: Option<String>,
    },
}

fn load(cli: &Cli, file: &PathBuf) -> endoregular::Result<Workspace> {
    let ws = parse_workspace(file)?;
    if cli.elements.is_none() && cli.submodules.is_none() && cli.homs.is_none() {
        return Ok(ws);
    }
    let mut f = ws.file().clone();
    f.caps.elements = cli.elements.unwrap_or(f.caps.elements);
    f.caps.submodules = cli.submodules.unwrap_or(f.caps.submodules);
    f.caps.homs = cli.homs.unwrap_or(f.caps.homs);
    Workspace::new(f)
}

fn print_run(cli: &Cli, run: &SuiteRun) -> u8 {
    if cli.json {
        print!("{}", run.to_json_lines());
    } else {
        for r in run.records.iter().filter(|r| r.outcome.is_failure()) {
            println!("{} {}: {:?}", r.object, r.check, r.outcome);
        }
        print!("{}", run.summary);
    }
    run.exit_code() as u8
}

fn run(cli: &Cli) -> endoregular::Result<u8> {
    let opts = RunOptions { timing: cli.timing };
    match &cli.command {
        Command::Validate { file } => {
            let ws = load(cli, file)?;
            let f = ws.file();
            if cli.json {
                println!("{}", serde_json::json!({"valid": true, "rings": f.rings.len(), "modules": f.modules.len(), "posets": f.posets.len(), "corpora": f.corpora.len()}));
            } else {
                println!(
                    "valid: {} rings, {} modules, {} posets, {} corpora",
                    f.rings.len(),
                    f.modules.len(),
                    f.posets.len(),
                    f.corpora.len()
                );
            }
            Ok(0)
        }
        Command::Analyze { file, id } => {
            let ws = load(cli, file)?;
            let member = ws.find(id)?;
            let lab = ModuleLab::new(member.module, ws.caps_for(id))?;
            let report = analyze(id, &lab)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("reports serialize"));
            } else {
                print!("{report}");
            }
            Ok(0)
        }
        Command::Suite { file } => Ok(print_run(cli, &load(cli, file)?.run_suites(opts)?)),
        Command::Search { file, count, seed } => {
            let ws = load(cli, file)?;
            let members = random_modules(*count, seed.unwrap_or(ws.seed()), &RandomLimits::default());
            let records = run_corpus(&members, |_| ws.caps(), &[], opts);
            let summary = SuiteSummary::from_records(&records);
            Ok(print_run(cli, &SuiteRun { records, summary }))
        }
        Command::Incidence { file, poset, ring, module } => {
            let ws = load(cli, file)?;
            let x = ws.poset(poset)?;
            let base = match module {
                Some(m) => ws.module(m)?,
                None => Arc::new(regular_module(&ws.ring(ring)?)),
            };
            if **base.ring() != *ws.ring(ring)? {
                return Err(Error::RingMismatch);
            }
            let alg = build_incidence_algebra(&x, base.ring())?;
            let report = incend_check(&base, &x, &ws.caps())?;
            if cli.json {
                println!("{}", serde_json::json!({"pairs": alg.pairs(), "pattern": alg.pattern(), "report": report}));
            } else {
                println!("I({poset}, {ring}): {} basis pairs, order {}", alg.pairs().len(), alg.ring().order());
                for row in alg.pattern() {
                    println!("  {}", row.iter().map(|&b| if b { '*' } else { '.' }).collect::<String>());
                }
                println!(
                    "|End_A(M)| = {}, |End(M(X))| = {}, isomorphism: {}",
                    report.end_base,
                    report.end_incidence,
                    report.is_isomorphism()
                );
            }
            Ok(u8::from(!report.is_isomorphism()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::InternalInconsistency(_)) { 1 } else { 2 })
        }
    }
}
