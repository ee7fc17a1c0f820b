//! Runs the eleven acceptance criteria and prints one line for each.

use std::process::ExitCode;

use tightcomp::Limits;
use tightcomp_cli::corpus::{golden, bundled_corpus, run_criterion, CorpusConfig};

fn main() -> ExitCode {
    let cfg = CorpusConfig::default();
    let limits = Limits::default();
    let mut failed = 0;
    println!("acceptance: {} criteria", 11);
    for id in 1..=11 {
        let r = run_criterion(id, &cfg, limits);
        println!("{}", r.line());
        failed += usize::from(!r.pass());
    }
    for g in golden(&bundled_corpus(), false, limits) {
        println!("golden {} {}: {}", if g.pass { "PASS" } else { "FAIL" }, g.name, g.detail);
        failed += usize::from(!g.pass);
    }
    if failed == 0 {
        println!("acceptance: all passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} failed");
        ExitCode::FAILURE
    }
}
