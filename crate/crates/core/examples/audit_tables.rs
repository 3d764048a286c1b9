//! Reproduces the four-candidate satisfaction table exhaustively and the
//! five-candidate table on a seeded sample.
//!
//! cargo run --release --example audit_tables -- [SAMPLES] [SEED]

use std::time::Instant;

use condorcet_axioms::axioms::audit::{audit, AuditConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let samples = args.next().map_or(20_000, |s| s.parse().expect("SAMPLES is a number"));
    let seed = args.next().map_or(1, |s| s.parse().expect("SEED is a number"));

    for config in [AuditConfig::table1(), AuditConfig::table2(samples, seed)] {
        let started = Instant::now();
        let report = audit(&config).expect("audit configuration is valid");
        println!(
            "{} candidates, {} tournaments ({}), {:.1?}",
            report.candidates,
            report.tournaments_checked,
            report.mode,
            started.elapsed()
        );
        print!("{}", report.render_table());
        for cell in report.violations() {
            let ce = cell.counterexample.as_ref().unwrap();
            println!("  #{}: {}", cell.index.unwrap(), ce.describe());
        }
        println!();
    }
}
