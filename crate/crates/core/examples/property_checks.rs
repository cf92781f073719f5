//! Structural checks (walk-count zero pattern, witness rank, oracle
//! agreement, bound ordering) over a batch of random networks.
//!
//!     cargo run --release --example property_checks -- 200

use lfnet::cli::run_checks;
use lfnet::gen;

fn main() -> lfnet::Result<()> {
    let count: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let mut failures = 0;
    let mut gaps = 0;
    for seed in 0..count {
        let n = 3 + (seed % 8) as usize;
        let m = 1 + (seed % 3) as usize;
        let net = gen::random_seeded(n, 0.4, m.min(n), seed)?;
        let lines = run_checks(&net)?;
        if let Some(bad) = lines.iter().find(|l| !l.passed) {
            failures += 1;
            println!("seed {seed}: {} failed: {}", bad.name, bad.detail);
        }
        let report = lfnet::bounds_report(&net)?;
        if report.lower < report.rank || report.rank < report.upper {
            gaps += 1;
        }
    }
    println!("{count} networks checked, {failures} failures, {gaps} with a non-tight bound");
    Ok(())
}
