//! Runs the identity harness over a seeded grid and prints the worst relative
//! error per identity, then shows how errors grow as one gap is pinched.
//!
//! cargo run --release --example fuzz_report -- [seed_count]

use cyclic_area::verify::{fuzz, pinch_sweep, FuzzConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let seed_count = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(1000);

    let config = FuzzConfig {
        seed_count,
        vertex_counts: vec![3, 4, 5, 6, 7, 8, 9, 10, 20, 50],
        ..FuzzConfig::default()
    };
    let report = fuzz(&config)?;
    println!("{seed_count} seeds x {:?}", config.vertex_counts);
    for (identity, record) in &report.identities {
        println!(
            "  {:<24} {:>8} trials  max rel err {:.2e}  {}",
            identity.name(),
            record.trials,
            record.max_rel_err,
            if record.pass { "ok" } else { "FAIL" }
        );
    }
    println!("global: {}", if report.pass { "pass" } else { "FAIL" });

    println!("\npinched first gap, 100 seeds x {{5, 12}}:");
    let pinched = FuzzConfig {
        seed_count: 100,
        vertex_counts: vec![5, 12],
        ..FuzzConfig::default()
    };
    for (pinch, report) in pinch_sweep(&pinched, &[1e-3, 1e-5, 1e-7, 1e-9])? {
        let worst = report
            .identities
            .iter()
            .max_by(|a, b| a.1.max_rel_err.total_cmp(&b.1.max_rel_err))
            .map(|(i, r)| format!("{} {:.2e}", i.name(), r.max_rel_err))
            .unwrap_or_default();
        println!(
            "  gap {pinch:.0e}: oracle {:.2e}, worst {worst}, failing {:?}",
            report.record(cyclic_area::verify::Identity::OracleEquivalence).max_rel_err,
            report.failing().iter().map(|i| i.name()).collect::<Vec<_>>()
        );
    }
    Ok(())
}
