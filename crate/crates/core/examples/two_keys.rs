//! The two-keys family: builds the canonical database for growing `n` and
//! compares its size with the closed form.
//!
//!     cargo run --release --example two_keys -- 6
//!     cargo run --release --example two_keys -- 4 faithful

use std::time::Instant;

use repairforge::prelude::*;

fn main() -> Result<()> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n")).unwrap_or(6);
    let mode = match std::env::args().nth(2).as_deref() {
        Some("faithful") => BuildMode::Faithful,
        _ => BuildMode::EagerSubsumption,
    };
    println!("{:>3} {:>6} {:>8} {:>8} {:>10} {:>9}", "n", "facts", "size", "formula", "peak", "seconds");
    for n in 1..=max_n {
        let spec = FamilySpec::DnTwoKeys { n };
        let (db, cs) = generate(&spec)?;
        let start = Instant::now();
        let (dd, stats) = algorithm1_with_stats(&db, &cs, &BuildOptions::with_mode(mode))?;
        println!(
            "{:>3} {:>6} {:>8} {:>8} {:>10} {:>9.3}",
            n,
            db.len(),
            dd.size(),
            expected_size(&spec, RepairKind::SRepair),
            stats.peak_set_size,
            start.elapsed().as_secs_f64()
        );
    }
    Ok(())
}
