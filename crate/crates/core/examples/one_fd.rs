//! A relation where `n` facts each come in two versions: the canonical
//! database grows as `n·2^n` even though there are only `n` repairs.
//!
//!     cargo run --release --example one_fd -- 8

use repairforge::prelude::*;

fn main() -> Result<()> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n")).unwrap_or(6);
    let limits = EnumerationLimits::default();
    println!("{:>3} {:>8} {:>8} {:>8}", "n", "repairs", "size", "n*2^n");
    for n in 1..=max_n {
        let spec = FamilySpec::OneFdExponential { n };
        let (db, cs) = generate(&spec)?;
        let class = classify_set(&cs, db.schema());
        let fast = canonical_one_fd(&db, &class, &BuildOptions::default())?;
        let full = algorithm1(&db, &cs, &BuildOptions::with_mode(BuildMode::EagerSubsumption))?;
        assert_eq!(fast, full);
        let repairs = s_repairs(&db, &cs, &limits)?;
        println!("{:>3} {:>8} {:>8} {:>8}", n, repairs.len(), fast.size(), expected_size(&spec, RepairKind::SRepair));
    }
    let (db, cs) = generate(&FamilySpec::OneFdExponential { n: 2 })?;
    println!("\nn = 2:\n{}", algorithm1(&db, &cs, &BuildOptions::default())?);
    Ok(())
}
