//! Cardinality-based repairs of the two-keys family and the canonical
//! database they induce, next to the explicit closed form.
//!
//!     cargo run --example cardinality -- 4

use repairforge::families::closed_form_dn_repairs;
use repairforge::prelude::*;

fn main() -> Result<()> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n")).unwrap_or(4);
    let limits = EnumerationLimits::default();
    println!("{:>3} {:>9} {:>9} {:>10} {:>12} {:>8}", "n", "s-repairs", "c-repairs", "canonical", "closed form", "formula");
    for n in 1..=max_n {
        let spec = FamilySpec::DnTwoKeys { n };
        let (db, cs) = generate(&spec)?;
        let s = s_repairs(&db, &cs, &limits)?;
        let c = c_repairs(&db, &cs, &limits)?;
        assert_eq!(c, closed_form_dn_repairs(n, RepairKind::CRepair));
        let dd = canonical_from_worlds(c.worlds())?;
        let closed = closed_form_dn(n, RepairKind::CRepair);
        println!(
            "{:>3} {:>9} {:>9} {:>10} {:>12} {:>8}",
            n,
            s.len(),
            c.len(),
            dd.size(),
            closed.size(),
            expected_size(&spec, RepairKind::CRepair)
        );
    }
    // with a single block, t12 v t13 is subsumed by t13 and the closed form
    // is not reduced
    let (db, cs) = generate(&FamilySpec::DnTwoKeys { n: 1 })?;
    let c = c_repairs(&db, &cs, &limits)?;
    println!("\nn = 1 canonical:\n{}closed form:\n{}", canonical_from_worlds(c.worlds())?, closed_form_dn(1, RepairKind::CRepair));
    Ok(())
}
