//! A single key splits the relation into cliques; the canonical database has
//! one disjunction per clique and its size equals the number of facts.
//!
//!     cargo run --example one_key -- 3,1,2

use repairforge::prelude::*;

fn main() -> Result<()> {
    let sizes: Vec<usize> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,1,2".into())
        .split(',')
        .map(|s| s.trim().parse().expect("clique size"))
        .collect();
    let spec = FamilySpec::OneKeyCliques { sizes };
    let (db, cs) = generate(&spec)?;
    let class = classify_set(&cs, db.schema());
    println!("{} facts, constraint class: {class}", db.len());

    let dd = canonical_one_key(&db, &class)?;
    assert_eq!(dd, algorithm1(&db, &cs, &BuildOptions::default())?);
    println!("{dd}size {} = |r| = {}", dd.size(), expected_size(&spec, RepairKind::SRepair));

    let limits = EnumerationLimits::default();
    let s = s_repairs(&db, &cs, &limits)?;
    let c = c_repairs(&db, &cs, &limits)?;
    println!("{} repairs; cardinality repairs are the same: {}", s.len(), s.worlds() == c.worlds());
    Ok(())
}
