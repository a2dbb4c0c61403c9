//! Two salaries recorded for the same employee: the canonical database is a
//! single disjunction whose minimal models are the two repairs.
//!
//!     cargo run --example employee

use repairforge::prelude::*;

fn main() -> Result<()> {
    let db = parse_facts("employee(john, 50, cs).\nemployee(john, 100, cs).\n")?;
    let constraints = parse_constraints_with_schema("FD employee: 1 -> 2 3.", db.schema())?;
    for c in &constraints {
        println!("constraint {}: {c}  [{}]", c.id(), classify(c));
    }

    let dd = algorithm1(&db, &constraints, &BuildOptions::default())?;
    println!("\ncanonical database:\n{dd}");

    let repairs = s_repairs(&db, &constraints, &EnumerationLimits::default())?;
    println!("repairs:\n{}", repairs.to_text());

    let models = minimal_models(&dd, &EnumerationLimits::default())?;
    assert_eq!(models, repairs.worlds());
    println!("minimal models coincide with the repairs");
    Ok(())
}
