//! General denial constraints with joins and comparisons, the conflict
//! hypergraph they induce, and the resulting repairs.
//!
//!     cargo run --example custom_constraints

use repairforge::prelude::*;

const FACTS: &str = "
% orders(id, customer, amount)   credit(customer, limit)
orders(1, ann, 40).
orders(2, ann, 70).
orders(3, bob, 20).
credit(ann, 50).
credit(bob, 30).
credit(bob, 10).
";

const CONSTRAINTS: &str = "
% no order above the customer's credit limit
:- orders(I, C, A), credit(C, L), A > L.
% a customer has one credit limit
KEY credit: 1.
% ann may not hold two orders of 40 or more
:- orders(I, ann, A), orders(J, ann, B), I < J, A >= 40, B >= 40.
";

fn main() -> Result<()> {
    let db = parse_facts(FACTS)?;
    let constraints = parse_constraints_with_schema(CONSTRAINTS, db.schema())?;
    for c in &constraints {
        let v = find_violations(c, &db)?;
        println!("{} {c}\n   {} violation(s)", c.id(), v.len());
    }

    let graph = ConflictHypergraph::build(&db, &constraints)?;
    println!("\nconflict hypergraph:");
    for e in graph.edges() {
        let names: Vec<String> = e.iter().map(Fact::to_string).collect();
        println!("  {{{}}}", names.join(", "));
    }
    println!("self-conflicting: {:?}", graph.self_conflicting().iter().map(Fact::to_string).collect::<Vec<_>>());

    let dd = algorithm1(&db, &constraints, &BuildOptions::default())?;
    println!("\ncanonical database ({} disjunctions, size {}):\n{dd}", dd.len(), dd.size());

    let limits = EnumerationLimits::default();
    println!("S-repairs:\n{}", s_repairs(&db, &constraints, &limits)?.to_text());
    println!("C-repairs:\n{}", c_repairs(&db, &constraints, &limits)?.to_text());
    Ok(())
}
