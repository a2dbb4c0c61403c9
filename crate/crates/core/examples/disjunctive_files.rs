//! Working with disjunctive databases directly: parsing, reduction, minimal
//! models, and the text and JSON formats.
//!
//!     cargo run --example disjunctive_files

use repairforge::prelude::*;

fn main() -> Result<()> {
    let dd = DisjunctiveDatabase::parse_text(
        "p(1) v p(2).\n\
         p(1) v p(2) v p(3).\n\
         p(3) v p(4).\n\
         p(4).\n",
    )?;
    println!("input ({} disjunctions, size {}):\n{dd}", dd.len(), dd.size());

    let reduced = reduction(&dd);
    println!("reduced (size {}):\n{reduced}", reduced.size());

    let limits = EnumerationLimits::default();
    for m in minimal_models(&reduced, &limits)? {
        let names: Vec<String> = m.iter().map(Fact::to_string).collect();
        println!("minimal model {{{}}}", names.join(", "));
    }

    let json = serde_json::to_string(&reduced.to_json()).expect("json");
    println!("\n{json}");
    assert_eq!(DisjunctiveDatabase::parse_json(&json)?, reduced);

    // the reduced database is the canonical one for its own minimal models
    let worlds = minimal_models(&reduced, &limits)?;
    assert_eq!(canonical_from_worlds(&worlds)?, reduced);
    Ok(())
}
