//! Cross-checks the fixpoint construction against exhaustive subset
//! enumeration on random instances.
//!
//!     cargo run --release --example oracle_check -- 500

use repairforge::constraints::{Comparison, ConstraintAtom, Term};
use repairforge::model::CompareOp;
use repairforge::prelude::*;

/// Small deterministic generator so the example needs no extra crates.
struct Lcg(u64);

impl Lcg {
    fn below(&mut self, n: u64) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) % n
    }
}

fn instance(rng: &mut Lcg) -> Result<(Database, Vec<DenialConstraint>)> {
    let mut db = Database::new();
    for _ in 0..rng.below(11) + 2 {
        let args = vec![Value::Int(rng.below(3) as i64), Value::Int(rng.below(3) as i64)];
        db.insert(Fact::new(if rng.below(2) == 0 { "p" } else { "q" }, args))?;
    }
    let ops = [CompareOp::Ne, CompareOp::Lt, CompareOp::Eq];
    let mut cs = Vec::new();
    for i in 0..rng.below(3) + 1 {
        let rel = |r: &mut Lcg| if r.below(2) == 0 { "p" } else { "q" };
        let atoms = vec![
            ConstraintAtom::new(rel(rng), vec![Term::var("X"), Term::var("Y")]),
            ConstraintAtom::new(rel(rng), vec![Term::var("X"), Term::var("Z")]),
        ];
        let op = ops[rng.below(3) as usize];
        cs.push(DenialConstraint::new(
            format!("d{i}"),
            atoms,
            vec![Comparison::new(Term::var("Y"), op, Term::var("Z"))],
        )?);
    }
    Ok((db, cs))
}

fn main() -> Result<()> {
    let count: usize = std::env::args().nth(1).map(|s| s.parse().expect("count")).unwrap_or(200);
    let mut rng = Lcg(7);
    let limits = EnumerationLimits::default();
    let mut disjunctions = 0;
    for k in 0..count {
        let (db, cs) = instance(&mut rng)?;
        let dd = algorithm1(&db, &cs, &BuildOptions::default())?;
        let oracle = brute_force_repairs(&db, &cs, RepairKind::SRepair)?;
        let models = minimal_models(&dd, &limits)?;
        if RepairSet::new(RepairKind::SRepair, models) != oracle || dd != canonical_from_worlds(oracle.worlds())? {
            println!("mismatch on instance {k}:\n{}{}", db.to_facts_text(), dd);
            std::process::exit(2);
        }
        disjunctions += dd.len();
    }
    println!("{count} instances agree with the oracle ({disjunctions} disjunctions in total)");
    Ok(())
}
