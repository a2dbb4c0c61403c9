//! Test-only oracles and instance generators. Nothing here calls into the
//! enumeration code it is used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repairforge::constraints::{Comparison, ConstraintAtom, DenialConstraint, Term};
use repairforge::model::{CompareOp, Database, Fact, Value, World};

/// Every subset of `universe`, as worlds.
pub fn all_subsets(universe: &[Fact]) -> Vec<World> {
    assert!(universe.len() <= 20, "subset sweep is exponential");
    (0..1usize << universe.len())
        .map(|mask| {
            universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, f)| f.clone())
                .collect()
        })
        .collect()
}

/// Keeps the ⊆-minimal members, sorted by (size, lexicographic).
pub fn minimal_sets(sets: Vec<World>) -> Vec<World> {
    let mut out: Vec<World> = sets
        .iter()
        .filter(|s| !sets.iter().any(|o| o.len() < s.len() && o.is_subset(s)))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Minimal hitting sets by sweeping every subset of the facts involved.
pub fn naive_transversals(h: &[World]) -> Vec<World> {
    let universe: Vec<Fact> = h.iter().flatten().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let hitting = all_subsets(&universe)
        .into_iter()
        .filter(|s| h.iter().all(|e| e.iter().any(|f| s.contains(f))))
        .collect();
    minimal_sets(hitting)
}

/// Minimal models of a family of disjunction fact sets, by subset sweep.
pub fn naive_minimal_models(disjunctions: &[World]) -> Vec<World> {
    naive_transversals(disjunctions)
}

fn numeric(v: &Value) -> Option<(i128, i128)> {
    match *v {
        Value::Int(i) => Some((i as i128, 1)),
        Value::Rational { num, den } => Some((num as i128, den as i128)),
        Value::Symbol(_) => None,
    }
}

/// Comparison semantics written out independently: numbers by value,
/// symbols by equality only.
fn naive_compare(a: &Value, b: &Value, op: CompareOp) -> bool {
    match (numeric(a), numeric(b)) {
        (Some((an, ad)), Some((bn, bd))) => {
            let (l, r) = (an * bd, bn * ad);
            match op {
                CompareOp::Eq => l == r,
                CompareOp::Ne => l != r,
                CompareOp::Lt => l < r,
                CompareOp::Le => l <= r,
                CompareOp::Gt => l > r,
                CompareOp::Ge => l >= r,
            }
        }
        _ => match op {
            CompareOp::Eq => a == b,
            CompareOp::Ne => a != b,
            _ => panic!("oracle instances never order symbols"),
        },
    }
}

/// Every full assignment of atoms to facts, tried without pruning.
pub fn naive_violations(c: &DenialConstraint, facts: &World) -> BTreeSet<World> {
    let facts: Vec<&Fact> = facts.iter().collect();
    let k = c.atoms().len();
    let mut out = BTreeSet::new();
    let total = facts.len().pow(k as u32);
    for code in 0..total {
        let mut pick = Vec::with_capacity(k);
        let mut rest = code;
        for _ in 0..k {
            pick.push(facts[rest % facts.len()]);
            rest /= facts.len();
        }
        let mut binding: BTreeMap<&str, &Value> = BTreeMap::new();
        let mut ok = true;
        for (atom, fact) in c.atoms().iter().zip(&pick) {
            if atom.relation != fact.relation() || atom.terms.len() != fact.arity() {
                ok = false;
                break;
            }
            for (t, v) in atom.terms.iter().zip(fact.args()) {
                match t {
                    Term::Const(k) => ok &= k == v,
                    Term::Var(x) => {
                        if let Some(b) = binding.get(x.as_str()) {
                            ok &= *b == v;
                        } else {
                            binding.insert(x, v);
                        }
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        let get = |t: &Term| match t {
            Term::Const(k) => k.clone(),
            Term::Var(x) => binding[x.as_str()].clone(),
        };
        if c
            .comparisons()
            .iter()
            .all(|cmp| naive_compare(&get(&cmp.left), &get(&cmp.right), cmp.op))
        {
            out.insert(pick.into_iter().cloned().collect());
        }
    }
    out
}

pub fn naive_consistent(constraints: &[DenialConstraint], facts: &World) -> bool {
    facts.is_empty() || constraints.iter().all(|c| naive_violations(c, facts).is_empty())
}

/// S-repairs (`cardinality = false`) or C-repairs by subset sweep and the
/// naive evaluator.
pub fn naive_repairs(db: &Database, constraints: &[DenialConstraint], cardinality: bool) -> Vec<World> {
    let facts: Vec<Fact> = db.iter().cloned().collect();
    let consistent: Vec<World> = all_subsets(&facts)
        .into_iter()
        .filter(|s| naive_consistent(constraints, s))
        .collect();
    let mut out: Vec<World> = if cardinality {
        let best = consistent.iter().map(World::len).max().unwrap_or(0);
        consistent.into_iter().filter(|s| s.len() == best).collect()
    } else {
        consistent
            .iter()
            .filter(|s| !consistent.iter().any(|o| o.len() > s.len() && s.is_subset(o)))
            .cloned()
            .collect()
    };
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relations used by random instances: `p/2`, `q/2`, `s/1`, all over
/// the integers 0..=2 plus 1/2.
pub const RELATIONS: [(&str, usize); 3] = [("p", 2), ("q", 2), ("s", 1)];

fn random_value(rng: &mut ChaCha8Rng) -> Value {
    match rng.gen_range(0..7) {
        0 => Value::rational(1, 2).unwrap(),
        k => Value::Int((k % 3) as i64),
    }
}

pub fn random_database(rng: &mut ChaCha8Rng, max_facts: usize) -> Database {
    let mut db = Database::new();
    for (r, a) in RELATIONS {
        db.declare(r, a).unwrap();
    }
    let target = rng.gen_range(0..=max_facts);
    let mut attempts = 0;
    while db.len() < target && attempts < 200 {
        attempts += 1;
        let (r, a) = RELATIONS[rng.gen_range(0..RELATIONS.len())];
        let args = (0..a).map(|_| random_value(rng)).collect();
        db.insert(Fact::new(r, args)).unwrap();
    }
    db
}

const OPS: [CompareOp; 6] = [
    CompareOp::Eq,
    CompareOp::Ne,
    CompareOp::Lt,
    CompareOp::Le,
    CompareOp::Gt,
    CompareOp::Ge,
];

/// A safe denial constraint with 1..=3 atoms and 0..=2 comparisons.
pub fn random_constraint(rng: &mut ChaCha8Rng, id: usize) -> DenialConstraint {
    let vars = ["X", "Y", "Z", "W"];
    let n_atoms = rng.gen_range(1..=3);
    let mut atoms = Vec::new();
    let mut used: Vec<&str> = Vec::new();
    for _ in 0..n_atoms {
        let (r, a) = RELATIONS[rng.gen_range(0..RELATIONS.len())];
        let terms = (0..a)
            .map(|_| {
                if rng.gen_bool(0.15) {
                    Term::Const(random_value(rng))
                } else {
                    let v = *vars.choose(rng).unwrap();
                    if !used.contains(&v) {
                        used.push(v);
                    }
                    Term::var(v)
                }
            })
            .collect();
        atoms.push(ConstraintAtom::new(r, terms));
    }
    let mut comparisons = Vec::new();
    if !used.is_empty() {
        for _ in 0..rng.gen_range(0..=2) {
            let left = Term::var(*used.choose(rng).unwrap());
            let right = if rng.gen_bool(0.3) {
                Term::Const(random_value(rng))
            } else {
                Term::var(*used.choose(rng).unwrap())
            };
            comparisons.push(Comparison::new(left, *OPS.choose(rng).unwrap(), right));
        }
    }
    DenialConstraint::new(format!("r{id}"), atoms, comparisons).unwrap()
}

/// A seeded corpus of (database, constraints) pairs.
pub fn corpus(seed: u64, count: usize, max_facts: usize) -> Vec<(Database, Vec<DenialConstraint>)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let db = random_database(&mut rng, max_facts);
            let k = rng.gen_range(1..=3);
            let cs = (0..k).map(|i| random_constraint(&mut rng, i)).collect();
            (db, cs)
        })
        .collect()
}

/// Random antichain of at most `max_sets` non-empty sets over `p(0..facts)`.
pub fn random_antichain(rng: &mut ChaCha8Rng, max_sets: usize, facts: usize) -> Vec<World> {
    let universe: Vec<Fact> = (0..facts).map(|i| Fact::new("p", vec![Value::Int(i as i64)])).collect();
    let mut sets = Vec::new();
    for _ in 0..rng.gen_range(1..=max_sets) {
        let s: World = universe.iter().filter(|_| rng.gen_bool(0.35)).cloned().collect();
        if !s.is_empty() {
            sets.push(s);
        }
    }
    if sets.is_empty() {
        sets.push([universe[0].clone()].into());
    }
    minimal_sets(sets)
}
