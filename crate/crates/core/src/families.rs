//! Instance families with known canonical databases: the two-keys family
//! `D_n`, the exponential one-FD relation, and single-key cliques.
//!
//! Constants follow the subscripted names of the tables they come from:
//! `a`, `a_1`, `b_1`, `b_1p` (for b₁′), `c_1`, `c_2`.

use std::fmt;

use crate::constraints::{functional_dependency, key_constraint, DenialConstraint};
use crate::disjunctive::{Disjunction, DisjunctiveDatabase};
use crate::error::{Error, Result};
use crate::model::{Database, Fact, Value, World};
use crate::repairs::{RepairKind, RepairSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `3n` facts over `r(A,B)` with keys on `A` and on `B`.
    DnTwoKeys { n: usize },
    /// `2n` facts over `r(A,B,C)` with the dependency `A -> B`.
    OneFdExponential { n: usize },
    /// One clique per listed size over `r(A,B)` with a key on `A`.
    OneKeyCliques { sizes: Vec<usize> },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::DnTwoKeys { n } => write!(f, "dn{n}"),
            FamilySpec::OneFdExponential { n } => write!(f, "fd{n}"),
            FamilySpec::OneKeyCliques { sizes } => {
                let s: Vec<String> = sizes.iter().map(usize::to_string).collect();
                write!(f, "key{}", s.join("_"))
            }
        }
    }
}

fn sym(s: String) -> Value {
    Value::Symbol(s)
}

/// `t_{i,j}` of `D_n`, 1-based: `j = 1` is `r(a, b_i)`, `j = 2` is
/// `r(a_i, b_i)`, `j = 3` is `r(a_i, b_ip)`.
pub fn dn_fact(i: usize, j: usize) -> Fact {
    let (a, b) = match j {
        1 => ("a".to_string(), format!("b_{i}")),
        2 => (format!("a_{i}"), format!("b_{i}")),
        3 => (format!("a_{i}"), format!("b_{i}p")),
        _ => panic!("D_n facts are indexed 1..=3, got {j}"),
    };
    Fact::new("r", vec![sym(a), sym(b)])
}

/// `t_i'` (`second = false`) or `t_i''` of the one-FD relation.
pub fn fd_fact(i: usize, second: bool) -> Fact {
    let c = if second { "c_2" } else { "c_1" };
    Fact::new(
        "r",
        vec![sym("a".into()), sym(format!("b_{i}")), sym(c.into())],
    )
}

pub fn generate(spec: &FamilySpec) -> Result<(Database, Vec<DenialConstraint>)> {
    match spec {
        FamilySpec::DnTwoKeys { n } => {
            let n = positive(*n)?;
            let db = Database::from_facts((1..=n).flat_map(|i| (1..=3).map(move |j| dn_fact(i, j))))?;
            let mut cs = key_constraint("key_a", "r", 2, &[0])?;
            cs.extend(key_constraint("key_b", "r", 2, &[1])?);
            Ok((db, cs))
        }
        FamilySpec::OneFdExponential { n } => {
            let n = positive(*n)?;
            let db = Database::from_facts(
                (1..=n).flat_map(|i| [fd_fact(i, false), fd_fact(i, true)]),
            )?;
            let cs = functional_dependency("fd_ab", "r", 3, &[0], &[1])?;
            Ok((db, cs))
        }
        FamilySpec::OneKeyCliques { sizes } => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(Error::Precondition("clique sizes must be positive".into()));
            }
            let mut db = Database::new();
            db.declare("r", 2)?;
            for (i, &s) in sizes.iter().enumerate() {
                for j in 1..=s {
                    db.insert(Fact::new(
                        "r",
                        vec![sym(format!("k_{}", i + 1)), sym(format!("v_{j}"))],
                    ))?;
                }
            }
            Ok((db, key_constraint("key_a", "r", 2, &[0])?))
        }
    }
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::Precondition("family parameter n must be at least 1".into()))
    } else {
        Ok(n)
    }
}

/// Closed-form size of the canonical database for the family under the
/// given repair semantics.
pub fn expected_size(spec: &FamilySpec, kind: RepairKind) -> u64 {
    match (spec, kind) {
        (FamilySpec::DnTwoKeys { n }, RepairKind::SRepair) => {
            let n = *n as u64;
            2 * n + (n + 1) * n * (1 << (n - 1))
        }
        (FamilySpec::DnTwoKeys { n }, RepairKind::CRepair) => {
            let n = *n as u64;
            2 * n + n * (1 << n)
        }
        // equal cluster sizes: both semantics coincide
        (FamilySpec::OneFdExponential { n }, _) => (*n as u64) * (1 << *n),
        // one key: both semantics coincide
        (FamilySpec::OneKeyCliques { sizes }, _) => sizes.iter().sum::<usize>() as u64,
    }
}

fn disjunction(facts: impl IntoIterator<Item = Fact>) -> Disjunction {
    Disjunction::new(facts).expect("closed forms list non-empty disjunctions")
}

/// All ways of picking one fact per index `z` in `zs` from `options(z)`.
fn choices(zs: &[usize], options: impl Fn(usize) -> [Fact; 2]) -> Vec<Vec<Fact>> {
    let mut acc: Vec<Vec<Fact>> = vec![Vec::new()];
    for &z in zs {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                options(z).into_iter().map(move |f| {
                    let mut p = prefix.clone();
                    p.push(f);
                    p
                })
            })
            .collect();
    }
    acc
}

/// The canonical database of `D_n` under two keys, written out explicitly.
///
/// S-repairs: `t_i2 ∨ t_i3` for every `i`, and `t_i1 ∨ t_i2 ∨ ⋁_{z≠i} t_z`
/// with `t_z ∈ {t_z1, t_z3}`. C-repairs: `t_i2 ∨ t_i3` and every
/// `t_1 ∨ … ∨ t_n` with `t_i ∈ {t_i1, t_i3}`.
pub fn closed_form_dn(n: usize, kind: RepairKind) -> DisjunctiveDatabase {
    let mut out: DisjunctiveDatabase = (1..=n)
        .map(|i| disjunction([dn_fact(i, 2), dn_fact(i, 3)]))
        .collect();
    let pick = |z: usize| [dn_fact(z, 1), dn_fact(z, 3)];
    match kind {
        RepairKind::SRepair => {
            for i in 1..=n {
                let others: Vec<usize> = (1..=n).filter(|&z| z != i).collect();
                for tail in choices(&others, pick) {
                    out.insert(disjunction(
                        [dn_fact(i, 1), dn_fact(i, 2)].into_iter().chain(tail),
                    ));
                }
            }
        }
        RepairKind::CRepair => {
            let all: Vec<usize> = (1..=n).collect();
            for picked in choices(&all, pick) {
                out.insert(disjunction(picked));
            }
        }
    }
    out
}

/// The repairs of `D_n` under two keys, written out explicitly: the world
/// `{t_12, …, t_n2}` (S-repairs only) and, for each `i`, every
/// `{t_i1, t_i3} ∪ {t_j | j ≠ i}` with `t_j ∈ {t_j2, t_j3}`.
pub fn closed_form_dn_repairs(n: usize, kind: RepairKind) -> RepairSet {
    let mut worlds: Vec<World> = Vec::new();
    if kind == RepairKind::SRepair {
        worlds.push((1..=n).map(|i| dn_fact(i, 2)).collect());
    }
    for i in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&j| j != i).collect();
        for tail in choices(&others, |j| [dn_fact(j, 2), dn_fact(j, 3)]) {
            worlds.push([dn_fact(i, 1), dn_fact(i, 3)].into_iter().chain(tail).collect());
        }
    }
    RepairSet::new(kind, worlds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dn_shape() {
        let (db, cs) = generate(&FamilySpec::DnTwoKeys { n: 4 }).unwrap();
        assert_eq!(db.len(), 12);
        assert_eq!(cs.len(), 2);
        assert_eq!(dn_fact(1, 3).to_string(), "r(a_1,b_1p)");
    }

    #[test]
    fn one_fd_shape() {
        let (db, cs) = generate(&FamilySpec::OneFdExponential { n: 1 }).unwrap();
        let facts: Vec<String> = db.iter().map(Fact::to_string).collect();
        assert_eq!(facts, ["r(a,b_1,c_1)", "r(a,b_1,c_2)"]);
        assert_eq!(cs.len(), 1);
    }

    #[test]
    fn one_key_shape() {
        let (db, _) = generate(&FamilySpec::OneKeyCliques { sizes: vec![1, 1, 1] }).unwrap();
        assert_eq!(db.len(), 3);
        assert!(generate(&FamilySpec::OneKeyCliques { sizes: vec![] }).is_err());
        assert!(generate(&FamilySpec::DnTwoKeys { n: 0 }).is_err());
    }

    #[test]
    fn expected_sizes() {
        assert_eq!(expected_size(&FamilySpec::DnTwoKeys { n: 3 }, RepairKind::SRepair), 54);
        assert_eq!(expected_size(&FamilySpec::DnTwoKeys { n: 3 }, RepairKind::CRepair), 30);
        assert_eq!(
            expected_size(&FamilySpec::OneKeyCliques { sizes: vec![2, 1] }, RepairKind::SRepair),
            3
        );
        assert_eq!(
            expected_size(&FamilySpec::OneFdExponential { n: 2 }, RepairKind::CRepair),
            8
        );
    }

    #[test]
    fn closed_forms_at_small_n() {
        let s2 = closed_form_dn(2, RepairKind::SRepair);
        let text = s2.to_text();
        assert_eq!(
            text,
            "r(a_1,b_1) v r(a_1,b_1p).\n\
             r(a_2,b_2) v r(a_2,b_2p).\n\
             r(a,b_1) v r(a,b_2) v r(a_1,b_1).\n\
             r(a,b_1) v r(a,b_2) v r(a_2,b_2).\n\
             r(a,b_1) v r(a_1,b_1) v r(a_2,b_2p).\n\
             r(a,b_2) v r(a_1,b_1p) v r(a_2,b_2).\n"
        );
        // at n = 1 the listed disjunctions are not an antichain: t13 alone
        // subsumes t12 v t13
        let c1 = closed_form_dn(1, RepairKind::CRepair);
        let expected: DisjunctiveDatabase = [
            disjunction([dn_fact(1, 2), dn_fact(1, 3)]),
            disjunction([dn_fact(1, 1)]),
            disjunction([dn_fact(1, 3)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(c1, expected);
    }

    #[test]
    fn closed_form_sizes_match_formulas() {
        for n in 1..=8 {
            for kind in [RepairKind::SRepair, RepairKind::CRepair] {
                assert_eq!(
                    closed_form_dn(n, kind).size() as u64,
                    expected_size(&FamilySpec::DnTwoKeys { n }, kind),
                    "n={n} {kind}"
                );
            }
        }
    }

    #[test]
    fn closed_form_repairs_at_two() {
        assert_eq!(closed_form_dn_repairs(2, RepairKind::SRepair).len(), 5);
        let c = closed_form_dn_repairs(2, RepairKind::CRepair);
        assert_eq!(c.len(), 4);
        assert!(c.worlds().iter().all(|w| w.len() == 3));
    }
}
