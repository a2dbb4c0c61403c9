//! S-repairs and cardinality-based repairs: enumeration, membership test,
//! and the exhaustive reference enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bitset::{BitSet, Universe};
use crate::conflict::ConflictHypergraph;
use crate::constraints::{find_violations, DenialConstraint};
use crate::disjunctive::{enumerate_transversals, minimum_transversal_size, EnumerationLimits};
use crate::error::{Error, Result};
use crate::model::{Database, Fact, World};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepairKind {
    /// ⊆-maximal consistent subsets.
    #[serde(rename = "s-repair")]
    SRepair,
    /// Maximum-cardinality consistent subsets.
    #[serde(rename = "c-repair")]
    CRepair,
}

impl fmt::Display for RepairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepairKind::SRepair => "s-repair",
            RepairKind::CRepair => "c-repair",
        })
    }
}

/// Orders worlds by size descending, then lexicographically.
pub fn repair_order(a: &World, b: &World) -> std::cmp::Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairSet {
    pub kind: RepairKind,
    worlds: Vec<World>,
}

impl RepairSet {
    /// Wraps worlds, sorting them into output order.
    pub fn new(kind: RepairKind, worlds: impl IntoIterator<Item = World>) -> Self {
        let mut worlds: Vec<World> = worlds.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        worlds.sort_by(repair_order);
        RepairSet { kind, worlds }
    }

    pub fn worlds(&self) -> &[World] {
        &self.worlds
    }

    pub fn into_worlds(self) -> Vec<World> {
        self.worlds
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn contains(&self, w: &World) -> bool {
        self.worlds.contains(w)
    }

    /// One world per line: `#k: f1, f2, ...`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for w in &self.worlds {
            out.push_str(&format!("#{}:", w.len()));
            for (i, f) in w.iter().enumerate() {
                out.push_str(if i == 0 { " " } else { ", " });
                out.push_str(&f.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "worlds": self
                .worlds
                .iter()
                .map(|w| w.iter().map(Fact::to_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn check_facts(db: &Database, limits: &EnumerationLimits) -> Result<()> {
    if db.len() > limits.max_facts {
        return Err(Error::LimitExceeded {
            limit: "max_facts",
            limit_value: limits.max_facts,
            reached: db.len(),
        });
    }
    Ok(())
}

/// S-repairs as complements of the minimal transversals of the conflict
/// hypergraph's edges.
pub fn s_repairs(
    db: &Database,
    constraints: &[DenialConstraint],
    limits: &EnumerationLimits,
) -> Result<RepairSet> {
    check_facts(db, limits)?;
    let graph = ConflictHypergraph::build(db, constraints)?;
    s_repairs_of_graph(&graph, limits)
}

pub fn s_repairs_of_graph(graph: &ConflictHypergraph, limits: &EnumerationLimits) -> Result<RepairSet> {
    let universe = Universe::new(graph.vertices());
    let edges: Vec<BitSet> = graph.edges().iter().map(|e| universe.encode(e)).collect();
    let full = universe.full();
    let worlds = enumerate_transversals(universe.len(), &edges, limits.max_results)?
        .into_iter()
        .map(|t| universe.decode(&full.difference(&t)));
    Ok(RepairSet::new(RepairKind::SRepair, worlds))
}

/// Maximum-cardinality consistent subsets, kept from the S-repairs.
pub fn c_repairs(
    db: &Database,
    constraints: &[DenialConstraint],
    limits: &EnumerationLimits,
) -> Result<RepairSet> {
    Ok(to_cardinality(s_repairs(db, constraints, limits)?))
}

fn to_cardinality(s: RepairSet) -> RepairSet {
    let best = s.worlds.iter().map(World::len).max().unwrap_or(0);
    RepairSet::new(
        RepairKind::CRepair,
        s.worlds.into_iter().filter(|w| w.len() == best),
    )
}

pub fn repairs(
    db: &Database,
    constraints: &[DenialConstraint],
    kind: RepairKind,
    limits: &EnumerationLimits,
) -> Result<RepairSet> {
    match kind {
        RepairKind::SRepair => s_repairs(db, constraints, limits),
        RepairKind::CRepair => c_repairs(db, constraints, limits),
    }
}

/// Decides whether `m` is a repair without enumerating the repairs:
/// consistency plus, for S-repairs, a violation for every single-fact
/// extension and, for C-repairs, `|m| = |db| - τ` with τ the size of a
/// smallest transversal of the conflict hypergraph.
pub fn is_repair(
    m: &World,
    db: &Database,
    constraints: &[DenialConstraint],
    kind: RepairKind,
) -> Result<bool> {
    if !m.iter().all(|f| db.contains(f)) {
        return Err(Error::Precondition("candidate is not a subset of the database".into()));
    }
    let graph = ConflictHypergraph::build(db, constraints)?;
    if !graph.is_consistent(m) {
        return Ok(false);
    }
    match kind {
        RepairKind::SRepair => Ok(db.iter().filter(|f| !m.contains(*f)).all(|f| {
            graph
                .edges_of(f)
                .any(|e| e.iter().all(|g| g == f || m.contains(g)))
        })),
        RepairKind::CRepair => {
            let universe = Universe::new(graph.vertices());
            let edges: Vec<BitSet> = graph.edges().iter().map(|e| universe.encode(e)).collect();
            let tau = minimum_transversal_size(universe.len(), &edges);
            Ok(m.len() == db.len() - tau)
        }
    }
}

/// Largest database accepted by [`brute_force_repairs`].
pub const BRUTE_FORCE_CAP: usize = 16;

/// Reference enumeration: tests every subset of `db` for consistency by
/// evaluating the constraints on it directly, then keeps the maximal (or
/// maximum-cardinality) ones.
pub fn brute_force_repairs(
    db: &Database,
    constraints: &[DenialConstraint],
    kind: RepairKind,
) -> Result<RepairSet> {
    if db.len() > BRUTE_FORCE_CAP {
        return Err(Error::LimitExceeded {
            limit: "brute_force_cap",
            limit_value: BRUTE_FORCE_CAP,
            reached: db.len(),
        });
    }
    let facts: Vec<&Fact> = db.iter().collect();
    let n = facts.len();
    let subset = |mask: usize| db.subset((0..n).filter(|i| mask >> i & 1 == 1).map(|i| facts[i]));
    let mut consistent = vec![false; 1 << n];
    for (mask, slot) in consistent.iter_mut().enumerate() {
        let sub = subset(mask);
        let mut ok = true;
        for c in constraints {
            if !find_violations(c, &sub)?.is_empty() {
                ok = false;
                break;
            }
        }
        *slot = ok;
    }
    let maximal = (0..1usize << n).filter(|&mask| {
        consistent[mask] && (0..n).all(|i| mask >> i & 1 == 1 || !consistent[mask | 1 << i])
    });
    let worlds: Vec<usize> = match kind {
        RepairKind::SRepair => maximal.collect(),
        RepairKind::CRepair => {
            let best = (0..1usize << n)
                .filter(|&m| consistent[m])
                .map(|m| m.count_ones())
                .max()
                .unwrap_or(0);
            (0..1usize << n)
                .filter(|&m| consistent[m] && m.count_ones() == best)
                .collect()
        }
    };
    Ok(RepairSet::new(
        kind,
        worlds.into_iter().map(|m| subset(m).facts().clone()),
    ))
}
