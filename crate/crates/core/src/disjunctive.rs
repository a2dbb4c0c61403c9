//! Disjunctive databases: subsumption, reduction, minimal models and the
//! minimal hypergraph transversals behind them.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{BitSet, Universe};
use crate::conflict::canonical_order;
use crate::error::{Error, Result};
use crate::model::{Fact, World};
use crate::syntax::{Cursor, Tok};

/// A non-empty disjunction of distinct facts, identified by its fact set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Disjunction(World);

impl Disjunction {
    pub fn new(facts: impl IntoIterator<Item = Fact>) -> Result<Self> {
        let facts: World = facts.into_iter().collect();
        if facts.is_empty() {
            return Err(Error::Precondition("a disjunction needs at least one fact".into()));
        }
        Ok(Disjunction(facts))
    }

    pub fn facts(&self) -> &World {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, f: &Fact) -> bool {
        self.0.contains(f)
    }

    /// `self` subsumes `other` when its facts are a proper subset of
    /// `other`'s.
    pub fn subsumes(&self, other: &Disjunction) -> bool {
        self.0.len() < other.0.len() && self.0.is_subset(&other.0)
    }
}

impl Ord for Disjunction {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_order(&self.0, &other.0)
    }
}

impl PartialOrd for Disjunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Disjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fact) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" v ")?;
            }
            write!(f, "{fact}")?;
        }
        Ok(())
    }
}

pub fn subsumes(d1: &Disjunction, d2: &Disjunction) -> bool {
    d1.subsumes(d2)
}

/// A finite set of disjunctions, iterated in canonical order (by size,
/// then lexicographically).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DisjunctiveDatabase {
    disjunctions: BTreeSet<Disjunction>,
}

#[derive(Serialize, Deserialize)]
struct DisjunctiveJson {
    disjunctions: Vec<Vec<String>>,
}

impl DisjunctiveDatabase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, d: Disjunction) -> bool {
        self.disjunctions.insert(d)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Disjunction> {
        self.disjunctions.iter()
    }

    pub fn len(&self) -> usize {
        self.disjunctions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disjunctions.is_empty()
    }

    pub fn contains(&self, d: &Disjunction) -> bool {
        self.disjunctions.contains(d)
    }

    /// Every fact mentioned by some disjunction.
    pub fn facts(&self) -> World {
        self.disjunctions.iter().flat_map(|d| d.0.iter().cloned()).collect()
    }

    /// Total number of fact occurrences.
    pub fn size(&self) -> usize {
        self.disjunctions.iter().map(Disjunction::len).sum()
    }

    pub fn is_antichain(&self) -> bool {
        self.disjunctions
            .iter()
            .all(|d| !self.disjunctions.iter().any(|o| o.subsumes(d)))
    }

    /// The fact sets of the disjunctions, in canonical order.
    pub fn fact_sets(&self) -> Vec<World> {
        self.disjunctions.iter().map(|d| d.0.clone()).collect()
    }

    /// Text format: one disjunction per line, facts joined by ` v `.
    pub fn to_text(&self) -> String {
        self.disjunctions.iter().map(|d| format!("{d}.\n")).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dump = DisjunctiveJson {
            disjunctions: self
                .disjunctions
                .iter()
                .map(|d| d.0.iter().map(Fact::to_string).collect())
                .collect(),
        };
        serde_json::to_value(dump).expect("plain data")
    }

    /// Parses the text format.
    pub fn parse_text(input: &str) -> Result<Self> {
        let mut cur = Cursor::new(input)?;
        let mut dd = DisjunctiveDatabase::new();
        while !cur.at_end() {
            let mut facts = vec![cur.fact()?];
            loop {
                match cur.next() {
                    Some(Tok::Dot) => break,
                    Some(Tok::Ident(v)) if v == "v" => facts.push(cur.fact()?),
                    _ => return Err(cur.error("expected ` v ` or `.` after a fact")),
                }
            }
            dd.insert(Disjunction::new(facts)?);
        }
        Ok(dd)
    }

    /// Parses the JSON format `{"disjunctions": [[fact, ...], ...]}`.
    pub fn parse_json(input: &str) -> Result<Self> {
        let raw: DisjunctiveJson = serde_json::from_str(input).map_err(|e| Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let mut dd = DisjunctiveDatabase::new();
        for d in raw.disjunctions {
            let facts = d.iter().map(|s| Fact::parse(s)).collect::<Result<Vec<_>>>()?;
            dd.insert(Disjunction::new(facts)?);
        }
        Ok(dd)
    }
}

impl FromIterator<Disjunction> for DisjunctiveDatabase {
    fn from_iter<I: IntoIterator<Item = Disjunction>>(iter: I) -> Self {
        DisjunctiveDatabase {
            disjunctions: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for DisjunctiveDatabase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn size(dd: &DisjunctiveDatabase) -> usize {
    dd.size()
}

/// Drops every subsumed disjunction.
pub fn reduction(dd: &DisjunctiveDatabase) -> DisjunctiveDatabase {
    // canonical order puts shorter disjunctions first, so a subsuming
    // disjunction is always kept before anything it subsumes is examined
    let mut kept: Vec<&Disjunction> = Vec::new();
    for d in dd.iter() {
        if !kept.iter().any(|k| k.subsumes(d)) {
            kept.push(d);
        }
    }
    kept.into_iter().cloned().collect()
}

/// `m` satisfies `dd` when it intersects every disjunction.
pub fn is_model(m: &World, dd: &DisjunctiveDatabase) -> bool {
    dd.iter().all(|d| d.0.iter().any(|f| m.contains(f)))
}

/// Guards for the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_facts: usize,
    pub max_results: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_facts: 24,
            max_results: 1_000_000,
        }
    }
}

/// The minimal models of `dd`, i.e. the minimal transversals of its fact
/// sets, sorted by size then lexicographically.
pub fn minimal_models(dd: &DisjunctiveDatabase, limits: &EnumerationLimits) -> Result<Vec<World>> {
    let facts = dd.facts();
    if facts.len() > limits.max_facts {
        return Err(Error::LimitExceeded {
            limit: "max_facts",
            limit_value: limits.max_facts,
            reached: facts.len(),
        });
    }
    transversals_limited(&dd.fact_sets(), limits.max_results)
}

/// The ⊆-minimal sets meeting every member of `hypergraph`. The empty
/// hypergraph has the single transversal ∅; an empty member has none and is
/// rejected.
pub fn minimal_transversals(hypergraph: &[World]) -> Result<Vec<World>> {
    transversals_limited(hypergraph, usize::MAX)
}

pub(crate) fn transversals_limited(hypergraph: &[World], max_results: usize) -> Result<Vec<World>> {
    if hypergraph.iter().any(World::is_empty) {
        return Err(Error::EmptyEdge);
    }
    let universe = Universe::new(hypergraph.iter().flatten());
    let edges: Vec<BitSet> = hypergraph.iter().map(|e| universe.encode(e)).collect();
    let found = enumerate_transversals(universe.len(), &edges, max_results)?;
    let mut out: Vec<World> = found.iter().map(|s| universe.decode(s)).collect();
    out.sort_by(canonical_order);
    Ok(out)
}

/// Minimal hitting set enumeration by branching on the vertices of an
/// uncovered edge with the fewest candidates, keeping every chosen vertex
/// critical (it alone covers some edge). A vertex is only offered to the
/// branches after its own, so each transversal is produced once.
pub(crate) fn enumerate_transversals(
    n: usize,
    edges: &[BitSet],
    max_results: usize,
) -> Result<Vec<BitSet>> {
    struct Search<'a> {
        edges: &'a [BitSet],
        out: Vec<BitSet>,
        max_results: usize,
    }

    impl Search<'_> {
        fn run(
            &mut self,
            chosen: &mut Vec<usize>,
            current: &mut BitSet,
            cand: &mut BitSet,
            uncovered: &[usize],
            crit: &mut Vec<Vec<usize>>,
        ) -> Result<()> {
            if uncovered.is_empty() {
                if self.out.len() >= self.max_results {
                    return Err(Error::LimitExceeded {
                        limit: "max_results",
                        limit_value: self.max_results,
                        reached: self.out.len() + 1,
                    });
                }
                self.out.push(current.clone());
                return Ok(());
            }
            let pick = uncovered
                .iter()
                .copied()
                .min_by_key(|&e| self.edges[e].intersection(cand).len())
                .unwrap();
            let branch = self.edges[pick].intersection(cand);
            if branch.is_empty() {
                return Ok(());
            }
            *cand = cand.difference(&branch);
            for v in branch.iter() {
                let saved: Vec<(usize, Vec<usize>)> =
                    chosen.iter().map(|&u| (u, crit[u].clone())).collect();
                let mut viable = true;
                for &u in chosen.iter() {
                    crit[u].retain(|&e| !self.edges[e].contains(v));
                    if crit[u].is_empty() {
                        viable = false;
                    }
                }
                if viable {
                    let (hit, rest): (Vec<usize>, Vec<usize>) =
                        uncovered.iter().partition(|&&e| self.edges[e].contains(v));
                    crit[v] = hit;
                    chosen.push(v);
                    current.insert(v);
                    let r = self.run(chosen, current, cand, &rest, crit);
                    current.remove(v);
                    chosen.pop();
                    crit[v].clear();
                    r?;
                }
                for (u, c) in saved {
                    crit[u] = c;
                }
                cand.insert(v);
            }
            Ok(())
        }
    }

    let mut search = Search {
        edges,
        out: Vec::new(),
        max_results,
    };
    let mut cand = BitSet::new(n);
    for i in 0..n {
        cand.insert(i);
    }
    let uncovered: Vec<usize> = (0..edges.len()).collect();
    search.run(
        &mut Vec::new(),
        &mut BitSet::new(n),
        &mut cand,
        &uncovered,
        &mut vec![Vec::new(); n],
    )?;
    Ok(search.out)
}

/// Size of a smallest transversal, by branch and bound.
pub(crate) fn minimum_transversal_size(n: usize, edges: &[BitSet]) -> usize {
    fn go(edges: &[BitSet], current: &mut BitSet, depth: usize, best: &mut usize) {
        if depth >= *best {
            return;
        }
        let Some(e) = edges
            .iter()
            .filter(|e| !e.intersects(current))
            .min_by_key(|e| e.len())
        else {
            *best = depth;
            return;
        };
        for v in e.clone().iter() {
            current.insert(v);
            go(edges, current, depth + 1, best);
            current.remove(v);
        }
    }
    let mut best = n + 1;
    go(edges, &mut BitSet::new(n), 0, &mut best);
    best.min(n)
}
