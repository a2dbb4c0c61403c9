//! Construction of the canonical disjunctive database: the fixpoint
//! construction over the conflict hypergraph, closed forms for a single key
//! or functional dependency, and the transversal route from a world set.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::bitset::{BitSet, Universe};
use crate::conflict::ConflictHypergraph;
use crate::constraints::{ConstraintClass, DenialConstraint};
use crate::disjunctive::{minimal_transversals, Disjunction, DisjunctiveDatabase};
use crate::error::{Error, Result};
use crate::model::{Database, Fact, Value, World};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BuildMode {
    /// Accumulate every generated disjunction and reduce once at the end.
    #[default]
    Faithful,
    /// Keep the working set an antichain: drop newcomers that are subsumed
    /// by (or equal to) a member and evict members a newcomer subsumes.
    EagerSubsumption,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub mode: BuildMode,
    pub max_disjunctions: usize,
    /// `None` means the number of facts of the input database.
    pub max_disjunction_width: Option<usize>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            mode: BuildMode::Faithful,
            max_disjunctions: 1_000_000,
            max_disjunction_width: None,
        }
    }
}

impl BuildOptions {
    pub fn with_mode(mode: BuildMode) -> Self {
        BuildOptions {
            mode,
            ..Self::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_disjunctions == 0 || self.max_disjunction_width == Some(0) {
            return Err(Error::Precondition("build limits must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BuildStats {
    pub mode: BuildMode,
    pub facts: usize,
    pub edges: usize,
    pub removed_self_conflicting: usize,
    pub seeded: usize,
    /// Fixpoint passes, including the final one that adds nothing.
    pub iterations: usize,
    /// Distinct disjunctions ever admitted to the working set.
    pub generated: usize,
    /// Disjunctions dropped as subsumed, during the run or by the final
    /// reduction.
    pub subsumed: usize,
    pub peak_set_size: usize,
    /// Working set size after seeding and after each pass.
    pub set_sizes: Vec<usize>,
    pub output_disjunctions: usize,
    pub output_size: usize,
}

impl BuildStats {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// Working set of disjunctions over an indexed fact universe.
struct WorkingSet {
    mode: BuildMode,
    sets: Vec<BitSet>,
    alive: Vec<bool>,
    index: HashSet<BitSet>,
    by_fact: Vec<Vec<usize>>,
    live: usize,
    max_disjunctions: usize,
    max_width: usize,
    generated: usize,
    subsumed: usize,
    peak: usize,
}

impl WorkingSet {
    fn new(facts: usize, opts: &BuildOptions, width: usize) -> Self {
        WorkingSet {
            mode: opts.mode,
            sets: Vec::new(),
            alive: Vec::new(),
            index: HashSet::new(),
            by_fact: vec![Vec::new(); facts],
            live: 0,
            max_disjunctions: opts.max_disjunctions,
            max_width: width,
            generated: 0,
            subsumed: 0,
            peak: 0,
        }
    }

    fn knows(&self, s: &BitSet) -> bool {
        self.index.contains(s)
    }

    fn add(&mut self, s: BitSet) -> Result<bool> {
        if self.index.contains(&s) {
            return Ok(false);
        }
        let width = s.len();
        if width > self.max_width {
            return Err(Error::LimitExceeded {
                limit: "max_disjunction_width",
                limit_value: self.max_width,
                reached: width,
            });
        }
        if self.mode == BuildMode::EagerSubsumption {
            let covered = (0..self.sets.len()).any(|i| self.alive[i] && self.sets[i].is_subset(&s));
            if covered {
                self.subsumed += 1;
                return Ok(false);
            }
            for i in 0..self.sets.len() {
                if self.alive[i] && s.is_subset(&self.sets[i]) {
                    self.alive[i] = false;
                    self.live -= 1;
                    self.subsumed += 1;
                }
            }
        }
        if self.live + 1 > self.max_disjunctions {
            return Err(Error::LimitExceeded {
                limit: "max_disjunctions",
                limit_value: self.max_disjunctions,
                reached: self.live + 1,
            });
        }
        let id = self.sets.len();
        for f in s.iter() {
            self.by_fact[f].push(id);
        }
        self.index.insert(s.clone());
        self.sets.push(s);
        self.alive.push(true);
        self.live += 1;
        self.generated += 1;
        self.peak = self.peak.max(self.live);
        Ok(true)
    }

    fn live_sets(&self) -> impl Iterator<Item = &BitSet> {
        self.sets
            .iter()
            .zip(&self.alive)
            .filter(|(_, a)| **a)
            .map(|(s, _)| s)
    }
}

/// Computes the canonical disjunctive database of `db` under `constraints`:
/// its minimal models are exactly the repairs, and it is contained in every
/// other disjunctive database with those minimal models.
pub fn algorithm1(
    db: &Database,
    constraints: &[DenialConstraint],
    opts: &BuildOptions,
) -> Result<DisjunctiveDatabase> {
    algorithm1_with_stats(db, constraints, opts).map(|(dd, _)| dd)
}

pub fn algorithm1_with_stats(
    db: &Database,
    constraints: &[DenialConstraint],
    opts: &BuildOptions,
) -> Result<(DisjunctiveDatabase, BuildStats)> {
    let graph = ConflictHypergraph::build(db, constraints)?;
    build_from_graph(&graph, opts)
}

/// The fixpoint construction over an already built conflict hypergraph.
pub fn build_from_graph(
    graph: &ConflictHypergraph,
    opts: &BuildOptions,
) -> Result<(DisjunctiveDatabase, BuildStats)> {
    opts.validate()?;
    let mut stats = BuildStats {
        mode: opts.mode,
        facts: graph.vertices().len(),
        edges: graph.edges().len(),
        ..BuildStats::default()
    };

    // self-conflicting facts belong to no repair
    let removed = graph.self_conflicting();
    stats.removed_self_conflicting = removed.len();
    let kept: BTreeSet<Fact> = graph.vertices().difference(&removed).cloned().collect();
    let graph = graph.restrict(&kept)?;

    let universe = Universe::new(&kept);
    let n = universe.len();
    let edges: Vec<BitSet> = graph.edges().iter().map(|e| universe.encode(e)).collect();
    let edge_facts: Vec<Vec<usize>> = edges.iter().map(|e| e.iter().collect()).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in edge_facts.iter().enumerate() {
        for &t in e {
            incident[t].push(ei);
        }
    }

    let width = opts.max_disjunction_width.unwrap_or(graph.vertices().len().max(1));
    let mut work = WorkingSet::new(n, opts, width);

    // seeding: t together with one other fact from each edge containing t
    for (t, edges_of_t) in incident.iter().enumerate() {
        let mut partial: BTreeSet<BitSet> = BTreeSet::new();
        let mut single = universe.empty();
        single.insert(t);
        partial.insert(single);
        for &ei in edges_of_t {
            let mut next = BTreeSet::new();
            for s in &partial {
                for &x in edge_facts[ei].iter().filter(|&&x| x != t) {
                    let mut grown = s.clone();
                    grown.insert(x);
                    next.insert(grown);
                }
            }
            if next.len() > opts.max_disjunctions {
                return Err(Error::LimitExceeded {
                    limit: "max_disjunctions",
                    limit_value: opts.max_disjunctions,
                    reached: next.len(),
                });
            }
            partial = next;
        }
        for s in partial {
            work.add(s)?;
        }
    }
    stats.seeded = work.live;
    stats.set_sizes.push(work.live);

    // fixpoint in staged passes; a pass only needs tuples using at least one
    // disjunction admitted by the previous pass
    let mut delta_start = 0usize;
    loop {
        stats.iterations += 1;
        let snapshot = work.sets.len();
        let mut staged: HashSet<BitSet> = HashSet::new();
        let mut union = universe.empty();
        for (ei, e) in edges.iter().enumerate() {
            let members = &edge_facts[ei];
            let mut old: Vec<Vec<usize>> = Vec::with_capacity(members.len());
            let mut new: Vec<Vec<usize>> = Vec::with_capacity(members.len());
            for &t in members {
                let (mut o, mut nw) = (Vec::new(), Vec::new());
                for &id in &work.by_fact[t] {
                    if id >= snapshot || !work.alive[id] {
                        continue;
                    }
                    let d = &work.sets[id];
                    // D_i non-empty and disjoint from e
                    if d.len() > 1 && d.intersection(e).len() == 1 {
                        if id < delta_start {
                            o.push(id);
                        } else {
                            nw.push(id);
                        }
                    }
                }
                old.push(o);
                new.push(nw);
            }
            for j in 0..members.len() {
                if new[j].is_empty() {
                    continue;
                }
                let choices: Vec<Vec<usize>> = (0..members.len())
                    .map(|p| match p.cmp(&j) {
                        std::cmp::Ordering::Less => old[p].clone(),
                        std::cmp::Ordering::Equal => new[p].clone(),
                        std::cmp::Ordering::Greater => {
                            let mut all = old[p].clone();
                            all.extend(&new[p]);
                            all
                        }
                    })
                    .collect();
                if choices.iter().any(Vec::is_empty) {
                    continue;
                }
                let mut cursor = vec![0usize; members.len()];
                'tuples: loop {
                    union.clear();
                    for (p, &c) in cursor.iter().enumerate() {
                        union.union_with(&work.sets[choices[p][c]]);
                    }
                    union.difference_with(e);
                    if !work.knows(&union)
                        && !staged.contains(&union)
                        && staged.insert(union.clone())
                        && staged.len() > opts.max_disjunctions
                    {
                        return Err(Error::LimitExceeded {
                            limit: "max_disjunctions",
                            limit_value: opts.max_disjunctions,
                            reached: staged.len(),
                        });
                    }
                    let mut p = members.len();
                    loop {
                        if p == 0 {
                            break 'tuples;
                        }
                        p -= 1;
                        cursor[p] += 1;
                        if cursor[p] < choices[p].len() {
                            break;
                        }
                        cursor[p] = 0;
                    }
                }
            }
        }
        let mut staged: Vec<BitSet> = staged.into_iter().collect();
        staged.sort();
        let mut changed = false;
        for s in staged {
            changed |= work.add(s)?;
        }
        stats.set_sizes.push(work.live);
        log::debug!(
            "pass {}: working set {} ({} admitted so far)",
            stats.iterations,
            work.live,
            work.generated
        );
        if !changed {
            break;
        }
        delta_start = snapshot;
    }

    let mut minimal: Vec<&BitSet> = work.live_sets().collect();
    minimal.sort_by_key(|s| s.len());
    let mut kept_sets: Vec<&BitSet> = Vec::new();
    for s in minimal {
        if !kept_sets.iter().any(|k| k.is_subset(s)) {
            kept_sets.push(s);
        }
    }
    stats.subsumed += work.live - kept_sets.len();
    stats.generated = work.generated;
    stats.peak_set_size = work.peak;
    let dd: DisjunctiveDatabase = kept_sets
        .into_iter()
        .map(|s| Disjunction::new(universe.decode(s)).expect("non-empty"))
        .collect();
    stats.output_disjunctions = dd.len();
    stats.output_size = dd.size();
    Ok((dd, stats))
}

fn single_relation(db: &Database, relation: &str) -> Result<usize> {
    if let Some(f) = db.iter().find(|f| f.relation() != relation) {
        return Err(Error::ClassMismatch(format!(
            "fast path needs a single relation `{relation}`, found {f}"
        )));
    }
    Ok(db.schema().get(relation).copied().unwrap_or(0))
}

fn project(f: &Fact, positions: &[usize]) -> Vec<Value> {
    positions.iter().map(|&p| f.args()[p].clone()).collect()
}

/// Cliques of facts agreeing on `positions`, in canonical order.
fn group_by(db: &Database, positions: &[usize]) -> BTreeMap<Vec<Value>, Vec<Fact>> {
    let mut groups: BTreeMap<Vec<Value>, Vec<Fact>> = BTreeMap::new();
    for f in db.iter() {
        groups.entry(project(f, positions)).or_default().push(f.clone());
    }
    groups
}

/// Closed form for one key: one disjunction per clique of facts agreeing on
/// the key.
pub fn canonical_one_key(db: &Database, key: &ConstraintClass) -> Result<DisjunctiveDatabase> {
    let ConstraintClass::Key { relation, key } = key else {
        return Err(Error::ClassMismatch(format!("expected a key, got {key}")));
    };
    single_relation(db, relation)?;
    Ok(group_by(db, key)
        .into_values()
        .map(|clique| Disjunction::new(clique).expect("cliques are non-empty"))
        .collect())
}

/// Closed form for one functional dependency X → Y: for every clique
/// (facts agreeing on X) split into clusters by their Y values, every
/// choice of one fact per cluster is a disjunction. A key is accepted as
/// the dependency on all remaining attributes.
pub fn canonical_one_fd(
    db: &Database,
    fd: &ConstraintClass,
    opts: &BuildOptions,
) -> Result<DisjunctiveDatabase> {
    let arity = match fd {
        ConstraintClass::GeneralDenial => {
            return Err(Error::ClassMismatch(format!(
                "expected a functional dependency, got {fd}"
            )))
        }
        ConstraintClass::FunctionalDependency { relation, .. } | ConstraintClass::Key { relation, .. } => {
            single_relation(db, relation)?
        }
    };
    let (_, lhs, rhs) = fd.as_dependency(arity).unwrap();
    let mut out = DisjunctiveDatabase::new();
    for clique in group_by(db, &lhs).into_values() {
        let clusters: Vec<Vec<Fact>> = {
            let mut by_rhs: BTreeMap<Vec<Value>, Vec<Fact>> = BTreeMap::new();
            for f in clique {
                by_rhs.entry(project(&f, &rhs)).or_default().push(f);
            }
            by_rhs.into_values().collect()
        };
        let count = clusters
            .iter()
            .try_fold(1usize, |acc, c| acc.checked_mul(c.len()))
            .unwrap_or(usize::MAX);
        if count.saturating_add(out.len()) > opts.max_disjunctions {
            return Err(Error::LimitExceeded {
                limit: "max_disjunctions",
                limit_value: opts.max_disjunctions,
                reached: count.saturating_add(out.len()),
            });
        }
        let mut cursor = vec![0usize; clusters.len()];
        'product: loop {
            let pick = cursor.iter().zip(&clusters).map(|(&i, c)| c[i].clone());
            out.insert(Disjunction::new(pick).expect("at least one cluster"));
            for p in (0..clusters.len()).rev() {
                cursor[p] += 1;
                if cursor[p] < clusters[p].len() {
                    continue 'product;
                }
                cursor[p] = 0;
            }
            break;
        }
    }
    Ok(out)
}

/// The canonical disjunctive database whose minimal models are exactly
/// `worlds`: the minimal transversals of the world set.
pub fn canonical_from_worlds(worlds: &[World]) -> Result<DisjunctiveDatabase> {
    if worlds.is_empty() {
        return Err(Error::Precondition("at least one world is required".into()));
    }
    let distinct: BTreeSet<&World> = worlds.iter().collect();
    for a in &distinct {
        if let Some(b) = distinct.iter().find(|b| a.len() < b.len() && a.is_subset(b)) {
            return Err(Error::NotAntichain(format!(
                "a world of size {} is contained in one of size {}",
                a.len(),
                b.len()
            )));
        }
    }
    if distinct.len() == 1 && distinct.iter().next().unwrap().is_empty() {
        return Ok(DisjunctiveDatabase::new());
    }
    let worlds: Vec<World> = distinct.into_iter().cloned().collect();
    Ok(minimal_transversals(&worlds)?
        .into_iter()
        .map(|t| Disjunction::new(t).expect("transversals of non-empty worlds are non-empty"))
        .collect())
}
