//! Conflict hypergraph: facts as vertices, violating instantiations as edges.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::constraints::{find_violations, DenialConstraint};
use crate::error::{Error, Result};
use crate::model::{Database, Fact, World};

/// Orders fact sets by size, then lexicographically.
pub fn canonical_order(a: &World, b: &World) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictHypergraph {
    vertices: BTreeSet<Fact>,
    edges: Vec<World>,
    incidence: BTreeMap<Fact, Vec<usize>>,
}

impl ConflictHypergraph {
    /// Builds the hypergraph from explicit edges. Every edge must be a
    /// non-empty subset of `vertices`; duplicates collapse.
    pub fn from_edges(vertices: BTreeSet<Fact>, edges: impl IntoIterator<Item = World>) -> Result<Self> {
        let mut edges: Vec<World> = edges.into_iter().collect();
        for e in &edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(f) = e.iter().find(|f| !vertices.contains(*f)) {
                return Err(Error::Precondition(format!("edge fact {f} is not a vertex")));
            }
        }
        edges.sort_by(canonical_order);
        edges.dedup();
        let mut incidence: BTreeMap<Fact, Vec<usize>> =
            vertices.iter().map(|v| (v.clone(), Vec::new())).collect();
        for (i, e) in edges.iter().enumerate() {
            for f in e {
                incidence.get_mut(f).unwrap().push(i);
            }
        }
        Ok(ConflictHypergraph {
            vertices,
            edges,
            incidence,
        })
    }

    /// Vertices are all facts of `db`; edges the union of the violations of
    /// every constraint.
    pub fn build(db: &Database, constraints: &[DenialConstraint]) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for c in constraints {
            edges.extend(find_violations(c, db)?);
        }
        log::debug!(
            "conflict hypergraph: {} vertices, {} edges",
            db.len(),
            edges.len()
        );
        Self::from_edges(db.facts().clone(), edges)
    }

    pub fn vertices(&self) -> &BTreeSet<Fact> {
        &self.vertices
    }

    /// Edges in canonical order: by size, then lexicographically.
    pub fn edges(&self) -> &[World] {
        &self.edges
    }

    /// The edges containing `fact`.
    pub fn edges_of<'a>(&'a self, fact: &Fact) -> impl Iterator<Item = &'a World> + 'a {
        self.incidence
            .get(fact)
            .into_iter()
            .flatten()
            .map(move |&i| &self.edges[i])
    }

    pub fn degree(&self, fact: &Fact) -> usize {
        self.incidence.get(fact).map_or(0, Vec::len)
    }

    pub fn conflicting_facts(&self) -> BTreeSet<Fact> {
        self.incidence
            .iter()
            .filter(|(_, es)| !es.is_empty())
            .map(|(f, _)| f.clone())
            .collect()
    }

    /// Facts forming a singleton edge.
    pub fn self_conflicting(&self) -> BTreeSet<Fact> {
        self.edges
            .iter()
            .filter(|e| e.len() == 1)
            .flat_map(|e| e.iter().cloned())
            .collect()
    }

    /// True iff no edge lies inside `facts`.
    pub fn is_consistent(&self, facts: &World) -> bool {
        !self.edges.iter().any(|e| e.is_subset(facts))
    }

    /// The sub-hypergraph induced by `keep`, which must be a subset of the
    /// vertices.
    pub fn restrict(&self, keep: &BTreeSet<Fact>) -> Result<Self> {
        if let Some(f) = keep.iter().find(|f| !self.vertices.contains(*f)) {
            return Err(Error::Precondition(format!("{f} is not a vertex of the hypergraph")));
        }
        let edges = self.edges.iter().filter(|e| e.is_subset(keep)).cloned();
        Self::from_edges(keep.clone(), edges)
    }

    /// Drops every edge that strictly contains another edge. The set of
    /// consistent subsets, hence the repairs, is unchanged.
    pub fn minimized(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .filter(|e| !self.edges.iter().any(|o| o.len() < e.len() && o.is_subset(e)))
            .cloned();
        Self::from_edges(self.vertices.clone(), edges).expect("edges already validated")
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump {
            vertices: Vec<String>,
            edges: Vec<Vec<String>>,
        }
        let dump = Dump {
            vertices: self.vertices.iter().map(Fact::to_string).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(Fact::to_string).collect())
                .collect(),
        };
        serde_json::to_value(dump).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::parse_constraints;
    use crate::model::parse_facts;

    fn f(s: &str) -> Fact {
        Fact::parse(s).unwrap()
    }

    #[test]
    fn example_graph() {
        let db = parse_facts("employee(john,50,cs).\nemployee(john,100,cs).").unwrap();
        let cs = parse_constraints("FD employee/3: 1 -> 2 3.").unwrap();
        let g = ConflictHypergraph::build(&db, &cs).unwrap();
        assert_eq!(g.vertices().len(), 2);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edges()[0].len(), 2);
        assert_eq!(g.conflicting_facts().len(), 2);
    }

    #[test]
    fn consistent_database() {
        let db = parse_facts("p(1,a). p(2,b).").unwrap();
        let cs = parse_constraints("KEY p/2: 1.").unwrap();
        let g = ConflictHypergraph::build(&db, &cs).unwrap();
        assert!(g.edges().is_empty());
        assert!(g.conflicting_facts().is_empty());
        assert!(g.is_consistent(db.facts()));
    }

    #[test]
    fn self_violation() {
        let db = parse_facts("p(a,a). p(a,b).").unwrap();
        let cs = parse_constraints(":- p(X,X).").unwrap();
        let g = ConflictHypergraph::build(&db, &cs).unwrap();
        assert_eq!(g.conflicting_facts(), [f("p(a,a)")].into());
        assert_eq!(g.self_conflicting(), [f("p(a,a)")].into());
    }

    #[test]
    fn restrict_cases() {
        let (a, b) = (f("p(a)"), f("p(b)"));
        let g = ConflictHypergraph::from_edges(
            [a.clone(), b.clone()].into(),
            [World::from([a.clone()]), World::from([a.clone(), b.clone()])],
        )
        .unwrap();
        assert_eq!(g.restrict(g.vertices()).unwrap(), g);
        let r = g.restrict(&[b.clone()].into()).unwrap();
        assert_eq!(r.vertices(), &BTreeSet::from([b.clone()]));
        assert!(r.edges().is_empty());
        assert!(g.restrict(&[f("q(c)")].into()).is_err());
        assert_eq!(g.edges_of(&a).count(), 2);
        assert_eq!(g.degree(&b), 1);
        assert_eq!(g.minimized().edges(), &[World::from([a])]);
    }

    #[test]
    fn canonical_edge_order_and_json() {
        let db = parse_facts("p(1,a). p(1,b). p(1,c).").unwrap();
        let cs = parse_constraints("KEY p/2: 1.").unwrap();
        let g = ConflictHypergraph::build(&db, &cs).unwrap();
        let json = g.to_json();
        assert_eq!(json["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(json["edges"][0], serde_json::json!(["p(1,a)", "p(1,b)"]));
        assert_eq!(json["edges"][2], serde_json::json!(["p(1,b)", "p(1,c)"]));
    }
}
