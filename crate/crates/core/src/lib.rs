//! Canonical disjunctive databases for the repairs of an inconsistent
//! relational database under denial constraints.
//!
//! Given facts and denial constraints, [`canonical::algorithm1`] builds the
//! unique reduced disjunctive database whose minimal models are exactly the
//! repairs. [`repairs`] enumerates S-repairs (⊆-maximal consistent subsets)
//! and C-repairs (maximum cardinality), and [`families`] generates the
//! instance families whose canonical databases grow linearly or
//! exponentially.
//!
//! Run an example with:
//!
//! ```bash
//! cargo run --example employee
//! ```
//!
//! ```
//! use repairforge::prelude::*;
//!
//! let db = parse_facts("employee(john,50,cs).\nemployee(john,100,cs).").unwrap();
//! let cs = parse_constraints_with_schema("FD employee: 1 -> 2 3.", db.schema()).unwrap();
//! let dd = algorithm1(&db, &cs, &BuildOptions::default()).unwrap();
//! assert_eq!(dd.to_text(), "employee(john,50,cs) v employee(john,100,cs).\n");
//! ```

mod bitset;
mod syntax;

pub mod canonical;
pub mod cli;
pub mod conflict;
pub mod constraints;
pub mod disjunctive;
pub mod error;
pub mod families;
pub mod model;
pub mod repairs;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::canonical::{
        algorithm1, algorithm1_with_stats, canonical_from_worlds, canonical_one_fd,
        canonical_one_key, BuildMode, BuildOptions, BuildStats,
    };
    pub use crate::conflict::ConflictHypergraph;
    pub use crate::constraints::{
        classify, classify_set, find_violations, parse_constraints, parse_constraints_with_schema,
        ConstraintClass, DenialConstraint,
    };
    pub use crate::disjunctive::{
        is_model, minimal_models, minimal_transversals, reduction, Disjunction,
        DisjunctiveDatabase, EnumerationLimits,
    };
    pub use crate::error::{Error, Result};
    pub use crate::families::{closed_form_dn, expected_size, generate, FamilySpec};
    pub use crate::model::{parse_facts, Database, Fact, Value, World};
    pub use crate::repairs::{
        brute_force_repairs, c_repairs, is_repair, s_repairs, RepairKind, RepairSet,
    };
}
