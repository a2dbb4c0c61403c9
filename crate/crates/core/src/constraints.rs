//! Denial constraints: representation, the `:-` DSL with `FD`/`KEY`
//! shorthands, template classification, and violation search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::model::{compare_values, CompareOp, Database, Fact, Schema, Value, World};
use crate::syntax::{Cursor, Tok};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Value),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            Term::Const(_) => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintAtom {
    pub relation: String,
    pub terms: Vec<Term>,
}

impl ConstraintAtom {
    pub fn new(relation: impl Into<String>, terms: Vec<Term>) -> Self {
        ConstraintAtom {
            relation: relation.into(),
            terms,
        }
    }
}

impl fmt::Display for ConstraintAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.relation)?;
        if !self.terms.is_empty() {
            f.write_str("(")?;
            for (i, t) in self.terms.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Comparison {
    pub left: Term,
    pub op: CompareOp,
    pub right: Term,
}

impl Comparison {
    pub fn new(left: Term, op: CompareOp, right: Term) -> Self {
        Comparison { left, op, right }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.left, self.op, self.right)
    }
}

/// `:- a1, ..., an, c1, ..., cm.` — no instantiation of the atoms may
/// satisfy all the comparisons.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenialConstraint {
    id: String,
    atoms: Vec<ConstraintAtom>,
    comparisons: Vec<Comparison>,
}

impl DenialConstraint {
    /// Checks that there is at least one atom and that every comparison
    /// variable is bound by some atom.
    pub fn new(
        id: impl Into<String>,
        atoms: Vec<ConstraintAtom>,
        comparisons: Vec<Comparison>,
    ) -> Result<Self> {
        let id = id.into();
        if atoms.is_empty() {
            return Err(Error::EmptyConstraint(id));
        }
        let bound: BTreeSet<&str> = atoms
            .iter()
            .flat_map(|a| a.terms.iter().filter_map(Term::as_var))
            .collect();
        for c in &comparisons {
            for t in [&c.left, &c.right] {
                if let Some(v) = t.as_var() {
                    if !bound.contains(v) {
                        return Err(Error::UnsafeVariable {
                            constraint: id,
                            variable: v.to_string(),
                        });
                    }
                }
            }
        }
        Ok(DenialConstraint {
            id,
            atoms,
            comparisons,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn atoms(&self) -> &[ConstraintAtom] {
        &self.atoms
    }

    pub fn comparisons(&self) -> &[Comparison] {
        &self.comparisons
    }
}

impl fmt::Display for DenialConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(":- ")?;
        let mut first = true;
        for a in &self.atoms {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{a}")?;
        }
        for c in &self.comparisons {
            write!(f, ", {c}")?;
        }
        f.write_str(".")
    }
}

/// Shape of a constraint. Positions are 0-based attribute indexes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstraintClass {
    GeneralDenial,
    FunctionalDependency {
        relation: String,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    Key {
        relation: String,
        key: Vec<usize>,
    },
}

impl ConstraintClass {
    /// Relation plus determining and determined positions, treating a key
    /// as the dependency on all remaining attributes.
    pub fn as_dependency(&self, arity: usize) -> Option<(&str, Vec<usize>, Vec<usize>)> {
        match self {
            ConstraintClass::GeneralDenial => None,
            ConstraintClass::FunctionalDependency { relation, lhs, rhs } => {
                Some((relation, lhs.clone(), rhs.clone()))
            }
            ConstraintClass::Key { relation, key } => {
                let rest = (0..arity).filter(|p| !key.contains(p)).collect();
                Some((relation, key.clone(), rest))
            }
        }
    }
}

impl fmt::Display for ConstraintClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |ps: &[usize]| {
            ps.iter()
                .map(|p| (p + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            ConstraintClass::GeneralDenial => f.write_str("denial"),
            ConstraintClass::FunctionalDependency { relation, lhs, rhs } => {
                write!(f, "FD {relation}: {} -> {}", list(lhs), list(rhs))
            }
            ConstraintClass::Key { relation, key } => write!(f, "KEY {relation}: {}", list(key)),
        }
    }
}

/// Recognizes the single-relation dependency template
/// `:- p(..X..,A,..), p(..X..,B,..), A != B.` up to renaming and attribute
/// permutation. Positions sharing a variable form the left-hand side; the
/// compared position the right-hand side. When no other position remains
/// the constraint is a key.
pub fn classify(c: &DenialConstraint) -> ConstraintClass {
    classify_inner(c).unwrap_or(ConstraintClass::GeneralDenial)
}

fn classify_inner(c: &DenialConstraint) -> Option<ConstraintClass> {
    let [a, b] = c.atoms() else { return None };
    let [cmp] = c.comparisons() else { return None };
    if a.relation != b.relation || a.terms.len() != b.terms.len() || cmp.op != CompareOp::Ne {
        return None;
    }
    let va: Vec<&str> = a.terms.iter().map(Term::as_var).collect::<Option<_>>()?;
    let vb: Vec<&str> = b.terms.iter().map(Term::as_var).collect::<Option<_>>()?;
    // every variable occurs once per atom
    let distinct = |vs: &[&str]| vs.iter().collect::<BTreeSet<_>>().len() == vs.len();
    if !distinct(&va) || !distinct(&vb) {
        return None;
    }
    let mut lhs = Vec::new();
    for (p, (x, y)) in va.iter().zip(&vb).enumerate() {
        if x == y {
            lhs.push(p);
        } else if vb.contains(x) || va.contains(y) {
            // a variable crossing positions is not part of the template
            return None;
        }
    }
    let (l, r) = (cmp.left.as_var()?, cmp.right.as_var()?);
    let pos = va.iter().position(|v| *v == l).or_else(|| va.iter().position(|v| *v == r))?;
    let other = if va[pos] == l { r } else { l };
    if vb[pos] != other || lhs.contains(&pos) {
        return None;
    }
    let free = a.terms.len() - lhs.len() - 1;
    Some(if free == 0 {
        ConstraintClass::Key {
            relation: a.relation.clone(),
            key: lhs,
        }
    } else {
        ConstraintClass::FunctionalDependency {
            relation: a.relation.clone(),
            lhs,
            rhs: vec![pos],
        }
    })
}

/// Classifies a whole constraint set as a single dependency when every
/// member is an FD or key on one relation with one common left-hand side.
/// The right-hand sides are merged; a merged FD covering all remaining
/// attributes is a key.
pub fn classify_set(constraints: &[DenialConstraint], schema: &Schema) -> ConstraintClass {
    let mut relation: Option<String> = None;
    let mut lhs: Option<Vec<usize>> = None;
    let mut rhs = BTreeSet::new();
    for c in constraints {
        let class = classify(c);
        let rel = match &class {
            ConstraintClass::GeneralDenial => return ConstraintClass::GeneralDenial,
            ConstraintClass::FunctionalDependency { relation, .. }
            | ConstraintClass::Key { relation, .. } => relation.clone(),
        };
        let arity = c.atoms()[0].terms.len();
        let (_, l, r) = class.as_dependency(arity).unwrap();
        if schema.get(&rel).is_some_and(|&a| a != arity) {
            return ConstraintClass::GeneralDenial;
        }
        if relation.get_or_insert_with(|| rel.clone()) != &rel
            || lhs.get_or_insert_with(|| l.clone()) != &l
        {
            return ConstraintClass::GeneralDenial;
        }
        rhs.extend(r);
    }
    let (Some(relation), Some(lhs)) = (relation, lhs) else {
        return ConstraintClass::GeneralDenial;
    };
    let arity = constraints[0].atoms()[0].terms.len();
    if lhs.len() + rhs.len() == arity {
        ConstraintClass::Key { relation, key: lhs }
    } else {
        ConstraintClass::FunctionalDependency {
            relation,
            lhs,
            rhs: rhs.into_iter().collect(),
        }
    }
}

/// Expands `FD rel: lhs -> rhs` into one denial constraint per determined
/// position, over a relation of the given arity. Positions are 0-based.
pub fn functional_dependency(
    id_prefix: &str,
    relation: &str,
    arity: usize,
    lhs: &[usize],
    rhs: &[usize],
) -> Result<Vec<DenialConstraint>> {
    for &p in lhs.iter().chain(rhs) {
        if p >= arity {
            return Err(Error::Precondition(format!(
                "position {} out of range for {relation}/{arity}",
                p + 1
            )));
        }
    }
    let mut out = Vec::new();
    for (n, &target) in rhs.iter().filter(|p| !lhs.contains(p)).enumerate() {
        let shared = |p: usize| lhs.contains(&p);
        let left: Vec<Term> = (0..arity)
            .map(|p| {
                if shared(p) {
                    Term::var(format!("X{}", p + 1))
                } else {
                    Term::var(format!("Y{}", p + 1))
                }
            })
            .collect();
        let right: Vec<Term> = (0..arity)
            .map(|p| {
                if shared(p) {
                    Term::var(format!("X{}", p + 1))
                } else {
                    Term::var(format!("Z{}", p + 1))
                }
            })
            .collect();
        let cmp = Comparison::new(
            Term::var(format!("Y{}", target + 1)),
            CompareOp::Ne,
            Term::var(format!("Z{}", target + 1)),
        );
        let id = if rhs.len() > 1 {
            format!("{id_prefix}.{}", n + 1)
        } else {
            id_prefix.to_string()
        };
        out.push(DenialConstraint::new(
            id,
            vec![
                ConstraintAtom::new(relation, left),
                ConstraintAtom::new(relation, right),
            ],
            vec![cmp],
        )?);
    }
    Ok(out)
}

/// Expands `KEY rel: key` into the dependency on every other position.
pub fn key_constraint(
    id_prefix: &str,
    relation: &str,
    arity: usize,
    key: &[usize],
) -> Result<Vec<DenialConstraint>> {
    let rest: Vec<usize> = (0..arity).filter(|p| !key.contains(p)).collect();
    functional_dependency(id_prefix, relation, arity, key, &rest)
}

/// Parses the denial DSL. `FD`/`KEY` shorthands need the relation's arity,
/// given as `rel/k`, by a `#relation` header, or by a `:-` atom earlier in
/// the file.
pub fn parse_constraints(input: &str) -> Result<Vec<DenialConstraint>> {
    parse_constraints_with_schema(input, &Schema::new())
}

/// Like [`parse_constraints`], with arities also taken from `schema`
/// (typically the facts file's). Atoms disagreeing with a known arity are
/// rejected.
pub fn parse_constraints_with_schema(input: &str, schema: &Schema) -> Result<Vec<DenialConstraint>> {
    let mut cur = Cursor::new(input)?;
    let mut schema = schema.clone();
    let mut out = Vec::new();
    let mut counter = 0usize;

    let check_arity = |schema: &mut Schema, rel: &str, arity: usize, line: usize| -> Result<()> {
        match schema.get(rel) {
            Some(&a) if a != arity => Err(Error::ArityMismatch {
                relation: rel.to_string(),
                expected: a,
                found: arity,
                line,
            }),
            Some(_) => Ok(()),
            None => {
                schema.insert(rel.to_string(), arity);
                Ok(())
            }
        }
    };

    while !cur.at_end() {
        let line = cur.line();
        match cur.next() {
            Some(Tok::Directive(d)) if d == "relation" => {
                let (name, arity) = cur.relation_decl()?;
                check_arity(&mut schema, &name, arity, line)?;
            }
            Some(Tok::Implied) => {
                counter += 1;
                let id = format!("c{counter}");
                let (atoms, comparisons) = parse_body(&mut cur)?;
                for a in &atoms {
                    check_arity(&mut schema, &a.relation, a.terms.len(), line)?;
                }
                out.push(DenialConstraint::new(id, atoms, comparisons)?);
            }
            Some(Tok::Var(kw)) if kw == "FD" || kw == "KEY" => {
                counter += 1;
                let id = format!("c{counter}");
                let relation = cur.ident()?;
                let arity = if cur.eat(&Tok::Slash) {
                    let a = cur.non_negative_int("arity")? as usize;
                    check_arity(&mut schema, &relation, a, line)?;
                    a
                } else {
                    *schema.get(&relation).ok_or_else(|| {
                        cur.error(format!(
                            "arity of `{relation}` unknown; write `{relation}/k` or declare it"
                        ))
                    })?
                };
                cur.expect(Tok::Colon)?;
                let lhs = positions(&mut cur, arity)?;
                let expanded = if kw == "FD" {
                    cur.expect(Tok::Arrow)?;
                    let rhs = positions(&mut cur, arity)?;
                    if rhs.is_empty() {
                        return Err(cur.unexpected("determined attribute positions"));
                    }
                    functional_dependency(&id, &relation, arity, &lhs, &rhs)?
                } else {
                    key_constraint(&id, &relation, arity, &lhs)?
                };
                cur.expect(Tok::Dot)?;
                out.extend(expanded);
            }
            _ => {
                return Err(Error::Syntax {
                    line,
                    column: 1,
                    message: "expected `:-`, `FD`, `KEY` or `#relation`".into(),
                })
            }
        }
    }
    Ok(out)
}

fn positions(cur: &mut Cursor, arity: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    while let Some(&Tok::Int(_)) = cur.peek() {
        let p = cur.positive_int("attribute position")? as usize;
        if p > arity {
            return Err(cur.error(format!("position {p} exceeds arity {arity}")));
        }
        if !out.contains(&(p - 1)) {
            out.push(p - 1);
        }
        cur.eat(&Tok::Comma);
    }
    out.sort_unstable();
    Ok(out)
}

fn parse_term(cur: &mut Cursor) -> Result<Term> {
    match cur.peek() {
        Some(Tok::Var(v)) => {
            let v = v.clone();
            cur.next();
            Ok(Term::Var(v))
        }
        _ => cur.value().map(Term::Const),
    }
}

fn parse_body(cur: &mut Cursor) -> Result<(Vec<ConstraintAtom>, Vec<Comparison>)> {
    let mut atoms = Vec::new();
    let mut comparisons = Vec::new();
    loop {
        // an identifier followed by a comparison operator is a constant
        let is_atom = matches!(cur.peek(), Some(Tok::Ident(_)))
            && !matches!(cur.peek_at(1), Some(Tok::Cmp(_)));
        if is_atom {
            let relation = cur.ident()?;
            let mut terms = Vec::new();
            if cur.eat(&Tok::LParen) && !cur.eat(&Tok::RParen) {
                loop {
                    terms.push(parse_term(cur)?);
                    if cur.eat(&Tok::RParen) {
                        break;
                    }
                    cur.expect(Tok::Comma)?;
                }
            }
            atoms.push(ConstraintAtom::new(relation, terms));
        } else {
            let left = parse_term(cur)?;
            let op = match cur.next() {
                Some(Tok::Cmp(op)) => op,
                _ => return Err(cur.error("expected a comparison operator")),
            };
            let right = parse_term(cur)?;
            comparisons.push(Comparison::new(left, op, right));
        }
        if cur.eat(&Tok::Dot) {
            return Ok((atoms, comparisons));
        }
        cur.expect(Tok::Comma)?;
    }
}

type Binding<'a> = BTreeMap<&'a str, &'a Value>;

fn resolve<'a>(t: &'a Term, b: &Binding<'a>) -> Option<&'a Value> {
    match t {
        Term::Const(v) => Some(v),
        Term::Var(x) => b.get(x.as_str()).copied(),
    }
}

/// All fact sets `{ρ(a1),...,ρ(an)}` for substitutions ρ mapping the atoms
/// into `db` under which every comparison holds.
///
/// A comparison that is false under an instantiation discards it even if
/// another comparison of the same instantiation would be a type error.
pub fn find_violations(c: &DenialConstraint, db: &Database) -> Result<BTreeSet<World>> {
    let mut out = BTreeSet::new();
    let per_atom: Vec<Vec<&Fact>> = c
        .atoms
        .iter()
        .map(|a| {
            db.relation(&a.relation)
                .filter(|f| f.arity() == a.terms.len())
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(c.atoms.len());
    search(c, &per_atom, 0, &mut Binding::new(), &mut chosen, &mut out)?;
    Ok(out)
}

fn search<'a>(
    c: &'a DenialConstraint,
    per_atom: &[Vec<&'a Fact>],
    depth: usize,
    binding: &mut Binding<'a>,
    chosen: &mut Vec<&'a Fact>,
    out: &mut BTreeSet<World>,
) -> Result<()> {
    if depth == c.atoms.len() {
        let mut failure = None;
        for cmp in &c.comparisons {
            let (l, r) = (resolve(&cmp.left, binding), resolve(&cmp.right, binding));
            match compare_values(l.unwrap(), r.unwrap(), cmp.op) {
                Ok(true) => {}
                Ok(false) => return Ok(()),
                Err(e) => failure = failure.or(Some(e)),
            }
        }
        if let Some(e) = failure {
            return Err(e);
        }
        out.insert(chosen.iter().map(|f| (*f).clone()).collect());
        return Ok(());
    }
    let atom = &c.atoms[depth];
    'facts: for &fact in &per_atom[depth] {
        let mut added = Vec::new();
        for (term, value) in atom.terms.iter().zip(fact.args()) {
            let ok = match term {
                Term::Const(k) => k == value,
                Term::Var(x) => match binding.get(x.as_str()) {
                    Some(bound) => *bound == value,
                    None => {
                        binding.insert(x, value);
                        added.push(x.as_str());
                        true
                    }
                },
            };
            if !ok {
                for x in added {
                    binding.remove(x);
                }
                continue 'facts;
            }
        }
        // prune on comparisons already decided false
        let pruned = c.comparisons.iter().any(|cmp| {
            match (resolve(&cmp.left, binding), resolve(&cmp.right, binding)) {
                (Some(l), Some(r)) => compare_values(l, r, cmp.op) == Ok(false),
                _ => false,
            }
        });
        if !pruned {
            chosen.push(fact);
            search(c, per_atom, depth + 1, binding, chosen, out)?;
            chosen.pop();
        }
        for x in added {
            binding.remove(x);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_facts;

    fn one(text: &str) -> DenialConstraint {
        let mut cs = parse_constraints(text).unwrap();
        assert_eq!(cs.len(), 1);
        cs.pop().unwrap()
    }

    #[test]
    fn parses_salary_half_of_example_fd() {
        let c = one(":- employee(N,S1,D1), employee(N,S2,D2), S1 != S2.");
        assert_eq!(c.atoms().len(), 2);
        assert_eq!(c.comparisons().len(), 1);
        assert_eq!(
            classify(&c),
            ConstraintClass::FunctionalDependency {
                relation: "employee".into(),
                lhs: vec![0],
                rhs: vec![1]
            }
        );
    }

    #[test]
    fn unsatisfiable_comparison_has_no_violations() {
        let c = one(":- p(X), X < X.");
        let db = parse_facts("p(1). p(2).").unwrap();
        assert!(find_violations(&c, &db).unwrap().is_empty());
    }

    #[test]
    fn unsafe_variable_rejected() {
        let err = parse_constraints(":- q(X,Y), Z != Y.").unwrap_err();
        assert_eq!(
            err,
            Error::UnsafeVariable {
                constraint: "c1".into(),
                variable: "Z".into()
            }
        );
    }

    #[test]
    fn empty_atom_list_rejected() {
        assert!(matches!(
            parse_constraints(":- 1 < 2."),
            Err(Error::EmptyConstraint(_))
        ));
    }

    #[test]
    fn classifies_key_and_general() {
        let key = one(":- r(X,Y), r(X,Z), Y != Z.");
        assert_eq!(
            classify(&key),
            ConstraintClass::Key {
                relation: "r".into(),
                key: vec![0]
            }
        );
        let renamed = one(":- r(K,B), r(K,A), A != B.");
        assert_eq!(classify(&renamed), classify(&key));
        assert_eq!(
            classify(&one(":- p(X,Y), q(X,Z), Y < Z.")),
            ConstraintClass::GeneralDenial
        );
        assert_eq!(
            classify(&one(":- r(X,Y), r(Y,X), X != Y.")),
            ConstraintClass::GeneralDenial
        );
        assert_eq!(
            classify(&one(":- r(X,a), r(X,Z), a != Z.")),
            ConstraintClass::GeneralDenial
        );
    }

    #[test]
    fn fd_shorthand_expands_per_position() {
        let cs = parse_constraints("FD employee/3: 1 -> 2 3.").unwrap();
        assert_eq!(cs.len(), 2);
        let classes: Vec<_> = cs.iter().map(classify).collect();
        assert_eq!(
            classes,
            vec![
                ConstraintClass::FunctionalDependency {
                    relation: "employee".into(),
                    lhs: vec![0],
                    rhs: vec![1]
                },
                ConstraintClass::FunctionalDependency {
                    relation: "employee".into(),
                    lhs: vec![0],
                    rhs: vec![2]
                },
            ]
        );
        let schema = Schema::from([("employee".to_string(), 3)]);
        assert_eq!(
            classify_set(&cs, &schema),
            ConstraintClass::Key {
                relation: "employee".into(),
                key: vec![0]
            }
        );
    }

    #[test]
    fn key_shorthand_uses_declared_arity() {
        let cs = parse_constraints("#relation r/2.\nKEY r: 1.\nKEY r: 2.").unwrap();
        assert_eq!(cs.len(), 2);
        assert!(matches!(classify(&cs[1]), ConstraintClass::Key { ref key, .. } if key == &[1]));
        assert!(parse_constraints("KEY r: 1.").is_err());
        assert!(parse_constraints("KEY r/2: 3.").is_err());
    }

    #[test]
    fn shorthand_round_trips_through_display() {
        let cs = parse_constraints("FD r/3: 1 -> 2.").unwrap();
        let text = cs[0].to_string();
        let again = parse_constraints(&text).unwrap();
        assert_eq!(classify(&again[0]), classify(&cs[0]));
    }

    #[test]
    fn example_violation() {
        let db = parse_facts("employee(john,50,cs).\nemployee(john,100,cs).").unwrap();
        let c = one(":- employee(N,S1,D1), employee(N,S2,D2), S1 != S2.");
        let v = find_violations(&c, &db).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v.iter().next().unwrap().len(), 2);
        assert!(find_violations(&c, &Database::new()).unwrap().is_empty());
    }

    #[test]
    fn self_join_collapses_to_singleton() {
        let db = parse_facts("p(a,a).").unwrap();
        let v = find_violations(&one(":- p(X,Y), p(Y,X)."), &db).unwrap();
        let expected: BTreeSet<World> = [[Fact::parse("p(a,a)").unwrap()].into()].into();
        assert_eq!(v, expected);
    }

    #[test]
    fn constants_and_type_errors() {
        let db = parse_facts("p(a,1). p(b,2). p(c,x).").unwrap();
        let v = find_violations(&one(":- p(a,X), p(Y,Z), X < Z."), &db);
        assert!(matches!(v, Err(Error::Incomparable { .. })));
        // a false comparison discards the instantiation before the type error
        let v = find_violations(&one(":- p(a,X), p(Y,Z), Y = b, X < Z."), &db).unwrap();
        assert_eq!(v.len(), 1);
    }
}
