//! Relational data model: values, facts and databases, plus the facts
//! file format.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::syntax::{Cursor, Tok};

/// A constant appearing in a fact.
///
/// Rationals are kept normalized (positive denominator, reduced, and never
/// with denominator one), so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Int(i64),
    Rational { num: i64, den: i64 },
    Symbol(String),
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Value {
    pub fn int(i: i64) -> Self {
        Value::Int(i)
    }

    pub fn symbol(name: impl Into<String>) -> Self {
        Value::Symbol(name.into())
    }

    /// Builds `num/den` in normal form. A zero denominator is rejected.
    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidValue(format!("{num}/0 has a zero denominator")));
        }
        let g = gcd(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(if den == 1 {
            Value::Int(num)
        } else {
            Value::Rational { num, den }
        })
    }

    pub fn is_numeric(&self) -> bool {
        !matches!(self, Value::Symbol(_))
    }

    fn as_fraction(&self) -> Option<(i128, i128)> {
        match *self {
            Value::Int(i) => Some((i as i128, 1)),
            Value::Rational { num, den } => Some((num as i128, den as i128)),
            Value::Symbol(_) => None,
        }
    }
}

impl Ord for Value {
    /// Symbols sort before numbers; symbols by name, numbers by value.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Symbol(a), Value::Symbol(b)) => a.cmp(b),
            (Value::Symbol(_), _) => Ordering::Less,
            (_, Value::Symbol(_)) => Ordering::Greater,
            _ => {
                let (an, ad) = self.as_fraction().unwrap();
                let (bn, bd) = other.as_fraction().unwrap();
                (an * bd).cmp(&(bn * ad))
            }
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn is_plain_symbol(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Rational { num, den } => write!(f, "{num}/{den}"),
            Value::Symbol(s) if is_plain_symbol(s) => f.write_str(s),
            Value::Symbol(s) => {
                f.write_str("'")?;
                for c in s.chars() {
                    if c == '\'' || c == '\\' {
                        f.write_str("\\")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("'")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CompareOp {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl CompareOp {
    pub fn is_order(self) -> bool {
        matches!(self, CompareOp::Lt | CompareOp::Le | CompareOp::Gt | CompareOp::Ge)
    }
}

impl fmt::Display for CompareOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompareOp::Eq => "=",
            CompareOp::Ne => "!=",
            CompareOp::Lt => "<",
            CompareOp::Le => "<=",
            CompareOp::Gt => ">",
            CompareOp::Ge => ">=",
        })
    }
}

/// Evaluates `a op b`.
///
/// Equality across a symbol and a number is false and inequality is true;
/// ordering a symbol is a type error.
pub fn compare_values(a: &Value, b: &Value, op: CompareOp) -> Result<bool> {
    if op.is_order() && !(a.is_numeric() && b.is_numeric()) {
        return Err(Error::Incomparable {
            left: a.to_string(),
            op,
            right: b.to_string(),
        });
    }
    let ord = a.cmp(b);
    Ok(match op {
        CompareOp::Eq => a == b,
        CompareOp::Ne => a != b,
        CompareOp::Lt => ord == Ordering::Less,
        CompareOp::Le => ord != Ordering::Greater,
        CompareOp::Gt => ord == Ordering::Greater,
        CompareOp::Ge => ord != Ordering::Less,
    })
}

/// A ground atom `relation(args...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fact {
    relation: String,
    args: Vec<Value>,
}

impl Fact {
    pub fn new(relation: impl Into<String>, args: Vec<Value>) -> Self {
        Fact {
            relation: relation.into(),
            args,
        }
    }

    pub fn relation(&self) -> &str {
        &self.relation
    }

    pub fn args(&self) -> &[Value] {
        &self.args
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }

    /// Parses a single fact such as `employee(john,50,cs)`; a trailing
    /// period is optional.
    pub fn parse(text: &str) -> Result<Fact> {
        let mut cur = Cursor::new(text)?;
        let fact = cur.fact()?;
        cur.eat(&Tok::Dot);
        if !cur.at_end() {
            return Err(cur.unexpected("end of fact"));
        }
        Ok(fact)
    }

    /// Smallest fact of the given relation in the total order.
    pub(crate) fn lower_bound(relation: &str) -> Fact {
        Fact {
            relation: relation.to_string(),
            args: Vec::new(),
        }
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.relation)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Relation name to arity.
pub type Schema = BTreeMap<String, usize>;

/// A set of facts; the unit every algorithm in this crate enumerates.
pub type World = BTreeSet<Fact>;

/// A finite set of facts conforming to a schema.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Database {
    facts: BTreeSet<Fact>,
    schema: Schema,
}

impl Database {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_schema(schema: Schema) -> Self {
        Database {
            facts: BTreeSet::new(),
            schema,
        }
    }

    pub fn from_facts(facts: impl IntoIterator<Item = Fact>) -> Result<Self> {
        let mut db = Database::new();
        for f in facts {
            db.insert(f)?;
        }
        Ok(db)
    }

    /// Declares `relation/arity`; redeclaring with another arity is an error.
    pub fn declare(&mut self, relation: &str, arity: usize) -> Result<()> {
        match self.schema.get(relation) {
            Some(&a) if a != arity => Err(Error::ArityMismatch {
                relation: relation.to_string(),
                expected: a,
                found: arity,
                line: 0,
            }),
            Some(_) => Ok(()),
            None => {
                self.schema.insert(relation.to_string(), arity);
                Ok(())
            }
        }
    }

    /// Adds a fact, inferring the arity of unseen relations. Returns whether
    /// the fact was new.
    pub fn insert(&mut self, fact: Fact) -> Result<bool> {
        self.declare(&fact.relation, fact.arity())?;
        Ok(self.facts.insert(fact))
    }

    pub fn facts(&self) -> &BTreeSet<Fact> {
        &self.facts
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn len(&self) -> usize {
        self.facts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facts.is_empty()
    }

    pub fn contains(&self, fact: &Fact) -> bool {
        self.facts.contains(fact)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Fact> {
        self.facts.iter()
    }

    /// Facts of one relation, in canonical order.
    pub fn relation(&self, name: &str) -> impl Iterator<Item = &Fact> + '_ {
        let name = name.to_string();
        self.facts
            .range(Fact::lower_bound(&name)..)
            .take_while(move |f| f.relation == name)
    }

    /// The sub-database made of the given facts, keeping this schema.
    pub fn subset<'a>(&self, facts: impl IntoIterator<Item = &'a Fact>) -> Database {
        Database {
            facts: facts.into_iter().cloned().collect(),
            schema: self.schema.clone(),
        }
    }

    /// Serializes to the facts file format, declarations first.
    pub fn to_facts_text(&self) -> String {
        let mut out = String::new();
        for (rel, arity) in &self.schema {
            out.push_str(&format!("#relation {rel}/{arity}.\n"));
        }
        for f in &self.facts {
            out.push_str(&format!("{f}.\n"));
        }
        out
    }
}

/// Parses a facts file. Duplicate facts collapse; arities come from
/// `#relation` headers or from the first occurrence of each relation.
pub fn parse_facts(input: &str) -> Result<Database> {
    let mut cur = Cursor::new(input)?;
    let mut db = Database::new();
    while !cur.at_end() {
        let line = cur.line();
        let arity_err = |e: Error| match e {
            Error::ArityMismatch {
                relation,
                expected,
                found,
                ..
            } => Error::ArityMismatch {
                relation,
                expected,
                found,
                line,
            },
            other => other,
        };
        match cur.peek().cloned() {
            Some(Tok::Directive(d)) if d == "relation" => {
                cur.next();
                let (name, arity) = cur.relation_decl()?;
                db.declare(&name, arity).map_err(arity_err)?;
            }
            Some(Tok::Directive(d)) => return Err(cur.error(format!("unknown directive `#{d}`"))),
            _ => {
                let fact = cur.fact()?;
                cur.expect(Tok::Dot)?;
                db.insert(fact).map_err(arity_err)?;
            }
        }
    }
    Ok(db)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_employee_relation() {
        let db = parse_facts("employee(john,50,cs).\nemployee(john,100,cs).").unwrap();
        assert_eq!(db.len(), 2);
        assert_eq!(db.schema().get("employee"), Some(&3));
    }

    #[test]
    fn empty_and_duplicates() {
        assert!(parse_facts("").unwrap().is_empty());
        assert!(parse_facts("% only a comment\n").unwrap().is_empty());
        assert_eq!(parse_facts("p(1,2).\np(1,2).").unwrap().len(), 1);
    }

    #[test]
    fn arity_mismatch_reports_line() {
        let err = parse_facts("p(1,2).\n\np(1).").unwrap_err();
        assert_eq!(
            err,
            Error::ArityMismatch {
                relation: "p".into(),
                expected: 2,
                found: 1,
                line: 3
            }
        );
        let err = parse_facts("#relation p/3.\np(1,2).").unwrap_err();
        assert!(matches!(err, Error::ArityMismatch { expected: 3, found: 2, .. }));
    }

    #[test]
    fn syntax_error_has_position() {
        match parse_facts("p(1,2)\nq(3).") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_facts("p(1/0).").is_err());
        assert!(parse_facts("p(1/-2).").is_err());
    }

    #[test]
    fn comparisons() {
        let c = |a: &Value, b: &Value, op| compare_values(a, b, op).unwrap();
        assert!(c(&Value::int(50), &Value::int(100), CompareOp::Ne));
        let half = Value::rational(1, 2).unwrap();
        assert!(c(&half, &Value::int(1), CompareOp::Lt));
        assert!(c(&Value::rational(4, 2).unwrap(), &Value::int(2), CompareOp::Eq));
        let s = Value::symbol("x");
        assert!(c(&s, &s, CompareOp::Eq));
        assert!(!c(&s, &Value::int(1), CompareOp::Eq));
        assert!(c(&s, &Value::int(1), CompareOp::Ne));
        assert!(matches!(
            compare_values(&s, &Value::int(1), CompareOp::Lt),
            Err(Error::Incomparable { .. })
        ));
    }

    #[test]
    fn rational_normal_form() {
        assert_eq!(
            Value::rational(-6, -4).unwrap(),
            Value::Rational { num: 3, den: 2 }
        );
        assert_eq!(
            Value::rational(3, -6).unwrap(),
            Value::Rational { num: -1, den: 2 }
        );
        assert_eq!(Value::rational(0, 5).unwrap(), Value::Int(0));
    }

    #[test]
    fn symbols_before_numbers() {
        assert!(Value::symbol("zz") < Value::int(-100));
        assert!(Value::rational(-1, 3).unwrap() < Value::int(0));
    }

    #[test]
    fn quoted_symbols_round_trip() {
        let db = parse_facts("p('Hello World', 'it\\'s', a_1, -3, 7/3).").unwrap();
        let text = db.to_facts_text();
        assert_eq!(parse_facts(&text).unwrap(), db);
        assert!(text.contains("'Hello World'"));
    }

    #[test]
    fn relation_range() {
        let db = parse_facts("q(1).\np(2).\np(1).\nr(0).").unwrap();
        let ps: Vec<String> = db.relation("p").map(|f| f.to_string()).collect();
        assert_eq!(ps, ["p(1)", "p(2)"]);
        assert_eq!(db.relation("s").count(), 0);
    }
}
