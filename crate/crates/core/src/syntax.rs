//! Tokenizer and shared parsing helpers for the facts, denial and
//! disjunctive text formats.

use crate::error::{Error, Result};
use crate::model::{CompareOp, Fact, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Var(String),
    Int(i64),
    Quoted(String),
    Directive(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Slash,
    Colon,
    Implied,
    Arrow,
    Cmp(CompareOp),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Var(s) => format!("variable `{s}`"),
            Tok::Int(i) => format!("integer `{i}`"),
            Tok::Quoted(s) => format!("quoted symbol '{s}'"),
            Tok::Directive(s) => format!("directive `#{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Implied => "`:-`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Cmp(op) => format!("`{op}`"),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);

    let err = |line, column, message: String| Error::Syntax {
        line,
        column,
        message,
    };

    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let mut push = |tok, len: usize, i: &mut usize, col: &mut usize| {
            out.push(Token {
                tok,
                line: tl,
                column: tc,
            });
            *i += len;
            *col += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '(' => push(Tok::LParen, 1, &mut i, &mut col),
            ')' => push(Tok::RParen, 1, &mut i, &mut col),
            ',' => push(Tok::Comma, 1, &mut i, &mut col),
            '.' => push(Tok::Dot, 1, &mut i, &mut col),
            '/' => push(Tok::Slash, 1, &mut i, &mut col),
            ':' if chars.get(i + 1) == Some(&'-') => push(Tok::Implied, 2, &mut i, &mut col),
            ':' => push(Tok::Colon, 1, &mut i, &mut col),
            '-' if chars.get(i + 1) == Some(&'>') => push(Tok::Arrow, 2, &mut i, &mut col),
            '!' if chars.get(i + 1) == Some(&'=') => {
                push(Tok::Cmp(CompareOp::Ne), 2, &mut i, &mut col)
            }
            '<' if chars.get(i + 1) == Some(&'=') => {
                push(Tok::Cmp(CompareOp::Le), 2, &mut i, &mut col)
            }
            '>' if chars.get(i + 1) == Some(&'=') => {
                push(Tok::Cmp(CompareOp::Ge), 2, &mut i, &mut col)
            }
            '<' => push(Tok::Cmp(CompareOp::Lt), 1, &mut i, &mut col),
            '>' => push(Tok::Cmp(CompareOp::Gt), 1, &mut i, &mut col),
            '=' => push(Tok::Cmp(CompareOp::Eq), 1, &mut i, &mut col),
            '-' | '0'..='9' => {
                let start = i;
                let mut j = i + 1;
                if c == '-' && !chars.get(j).is_some_and(|d| d.is_ascii_digit()) {
                    return Err(err(tl, tc, "expected digits after `-`".into()));
                }
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let text: String = chars[start..j].iter().collect();
                let value: i64 = text
                    .parse()
                    .map_err(|_| err(tl, tc, format!("integer `{text}` out of range")))?;
                push(Tok::Int(value), j - start, &mut i, &mut col);
            }
            '\'' => {
                let mut j = i + 1;
                let mut text = String::new();
                loop {
                    match chars.get(j) {
                        None | Some('\n') => {
                            return Err(err(tl, tc, "unterminated quoted symbol".into()))
                        }
                        Some('\\') => match chars.get(j + 1) {
                            Some(&e @ ('\\' | '\'')) => {
                                text.push(e);
                                j += 2;
                            }
                            _ => return Err(err(tl, tc, "invalid escape in quoted symbol".into())),
                        },
                        Some('\'') => {
                            j += 1;
                            break;
                        }
                        Some(&ch) => {
                            text.push(ch);
                            j += 1;
                        }
                    }
                }
                if text.is_empty() {
                    return Err(err(tl, tc, "empty quoted symbol".into()));
                }
                push(Tok::Quoted(text), j - i, &mut i, &mut col);
            }
            '#' => {
                let mut j = i + 1;
                while j < chars.len() && chars[j].is_ascii_alphanumeric() {
                    j += 1;
                }
                let name: String = chars[i + 1..j].iter().collect();
                if name.is_empty() {
                    return Err(err(tl, tc, "expected directive name after `#`".into()));
                }
                push(Tok::Directive(name), j - i, &mut i, &mut col);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i + 1;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                let tok = if c.is_ascii_lowercase() {
                    Tok::Ident(word)
                } else {
                    Tok::Var(word)
                };
                push(tok, j - i, &mut i, &mut col);
            }
            other => return Err(err(tl, tc, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Cursor over a token list with position-aware errors.
pub(crate) struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

impl Cursor {
    pub fn new(input: &str) -> Result<Self> {
        let tokens = tokenize(input)?;
        let lines = input.split('\n').count().max(1);
        let last_col = input.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Ok(Cursor {
            tokens,
            pos: 0,
            eof: (lines, last_col),
        })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + offset).map(|t| &t.tok)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn line(&self) -> usize {
        self.location().0
    }

    pub fn location(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map_or(self.eof, |t| (t.line, t.column))
    }

    pub fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        let (line, column) = self.location();
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn unexpected(&self, wanted: &str) -> Error {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", t.describe())),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    pub fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("relation name")),
        }
    }

    pub fn positive_int(&mut self, what: &str) -> Result<i64> {
        match self.peek() {
            Some(&Tok::Int(i)) if i > 0 => {
                self.pos += 1;
                Ok(i)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    pub fn non_negative_int(&mut self, what: &str) -> Result<i64> {
        match self.peek() {
            Some(&Tok::Int(i)) if i >= 0 => {
                self.pos += 1;
                Ok(i)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    /// Parses a literal: integer, rational `int/posint`, or symbol.
    pub fn value(&mut self) -> Result<Value> {
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                if self.eat(&Tok::Slash) {
                    let (line, column) = self.location();
                    let den = self.positive_int("positive denominator")?;
                    Value::rational(num, den).map_err(|e| Error::Syntax {
                        line,
                        column,
                        message: e.to_string(),
                    })
                } else {
                    Ok(Value::Int(num))
                }
            }
            Some(Tok::Ident(s)) | Some(Tok::Quoted(s)) => {
                self.pos += 1;
                Ok(Value::Symbol(s))
            }
            _ => Err(self.unexpected("a value")),
        }
    }

    /// Parses `rel` or `rel(v1,...,vk)` with literal arguments.
    pub fn fact(&mut self) -> Result<Fact> {
        let relation = self.ident()?;
        let mut args = Vec::new();
        if self.eat(&Tok::LParen) && !self.eat(&Tok::RParen) {
            loop {
                args.push(self.value()?);
                if self.eat(&Tok::RParen) {
                    break;
                }
                self.expect(Tok::Comma)?;
            }
        }
        Ok(Fact::new(relation, args))
    }

    /// Parses the remainder of a `#relation name/k.` directive, after the
    /// directive token itself.
    pub fn relation_decl(&mut self) -> Result<(String, usize)> {
        let name = self.ident()?;
        self.expect(Tok::Slash)?;
        let arity = self.non_negative_int("arity")? as usize;
        self.expect(Tok::Dot)?;
        Ok((name, arity))
    }
}
