//! The statement language: AST, canonical forms, parser and printer.
//!
//! Grammar (whitespace-insensitive between tokens):
//!
//! ```text
//! stmt    := unary ( "=>" stmt )?          implication, right-associative
//! unary   := "!" unary | primary           negation binds tightest
//! primary := "(" stmt ")" | "T" | "F"
//!          | "unprov" "(" nat ")"
//!          | "deg" "(" nat ")" "=" nat
//!          | atom
//! atom    := [a-z][a-z0-9_]*               (`unprov` and `deg` are reserved)
//! ```
//!
//! Canonical form never contains a double negation and never negates the
//! truth constants directly: `!!x` collapses to `x`, `!T` to `F`, `!F` to
//! `T`. All constructors and the parser enforce this, so syntactic
//! equivalence is plain structural equality.

use num_bigint::BigUint;
use std::fmt;

/// A canonical statement of the language.
///
/// The meta variants carry statement codes produced by [`crate::godel`]:
/// `Unprovable { code }` renders as `unprov(<code>)` and asserts that the
/// decoded statement has no proof, `DegreeEq { code, degree }` renders as
/// `deg(<code>)=<degree>` and asserts a reachability-degree value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Atom(String),
    ConstTrue,
    ConstFalse,
    Not(Box<Statement>),
    Implies(Box<Statement>, Box<Statement>),
    Unprovable { code: BigUint },
    DegreeEq { code: BigUint, degree: u64 },
}

impl Statement {
    pub fn atom(name: impl Into<String>) -> Self {
        Statement::Atom(name.into())
    }

    pub fn implies(lhs: Statement, rhs: Statement) -> Self {
        Statement::Implies(Box::new(lhs), Box::new(rhs))
    }

    /// Canonical negation: collapses `!!x` and maps the constants onto each
    /// other, so `s.negated().negated() == s` for every canonical `s`.
    pub fn negated(self) -> Self {
        match self {
            Statement::Not(inner) => *inner,
            Statement::ConstTrue => Statement::ConstFalse,
            Statement::ConstFalse => Statement::ConstTrue,
            other => Statement::Not(Box::new(other)),
        }
    }

    pub fn is_implication(&self) -> bool {
        matches!(self, Statement::Implies(_, _))
    }

    /// Structural canonicality scan: no `Not(Not(_))` and no negated
    /// constant anywhere in the tree. Code validity of meta atoms is
    /// enforced by the parser, not re-checked here.
    pub fn is_canonical(&self) -> bool {
        match self {
            Statement::Not(inner) => !matches!(
                **inner,
                Statement::Not(_) | Statement::ConstTrue | Statement::ConstFalse
            ) && inner.is_canonical(),
            Statement::Implies(lhs, rhs) => lhs.is_canonical() && rhs.is_canonical(),
            _ => true,
        }
    }
}

/// Canonical negation of a borrowed statement.
pub fn negate(s: &Statement) -> Statement {
    s.clone().negated()
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Atom(name) => write!(f, "{name}"),
            Statement::ConstTrue => write!(f, "T"),
            Statement::ConstFalse => write!(f, "F"),
            Statement::Not(inner) => {
                if inner.is_implication() {
                    write!(f, "!({inner})")
                } else {
                    write!(f, "!{inner}")
                }
            }
            Statement::Implies(lhs, rhs) => {
                if lhs.is_implication() {
                    write!(f, "({lhs}) => {rhs}")
                } else {
                    write!(f, "{lhs} => {rhs}")
                }
            }
            Statement::Unprovable { code } => write!(f, "unprov({code})"),
            Statement::DegreeEq { code, degree } => write!(f, "deg({code})={degree}"),
        }
    }
}

/// Parse failure, reported with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Unexpected {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("at byte {offset}: code {code} does not decode to a statement")]
    InvalidCode { offset: usize, code: BigUint },
    #[error("at byte {offset}: `{word}` is reserved and cannot be an atom")]
    ReservedAtom { offset: usize, word: String },
    #[error("at byte {offset}: degree value does not fit a machine natural")]
    DegreeOverflow { offset: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Nat(BigUint),
    Bang,
    LParen,
    RParen,
    Arrow,
    Eq,
    True,
    False,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Nat(n) => format!("number {n}"),
            Tok::Bang => "`!`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Arrow => "`=>`".into(),
            Tok::Eq => "`=`".into(),
            Tok::True => "`T`".into(),
            Tok::False => "`F`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' => i += 1,
            b'!' => {
                toks.push((Tok::Bang, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'=' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    toks.push((Tok::Arrow, i));
                    i += 2;
                } else {
                    toks.push((Tok::Eq, i));
                    i += 1;
                }
            }
            b'T' => {
                toks.push((Tok::True, i));
                i += 1;
            }
            b'F' => {
                toks.push((Tok::False, i));
                i += 1;
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase()
                        || bytes[i].is_ascii_digit()
                        || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigUint = text[start..i].parse().expect("digit run");
                toks.push((Tok::Nat(n), start));
            }
            _ => {
                return Err(ParseError::Unexpected {
                    offset: i,
                    expected: vec!["statement token"],
                    found: format!("`{}`", &text[i..i + (b as char).len_utf8()]),
                })
            }
        }
    }
    toks.push((Tok::Eof, bytes.len()));
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &(Tok, usize) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        let (tok, offset) = self.peek();
        ParseError::Unexpected {
            offset: *offset,
            expected,
            found: tok.describe(),
        }
    }

    fn expect(&mut self, want: Tok, label: &'static str) -> Result<usize, ParseError> {
        if self.peek().0 == want {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(vec![label]))
        }
    }

    fn nat(&mut self) -> Result<(BigUint, usize), ParseError> {
        match self.peek().0.clone() {
            Tok::Nat(n) => {
                let off = self.bump().1;
                Ok((n, off))
            }
            _ => Err(self.unexpected(vec!["number"])),
        }
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        let lhs = self.unary()?;
        if self.peek().0 == Tok::Arrow {
            self.bump();
            let rhs = self.statement()?;
            Ok(Statement::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn unary(&mut self) -> Result<Statement, ParseError> {
        if self.peek().0 == Tok::Bang {
            self.bump();
            Ok(self.unary()?.negated())
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<Statement, ParseError> {
        match self.peek().0.clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.statement()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::True => {
                self.bump();
                Ok(Statement::ConstTrue)
            }
            Tok::False => {
                self.bump();
                Ok(Statement::ConstFalse)
            }
            Tok::Ident(name) if name == "unprov" => {
                let kw_off = self.bump().1;
                if self.peek().0 != Tok::LParen {
                    return Err(ParseError::ReservedAtom {
                        offset: kw_off,
                        word: name,
                    });
                }
                self.bump();
                let (code, code_off) = self.nat()?;
                self.expect(Tok::RParen, "`)`")?;
                check_code(&code, code_off)?;
                Ok(Statement::Unprovable { code })
            }
            Tok::Ident(name) if name == "deg" => {
                let kw_off = self.bump().1;
                if self.peek().0 != Tok::LParen {
                    return Err(ParseError::ReservedAtom {
                        offset: kw_off,
                        word: name,
                    });
                }
                self.bump();
                let (code, code_off) = self.nat()?;
                self.expect(Tok::RParen, "`)`")?;
                self.expect(Tok::Eq, "`=`")?;
                let (degree, deg_off) = self.nat()?;
                let degree: u64 = degree
                    .try_into()
                    .map_err(|_| ParseError::DegreeOverflow { offset: deg_off })?;
                check_code(&code, code_off)?;
                Ok(Statement::DegreeEq { code, degree })
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Statement::Atom(name))
            }
            _ => Err(self.unexpected(vec!["statement"])),
        }
    }
}

/// Meta-atom codes must decode to a statement; this keeps every canonical
/// statement's embedded codes meaningful.
fn check_code(code: &BigUint, offset: usize) -> Result<(), ParseError> {
    if crate::godel::decode_statement_value(code).is_some() {
        Ok(())
    } else {
        Err(ParseError::InvalidCode {
            offset,
            code: code.clone(),
        })
    }
}

/// Parse a statement from its grammar text into canonical form.
pub fn parse(text: &str) -> Result<Statement, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0 };
    let s = p.statement()?;
    if p.peek().0 != Tok::Eof {
        return Err(p.unexpected(vec!["end of input", "`=>`"]));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: &str) -> Statement {
        Statement::atom(n)
    }

    #[test]
    fn parses_implication() {
        assert_eq!(parse("a => b").unwrap(), Statement::implies(a("a"), a("b")));
    }

    #[test]
    fn double_negation_collapses_at_parse() {
        assert_eq!(parse("!!a").unwrap(), a("a"));
        assert_eq!(parse("!!!a").unwrap(), a("a").negated());
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse("a => b => c").unwrap(),
            Statement::implies(a("a"), Statement::implies(a("b"), a("c")))
        );
    }

    #[test]
    fn parenthesized_lhs_differs() {
        assert_eq!(
            parse("(a => b) => c").unwrap(),
            Statement::implies(Statement::implies(a("a"), a("b")), a("c"))
        );
    }

    #[test]
    fn negated_constants_normalize() {
        assert_eq!(parse("!T").unwrap(), Statement::ConstFalse);
        assert_eq!(parse("!F").unwrap(), Statement::ConstTrue);
        assert_eq!(a("a").negated().negated(), a("a"));
        assert_eq!(Statement::ConstTrue.negated(), Statement::ConstFalse);
    }

    #[test]
    fn meta_atoms_round_trip() {
        let s = parse("unprov(5)").unwrap();
        assert_eq!(s.to_string(), "unprov(5)");
        let d = parse("deg(5)=1").unwrap();
        assert_eq!(d.to_string(), "deg(5)=1");
    }

    #[test]
    fn invalid_meta_code_rejected() {
        // 38 decodes to the bare `!` character, which is not a statement.
        match parse("unprov(38)") {
            Err(ParseError::InvalidCode { .. }) => {}
            other => panic!("expected InvalidCode, got {other:?}"),
        }
    }

    #[test]
    fn reserved_words_are_not_atoms() {
        assert!(matches!(
            parse("unprov"),
            Err(ParseError::ReservedAtom { .. })
        ));
        assert!(matches!(parse("deg => a"), Err(ParseError::ReservedAtom { .. })));
    }

    #[test]
    fn truncated_input_reports_offset() {
        match parse("a =>") {
            Err(ParseError::Unexpected { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected Unexpected, got {other:?}"),
        }
    }

    #[test]
    fn display_inserts_parens_only_where_needed() {
        let s = parse("!(a => b) => !c => T").unwrap();
        assert_eq!(s.to_string(), "!(a => b) => !c => T");
        let lhs = parse("(a => b) => c").unwrap();
        assert_eq!(lhs.to_string(), "(a => b) => c");
    }

    #[test]
    fn print_parse_round_trip_on_samples() {
        for text in [
            "a",
            "!a",
            "a => b",
            "a => b => c",
            "(a => b) => c",
            "!(a => b)",
            "unprov(5)",
            "deg(5)=2",
            "!unprov(5) => deg(1)=0",
            "T => F",
        ] {
            let s = parse(text).unwrap();
            assert_eq!(parse(&s.to_string()).unwrap(), s, "round trip of {text}");
            assert!(s.is_canonical());
        }
    }
}
