use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{ActDefinitions, Document, Formula};

const KEYWORD_ACT: &str = "act";

/// A syntax error with its source position (1-based line and column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: expected ", self.line, self.column)?;
        match self.expected.as_slice() {
            [] => f.write_str("nothing")?,
            [one] => f.write_str(one)?,
            many => {
                let (last, init) = many.split_last().unwrap();
                write!(f, "{} or {}", init.join(", "), last)?;
            }
        }
        write!(f, ", found {}", self.found)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Tilde,
    Amp,
    Pipe,
    Arrow,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Eq,
    Semi,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => alloc::format!("identifier `{s}`"),
            Tok::Eof => "end of input".to_string(),
            other => alloc::format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::Ident(_) => "identifier",
            Tok::Tilde => "~",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Arrow => "->",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Eq => "=",
            Tok::Semi => ";",
            Tok::Eof => "end of input",
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_trivia(&mut self) {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() {
            match bytes[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' => self.pos += 1,
                b'#' => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                _ => break,
            }
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            let start = self.pos;
            let rest = &self.src[start..];
            let Some(c) = rest.chars().next() else {
                out.push((Tok::Eof, start));
                return Ok(out);
            };
            let single = match c {
                '~' => Some(Tok::Tilde),
                '&' => Some(Tok::Amp),
                '|' => Some(Tok::Pipe),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '=' => Some(Tok::Eq),
                ';' => Some(Tok::Semi),
                _ => None,
            };
            if let Some(tok) = single {
                self.pos += 1;
                out.push((tok, start));
            } else if rest.starts_with("->") {
                self.pos += 2;
                out.push((Tok::Arrow, start));
            } else if c.is_ascii_lowercase() {
                let len = rest
                    .find(|ch: char| !(ch.is_ascii_lowercase() || ch.is_ascii_digit() || ch == '_'))
                    .unwrap_or(rest.len());
                self.pos += len;
                out.push((Tok::Ident(rest[..len].to_string()), start));
            } else {
                return Err(error_at(
                    self.src,
                    start,
                    ["formula", "`act`"],
                    alloc::format!("unexpected character {c:?}"),
                ));
            }
        }
    }
}

fn error_at<const N: usize>(src: &str, offset: usize, expected: [&str; N], found: String) -> ParseError {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.chars().count(), |nl| before[nl + 1..].chars().count()) + 1;
    ParseError { offset, line, column, expected: expected.iter().map(|s| s.to_string()).collect(), found }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn fail<const N: usize, T>(&self, expected: [&str; N]) -> Result<T, ParseError> {
        Err(error_at(self.src, self.offset(), expected, self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let sym = alloc::format!("`{}`", tok.symbol());
            Err(error_at(self.src, self.offset(), [sym.as_str()], self.peek().describe()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(name) if name != KEYWORD_ACT => {
                let name = name.clone();
                self.bump();
                Ok(name)
            }
            Tok::Ident(_) => {
                Err(error_at(self.src, self.offset(), ["identifier"], "reserved keyword `act`".to_string()))
            }
            _ => self.fail(["identifier"]),
        }
    }

    fn document(&mut self) -> Result<Document, ParseError> {
        let mut defs = ActDefinitions::new();
        while matches!(self.peek(), Tok::Ident(k) if k == KEYWORD_ACT) {
            self.bump();
            let at = self.offset();
            let name = self.ident()?;
            self.expect(Tok::Eq)?;
            let body = self.formula()?;
            self.expect(Tok::Semi)?;
            if defs.insert(name.clone(), body).is_err() {
                return Err(error_at(self.src, at, ["fresh act name"], alloc::format!("duplicate act `{name}`")));
            }
        }
        let formula = if *self.peek() == Tok::Eof { None } else { Some(self.formula()?) };
        if *self.peek() != Tok::Eof {
            return self.fail(["`->`", "`|`", "`&`", "end of input"]);
        }
        let names: Vec<String> = defs.names().map(String::from).collect();
        let resolve = |f: &Formula| resolve_refs(f, &names);
        let mut resolved = ActDefinitions::new();
        for (name, body) in defs.iter() {
            resolved.insert(name, resolve(body)).expect("names already unique");
        }
        Ok(Document { definitions: resolved, formula: formula.as_ref().map(resolve) })
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Tilde => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::LBracket => {
                self.bump();
                let force = self.ident()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::LParen)?;
                let content = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(Formula::force(force, content))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(_) => Ok(Formula::Atom(self.ident()?)),
            _ => self.fail(["`~`", "`[`", "`(`", "identifier"]),
        }
    }
}

fn resolve_refs(f: &Formula, acts: &[String]) -> Formula {
    match f {
        Formula::Atom(n) if acts.contains(n) => Formula::ActRef(n.clone()),
        Formula::Atom(_) | Formula::ActRef(_) => f.clone(),
        Formula::Not(x) => Formula::not(resolve_refs(x, acts)),
        Formula::Force(n, x) => Formula::force(n.clone(), resolve_refs(x, acts)),
        Formula::And(l, r) => Formula::and(resolve_refs(l, acts), resolve_refs(r, acts)),
        Formula::Or(l, r) => Formula::or(resolve_refs(l, acts), resolve_refs(r, acts)),
        Formula::Implies(l, r) => Formula::implies(resolve_refs(l, acts), resolve_refs(r, acts)),
    }
}

/// Parses a definition file: zero or more `act name = formula;` lines and
/// an optional main formula. Identifiers naming a defined act become
/// [`Formula::ActRef`]; all others are atoms.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let toks = Lexer { src: text, pos: 0 }.tokens()?;
    Parser { src: text, toks, pos: 0 }.document()
}

/// Parses a single formula without definitions.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let doc = parse(text)?;
    match doc.formula {
        Some(f) if doc.definitions.is_empty() => Ok(f),
        Some(_) => Err(error_at(text, 0, ["formula"], "act definitions".to_string())),
        None => Err(error_at(text, text.len(), ["formula"], "end of input".to_string())),
    }
}
