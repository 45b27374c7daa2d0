//! Formula language: atoms, `~ & | ->`, force applications `[name](…)` and
//! references to named act definitions.
//!
//! ```text
//! formula := or ("->" formula)?
//! or      := and ("|" and)*
//! and     := not ("&" not)*
//! not     := "~" not | "[" ident "]" "(" formula ")" | ident | "(" formula ")"
//! file    := ("act" ident "=" formula ";")* formula?
//! ident   := [a-z][a-z0-9_]*
//! ```

mod cycles;
mod parser;
mod printer;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

pub use cycles::{detect_cycles, reaches_cycle};
pub use parser::{parse, parse_formula, ParseError};
pub use printer::{print, print_document};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    /// A force applied to a propositional content.
    Force(String, Box<Formula>),
    /// Reference to a named act definition.
    ActRef(String),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn act_ref(name: impl Into<String>) -> Self {
        Formula::ActRef(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn force(name: impl Into<String>, content: Formula) -> Self {
        Formula::Force(name.into(), Box::new(content))
    }

    /// Direct subformulas.
    pub fn children(&self) -> impl Iterator<Item = &Formula> {
        let (a, b): (Option<&Formula>, Option<&Formula>) = match self {
            Formula::Atom(_) | Formula::ActRef(_) => (None, None),
            Formula::Not(x) | Formula::Force(_, x) => (Some(x), None),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => (Some(l), Some(r)),
        };
        a.into_iter().chain(b)
    }

    pub fn depth(&self) -> usize {
        1 + self.children().map(Formula::depth).max().unwrap_or(0)
    }

    /// Atom names occurring syntactically, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(n) = f {
                out.insert(n.clone());
            }
        });
        out
    }

    /// Force names occurring syntactically; act references are not followed.
    pub fn forces(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Force(n, _) = f {
                out.insert(n.clone());
            }
        });
        out
    }

    /// Act names referenced syntactically.
    pub fn act_refs(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::ActRef(n) = f {
                out.insert(n.clone());
            }
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    /// Replaces every `ActRef(name)` by `with`.
    pub fn substitute(&self, name: &str, with: &Formula) -> Formula {
        self.map_refs(&mut |n| (n == name).then(|| with.clone()))
    }

    fn map_refs(&self, f: &mut impl FnMut(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::ActRef(n) => f(n).unwrap_or_else(|| self.clone()),
            Formula::Not(x) => Formula::not(x.map_refs(f)),
            Formula::Force(n, x) => Formula::force(n.clone(), x.map_refs(f)),
            Formula::And(l, r) => Formula::and(l.map_refs(f), r.map_refs(f)),
            Formula::Or(l, r) => Formula::or(l.map_refs(f), r.map_refs(f)),
            Formula::Implies(l, r) => Formula::implies(l.map_refs(f), r.map_refs(f)),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self))
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

/// Named act definitions in declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActDefinitions {
    defs: Vec<(String, Formula)>,
}

impl ActDefinitions {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, body: Formula) -> Result<(), Error> {
        let name = name.into();
        if self.get(&name).is_some() {
            return Err(Error::DuplicateAct(name));
        }
        self.defs.push((name, body));
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.defs.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.get(name).is_some()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.defs.iter().position(|(n, _)| n == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Formula)> {
        self.defs.iter().map(|(n, f)| (n.as_str(), f))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.defs.iter().map(|(n, _)| n.as_str())
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    /// Checks that every reference names a defined act.
    pub fn validate(&self) -> Result<(), Error> {
        for (_, body) in self.iter() {
            self.check_refs(body)?;
        }
        Ok(())
    }

    pub fn check_refs(&self, f: &Formula) -> Result<(), Error> {
        for r in f.act_refs() {
            if !self.contains(&r) {
                return Err(Error::UnknownActRef(r));
            }
        }
        Ok(())
    }

    /// Replaces every act reference by its body. Fails with
    /// [`Error::CyclicAct`] when the unfolding does not terminate.
    pub fn inline(&self, f: &Formula) -> Result<Formula, Error> {
        let mut stack = Vec::new();
        self.inline_rec(f, &mut stack)
    }

    fn inline_rec<'a>(&'a self, f: &Formula, stack: &mut Vec<&'a str>) -> Result<Formula, Error> {
        Ok(match f {
            Formula::Atom(_) => f.clone(),
            Formula::ActRef(n) => {
                let (name, body) =
                    self.defs.iter().find(|(d, _)| d == n).ok_or_else(|| Error::UnknownActRef(n.clone()))?;
                if stack.contains(&name.as_str()) {
                    return Err(Error::CyclicAct(n.clone()));
                }
                stack.push(name);
                let out = self.inline_rec(body, stack)?;
                stack.pop();
                out
            }
            Formula::Not(x) => Formula::not(self.inline_rec(x, stack)?),
            Formula::Force(n, x) => Formula::force(n.clone(), self.inline_rec(x, stack)?),
            Formula::And(l, r) => Formula::and(self.inline_rec(l, stack)?, self.inline_rec(r, stack)?),
            Formula::Or(l, r) => Formula::or(self.inline_rec(l, stack)?, self.inline_rec(r, stack)?),
            Formula::Implies(l, r) => Formula::implies(self.inline_rec(l, stack)?, self.inline_rec(r, stack)?),
        })
    }

    /// Force names reachable from `f`, following act references.
    pub fn forces_of(&self, f: &Formula) -> Result<BTreeSet<String>, Error> {
        let mut out = f.forces();
        let mut seen = BTreeSet::new();
        let mut todo: Vec<String> = f.act_refs().into_iter().collect();
        while let Some(name) = todo.pop() {
            if !seen.insert(name.clone()) {
                continue;
            }
            let body = self.get(&name).ok_or_else(|| Error::UnknownActRef(name.clone()))?;
            out.extend(body.forces());
            todo.extend(body.act_refs());
        }
        Ok(out)
    }

    /// True when no force is reachable from `f`.
    pub fn is_force_free(&self, f: &Formula) -> Result<bool, Error> {
        Ok(self.forces_of(f)?.is_empty())
    }
}

/// A parsed `.illoc` file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub definitions: ActDefinitions,
    pub formula: Option<Formula>,
}

/// The five illocutionary points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IllocutionaryPoint {
    Assertive,
    Commissive,
    Directive,
    Declarative,
    Expressive,
}

impl IllocutionaryPoint {
    pub const ALL: [IllocutionaryPoint; 5] = [
        IllocutionaryPoint::Assertive,
        IllocutionaryPoint::Commissive,
        IllocutionaryPoint::Directive,
        IllocutionaryPoint::Declarative,
        IllocutionaryPoint::Expressive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IllocutionaryPoint::Assertive => "assertive",
            IllocutionaryPoint::Commissive => "commissive",
            IllocutionaryPoint::Directive => "directive",
            IllocutionaryPoint::Declarative => "declarative",
            IllocutionaryPoint::Expressive => "expressive",
        }
    }
}

impl FromStr for IllocutionaryPoint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| alloc::format!("unknown illocutionary point {s:?}"))
    }
}

/// A force name with its (metadata-only) illocutionary point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForceDecl {
    pub name: String,
    pub point: Option<IllocutionaryPoint>,
}

impl ForceDecl {
    pub fn new(name: &str, point: Option<IllocutionaryPoint>) -> Result<Self, Error> {
        if !crate::boolalg::is_identifier(name) {
            return Err(Error::InvalidName(name.to_string()));
        }
        Ok(ForceDecl { name: name.to_string(), point })
    }
}
