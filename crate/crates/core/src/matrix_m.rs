//! The four-valued matrix for a single performative verb.
//!
//! Carrier `{1, 1/2, 0, -1/2}` ordered `-1/2 < 0 < 1/2 < 1`, designated value
//! `1`. Sentences take the values `1`/`0`; performances `1/2`/`-1/2`. On a
//! pair of performance values disjunction and conjunction are dualized
//! (infimum and supremum swap roles).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::search::Probe;
use crate::syntax::{ActDefinitions, Formula};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TruthValue4 {
    NegHalf,
    Zero,
    Half,
    One,
}

use TruthValue4::{Half, NegHalf, One, Zero};

impl TruthValue4 {
    pub const ALL: [TruthValue4; 4] = [NegHalf, Zero, Half, One];

    /// The value as a multiple of 1/2.
    pub fn halves(self) -> i8 {
        match self {
            NegHalf => -1,
            Zero => 0,
            Half => 1,
            One => 2,
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            One
        } else {
            Zero
        }
    }

    pub fn is_designated(self) -> bool {
        self == One
    }

    /// `1/2` or `-1/2`.
    pub fn is_performance(self) -> bool {
        matches!(self, Half | NegHalf)
    }

    pub fn neg(self) -> Self {
        match self {
            One => Zero,
            Zero => One,
            Half => NegHalf,
            NegHalf => Half,
        }
    }

    /// The force operator: subtracts 1/2 from sentence values, fixes
    /// performance values.
    pub fn force(self) -> Self {
        match self {
            One => Half,
            Zero => NegHalf,
            perf => perf,
        }
    }

    pub fn implies(self, y: Self) -> Self {
        let x = self;
        if x <= y {
            One
        } else if x == One {
            y
        } else if x == Zero || y == Zero {
            Half
        } else {
            Zero
        }
    }

    pub fn or(self, y: Self) -> Self {
        if self.is_performance() && y.is_performance() {
            self.min(y)
        } else {
            self.max(y)
        }
    }

    pub fn and(self, y: Self) -> Self {
        if self.is_performance() && y.is_performance() {
            self.max(y)
        } else {
            self.min(y)
        }
    }

    pub fn classify(self) -> Classification {
        match self {
            One => Classification::TrueSentence,
            Zero => Classification::FalseSentence,
            Half => Classification::SuccessfulPerformance,
            NegHalf => Classification::UnsuccessfulPerformance,
        }
    }
}

impl fmt::Display for TruthValue4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            One => "1",
            Half => "1/2",
            Zero => "0",
            NegHalf => "-1/2",
        })
    }
}

impl FromStr for TruthValue4 {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" => Ok(One),
            "1/2" => Ok(Half),
            "0" => Ok(Zero),
            "-1/2" => Ok(NegHalf),
            other => Err(alloc::format!("not a truth value: {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    TrueSentence,
    FalseSentence,
    SuccessfulPerformance,
    UnsuccessfulPerformance,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::TrueSentence => "true-sentence",
            Classification::FalseSentence => "false-sentence",
            Classification::SuccessfulPerformance => "successful-performance",
            Classification::UnsuccessfulPerformance => "unsuccessful-performance",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Two-valued assignment to atoms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AtomValuation2(pub BTreeMap<String, bool>);

impl AtomValuation2 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, atom: &str, value: bool) -> Self {
        self.0.insert(atom.into(), value);
        self
    }

    pub fn get(&self, atom: &str) -> Option<bool> {
        self.0.get(atom).copied()
    }
}

impl fmt::Display for AtomValuation2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.0 {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{k}={}", u8::from(*v))?;
            first = false;
        }
        Ok(())
    }
}

/// Evaluates an act-free formula. Every force name denotes the same
/// operator.
pub fn eval_resolved(f: &Formula, e: &AtomValuation2) -> Result<TruthValue4, Error> {
    Ok(match f {
        Formula::Atom(n) => TruthValue4::from_bool(e.get(n).ok_or_else(|| Error::MissingAtom(n.clone()))?),
        Formula::Not(x) => eval_resolved(x, e)?.neg(),
        Formula::Force(_, x) => eval_resolved(x, e)?.force(),
        Formula::And(l, r) => eval_resolved(l, e)?.and(eval_resolved(r, e)?),
        Formula::Or(l, r) => eval_resolved(l, e)?.or(eval_resolved(r, e)?),
        Formula::Implies(l, r) => eval_resolved(l, e)?.implies(eval_resolved(r, e)?),
        Formula::ActRef(n) => return Err(Error::UnknownActRef(n.clone())),
    })
}

/// The illocutionary valuation `Ve` under the atom assignment `e`.
pub fn eval_m(f: &Formula, e: &AtomValuation2, defs: &ActDefinitions) -> Result<TruthValue4, Error> {
    eval_resolved(&defs.inline(f)?, e)
}

/// One of the matrix inequalities (1)–(7), checked over every tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub number: u8,
    pub statement: &'static str,
    pub checked: usize,
    pub violations: Vec<Vec<TruthValue4>>,
    /// First tuple where an inequality is strict.
    pub strict_witness: Option<Vec<TruthValue4>>,
}

impl PropertyCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy)]
enum Cmp {
    Geq,
    Leq,
    Eq,
}

fn check(
    number: u8,
    statement: &'static str,
    arity: usize,
    cmp: Cmp,
    sides: impl Fn(&[TruthValue4]) -> (TruthValue4, TruthValue4),
) -> PropertyCheck {
    let mut tuples: Vec<Vec<TruthValue4>> = alloc::vec![Vec::new()];
    for _ in 0..arity {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                TruthValue4::ALL.into_iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    let mut out =
        PropertyCheck { number, statement, checked: tuples.len(), violations: Vec::new(), strict_witness: None };
    for t in tuples {
        let (l, r) = sides(&t);
        let ok = match cmp {
            Cmp::Geq => l >= r,
            Cmp::Leq => l <= r,
            Cmp::Eq => l == r,
        };
        if !ok {
            out.violations.push(t);
        } else if l != r && out.strict_witness.is_none() {
            out.strict_witness = Some(t);
        }
    }
    out
}

/// Exhaustive check of properties (1)–(7) of the force operator.
pub fn check_matrix_properties() -> Vec<PropertyCheck> {
    alloc::vec![
        check(1, "a >= F(a)", 1, Cmp::Geq, |t| (t[0], t[0].force())),
        check(2, "~a >= ~F(a)", 1, Cmp::Geq, |t| (t[0].neg(), t[0].force().neg())),
        check(3, "F(a) & F(b) >= F(a & b)", 2, Cmp::Geq, |t| {
            (t[0].force().and(t[1].force()), t[0].and(t[1]).force())
        }),
        check(4, "F(a) | F(b) <= F(a | b)", 2, Cmp::Leq, |t| {
            (t[0].force().or(t[1].force()), t[0].or(t[1]).force())
        }),
        check(5, "(F(a) -> F(b)) >= F(a -> b)", 2, Cmp::Geq, |t| {
            (t[0].force().implies(t[1].force()), t[0].implies(t[1]).force())
        }),
        check(6, "F(F(a)) = F(a)", 1, Cmp::Eq, |t| (t[0].force().force(), t[0].force())),
        check(7, "~F(a) = F(~a)", 1, Cmp::Eq, |t| (t[0].force().neg(), t[0].neg().force())),
    ]
}

/// The values of `a & ~a`, `F(a & ~a)` and `F(a) & ~F(a)` for one `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ContradictionValues {
    pub a: TruthValue4,
    pub contradiction: TruthValue4,
    pub forced_contradiction: TruthValue4,
    pub contradictory_forces: TruthValue4,
}

/// Reports the three contradiction forms for every carrier value.
pub fn contradiction_ordering() -> Vec<ContradictionValues> {
    TruthValue4::ALL
        .into_iter()
        .map(|a| ContradictionValues {
            a,
            contradiction: a.and(a.neg()),
            forced_contradiction: a.and(a.neg()).force(),
            contradictory_forces: a.force().and(a.force().neg()),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W, V> {
    Tautology,
    Refuted { witness: W, value: V },
}

impl<W, V> Verdict<W, V> {
    pub fn is_tautology(&self) -> bool {
        matches!(self, Verdict::Tautology)
    }
}

pub type VerdictM = Verdict<AtomValuation2, TruthValue4>;

/// All `2^n` assignments to a sorted atom list. Index `i` gives the first
/// atom the most significant bit, so index order is lexicographic.
#[derive(Clone, Debug)]
pub struct AssignmentSpace {
    atoms: Vec<String>,
}

impl AssignmentSpace {
    pub fn new(atoms: impl IntoIterator<Item = String>) -> Self {
        let mut atoms: Vec<String> = atoms.into_iter().collect();
        atoms.sort();
        atoms.dedup();
        AssignmentSpace { atoms }
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> u64 {
        1u64 << self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn assignment(&self, index: u64) -> AtomValuation2 {
        let n = self.atoms.len();
        AtomValuation2(self.atoms.iter().enumerate().map(|(i, a)| (a.clone(), index >> (n - 1 - i) & 1 == 1)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = AtomValuation2> + '_ {
        (0..self.len()).map(|i| self.assignment(i))
    }
}

/// Search for a valuation that does not designate a formula.
pub struct TautologyM {
    formula: Formula,
    space: AssignmentSpace,
}

impl TautologyM {
    pub fn new(f: &Formula, defs: &ActDefinitions) -> Result<Self, Error> {
        let formula = defs.inline(f)?;
        let space = AssignmentSpace::new(formula.atoms());
        Ok(TautologyM { formula, space })
    }

    pub fn space(&self) -> &AssignmentSpace {
        &self.space
    }
}

impl Probe for TautologyM {
    type Hit = (AtomValuation2, TruthValue4);

    fn len(&self) -> u64 {
        self.space.len()
    }

    fn probe(&self, index: u64) -> Result<Option<Self::Hit>, Error> {
        let e = self.space.assignment(index);
        let v = eval_resolved(&self.formula, &e)?;
        Ok((!v.is_designated()).then_some((e, v)))
    }
}

/// Exhaustive tautology check; the witness is the lexicographically first
/// refuting assignment.
pub fn is_tautology_m(f: &Formula, defs: &ActDefinitions) -> Result<VerdictM, Error> {
    let problem = TautologyM::new(f, defs)?;
    Ok(match crate::search::first_hit(&problem, 0..problem.len())? {
        None => Verdict::Tautology,
        Some((_, (witness, value))) => Verdict::Refuted { witness, value },
    })
}

/// `Ve` of `f` under every assignment, in lexicographic order.
pub fn truth_table(f: &Formula, defs: &ActDefinitions) -> Result<Vec<(AtomValuation2, TruthValue4)>, Error> {
    let problem = TautologyM::new(f, defs)?;
    problem.space.iter().map(|e| eval_resolved(&problem.formula, &e).map(|v| (e, v))).collect()
}
