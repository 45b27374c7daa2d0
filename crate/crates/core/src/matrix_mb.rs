//! Matrix logic over `*B` with designated value `*1`.
//!
//! Force-free formulas take standard values. An act `F(Ψ)` with force-free
//! content takes a nonstandard value whose dependence on `Ψ` is fixed by the
//! [`MbMode`]:
//!
//! * `Free`: every distinct act (keyed by its canonical text) gets an
//!   independent value;
//! * `Pointwise`: one generator per (force, atom), extended over the
//!   content with `¬ ↦ [f¬]` and pointwise inf/sup, `Φ ⇒ Ψ` read as `¬Φ ∨ Ψ`;
//! * `Connective`: the same generators, with `¬ ↦ [f¬]` but `∧ ∨ ⇒` of the
//!   content mapped to the matrix connectives.
//!
//! A force over content that itself contains acts evaluates as
//! `signature(F) ⇒ Ve(content)`.
//!
//! Formulas are compiled once into a [`Program`] whose assignments live in
//! numbered slots; searches enumerate slot assignments by index.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::boolalg::{AlgebraSpec, Element};
use crate::error::Error;
use crate::hyper::{nonstandard_at, nonstandard_count, HyperValue};
use crate::matrix_m::Verdict;
use crate::search::{self, decode_mixed_radix, mixed_radix_len, Probe};
use crate::syntax::{detect_cycles, print, ActDefinitions, Formula};

/// `¬[x] = *1 − [x]`: componentwise complement.
pub fn mb_neg(x: HyperValue) -> HyperValue {
    x.hneg()
}

/// Conjunction: meet on standards, pointwise join on two nonstandards,
/// the order meet (the nonstandard operand) on mixed pairs.
pub fn mb_and(x: HyperValue, y: HyperValue) -> Result<HyperValue, Error> {
    match (x.is_standard(), y.is_standard()) {
        (true, true) => x.pinf(y),
        (false, false) => x.psup(y),
        _ => x.oinf(y),
    }
}

/// Disjunction: join on standards, pointwise meet on two nonstandards,
/// the order join (the standard operand) on mixed pairs.
pub fn mb_or(x: HyperValue, y: HyperValue) -> Result<HyperValue, Error> {
    match (x.is_standard(), y.is_standard()) {
        (true, true) => x.psup(y),
        (false, false) => x.pinf(y),
        _ => x.osup(y),
    }
}

/// `[x] ⇒ [y] = *1 − sup([x],[y]) + [y]` with the order join inside and a
/// pointwise join outside.
pub fn mb_imp(x: HyperValue, y: HyperValue) -> Result<HyperValue, Error> {
    x.osup(y)?.hneg().psup(y)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MbMode {
    Free,
    Pointwise,
    Connective,
}

impl MbMode {
    pub const ALL: [MbMode; 3] = [MbMode::Free, MbMode::Pointwise, MbMode::Connective];

    pub fn as_str(self) -> &'static str {
        match self {
            MbMode::Free => "free",
            MbMode::Pointwise => "pointwise",
            MbMode::Connective => "connective",
        }
    }
}

impl fmt::Display for MbMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MbMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| alloc::format!("unknown mode {s:?} (expected free, pointwise or connective)"))
    }
}

/// A complete assignment for evaluating formulas over `*B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MbValuation {
    pub algebra: AlgebraSpec,
    pub mode: MbMode,
    pub atom_values: BTreeMap<String, Element>,
    /// Free mode: canonical act text to value.
    pub act_values: BTreeMap<String, HyperValue>,
    /// Pointwise and connective modes: force to atom to value.
    pub generators: BTreeMap<String, BTreeMap<String, HyperValue>>,
    /// Per-force values used for forces over act-bearing content.
    pub signatures: BTreeMap<String, HyperValue>,
}

impl MbValuation {
    pub fn new(algebra: AlgebraSpec, mode: MbMode) -> Self {
        MbValuation {
            algebra,
            mode,
            atom_values: BTreeMap::new(),
            act_values: BTreeMap::new(),
            generators: BTreeMap::new(),
            signatures: BTreeMap::new(),
        }
    }

    pub fn atom(mut self, atom: &str, value: Element) -> Self {
        self.atom_values.insert(atom.into(), value);
        self
    }

    pub fn act(mut self, key: &str, value: HyperValue) -> Self {
        self.act_values.insert(key.into(), value);
        self
    }

    pub fn generator(mut self, force: &str, atom: &str, value: HyperValue) -> Self {
        self.generators.entry(force.into()).or_default().insert(atom.into(), value);
        self
    }

    pub fn signature(mut self, force: &str, value: HyperValue) -> Self {
        self.signatures.insert(force.into(), value);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalOutcome {
    pub value: HyperValue,
    /// Every act subformula evaluated to a nonstandard value.
    pub admissible: bool,
    /// Act subformulas (canonical text) and their values.
    pub subvalues: BTreeMap<String, HyperValue>,
}

/// Name standing for the truncated remainder of a cyclic unfolding.
const SEED: &str = "#seed";

#[derive(Clone, Debug)]
enum Term {
    Atom(usize),
    Seed,
    Not(Box<Term>),
    And(Box<Term>, Box<Term>),
    Or(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Act { label: usize, body: ActBody },
}

#[derive(Clone, Debug)]
enum ActBody {
    Free(usize),
    Content(Box<Content>),
    Nested { signature: usize, content: Box<Term> },
}

#[derive(Clone, Debug)]
enum Content {
    Generator(usize),
    Not(Box<Content>),
    And(Box<Content>, Box<Content>),
    Or(Box<Content>, Box<Content>),
    Imp(Box<Content>, Box<Content>),
}

/// Values for every slot of a [`Program`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slots {
    pub atoms: Vec<Element>,
    pub acts: Vec<HyperValue>,
    pub generators: Vec<HyperValue>,
    pub signatures: Vec<HyperValue>,
    pub seed: Option<HyperValue>,
}

trait Recorder {
    fn record(&mut self, label: usize, value: HyperValue);
}

struct Admissibility(bool);

impl Recorder for Admissibility {
    fn record(&mut self, _: usize, value: HyperValue) {
        self.0 &= !value.is_standard();
    }
}

struct FullRecord(Vec<Option<HyperValue>>);

impl Recorder for FullRecord {
    fn record(&mut self, label: usize, value: HyperValue) {
        self.0[label] = Some(value);
    }
}

/// One or more act-free formulas compiled against a shared slot table.
#[derive(Clone, Debug)]
pub struct Program {
    mode: MbMode,
    terms: Vec<Term>,
    atoms: Vec<String>,
    acts: Vec<String>,
    generators: Vec<(String, String)>,
    signatures: Vec<String>,
    labels: Vec<String>,
}

fn intern<T: PartialEq>(table: &mut Vec<T>, item: T) -> usize {
    match table.iter().position(|x| *x == item) {
        Some(i) => i,
        None => {
            table.push(item);
            table.len() - 1
        }
    }
}

fn force_free(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Force(..) | Formula::ActRef(_) => false,
        Formula::Not(x) => force_free(x),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => force_free(l) && force_free(r),
    }
}

impl Program {
    pub fn new(mode: MbMode) -> Self {
        Program {
            mode,
            terms: Vec::new(),
            atoms: Vec::new(),
            acts: Vec::new(),
            generators: Vec::new(),
            signatures: Vec::new(),
            labels: Vec::new(),
        }
    }

    /// Compiles `f` (act references already inlined) and returns its term
    /// index.
    pub fn add(&mut self, f: &Formula) -> Result<usize, Error> {
        let t = self.compile(f)?;
        self.terms.push(t);
        Ok(self.terms.len() - 1)
    }

    /// Compiles `f` after inlining its act references.
    pub fn add_with_defs(&mut self, f: &Formula, defs: &ActDefinitions) -> Result<usize, Error> {
        self.add(&defs.inline(f)?)
    }

    pub fn mode(&self) -> MbMode {
        self.mode
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atoms
    }

    pub fn act_keys(&self) -> &[String] {
        &self.acts
    }

    pub fn generator_keys(&self) -> &[(String, String)] {
        &self.generators
    }

    pub fn signature_keys(&self) -> &[String] {
        &self.signatures
    }

    fn compile(&mut self, f: &Formula) -> Result<Term, Error> {
        Ok(match f {
            Formula::Atom(n) => Term::Atom(intern(&mut self.atoms, n.clone())),
            Formula::ActRef(n) if n == SEED => Term::Seed,
            Formula::ActRef(n) => return Err(Error::UnknownActRef(n.clone())),
            Formula::Not(x) => Term::Not(Box::new(self.compile(x)?)),
            Formula::And(l, r) => Term::And(Box::new(self.compile(l)?), Box::new(self.compile(r)?)),
            Formula::Or(l, r) => Term::Or(Box::new(self.compile(l)?), Box::new(self.compile(r)?)),
            Formula::Implies(l, r) => Term::Imp(Box::new(self.compile(l)?), Box::new(self.compile(r)?)),
            Formula::Force(name, content) => {
                let key = print(f);
                let label = intern(&mut self.labels, key.clone());
                let body = if !force_free(content) {
                    ActBody::Nested {
                        signature: intern(&mut self.signatures, name.clone()),
                        content: Box::new(self.compile(content)?),
                    }
                } else if self.mode == MbMode::Free {
                    ActBody::Free(intern(&mut self.acts, key))
                } else {
                    ActBody::Content(Box::new(self.compile_content(name, content)))
                };
                Term::Act { label, body }
            }
        })
    }

    fn compile_content(&mut self, force: &str, f: &Formula) -> Content {
        match f {
            Formula::Atom(a) => Content::Generator(intern(&mut self.generators, (force.to_string(), a.clone()))),
            Formula::Not(x) => Content::Not(Box::new(self.compile_content(force, x))),
            Formula::And(l, r) => {
                Content::And(Box::new(self.compile_content(force, l)), Box::new(self.compile_content(force, r)))
            }
            Formula::Or(l, r) => {
                Content::Or(Box::new(self.compile_content(force, l)), Box::new(self.compile_content(force, r)))
            }
            Formula::Implies(l, r) => {
                Content::Imp(Box::new(self.compile_content(force, l)), Box::new(self.compile_content(force, r)))
            }
            Formula::Force(..) | Formula::ActRef(_) => unreachable!("content is force-free"),
        }
    }

    fn extend(&self, c: &Content, slots: &Slots) -> Result<HyperValue, Error> {
        let pointwise = self.mode == MbMode::Pointwise;
        Ok(match c {
            Content::Generator(i) => slots.generators[*i],
            Content::Not(x) => self.extend(x, slots)?.content_neg(),
            Content::And(l, r) => {
                let (l, r) = (self.extend(l, slots)?, self.extend(r, slots)?);
                if pointwise {
                    l.pinf(r)?
                } else {
                    mb_and(l, r)?
                }
            }
            Content::Or(l, r) => {
                let (l, r) = (self.extend(l, slots)?, self.extend(r, slots)?);
                if pointwise {
                    l.psup(r)?
                } else {
                    mb_or(l, r)?
                }
            }
            Content::Imp(l, r) => {
                let (l, r) = (self.extend(l, slots)?, self.extend(r, slots)?);
                if pointwise {
                    l.content_neg().psup(r)?
                } else {
                    mb_imp(l, r)?
                }
            }
        })
    }

    fn eval_term(&self, t: &Term, slots: &Slots, rec: &mut impl Recorder) -> Result<HyperValue, Error> {
        Ok(match t {
            Term::Atom(i) => HyperValue::standard(slots.atoms[*i]),
            Term::Seed => slots.seed.ok_or_else(|| Error::MissingAssignment("unfolding seed".into()))?,
            Term::Not(x) => mb_neg(self.eval_term(x, slots, rec)?),
            Term::And(l, r) => mb_and(self.eval_term(l, slots, rec)?, self.eval_term(r, slots, rec)?)?,
            Term::Or(l, r) => mb_or(self.eval_term(l, slots, rec)?, self.eval_term(r, slots, rec)?)?,
            Term::Imp(l, r) => mb_imp(self.eval_term(l, slots, rec)?, self.eval_term(r, slots, rec)?)?,
            Term::Act { label, body } => {
                let v = match body {
                    ActBody::Free(i) => slots.acts[*i],
                    ActBody::Content(c) => self.extend(c, slots)?,
                    ActBody::Nested { signature, content } => {
                        mb_imp(slots.signatures[*signature], self.eval_term(content, slots, rec)?)?
                    }
                };
                rec.record(*label, v);
                v
            }
        })
    }

    /// Value of term `term` and whether every act in it was nonstandard.
    pub fn eval(&self, term: usize, slots: &Slots) -> Result<(HyperValue, bool), Error> {
        let mut rec = Admissibility(true);
        let v = self.eval_term(&self.terms[term], slots, &mut rec)?;
        Ok((v, rec.0))
    }

    pub fn eval_full(&self, term: usize, slots: &Slots) -> Result<EvalOutcome, Error> {
        let mut rec = FullRecord(vec![None; self.labels.len()]);
        let value = self.eval_term(&self.terms[term], slots, &mut rec)?;
        let subvalues: BTreeMap<String, HyperValue> =
            rec.0.into_iter().enumerate().filter_map(|(i, v)| v.map(|v| (self.labels[i].clone(), v))).collect();
        let admissible = subvalues.values().all(|v| !v.is_standard());
        Ok(EvalOutcome { value, admissible, subvalues })
    }

    /// Reads slot values out of a valuation, validating them.
    pub fn slots_from(&self, val: &MbValuation) -> Result<Slots, Error> {
        let alg = &val.algebra;
        let act_value = |what: String, h: Option<&HyperValue>| -> Result<HyperValue, Error> {
            let h = *h.ok_or_else(|| Error::MissingAssignment(what.clone()))?;
            alg.check(h.on_true())?;
            if h.is_standard() {
                return Err(Error::StandardAssignment(what));
            }
            Ok(h)
        };
        Ok(Slots {
            atoms: self
                .atoms
                .iter()
                .map(|a| {
                    let e =
                        *val.atom_values.get(a).ok_or_else(|| Error::MissingAssignment(alloc::format!("atom {a}")))?;
                    alg.check(e)
                })
                .collect::<Result<_, _>>()?,
            acts: self
                .acts
                .iter()
                .map(|k| act_value(alloc::format!("act {k}"), val.act_values.get(k)))
                .collect::<Result<_, _>>()?,
            generators: self
                .generators
                .iter()
                .map(|(f, a)| {
                    act_value(alloc::format!("generator ({f}, {a})"), val.generators.get(f).and_then(|m| m.get(a)))
                })
                .collect::<Result<_, _>>()?,
            signatures: self
                .signatures
                .iter()
                .map(|f| act_value(alloc::format!("signature {f}"), val.signatures.get(f)))
                .collect::<Result<_, _>>()?,
            seed: None,
        })
    }

    /// The valuation holding exactly the given slot values.
    pub fn valuation_of(&self, algebra: &AlgebraSpec, slots: &Slots) -> MbValuation {
        let mut v = MbValuation::new(algebra.clone(), self.mode);
        for (a, e) in self.atoms.iter().zip(&slots.atoms) {
            v.atom_values.insert(a.clone(), *e);
        }
        for (k, h) in self.acts.iter().zip(&slots.acts) {
            v.act_values.insert(k.clone(), *h);
        }
        for ((f, a), h) in self.generators.iter().zip(&slots.generators) {
            v.generators.entry(f.clone()).or_default().insert(a.clone(), *h);
        }
        for (f, h) in self.signatures.iter().zip(&slots.signatures) {
            v.signatures.insert(f.clone(), *h);
        }
        v
    }
}

/// Evaluates `f` under `val`.
pub fn eval_mb(f: &Formula, val: &MbValuation, defs: &ActDefinitions) -> Result<EvalOutcome, Error> {
    let mut program = Program::new(val.mode);
    let t = program.add_with_defs(f, defs)?;
    let slots = program.slots_from(val)?;
    program.eval_full(t, &slots)
}

/// Every slot assignment of a program over one algebra, indexed in mixed
/// radix: atoms first (most significant), then acts, generators and
/// signatures, each in first-occurrence order.
#[derive(Clone, Debug)]
pub struct MbSpace {
    program: Program,
    algebra: AlgebraSpec,
    radices: Vec<u64>,
    len: u64,
}

impl MbSpace {
    pub fn new(program: Program, algebra: AlgebraSpec) -> Result<Self, Error> {
        let elements = algebra.cardinality();
        let hypers = nonstandard_count(&algebra);
        let mut radices = vec![elements; program.atoms.len()];
        radices.extend(core::iter::repeat_n(
            hypers,
            program.acts.len() + program.generators.len() + program.signatures.len(),
        ));
        let len = mixed_radix_len(&radices).ok_or(Error::BudgetExceeded { needed: u128::MAX, budget: u64::MAX })?;
        Ok(MbSpace { program, algebra, radices, len })
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        &self.algebra
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn slots(&self, index: u64) -> Slots {
        let mut digits = vec![0u64; self.radices.len()];
        decode_mixed_radix(index, &self.radices, &mut digits);
        let p = &self.program;
        let mut d = digits.into_iter();
        let mut take = |n: usize| -> Vec<u64> { d.by_ref().take(n).collect() };
        let atoms = take(p.atoms.len()).into_iter().map(|i| self.algebra.element_at(i)).collect();
        let hyper = |i: u64| nonstandard_at(&self.algebra, i);
        let acts = take(p.acts.len()).into_iter().map(hyper).collect();
        let generators = take(p.generators.len()).into_iter().map(hyper).collect();
        let signatures = take(p.signatures.len()).into_iter().map(hyper).collect();
        Slots { atoms, acts, generators, signatures, seed: None }
    }

    pub fn valuation(&self, index: u64) -> MbValuation {
        self.program.valuation_of(&self.algebra, &self.slots(index))
    }
}

/// What an [`MbSearch`] looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Goal {
    /// Term 0 takes a value other than `*1`.
    NotDesignated,
    /// Term 0 is not `≤*` term 1.
    NotBelow,
    /// Terms 0 and 1 take different values.
    Differs,
}

/// A valuation found by a search, with the values of the program's terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MbHit {
    pub valuation: MbValuation,
    pub values: Vec<HyperValue>,
}

pub struct MbSearch {
    space: MbSpace,
    goal: Goal,
    admissible_only: bool,
    generator_filter: Option<fn(HyperValue) -> bool>,
}

impl MbSearch {
    pub fn new(space: MbSpace, goal: Goal, admissible_only: bool) -> Result<Self, Error> {
        let needed = match goal {
            Goal::NotDesignated => 1,
            Goal::NotBelow | Goal::Differs => 2,
        };
        if space.program.term_count() < needed {
            return Err(Error::UnsupportedSpace(alloc::format!("{goal:?} needs {needed} formulas")));
        }
        Ok(MbSearch { space, goal, admissible_only, generator_filter: None })
    }

    /// Skips valuations where some generator fails `keep`.
    pub fn with_generator_filter(mut self, keep: fn(HyperValue) -> bool) -> Self {
        self.generator_filter = Some(keep);
        self
    }

    pub fn space(&self) -> &MbSpace {
        &self.space
    }
}

impl Probe for MbSearch {
    type Hit = MbHit;

    fn len(&self) -> u64 {
        self.space.len
    }

    fn cost(&self) -> u64 {
        self.space.program.term_count() as u64
    }

    fn probe(&self, index: u64) -> Result<Option<MbHit>, Error> {
        let slots = self.space.slots(index);
        if let Some(keep) = self.generator_filter {
            if !slots.generators.iter().all(|g| keep(*g)) {
                return Ok(None);
            }
        }
        let p = &self.space.program;
        let mut values = Vec::with_capacity(p.term_count());
        for t in 0..p.term_count() {
            let (v, admissible) = p.eval(t, &slots)?;
            if self.admissible_only && !admissible {
                return Ok(None);
            }
            values.push(v);
        }
        let hit = match self.goal {
            Goal::NotDesignated => !values[0].is_standard_top(),
            Goal::NotBelow => !values[0].hleq(values[1])?,
            Goal::Differs => values[0] != values[1],
        };
        Ok(hit.then(|| MbHit { valuation: self.space.valuation(index), values }))
    }
}

pub type VerdictMb = Verdict<MbValuation, HyperValue>;

/// Builds the search for a tautology check.
pub fn tautology_search(
    f: &Formula,
    defs: &ActDefinitions,
    algebra: &AlgebraSpec,
    mode: MbMode,
    admissible_only: bool,
) -> Result<MbSearch, Error> {
    let mut program = Program::new(mode);
    program.add_with_defs(f, defs)?;
    MbSearch::new(MbSpace::new(program, algebra.clone())?, Goal::NotDesignated, admissible_only)
}

pub fn verdict_from_hit(hit: Option<(u64, MbHit)>) -> VerdictMb {
    match hit {
        None => Verdict::Tautology,
        Some((_, h)) => Verdict::Refuted { witness: h.valuation, value: h.values[0] },
    }
}

/// Exhaustive tautology check over every valuation in the space; the
/// witness is the first refuting valuation in index order.
pub fn is_tautology_mb(
    f: &Formula,
    defs: &ActDefinitions,
    algebra: &AlgebraSpec,
    mode: MbMode,
    admissible_only: bool,
    budget: u64,
) -> Result<VerdictMb, Error> {
    let s = tautology_search(f, defs, algebra, mode, admissible_only)?;
    Ok(verdict_from_hit(search::search(&s, budget)?))
}

fn pair_search(left: &str, right: &str, algebra: &AlgebraSpec, mode: MbMode, goal: Goal) -> Result<MbSearch, Error> {
    let mut program = Program::new(mode);
    program.add(&left.parse().expect("fixed formula"))?;
    program.add(&right.parse().expect("fixed formula"))?;
    MbSearch::new(MbSpace::new(program, algebra.clone())?, goal, true)
}

/// Search for a valuation with `Ve([f]([f](p))) ≠ Ve([f](p))`.
pub fn idempotence_search(algebra: &AlgebraSpec, mode: MbMode) -> Result<MbSearch, Error> {
    pair_search("[f]([f](p))", "[f](p)", algebra, mode, Goal::Differs)
}

/// Search for a valuation with `Ve(~[f](p)) ≠ Ve([f](~p))`.
pub fn neg_swap_search(algebra: &AlgebraSpec, mode: MbMode) -> Result<MbSearch, Error> {
    pair_search("~[f](p)", "[f](~p)", algebra, mode, Goal::Differs)
}

pub fn find_idempotence_counterexample(
    algebra: &AlgebraSpec,
    mode: MbMode,
    budget: u64,
) -> Result<Option<MbHit>, Error> {
    Ok(search::search(&idempotence_search(algebra, mode)?, budget)?.map(|(_, h)| h))
}

pub fn find_neg_swap_counterexample(
    algebra: &AlgebraSpec,
    mode: MbMode,
    generator_filter: Option<fn(HyperValue) -> bool>,
    budget: u64,
) -> Result<Option<MbHit>, Error> {
    let mut s = neg_swap_search(algebra, mode)?;
    if let Some(keep) = generator_filter {
        s = s.with_generator_filter(keep);
    }
    Ok(search::search(&s, budget)?.map(|(_, h)| h))
}

/// The unfolding of a cyclic act `steps` levels deep. Every remaining
/// reference into the act's cycle is left as the seed placeholder.
pub fn unfold_formula(defs: &ActDefinitions, act: &str, steps: usize) -> Result<Formula, Error> {
    defs.validate()?;
    if !defs.contains(act) {
        return Err(Error::UnknownActRef(act.into()));
    }
    let cycle: Vec<String> = detect_cycles(defs)?
        .into_iter()
        .find(|c| c.contains(&act))
        .ok_or_else(|| Error::NotCyclic(act.into()))?
        .into_iter()
        .map(String::from)
        .collect();
    let mut f = Formula::act_ref(act);
    for _ in 0..steps {
        for name in &cycle {
            f = f.substitute(name, &Formula::act_ref(alloc::format!("{SEED}{name}")));
        }
        for name in &cycle {
            let body = defs.get(name).expect("cycle member is defined");
            f = f.substitute(&alloc::format!("{SEED}{name}"), body);
        }
    }
    for name in &cycle {
        f = f.substitute(name, &Formula::act_ref(SEED));
    }
    inline_except_seed(defs, &f)
}

fn inline_except_seed(defs: &ActDefinitions, f: &Formula) -> Result<Formula, Error> {
    Ok(match f {
        Formula::ActRef(n) if n == SEED => f.clone(),
        Formula::ActRef(_) => defs.inline(f)?,
        Formula::Atom(_) => f.clone(),
        Formula::Not(x) => Formula::not(inline_except_seed(defs, x)?),
        Formula::Force(n, x) => Formula::force(n.clone(), inline_except_seed(defs, x)?),
        Formula::And(l, r) => Formula::and(inline_except_seed(defs, l)?, inline_except_seed(defs, r)?),
        Formula::Or(l, r) => Formula::or(inline_except_seed(defs, l)?, inline_except_seed(defs, r)?),
        Formula::Implies(l, r) => Formula::implies(inline_except_seed(defs, l)?, inline_except_seed(defs, r)?),
    })
}

/// Evaluates the `steps`-deep unfolding of a cyclic act with `seed`
/// standing for the truncated remainder.
pub fn unfold_cyclic(
    defs: &ActDefinitions,
    act: &str,
    steps: usize,
    seed: HyperValue,
    val: &MbValuation,
) -> Result<HyperValue, Error> {
    let f = unfold_formula(defs, act, steps)?;
    let mut program = Program::new(val.mode);
    let t = program.add(&f)?;
    let mut slots = program.slots_from(val)?;
    val.algebra.check(seed.on_true())?;
    slots.seed = Some(seed);
    Ok(program.eval(t, &slots)?.0)
}

/// Renders the seed placeholder of an unfolded formula as `…`.
pub fn render_unfolded(f: &Formula) -> String {
    print(f).replace(SEED, "…")
}
