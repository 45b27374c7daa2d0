//! Entailment between acts and the square of opposition.
//!
//! In the four-valued matrix an act is successful when it takes `1/2` and
//! unsuccessful at `-1/2`. Over `*B` there is no success set; the square is
//! read order-theoretically on the corner values `F(p)`, `F(¬p)`, `¬F(p)`,
//! `¬F(¬p)` (see [`crate::hyper::SquareReport`]).

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::boolalg::{is_identifier, AlgebraSpec};
use crate::error::Error;
use crate::hyper::{HyperValue, SquareReport};
use crate::matrix_m::{eval_resolved, AssignmentSpace, AtomValuation2, TruthValue4};
use crate::matrix_mb::{Goal, MbMode, MbSearch, MbSpace, MbValuation, Program};
use crate::search::{self, Probe};
use crate::syntax::{ActDefinitions, Formula};

/// The valuations a check quantifies over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Space {
    /// The four-valued matrix; all two-valued atom assignments.
    M,
    /// `*B` over `algebra`; every (admissible) valuation of the mode.
    Mb { algebra: AlgebraSpec, mode: MbMode, admissible_only: bool },
}

impl Space {
    pub fn mb(algebra: AlgebraSpec, mode: MbMode) -> Self {
        Space::Mb { algebra, mode, admissible_only: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    M(AtomValuation2),
    Mb(MbValuation),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Value {
    M(TruthValue4),
    Mb(HyperValue),
}

impl Value {
    pub fn is_designated(self) -> bool {
        match self {
            Value::M(v) => v.is_designated(),
            Value::Mb(h) => h.is_standard_top(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::M(v) => write!(f, "{v}"),
            Value::Mb(h) => write!(f, "<{},{}>", h.on_true(), h.on_false()),
        }
    }
}

/// A valuation separating two formulas, with their values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub valuation: Valuation,
    pub left: Value,
    pub right: Value,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entailment {
    pub holds: bool,
    pub witness: Option<Counterexample>,
}

/// Entailment in the four-valued matrix: a valuation where the left value
/// exceeds the right one.
pub struct EntailM {
    left: Formula,
    right: Formula,
    space: AssignmentSpace,
}

impl EntailM {
    pub fn new(left: &Formula, right: &Formula, defs: &ActDefinitions) -> Result<Self, Error> {
        let left = defs.inline(left)?;
        let right = defs.inline(right)?;
        let space = AssignmentSpace::new(left.atoms().into_iter().chain(right.atoms()));
        Ok(EntailM { left, right, space })
    }
}

impl Probe for EntailM {
    type Hit = Counterexample;

    fn len(&self) -> u64 {
        self.space.len()
    }

    fn cost(&self) -> u64 {
        2
    }

    fn probe(&self, index: u64) -> Result<Option<Counterexample>, Error> {
        let e = self.space.assignment(index);
        let l = eval_resolved(&self.left, &e)?;
        let r = eval_resolved(&self.right, &e)?;
        Ok((l > r).then_some(Counterexample { valuation: Valuation::M(e), left: Value::M(l), right: Value::M(r) }))
    }
}

/// Entailment over `*B` under the stipulated order.
pub fn entail_search_mb(
    left: &Formula,
    right: &Formula,
    defs: &ActDefinitions,
    algebra: &AlgebraSpec,
    mode: MbMode,
    admissible_only: bool,
) -> Result<MbSearch, Error> {
    let mut program = Program::new(mode);
    program.add_with_defs(left, defs)?;
    program.add_with_defs(right, defs)?;
    MbSearch::new(MbSpace::new(program, algebra.clone())?, Goal::NotBelow, admissible_only)
}

pub fn mb_counterexample(hit: crate::matrix_mb::MbHit) -> Counterexample {
    Counterexample {
        valuation: Valuation::Mb(hit.valuation),
        left: Value::Mb(hit.values[0]),
        right: Value::Mb(hit.values[1]),
    }
}

/// `f1` entails `f2` when no valuation of the space puts `f1` above `f2`.
pub fn entails(
    left: &Formula,
    right: &Formula,
    defs: &ActDefinitions,
    space: &Space,
    budget: u64,
) -> Result<Entailment, Error> {
    let witness = match space {
        Space::M => {
            let p = EntailM::new(left, right, defs)?;
            search::search(&p, budget)?.map(|(_, c)| c)
        }
        Space::Mb { algebra, mode, admissible_only } => {
            let p = entail_search_mb(left, right, defs, algebra, *mode, *admissible_only)?;
            search::search(&p, budget)?.map(|(_, h)| mb_counterexample(h))
        }
    };
    Ok(Entailment { holds: witness.is_none(), witness })
}

/// Whether one edge of the square holds everywhere, with the first failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub holds: bool,
    pub witness: Option<Valuation>,
}

impl RelationCheck {
    fn new() -> Self {
        RelationCheck { holds: true, witness: None }
    }

    fn observe(&mut self, ok: bool, at: &Valuation) {
        if !ok && self.holds {
            self.holds = false;
            self.witness = Some(at.clone());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawStatus {
    /// Distinct values taken, sorted.
    pub values: Vec<Value>,
    pub designated_everywhere: bool,
    /// First valuation where the law is not designated.
    pub witness: Option<Valuation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawsReport {
    /// `~F(~p) | ~F(p)`
    pub tertium_non_datur: LawStatus,
    /// `~(F(~p) & F(p))`
    pub law_of_contrary: LawStatus,
    /// Both laws take the same value under every valuation.
    pub coincide: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OppositionReport {
    /// The criterion `Ve(F(¬p)) ≤ Ve(¬F(p))` holds everywhere.
    pub square_holds: bool,
    pub contrary: RelationCheck,
    pub contradictory: RelationCheck,
    pub subcontrary: RelationCheck,
    pub subaltern_left: RelationCheck,
    pub subaltern_right: RelationCheck,
    pub laws: LawsReport,
    /// Per-generator report when a single generator was given.
    pub generator_square: Option<SquareReport>,
}

impl OppositionReport {
    pub fn all_relations(&self) -> bool {
        self.contrary.holds
            && self.contradictory.holds
            && self.subcontrary.holds
            && self.subaltern_left.holds
            && self.subaltern_right.holds
    }
}

/// The eight formulas of a square: the four corners and the two laws.
fn square_formulas(force: &str, atom: &str) -> Result<[Formula; 6], Error> {
    for name in [force, atom] {
        if !is_identifier(name) {
            return Err(Error::InvalidName(name.to_string()));
        }
    }
    let p = Formula::atom(atom);
    let act = Formula::force(force, p.clone());
    let act_neg = Formula::force(force, Formula::not(p));
    let neg_act = Formula::not(act.clone());
    let neg_act_neg = Formula::not(act_neg.clone());
    Ok([
        act.clone(),
        act_neg.clone(),
        neg_act.clone(),
        neg_act_neg.clone(),
        Formula::or(neg_act_neg, neg_act),
        Formula::not(Formula::and(act_neg, act)),
    ])
}

/// Every valuation of the space with the six square formulas evaluated.
fn square_rows(
    force: &str,
    atom: &str,
    space: &Space,
    generator: Option<HyperValue>,
    budget: u64,
) -> Result<Vec<(Valuation, [Value; 6])>, Error> {
    let formulas = square_formulas(force, atom)?;
    match space {
        Space::M => {
            if generator.is_some() {
                return Err(Error::UnsupportedSpace("generators apply to *B only".into()));
            }
            AssignmentSpace::new([atom.to_string()])
                .iter()
                .map(|e| {
                    let mut vals = [Value::M(TruthValue4::Zero); 6];
                    for (v, f) in vals.iter_mut().zip(&formulas) {
                        *v = Value::M(eval_resolved(f, &e)?);
                    }
                    Ok((Valuation::M(e), vals))
                })
                .collect()
        }
        Space::Mb { algebra, mode, admissible_only } => {
            let mut program = Program::new(*mode);
            for f in &formulas {
                program.add(f)?;
            }
            let mut rows = Vec::new();
            let mut push = |slots: &crate::matrix_mb::Slots, val: MbValuation| -> Result<(), Error> {
                let mut vals = [Value::M(TruthValue4::Zero); 6];
                let mut admissible = true;
                for (t, v) in vals.iter_mut().enumerate() {
                    let (h, ok) = program.eval(t, slots)?;
                    admissible &= ok;
                    *v = Value::Mb(h);
                }
                if admissible || !*admissible_only {
                    rows.push((Valuation::Mb(val), vals));
                }
                Ok(())
            };
            match generator {
                Some(g) => {
                    if g.is_standard() {
                        return Err(Error::StandardInput);
                    }
                    algebra.check(g.on_true())?;
                    if *mode == MbMode::Free {
                        return Err(Error::UnsupportedSpace(
                            "a single generator needs pointwise or connective mode".into(),
                        ));
                    }
                    let val = MbValuation::new(algebra.clone(), *mode).generator(force, atom, g);
                    let slots = program.slots_from(&val)?;
                    push(&slots, val)?;
                }
                None => {
                    let mb = MbSpace::new(program.clone(), algebra.clone())?;
                    let needed = mb.len() as u128 * 6;
                    if needed > budget as u128 {
                        return Err(Error::BudgetExceeded { needed, budget });
                    }
                    for i in 0..mb.len() {
                        push(&mb.slots(i), mb.valuation(i))?;
                    }
                }
            }
            Ok(rows)
        }
    }
}

fn hyper(v: Value) -> HyperValue {
    match v {
        Value::Mb(h) => h,
        Value::M(_) => unreachable!("*B row"),
    }
}

fn law_status(rows: &[(Valuation, [Value; 6])], column: usize) -> LawStatus {
    let mut values: Vec<Value> = rows.iter().map(|(_, v)| v[column]).collect();
    values.sort();
    values.dedup();
    let witness = rows.iter().find(|(_, v)| !v[column].is_designated()).map(|(val, _)| val.clone());
    LawStatus { values, designated_everywhere: witness.is_none(), witness }
}

fn laws_from_rows(rows: &[(Valuation, [Value; 6])]) -> LawsReport {
    LawsReport {
        tertium_non_datur: law_status(rows, 4),
        law_of_contrary: law_status(rows, 5),
        coincide: rows.iter().all(|(_, v)| v[4] == v[5]),
    }
}

fn criterion_from_rows(rows: &[(Valuation, [Value; 6])]) -> Result<bool, Error> {
    for (_, v) in rows {
        let ok = match (v[1], v[2]) {
            (Value::M(a), Value::M(b)) => a <= b,
            (Value::Mb(a), Value::Mb(b)) => a.hleq(b)?,
            _ => unreachable!("rows come from one space"),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The square of opposition for `force` over the content atom `atom`.
///
/// Over `*B` the space must be pointwise or connective; with `generator`
/// the report covers that single generator for `(force, atom)`, otherwise
/// every relation is quantified over all generators.
pub fn square_for_force(
    force: &str,
    atom: &str,
    space: &Space,
    generator: Option<HyperValue>,
    budget: u64,
) -> Result<OppositionReport, Error> {
    if matches!(space, Space::Mb { mode: MbMode::Free, .. }) {
        return Err(Error::UnsupportedSpace("the square needs pointwise or connective mode".into()));
    }
    let rows = square_rows(force, atom, space, generator, budget)?;
    let mut contrary = RelationCheck::new();
    let mut contradictory = RelationCheck::new();
    let mut subcontrary = RelationCheck::new();
    let mut subaltern_left = RelationCheck::new();
    let mut subaltern_right = RelationCheck::new();
    let mut generator_square = None;
    for (val, v) in &rows {
        match space {
            Space::M => {
                let succ = |x: Value| x == Value::M(TruthValue4::Half);
                let fail = |x: Value| x == Value::M(TruthValue4::NegHalf);
                let [act, act_neg, neg_act, neg_act_neg, ..] = *v;
                contrary.observe(!(succ(act) && succ(act_neg)), val);
                let exactly_one = |a: Value, b: Value| succ(a) != succ(b) && fail(a) != fail(b);
                contradictory.observe(exactly_one(act, neg_act) && exactly_one(act_neg, neg_act_neg), val);
                subcontrary.observe(!(fail(neg_act_neg) && fail(neg_act)), val);
                subaltern_left.observe(!succ(act) || succ(neg_act_neg), val);
                subaltern_right.observe(!succ(act_neg) || succ(neg_act), val);
            }
            Space::Mb { .. } => {
                let r = SquareReport::from_corners(hyper(v[0]), hyper(v[1]), hyper(v[2]), hyper(v[3]))?;
                contrary.observe(r.contrary.holds, val);
                contradictory.observe(r.contradictory.holds && r.contradictory_neg.holds, val);
                subcontrary.observe(r.subcontrary.holds, val);
                subaltern_left.observe(r.subaltern_left.holds, val);
                subaltern_right.observe(r.subaltern_right.holds, val);
                if generator.is_some() {
                    generator_square = Some(r);
                }
            }
        }
    }
    Ok(OppositionReport {
        square_holds: criterion_from_rows(&rows)?,
        contrary,
        contradictory,
        subcontrary,
        subaltern_left,
        subaltern_right,
        laws: laws_from_rows(&rows),
        generator_square,
    })
}

/// `Ve(F(¬p)) ≤ Ve(¬F(p))` for every valuation of the space.
pub fn criterion_holds(
    force: &str,
    atom: &str,
    space: &Space,
    generator: Option<HyperValue>,
    budget: u64,
) -> Result<bool, Error> {
    criterion_from_rows(&square_rows(force, atom, space, generator, budget)?)
}

/// Values and designation of `~F(~p) | ~F(p)` and `~(F(~p) & F(p))`.
pub fn laws_report(
    force: &str,
    atom: &str,
    space: &Space,
    generator: Option<HyperValue>,
    budget: u64,
) -> Result<LawsReport, Error> {
    Ok(laws_from_rows(&square_rows(force, atom, space, generator, budget)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::DEFAULT_BUDGET;
    use crate::syntax::parse_formula;

    fn ab() -> AlgebraSpec {
        AlgebraSpec::new(["a", "b"]).unwrap()
    }

    fn hv(alg: &AlgebraSpec, t: &[&str], f: &[&str]) -> HyperValue {
        HyperValue::new(alg.element(t.iter().copied()).unwrap(), alg.element(f.iter().copied()).unwrap()).unwrap()
    }

    fn entails_m(l: &str, r: &str) -> Entailment {
        entails(
            &parse_formula(l).unwrap(),
            &parse_formula(r).unwrap(),
            &ActDefinitions::new(),
            &Space::M,
            DEFAULT_BUDGET,
        )
        .unwrap()
    }

    #[test]
    fn entailment_in_m() {
        assert!(entails_m("[think](p)", "p").holds);
        let e = entails_m("p", "[think](p)");
        assert!(!e.holds);
        let w = e.witness.unwrap();
        assert_eq!(w.valuation, Valuation::M(AtomValuation2::new().with("p", false)));
        assert_eq!((w.left, w.right), (Value::M(TruthValue4::Zero), Value::M(TruthValue4::NegHalf)));
        assert!(entails_m("[think](p) & q", "[think](p) & q").holds);
    }

    #[test]
    fn square_in_mb_examples() {
        let alg = ab();
        let space = Space::mb(alg.clone(), MbMode::Pointwise);
        let r = square_for_force("f", "p", &space, Some(hv(&alg, &["a"], &[])), DEFAULT_BUDGET).unwrap();
        assert!(r.square_holds && r.all_relations());
        assert!(r.generator_square.unwrap().holds);
        let r = square_for_force("f", "p", &space, Some(hv(&alg, &["a", "b"], &["b"])), DEFAULT_BUDGET).unwrap();
        assert!(!r.square_holds);
        assert!(r.contradictory.holds);
        assert!(!r.contrary.holds);
    }

    #[test]
    fn square_in_m() {
        let r = square_for_force("think", "p", &Space::M, None, DEFAULT_BUDGET).unwrap();
        assert!(r.contradictory.holds);
        assert!(r.square_holds);
        assert!(r.all_relations());
    }

    #[test]
    fn criterion_examples() {
        let alg = ab();
        let space = Space::mb(alg.clone(), MbMode::Pointwise);
        assert!(criterion_holds("f", "p", &space, Some(hv(&alg, &["a"], &[])), DEFAULT_BUDGET).unwrap());
        assert_eq!(
            criterion_holds("f", "p", &space, Some(hv(&alg, &["a"], &["a"])), DEFAULT_BUDGET),
            Err(Error::StandardInput)
        );
        assert!(criterion_holds("think", "p", &Space::M, None, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn laws_examples() {
        let alg = ab();
        let space = Space::mb(alg.clone(), MbMode::Pointwise);
        let r = laws_report("f", "p", &space, Some(hv(&alg, &["a"], &[])), DEFAULT_BUDGET).unwrap();
        let b = Value::Mb(HyperValue::standard(alg.element(["b"]).unwrap()));
        assert_eq!(r.tertium_non_datur.values, [b]);
        assert_eq!(r.law_of_contrary.values, [b]);
        assert!(!r.tertium_non_datur.designated_everywhere);
        assert!(r.coincide);
    }

    #[test]
    fn laws_in_m_at_p_true() {
        let p = AtomValuation2::new().with("p", true);
        let f8 = parse_formula("~[think](~p) | ~[think](p)").unwrap();
        let f9 = parse_formula("~([think](~p) & [think](p))").unwrap();
        assert_eq!(eval_resolved(&f8, &p).unwrap(), TruthValue4::NegHalf);
        // ~(sup(-1/2, 1/2)) = ~(1/2)
        assert_eq!(eval_resolved(&f9, &p).unwrap(), TruthValue4::NegHalf);
    }

    #[test]
    fn free_mode_square_rejected() {
        let space = Space::mb(ab(), MbMode::Free);
        assert!(matches!(square_for_force("f", "p", &space, None, DEFAULT_BUDGET), Err(Error::UnsupportedSpace(_))));
    }
}
