//! Nonstandard extension `*B` of a finite Boolean algebra.
//!
//! Members are classes of one-variable Boolean term functions
//! `f(a) = (u ∧ a) ∨ (v ∧ ¬a)`, stored as the pair `(u, v) = (f(1), f(0))`.
//! The class is closed under pointwise meet, join and complement and under
//! precomposition with complement, which swaps the pair.
//!
//! A [`Representative`] carries finitely many exceptional points on top of
//! the term function. Finite exception sets fall outside the cofinite
//! filter, so [`Representative::normalize`] simply drops them.
//!
//! Two orders live here and are kept apart:
//! * the pointwise lattice operations [`HyperValue::pinf`] /
//!   [`HyperValue::psup`] / [`HyperValue::hneg`];
//! * the stipulated order [`HyperValue::hleq`], where every standard value
//!   lies above every nonstandard one, and its bounds
//!   [`HyperValue::osup`] / [`HyperValue::oinf`].

use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::boolalg::{AlgebraSpec, Element};
use crate::error::Error;

/// A member of `*B` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperValue {
    on_true: Element,
    on_false: Element,
}

impl HyperValue {
    pub fn new(on_true: Element, on_false: Element) -> Result<Self, Error> {
        if on_true.width() != on_false.width() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(HyperValue { on_true, on_false })
    }

    /// The constant class `*c`.
    pub fn standard(c: Element) -> Self {
        HyperValue { on_true: c, on_false: c }
    }

    pub fn on_true(self) -> Element {
        self.on_true
    }

    pub fn on_false(self) -> Element {
        self.on_false
    }

    pub fn width(self) -> u8 {
        self.on_true.width()
    }

    pub fn is_standard(self) -> bool {
        self.on_true == self.on_false
    }

    /// The standard element `c` when this is `*c`.
    pub fn standard_part(self) -> Option<Element> {
        self.is_standard().then_some(self.on_true)
    }

    pub fn is_standard_top(self) -> bool {
        self.is_standard() && self.on_true.is_top()
    }

    /// Value of the represented function at `a`.
    pub fn eval_at(self, a: Element) -> Result<Element, Error> {
        self.on_true.meet(a)?.join(self.on_false.meet(a.complement())?)
    }

    fn same_algebra(self, other: HyperValue) -> Result<(), Error> {
        if self.width() == other.width() {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Pointwise meet.
    pub fn pinf(self, other: HyperValue) -> Result<HyperValue, Error> {
        Ok(HyperValue { on_true: self.on_true.meet(other.on_true)?, on_false: self.on_false.meet(other.on_false)? })
    }

    /// Pointwise join.
    pub fn psup(self, other: HyperValue) -> Result<HyperValue, Error> {
        Ok(HyperValue { on_true: self.on_true.join(other.on_true)?, on_false: self.on_false.join(other.on_false)? })
    }

    /// `*0`, `*1` and `*{a}` for standard values, `<{a},{b}>` otherwise.
    pub fn render(self, alg: &AlgebraSpec) -> String {
        match self.standard_part() {
            Some(c) if c.is_bottom() => "*0".into(),
            Some(c) if c.is_top() => "*1".into(),
            Some(c) => alloc::format!("*{}", alg.render(c)),
            None => alloc::format!("<{},{}>", alg.render(self.on_true), alg.render(self.on_false)),
        }
    }

    /// Pointwise complement `¬[f]`.
    pub fn hneg(self) -> HyperValue {
        HyperValue { on_true: self.on_true.complement(), on_false: self.on_false.complement() }
    }

    /// `[f¬]`, the class of `a ↦ f(¬a)`.
    pub fn content_neg(self) -> HyperValue {
        HyperValue { on_true: self.on_false, on_false: self.on_true }
    }

    fn componentwise_leq(self, other: HyperValue) -> Result<bool, Error> {
        Ok(self.on_true.leq(other.on_true)? && self.on_false.leq(other.on_false)?)
    }

    /// The stipulated order `≤*`.
    pub fn hleq(self, other: HyperValue) -> Result<bool, Error> {
        self.same_algebra(other)?;
        match (self.is_standard(), other.is_standard()) {
            (true, true) => self.on_true.leq(other.on_true),
            (false, true) => Ok(true),
            (true, false) => Ok(false),
            (false, false) => self.componentwise_leq(other),
        }
    }

    /// Upper bound under `≤*`.
    pub fn osup(self, other: HyperValue) -> Result<HyperValue, Error> {
        self.same_algebra(other)?;
        match (self.is_standard(), other.is_standard()) {
            (false, true) => Ok(other),
            (true, false) => Ok(self),
            _ => self.psup(other),
        }
    }

    /// Lower bound under `≤*`.
    pub fn oinf(self, other: HyperValue) -> Result<HyperValue, Error> {
        self.same_algebra(other)?;
        match (self.is_standard(), other.is_standard()) {
            (false, true) => Ok(self),
            (true, false) => Ok(other),
            _ => self.pinf(other),
        }
    }

    /// Which of the three opposition cases between `¬[f]` and `[f¬]` apply.
    pub fn classify_opposition(self) -> Result<OppositionCases, Error> {
        if self.is_standard() {
            return Err(Error::StandardInput);
        }
        let neg = self.hneg();
        let swapped = self.content_neg();
        let neg_above = swapped.hleq(neg)?;
        let neg_below = neg.hleq(swapped)?;
        Ok(OppositionCases {
            incompatible: !neg_above && !neg_below,
            neg_above,
            neg_below,
            inf: self.pinf(swapped)?,
            sup: self.psup(swapped)?,
        })
    }

    /// The square of opposition among `[f]`, `[f¬]`, `¬[f¬]`, `¬[f]`.
    pub fn square_report(self) -> Result<SquareReport, Error> {
        if self.is_standard() {
            return Err(Error::StandardInput);
        }
        SquareReport::from_corners(self, self.content_neg(), self.hneg(), self.content_neg().hneg())
    }
}

/// Result of [`HyperValue::classify_opposition`]. The cases may overlap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OppositionCases {
    /// Case 1: `¬[f]` and `[f¬]` are incomparable.
    pub incompatible: bool,
    /// Case 2: `¬[f] ≥ [f¬]`.
    pub neg_above: bool,
    /// Case 3: `¬[f] ≤ [f¬]`.
    pub neg_below: bool,
    /// `inf([f], [f¬])`
    pub inf: HyperValue,
    /// `sup([f], [f¬])`
    pub sup: HyperValue,
}

impl OppositionCases {
    pub fn cases(&self) -> impl Iterator<Item = OppositionCase> + '_ {
        [
            (self.incompatible, OppositionCase::Incompatible),
            (self.neg_above, OppositionCase::NegAbove),
            (self.neg_below, OppositionCase::NegBelow),
        ]
        .into_iter()
        .filter_map(|(on, c)| on.then_some(c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OppositionCase {
    Incompatible,
    NegAbove,
    NegBelow,
}

impl OppositionCase {
    pub fn number(self) -> u8 {
        match self {
            OppositionCase::Incompatible => 1,
            OppositionCase::NegAbove => 2,
            OppositionCase::NegBelow => 3,
        }
    }
}

/// One edge of the square: the two corners with their pointwise bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub holds: bool,
    pub left: HyperValue,
    pub right: HyperValue,
    pub inf: HyperValue,
    pub sup: HyperValue,
}

impl Relation {
    fn new(
        left: HyperValue,
        right: HyperValue,
        test: impl FnOnce(&Self) -> Result<bool, Error>,
    ) -> Result<Self, Error> {
        let mut rel = Relation { holds: false, left, right, inf: left.pinf(right)?, sup: left.psup(right)? };
        rel.holds = test(&rel)?;
        Ok(rel)
    }
}

/// Order-theoretic square of opposition over four corner values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareReport {
    /// The criterion `[f¬] ≤* ¬[f]`.
    pub holds: bool,
    /// `[f]`, `[f¬]`: pointwise meet is `*0`.
    pub contrary: Relation,
    /// `[f]`, `¬[f]`: meet `*0` and join `*1`.
    pub contradictory: Relation,
    /// `[f¬]`, `¬[f¬]`: meet `*0` and join `*1`.
    pub contradictory_neg: Relation,
    /// `¬[f¬]`, `¬[f]`: pointwise join is `*1`.
    pub subcontrary: Relation,
    /// `[f] ≤* ¬[f¬]`
    pub subaltern_left: Relation,
    /// `[f¬] ≤* ¬[f]`
    pub subaltern_right: Relation,
}

impl SquareReport {
    /// Builds the report from the corner values `F(p)`, `F(¬p)`, `¬F(p)`, `¬F(¬p)`.
    pub fn from_corners(
        act: HyperValue,
        act_neg: HyperValue,
        neg_act: HyperValue,
        neg_act_neg: HyperValue,
    ) -> Result<Self, Error> {
        let is_bottom = |h: HyperValue| h.standard_part().is_some_and(Element::is_bottom);
        let is_top = |h: HyperValue| h.standard_part().is_some_and(Element::is_top);
        Ok(SquareReport {
            holds: act_neg.hleq(neg_act)?,
            contrary: Relation::new(act, act_neg, |r| Ok(is_bottom(r.inf)))?,
            contradictory: Relation::new(act, neg_act, |r| Ok(is_bottom(r.inf) && is_top(r.sup)))?,
            contradictory_neg: Relation::new(act_neg, neg_act_neg, |r| Ok(is_bottom(r.inf) && is_top(r.sup)))?,
            subcontrary: Relation::new(neg_act_neg, neg_act, |r| Ok(is_top(r.sup)))?,
            subaltern_left: Relation::new(act, neg_act_neg, |r| r.left.hleq(r.right))?,
            subaltern_right: Relation::new(act_neg, neg_act, |r| r.left.hleq(r.right))?,
        })
    }

    /// True when every edge of the square holds.
    pub fn all_relations(&self) -> bool {
        self.contrary.holds
            && self.contradictory.holds
            && self.contradictory_neg.holds
            && self.subcontrary.holds
            && self.subaltern_left.holds
            && self.subaltern_right.holds
    }
}

/// A term-function representative with finitely many exceptional points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representative {
    pub value: HyperValue,
    pub exceptions: BTreeMap<Element, Element>,
}

impl From<HyperValue> for Representative {
    fn from(value: HyperValue) -> Self {
        Representative { value, exceptions: BTreeMap::new() }
    }
}

impl Representative {
    pub fn new(value: HyperValue, exceptions: BTreeMap<Element, Element>) -> Result<Self, Error> {
        for (k, v) in &exceptions {
            if k.width() != value.width() || v.width() != value.width() {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok(Representative { value, exceptions })
    }

    /// Canonical member of the class: exceptions dropped.
    pub fn normalize(&self) -> HyperValue {
        self.value
    }

    pub fn is_normal(&self) -> bool {
        self.exceptions.is_empty()
    }

    pub fn equivalent(&self, other: &Representative) -> Result<bool, Error> {
        self.value.same_algebra(other.value)?;
        Ok(self.value == other.value)
    }

    pub fn eval_at(&self, a: Element) -> Result<Element, Error> {
        match self.exceptions.get(&a) {
            Some(v) => Ok(*v),
            None => self.value.eval_at(a),
        }
    }

    fn pointwise(
        &self,
        other: &Representative,
        op: impl Fn(Element, Element) -> Result<Element, Error>,
        normal: HyperValue,
    ) -> Result<Representative, Error> {
        let mut exceptions = BTreeMap::new();
        for &key in self.exceptions.keys().chain(other.exceptions.keys()) {
            exceptions.insert(key, op(self.eval_at(key)?, other.eval_at(key)?)?);
        }
        Ok(Representative { value: normal, exceptions })
    }

    pub fn pinf(&self, other: &Representative) -> Result<Representative, Error> {
        self.pointwise(other, Element::meet, self.value.pinf(other.value)?)
    }

    pub fn psup(&self, other: &Representative) -> Result<Representative, Error> {
        self.pointwise(other, Element::join, self.value.psup(other.value)?)
    }

    pub fn hneg(&self) -> Representative {
        Representative {
            value: self.value.hneg(),
            exceptions: self.exceptions.iter().map(|(k, v)| (*k, v.complement())).collect(),
        }
    }

    /// Precomposition with complement; an exception at `k` moves to `¬k`.
    pub fn content_neg(&self) -> Representative {
        Representative {
            value: self.value.content_neg(),
            exceptions: self.exceptions.iter().map(|(k, v)| (k.complement(), *v)).collect(),
        }
    }
}

/// Every normal-form value over `alg`, ordered by `(on_true, on_false)` in
/// binary-counting order.
pub fn all_values(alg: &AlgebraSpec) -> impl Iterator<Item = HyperValue> + Clone + '_ {
    alg.enumerate().flat_map(move |u| alg.enumerate().map(move |v| HyperValue { on_true: u, on_false: v }))
}

/// The nonstandard values over `alg`, in the order of [`all_values`].
pub fn nonstandard_values(alg: &AlgebraSpec) -> impl Iterator<Item = HyperValue> + Clone + '_ {
    all_values(alg).filter(|h| !h.is_standard())
}

/// Number of nonstandard values, `4^k - 2^k`.
pub fn nonstandard_count(alg: &AlgebraSpec) -> u64 {
    let n = alg.cardinality();
    n * n - n
}

/// The `index`-th value of [`nonstandard_values`] without iterating.
pub fn nonstandard_at(alg: &AlgebraSpec, index: u64) -> HyperValue {
    let n = alg.cardinality();
    let u = index / (n - 1);
    let mut v = index % (n - 1);
    if v >= u {
        v += 1;
    }
    HyperValue { on_true: alg.element_at(u), on_false: alg.element_at(v) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn ab() -> AlgebraSpec {
        AlgebraSpec::new(["a", "b"]).unwrap()
    }

    fn hv(alg: &AlgebraSpec, t: &[&str], f: &[&str]) -> HyperValue {
        HyperValue::new(alg.element(t.iter().copied()).unwrap(), alg.element(f.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn normalize_drops_exceptions() {
        let alg = ab();
        let h = hv(&alg, &["a"], &["b"]);
        let mut ex = BTreeMap::new();
        ex.insert(alg.element(["a"]).unwrap(), alg.bottom());
        let r = Representative::new(h, ex).unwrap();
        assert_eq!(r.normalize(), h);
        assert!(r.equivalent(&h.into()).unwrap());
        let already = hv(&alg, &["a"], &["a"]);
        assert_eq!(Representative::from(already).normalize(), already);
        assert!(!Representative::from(h).equivalent(&hv(&alg, &["b"], &["a"]).into()).unwrap());
    }

    #[test]
    fn standard_embedding() {
        let alg = ab();
        let zero = HyperValue::standard(alg.bottom());
        assert!(zero.is_standard());
        assert_eq!(zero, hv(&alg, &[], &[]));
        assert!(HyperValue::standard(alg.top()).is_standard_top());
    }

    #[test]
    fn pointwise_examples() {
        let alg = ab();
        assert_eq!(hv(&alg, &["a"], &[]).pinf(hv(&alg, &[], &["a"])).unwrap(), HyperValue::standard(alg.bottom()));
        assert_eq!(
            hv(&alg, &["a", "b"], &["b"]).psup(hv(&alg, &["b"], &["a", "b"])).unwrap(),
            HyperValue::standard(alg.top())
        );
        assert_eq!(hv(&alg, &["a"], &["b"]).hneg(), hv(&alg, &["b"], &["a"]));
    }

    #[test]
    fn content_neg_examples() {
        let alg = ab();
        assert_eq!(hv(&alg, &["a"], &["a", "b"]).content_neg(), hv(&alg, &["a", "b"], &["a"]));
        for h in all_values(&alg) {
            assert_eq!(h.content_neg().content_neg(), h);
            if h.is_standard() {
                assert_eq!(h.content_neg(), h);
            }
        }
    }

    #[test]
    fn content_neg_is_precomposition() {
        let alg = ab();
        for h in all_values(&alg) {
            for a in alg.enumerate() {
                assert_eq!(h.content_neg().eval_at(a).unwrap(), h.eval_at(a.complement()).unwrap());
            }
        }
    }

    #[test]
    fn stipulated_order_examples() {
        let alg = ab();
        let zero = HyperValue::standard(alg.bottom());
        let h = hv(&alg, &["a"], &["b"]);
        assert!(h.hleq(zero).unwrap());
        assert!(!zero.hleq(h).unwrap());
        assert!(hv(&alg, &[], &["a"]).hleq(hv(&alg, &["a"], &["a", "b"])).unwrap());
    }

    #[test]
    fn order_bounds_examples() {
        let alg = ab();
        let zero = HyperValue::standard(alg.bottom());
        let h = hv(&alg, &["a"], &["b"]);
        assert_eq!(h.osup(zero).unwrap(), zero);
        assert_eq!(h.oinf(zero).unwrap(), h);
        assert_eq!(h.osup(hv(&alg, &["b"], &["a"])).unwrap(), HyperValue::standard(alg.top()));
    }

    #[test]
    fn classify_examples() {
        let alg = ab();
        let c = hv(&alg, &["a"], &[]).classify_opposition().unwrap();
        assert!(c.neg_above && !c.neg_below && !c.incompatible);
        assert_eq!(c.inf, HyperValue::standard(alg.bottom()));
        assert_eq!(c.sup, HyperValue::standard(alg.element(["a"]).unwrap()));

        let c = hv(&alg, &["a", "b"], &["b"]).classify_opposition().unwrap();
        assert!(c.neg_below && !c.neg_above);
        assert!(c.sup.is_standard_top());

        let abc = AlgebraSpec::letters(3).unwrap();
        let h = hv(&abc, &["a"], &["a", "b"]);
        assert_eq!(h.hneg(), hv(&abc, &["b", "c"], &["c"]));
        let c = h.classify_opposition().unwrap();
        assert_eq!(c.cases().collect::<Vec<_>>(), [OppositionCase::Incompatible]);

        assert_eq!(HyperValue::standard(alg.top()).classify_opposition(), Err(Error::StandardInput));
    }

    #[test]
    fn square_examples() {
        let alg = ab();
        let r = hv(&alg, &["a"], &[]).square_report().unwrap();
        assert!(r.holds && r.all_relations());
        let r = hv(&alg, &["a", "b"], &["b"]).square_report().unwrap();
        assert!(!r.holds);
        assert!(r.contradictory.holds);
        assert_eq!(HyperValue::standard(alg.bottom()).square_report(), Err(Error::StandardInput));
    }

    #[test]
    fn nonstandard_indexing() {
        for k in 1..=3 {
            let alg = AlgebraSpec::letters(k).unwrap();
            let listed: Vec<_> = nonstandard_values(&alg).collect();
            assert_eq!(listed.len() as u64, nonstandard_count(&alg));
            for (i, h) in listed.iter().enumerate() {
                assert_eq!(nonstandard_at(&alg, i as u64), *h);
            }
        }
    }

    #[test]
    fn mismatch() {
        let one = AlgebraSpec::new(["a"]).unwrap();
        let x = HyperValue::standard(one.top());
        let y = HyperValue::standard(ab().top());
        assert_eq!(x.pinf(y), Err(Error::AlgebraMismatch));
        assert_eq!(x.hleq(y), Err(Error::AlgebraMismatch));
        assert_eq!(x.osup(y), Err(Error::AlgebraMismatch));
        assert!(HyperValue::new(one.top(), ab().top()).is_err());
    }
}
