//! Brute-force reference semantics for `*B`.
//!
//! A value is the full table of its function `B -> B`, indexed by the
//! argument's bitmask. Every operation works on whole tables and the
//! evaluator recurses on the formula directly.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use illoc_core::syntax::Formula;
use illoc_core::{AlgebraSpec, Element, HyperValue, MbMode, MbValuation};

pub type Table = Vec<u32>;

#[derive(Clone, Copy, Debug)]
pub struct Alg {
    pub k: u32,
}

impl Alg {
    pub fn top(self) -> u32 {
        (1u32 << self.k) - 1
    }

    pub fn size(self) -> usize {
        1 << self.k
    }

    pub fn constant(self, c: u32) -> Table {
        vec![c; self.size()]
    }

    /// The function `x ↦ (u ∧ x) ∨ (v ∧ ¬x)`.
    pub fn term(self, u: u32, v: u32) -> Table {
        (0..self.size() as u32).map(|x| (u & x) | (v & !x & self.top())).collect()
    }

    pub fn is_constant(self, t: &Table) -> bool {
        t.iter().all(|&y| y == t[0])
    }

    pub fn nonstandard(self) -> Vec<Table> {
        let mut out = Vec::new();
        for u in 0..=self.top() {
            for v in 0..=self.top() {
                let t = self.term(u, v);
                if !self.is_constant(&t) {
                    out.push(t);
                }
            }
        }
        out
    }

    fn zip(t: &Table, s: &Table, op: impl Fn(u32, u32) -> u32) -> Table {
        t.iter().zip(s).map(|(&a, &b)| op(a, b)).collect()
    }

    pub fn meet(self, t: &Table, s: &Table) -> Table {
        Self::zip(t, s, |a, b| a & b)
    }

    pub fn join(self, t: &Table, s: &Table) -> Table {
        Self::zip(t, s, |a, b| a | b)
    }

    pub fn complement(self, t: &Table) -> Table {
        t.iter().map(|&a| !a & self.top()).collect()
    }

    /// `x ↦ f(¬x)`
    pub fn content_neg(self, t: &Table) -> Table {
        (0..self.size()).map(|x| t[!x & self.top() as usize]).collect()
    }

    pub fn leq(self, t: &Table, s: &Table) -> bool {
        match (self.is_constant(t), self.is_constant(s)) {
            (false, true) => true,
            (true, false) => false,
            _ => t.iter().zip(s).all(|(&a, &b)| a & !b == 0),
        }
    }

    pub fn osup(self, t: &Table, s: &Table) -> Table {
        match (self.is_constant(t), self.is_constant(s)) {
            (true, false) => t.clone(),
            (false, true) => s.clone(),
            _ => self.join(t, s),
        }
    }

    pub fn oinf(self, t: &Table, s: &Table) -> Table {
        match (self.is_constant(t), self.is_constant(s)) {
            (true, false) => s.clone(),
            (false, true) => t.clone(),
            _ => self.meet(t, s),
        }
    }

    pub fn and(self, t: &Table, s: &Table) -> Table {
        match (self.is_constant(t), self.is_constant(s)) {
            (true, true) => self.meet(t, s),
            (false, false) => self.join(t, s),
            _ => self.oinf(t, s),
        }
    }

    pub fn or(self, t: &Table, s: &Table) -> Table {
        match (self.is_constant(t), self.is_constant(s)) {
            (true, true) => self.join(t, s),
            (false, false) => self.meet(t, s),
            _ => self.osup(t, s),
        }
    }

    pub fn imp(self, t: &Table, s: &Table) -> Table {
        self.join(&self.complement(&self.osup(t, s)), s)
    }

    pub fn is_designated(self, t: &Table) -> bool {
        t.iter().all(|&y| y == self.top())
    }
}

#[derive(Clone, Debug, Default)]
pub struct OVal {
    pub atoms: BTreeMap<String, u32>,
    pub acts: BTreeMap<Formula, Table>,
    pub gens: BTreeMap<(String, String), Table>,
    pub sigs: BTreeMap<String, Table>,
}

fn has_force(f: &Formula) -> bool {
    match f {
        Formula::Force(..) => true,
        Formula::Atom(_) | Formula::ActRef(_) => false,
        Formula::Not(x) => has_force(x),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => has_force(l) || has_force(r),
    }
}

pub struct Oracle {
    pub alg: Alg,
    pub mode: MbMode,
}

impl Oracle {
    /// Value and admissibility.
    pub fn eval(&self, f: &Formula, v: &OVal) -> (Table, bool) {
        let a = self.alg;
        match f {
            Formula::Atom(n) => (a.constant(v.atoms[n]), true),
            Formula::ActRef(n) => panic!("unresolved act {n}"),
            Formula::Not(x) => {
                let (t, ok) = self.eval(x, v);
                (a.complement(&t), ok)
            }
            Formula::And(l, r) => self.bin(l, r, v, |x, y| a.and(x, y)),
            Formula::Or(l, r) => self.bin(l, r, v, |x, y| a.or(x, y)),
            Formula::Implies(l, r) => self.bin(l, r, v, |x, y| a.imp(x, y)),
            Formula::Force(name, content) => {
                let (t, ok) = if has_force(content) {
                    let (inner, ok) = self.eval(content, v);
                    (a.imp(&v.sigs[name], &inner), ok)
                } else {
                    match self.mode {
                        MbMode::Free => (v.acts[f].clone(), true),
                        _ => (self.content(name, content, v), true),
                    }
                };
                let ok = ok && !a.is_constant(&t);
                (t, ok)
            }
        }
    }

    fn bin(&self, l: &Formula, r: &Formula, v: &OVal, op: impl Fn(&Table, &Table) -> Table) -> (Table, bool) {
        let (x, ok1) = self.eval(l, v);
        let (y, ok2) = self.eval(r, v);
        (op(&x, &y), ok1 && ok2)
    }

    fn content(&self, force: &str, c: &Formula, v: &OVal) -> Table {
        let a = self.alg;
        let pointwise = self.mode == MbMode::Pointwise;
        match c {
            Formula::Atom(n) => v.gens[&(force.to_string(), n.clone())].clone(),
            Formula::Not(x) => a.content_neg(&self.content(force, x, v)),
            Formula::And(l, r) => {
                let (x, y) = (self.content(force, l, v), self.content(force, r, v));
                if pointwise {
                    a.meet(&x, &y)
                } else {
                    a.and(&x, &y)
                }
            }
            Formula::Or(l, r) => {
                let (x, y) = (self.content(force, l, v), self.content(force, r, v));
                if pointwise {
                    a.join(&x, &y)
                } else {
                    a.or(&x, &y)
                }
            }
            Formula::Implies(l, r) => {
                let (x, y) = (self.content(force, l, v), self.content(force, r, v));
                if pointwise {
                    a.join(&a.content_neg(&x), &y)
                } else {
                    a.imp(&x, &y)
                }
            }
            Formula::Force(..) | Formula::ActRef(_) => unreachable!("force-free content"),
        }
    }

    /// Slots a formula needs: atoms, free acts, generators, signatures.
    pub fn slots(&self, f: &Formula) -> (Vec<String>, Vec<Formula>, Vec<(String, String)>, Vec<String>) {
        let mut atoms = BTreeSet::new();
        let mut acts = BTreeSet::new();
        let mut gens = BTreeSet::new();
        let mut sigs = BTreeSet::new();
        fn walk(
            f: &Formula,
            mode: MbMode,
            atoms: &mut BTreeSet<String>,
            acts: &mut BTreeSet<Formula>,
            gens: &mut BTreeSet<(String, String)>,
            sigs: &mut BTreeSet<String>,
        ) {
            match f {
                Formula::Atom(n) => {
                    atoms.insert(n.clone());
                }
                Formula::ActRef(_) => {}
                Formula::Not(x) => walk(x, mode, atoms, acts, gens, sigs),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                    walk(l, mode, atoms, acts, gens, sigs);
                    walk(r, mode, atoms, acts, gens, sigs);
                }
                Formula::Force(name, c) => {
                    if has_force(c) {
                        sigs.insert(name.clone());
                        walk(c, mode, atoms, acts, gens, sigs);
                    } else if mode == MbMode::Free {
                        acts.insert(f.clone());
                    } else {
                        for a in c.atoms() {
                            gens.insert((name.clone(), a));
                        }
                    }
                }
            }
        }
        walk(f, self.mode, &mut atoms, &mut acts, &mut gens, &mut sigs);
        (
            atoms.into_iter().collect(),
            acts.into_iter().collect(),
            gens.into_iter().collect(),
            sigs.into_iter().collect(),
        )
    }

    /// Calls `visit` on every valuation of the formula's slots.
    pub fn for_each(&self, f: &Formula, mut visit: impl FnMut(&OVal)) {
        let (atoms, acts, gens, sigs) = self.slots(f);
        let ns = self.alg.nonstandard();
        let elems: Vec<u32> = (0..=self.alg.top()).collect();
        let radices: Vec<usize> = atoms
            .iter()
            .map(|_| elems.len())
            .chain(acts.iter().map(|_| ns.len()))
            .chain(gens.iter().map(|_| ns.len()))
            .chain(sigs.iter().map(|_| ns.len()))
            .collect();
        let mut digits = vec![0usize; radices.len()];
        loop {
            let mut v = OVal::default();
            let mut d = digits.iter();
            for a in &atoms {
                v.atoms.insert(a.clone(), elems[*d.next().unwrap()]);
            }
            for act in &acts {
                v.acts.insert(act.clone(), ns[*d.next().unwrap()].clone());
            }
            for g in &gens {
                v.gens.insert(g.clone(), ns[*d.next().unwrap()].clone());
            }
            for s in &sigs {
                v.sigs.insert(s.clone(), ns[*d.next().unwrap()].clone());
            }
            visit(&v);
            let mut i = radices.len();
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < radices[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    /// Whether every admissible valuation designates `f`, and how many
    /// admissible valuations refute it.
    pub fn status(&self, f: &Formula) -> OracleStatus {
        let mut st = OracleStatus::default();
        self.for_each(f, |v| {
            let (t, ok) = self.eval(f, v);
            if ok {
                st.admissible += 1;
                if !self.alg.is_designated(&t) {
                    st.refuting += 1;
                }
            }
        });
        st
    }

    pub fn from_hyper(&self, h: HyperValue) -> Table {
        self.alg.term(h.on_true().bits(), h.on_false().bits())
    }

    pub fn to_hyper(&self, t: &Table, alg: &AlgebraSpec) -> HyperValue {
        let e = |b: u32| Element::from_bits(b, alg.size() as u8).unwrap();
        HyperValue::new(e(t[self.alg.top() as usize]), e(t[0])).unwrap()
    }

    /// Converts a valuation of the main evaluator.
    pub fn from_valuation(&self, val: &MbValuation) -> OVal {
        let mut v = OVal::default();
        for (a, e) in &val.atom_values {
            v.atoms.insert(a.clone(), e.bits());
        }
        for (key, h) in &val.act_values {
            v.acts.insert(key.parse().expect("canonical act"), self.from_hyper(*h));
        }
        for (force, m) in &val.generators {
            for (atom, h) in m {
                v.gens.insert((force.clone(), atom.clone()), self.from_hyper(*h));
            }
        }
        for (force, h) in &val.signatures {
            v.sigs.insert(force.clone(), self.from_hyper(*h));
        }
        v
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleStatus {
    pub admissible: u64,
    pub refuting: u64,
}

impl OracleStatus {
    pub fn is_tautology(self) -> bool {
        self.refuting == 0
    }
}

/// Formulas (10)-(14) with force `f` over atoms `p`, `q`.
pub const LAWS: [(&str, &str); 5] = [
    ("10", "[f](p) -> p"),
    ("11", "~[f](p) -> ~p"),
    ("12", "[f](p & q) -> [f](p) & [f](q)"),
    ("13", "[f](p) | [f](q) -> [f](p | q)"),
    ("14", "[f](p -> q) -> ([f](p) -> [f](q))"),
];
