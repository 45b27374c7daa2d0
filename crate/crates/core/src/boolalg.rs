//! Finite powerset Boolean algebras `2^k` over named atoms.
//!
//! An [`Element`] is a bitset over the atom positions of its algebra. The
//! element remembers how many atoms its algebra has, so complement is
//! self-contained and mixing elements of different algebras is detected.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Default upper bound on the number of atoms.
pub const DEFAULT_MAX_ATOMS: usize = 16;

/// Hard limit imposed by the `u32` bitset representation.
pub const HARD_MAX_ATOMS: usize = 31;

/// Returns true when `name` matches `[a-z][a-z0-9_]*`.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// The declared atoms of a finite Boolean algebra, in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    atoms: Vec<String>,
}

impl AlgebraSpec {
    pub fn new<I, S>(atoms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_max(atoms, DEFAULT_MAX_ATOMS)
    }

    pub fn with_max<I, S>(atoms: I, max: usize) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        let max = max.min(HARD_MAX_ATOMS);
        if atoms.is_empty() {
            return Err(Error::InvalidAlgebra("an algebra needs at least one atom".into()));
        }
        if atoms.len() > max {
            return Err(Error::InvalidAlgebra(alloc::format!("{} atoms exceed the maximum of {}", atoms.len(), max)));
        }
        for (i, name) in atoms.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidAlgebra(alloc::format!("atom name {name:?} is not an identifier")));
            }
            if atoms[..i].contains(name) {
                return Err(Error::InvalidAlgebra(alloc::format!("duplicate atom {name:?}")));
            }
        }
        Ok(AlgebraSpec { atoms })
    }

    /// `a, b, c, ...` for the first `k` letters.
    pub fn letters(k: usize) -> Result<Self, Error> {
        if k > 26 {
            return Err(Error::InvalidAlgebra("at most 26 letter atoms".into()));
        }
        Self::new((0..k).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn size(&self) -> usize {
        self.atoms.len()
    }

    pub fn bottom(&self) -> Element {
        Element::bottom(self.size() as u8)
    }

    pub fn top(&self) -> Element {
        Element::top(self.size() as u8)
    }

    /// Number of elements, `2^k`.
    pub fn cardinality(&self) -> u64 {
        1u64 << self.size()
    }

    /// All `2^k` elements in binary-counting order: element `i` contains
    /// atom `j` iff bit `j` of `i` is set.
    pub fn enumerate(&self) -> impl Iterator<Item = Element> + Clone {
        let width = self.size() as u8;
        (0..(1u32 << width)).map(move |bits| Element { bits, width })
    }

    /// The element at position `index` of [`AlgebraSpec::enumerate`].
    pub fn element_at(&self, index: u64) -> Element {
        debug_assert!(index < self.cardinality());
        Element { bits: index as u32, width: self.size() as u8 }
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    /// Builds the element containing exactly the named atoms.
    pub fn element<I, S>(&self, names: I) -> Result<Element, Error>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for name in names {
            let name = name.as_ref();
            let i = self.atom_index(name).ok_or_else(|| Error::UnknownAlgebraAtom(name.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Element { bits, width: self.size() as u8 })
    }

    /// Checks that `e` belongs to this algebra.
    pub fn check(&self, e: Element) -> Result<Element, Error> {
        if e.width as usize == self.size() {
            Ok(e)
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Atom names of `e` in declaration order.
    pub fn names(&self, e: Element) -> Vec<&str> {
        (0..self.size()).filter(|&i| e.bits & (1 << i) != 0).map(|i| self.atoms[i].as_str()).collect()
    }

    /// Canonical rendering: `{}` for bottom, `{a,b}` otherwise.
    pub fn render(&self, e: Element) -> String {
        let mut out = String::from("{");
        out.push_str(&self.names(e).join(","));
        out.push('}');
        out
    }
}

/// A member of a finite powerset algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    width: u8,
    bits: u32,
}

impl Element {
    pub fn bottom(width: u8) -> Self {
        Element { bits: 0, width }
    }

    pub fn top(width: u8) -> Self {
        Element { bits: mask(width), width }
    }

    /// Builds an element from raw bits; bits beyond `width` are rejected.
    pub fn from_bits(bits: u32, width: u8) -> Result<Self, Error> {
        if width as usize > HARD_MAX_ATOMS || bits & !mask(width) != 0 {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Element { bits, width })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Number of atoms of the owning algebra.
    pub fn width(self) -> u8 {
        self.width
    }

    pub fn is_bottom(self) -> bool {
        self.bits == 0
    }

    pub fn is_top(self) -> bool {
        self.bits == mask(self.width)
    }

    pub fn contains_atom(self, index: usize) -> bool {
        index < self.width as usize && self.bits & (1 << index) != 0
    }

    fn same_algebra(self, other: Element) -> Result<(), Error> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn meet(self, other: Element) -> Result<Element, Error> {
        self.same_algebra(other)?;
        Ok(Element { bits: self.bits & other.bits, width: self.width })
    }

    pub fn join(self, other: Element) -> Result<Element, Error> {
        self.same_algebra(other)?;
        Ok(Element { bits: self.bits | other.bits, width: self.width })
    }

    pub fn complement(self) -> Element {
        Element { bits: !self.bits & mask(self.width), width: self.width }
    }

    /// Subset order.
    pub fn leq(self, other: Element) -> Result<bool, Error> {
        self.same_algebra(other)?;
        Ok(self.bits & !other.bits == 0)
    }
}

fn mask(width: u8) -> u32 {
    if width as usize >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

impl fmt::Display for Element {
    /// Positional rendering (`{0,2}`); use [`AlgebraSpec::render`] for names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for i in 0..self.width as usize {
            if self.bits & (1 << i) != 0 {
                if !first {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
                first = false;
            }
        }
        f.write_str("}")
    }
}
