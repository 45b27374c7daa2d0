//! Seeded random formulas.

use illoc_core::syntax::Formula;
use rand::Rng;

pub struct FormulaGen<'a> {
    pub atoms: &'a [&'a str],
    pub forces: &'a [&'a str],
}

impl FormulaGen<'_> {
    pub fn formula(&self, rng: &mut impl Rng, depth: usize) -> Formula {
        if depth == 0 || rng.gen_ratio(1, 4) {
            return Formula::atom(self.atoms[rng.gen_range(0..self.atoms.len())]);
        }
        let d = depth - 1;
        match rng.gen_range(0..5) {
            0 => Formula::not(self.formula(rng, d)),
            1 => Formula::and(self.formula(rng, d), self.formula(rng, d)),
            2 => Formula::or(self.formula(rng, d), self.formula(rng, d)),
            3 => Formula::implies(self.formula(rng, d), self.formula(rng, d)),
            _ => Formula::force(self.forces[rng.gen_range(0..self.forces.len())], self.formula(rng, d)),
        }
    }
}
