//! Exhaustive searches over an indexed valuation space.
//!
//! A [`Probe`] maps every index in `0..len()` to an optional hit. The
//! answer of a search is the hit with the smallest index, so any
//! partitioning of the index range (see the `illoc` crate's parallel
//! runner) returns the same witness as a sequential scan.

use core::ops::Range;

use crate::error::Error;

/// Default cap on evaluator calls for one search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub trait Probe: Sync {
    type Hit: Send;

    /// Size of the index space.
    fn len(&self) -> u64;

    /// Evaluator calls spent per index.
    fn cost(&self) -> u64 {
        1
    }

    fn probe(&self, index: u64) -> Result<Option<Self::Hit>, Error>;
}

/// Total evaluator calls a full scan of `p` needs.
pub fn required_calls<P: Probe + ?Sized>(p: &P) -> u128 {
    p.len() as u128 * p.cost() as u128
}

pub fn check_budget<P: Probe + ?Sized>(p: &P, budget: u64) -> Result<(), Error> {
    let needed = required_calls(p);
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// First hit in `range`, scanning in index order.
pub fn first_hit<P: Probe + ?Sized>(p: &P, range: Range<u64>) -> Result<Option<(u64, P::Hit)>, Error> {
    for i in range {
        if let Some(hit) = p.probe(i)? {
            return Ok(Some((i, hit)));
        }
    }
    Ok(None)
}

/// Sequential search with a budget check up front.
pub fn search<P: Probe + ?Sized>(p: &P, budget: u64) -> Result<Option<(u64, P::Hit)>, Error> {
    check_budget(p, budget)?;
    first_hit(p, 0..p.len())
}

/// Mixed-radix decoding: digit `0` is the most significant.
pub fn decode_mixed_radix(mut index: u64, radices: &[u64], digits: &mut [u64]) {
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d = index % r;
        index /= r;
    }
}

/// Product of radices, or `None` on overflow.
pub fn mixed_radix_len(radices: &[u64]) -> Option<u64> {
    radices.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Multiples(u64);

    impl Probe for Multiples {
        type Hit = u64;
        fn len(&self) -> u64 {
            100
        }
        fn probe(&self, i: u64) -> Result<Option<u64>, Error> {
            Ok((i > 0 && i % self.0 == 0).then_some(i * 10))
        }
    }

    #[test]
    fn first_hit_is_smallest() {
        assert_eq!(first_hit(&Multiples(7), 0..100).unwrap(), Some((7, 70)));
        assert_eq!(first_hit(&Multiples(7), 8..100).unwrap(), Some((14, 140)));
        assert_eq!(first_hit(&Multiples(200), 0..100).unwrap(), None);
    }

    #[test]
    fn budget() {
        assert!(search(&Multiples(3), 100).is_ok());
        assert_eq!(search(&Multiples(3), 99), Err(Error::BudgetExceeded { needed: 100, budget: 99 }));
    }

    #[test]
    fn mixed_radix() {
        let radices = [2, 3, 4];
        assert_eq!(mixed_radix_len(&radices), Some(24));
        let mut d = [0; 3];
        decode_mixed_radix(23, &radices, &mut d);
        assert_eq!(d, [1, 2, 3]);
        decode_mixed_radix(5, &radices, &mut d);
        assert_eq!(d, [0, 1, 1]);
        assert_eq!(mixed_radix_len(&[u64::MAX, 2]), None);
    }
}
