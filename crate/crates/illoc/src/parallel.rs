//! Multi-threaded first-hit search.
//!
//! Workers claim fixed-size chunks of the index range in increasing order
//! and stop once they pass the best index found so far. The result is the
//! outcome with the smallest index, the same as a sequential scan.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use illoc_core::search::{check_budget, first_hit, Probe};
use illoc_core::Error;

const MAX_CHUNK: u64 = 4096;

pub fn default_jobs() -> usize {
    thread::available_parallelism().map(NonZeroUsize::get).unwrap_or(1)
}

type Outcome<H> = (u64, Result<H, Error>);

/// First hit by index using up to `jobs` threads, after a budget check.
pub fn search<P: Probe>(p: &P, budget: u64, jobs: usize) -> Result<Option<(u64, P::Hit)>, Error> {
    check_budget(p, budget)?;
    let n = p.len();
    let jobs = jobs.max(1).min(usize::try_from(n).unwrap_or(usize::MAX));
    if jobs <= 1 {
        return first_hit(p, 0..n);
    }
    let chunk = (n / (jobs as u64 * 16)).clamp(1, MAX_CHUNK);
    let next = AtomicU64::new(0);
    let best = AtomicU64::new(u64::MAX);
    let found: Mutex<Option<Outcome<P::Hit>>> = Mutex::new(None);

    thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let start = next.fetch_add(chunk, Ordering::Relaxed);
                if start >= n || start >= best.load(Ordering::Relaxed) {
                    break;
                }
                for i in start..(start + chunk).min(n) {
                    if i >= best.load(Ordering::Relaxed) {
                        break;
                    }
                    let outcome = match p.probe(i) {
                        Ok(None) => continue,
                        Ok(Some(hit)) => Ok(hit),
                        Err(e) => Err(e),
                    };
                    best.fetch_min(i, Ordering::Relaxed);
                    let mut slot = found.lock().expect("worker panicked");
                    if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                        *slot = Some((i, outcome));
                    }
                    break;
                }
            });
        }
    });

    match found.into_inner().expect("worker panicked") {
        None => Ok(None),
        Some((i, Ok(hit))) => Ok(Some((i, hit))),
        Some((_, Err(e))) => Err(e),
    }
}
