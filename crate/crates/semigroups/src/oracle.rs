//! Brute-force semigroup oracle.
//!
//! Ground truth for the whole crate: membership, gap sets, Frobenius
//! numbers, symmetry and minimal generating sets, computed exactly via the
//! Apéry set of the smallest generator (shortest nonnegative representative
//! per residue class, found by Dijkstra over Z_d). Effort is capped by a
//! configurable work bound; exceeding it is a hard error, never a silent
//! truncation.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::tuple::GeneratorTuple;

/// Default cap on oracle effort, in candidate values (roughly the product
/// of the smallest and largest generator). Sized so every generator tuple
/// with entries below a few thousand profiles in microseconds.
pub const DEFAULT_WORK_BOUND: u64 = 100_000_000;

// Hard ceiling keeping all internal u64 arithmetic overflow-free.
const ARITH_CAP: u128 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The input needs more candidate values than the configured bound.
    WorkBoundExceeded { required: u128, bound: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::WorkBoundExceeded { required, bound } => write!(
                f,
                "work bound exceeded: input needs about {} candidate values, bound is {}",
                required, bound
            ),
        }
    }
}

impl std::error::Error for OracleError {}

/// Everything the oracle knows about one semigroup.
///
/// `frobenius` is −1 exactly when the tuple is degenerate (contains 1), in
/// which case the semigroup is all of Z≥0, the gap set is empty and the
/// symmetry flag is reported as true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupProfile {
    pub tuple: GeneratorTuple,
    pub frobenius: BigInt,
    pub conductor: BigInt,
    /// Sorted ascending. Gap values are bounded by the work bound, so they
    /// are stored as machine integers.
    pub gaps: Vec<u64>,
    pub genus: u64,
    pub symmetric: bool,
    pub minimal: bool,
}

/// The brute-force engine. Stateless apart from its work bound; safe to
/// share across threads.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    work_bound: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self { work_bound: DEFAULT_WORK_BOUND }
    }

    pub fn with_work_bound(work_bound: u64) -> Self {
        Self { work_bound }
    }

    pub fn work_bound(&self) -> u64 {
        self.work_bound
    }

    /// Is `s` a nonnegative integer combination of the generators?
    ///
    /// Total on valid tuples: negative `s` is simply not a member.
    pub fn membership(&self, tuple: &GeneratorTuple, s: &BigInt) -> Result<bool, OracleError> {
        if s.is_negative() {
            return Ok(false);
        }
        if s.is_zero() || tuple.is_degenerate() {
            return Ok(true);
        }
        let gens = self.fit(tuple.generators(), false)?;
        let apery = apery_set(&gens);
        match s.to_u64() {
            // Apéry values stay below 2^63, so anything larger than u64 is
            // past the conductor.
            None => Ok(true),
            Some(sv) => Ok(apery[(sv % gens[0]) as usize] <= sv),
        }
    }

    /// Full profile: Frobenius number, conductor, the complete gap set,
    /// genus, the definitional symmetry check and minimality.
    pub fn profile(&self, tuple: &GeneratorTuple) -> Result<SemigroupProfile, OracleError> {
        let minimal = self.is_minimal(tuple)?;
        if tuple.is_degenerate() {
            return Ok(SemigroupProfile {
                tuple: tuple.clone(),
                frobenius: BigInt::from(-1),
                conductor: BigInt::zero(),
                gaps: Vec::new(),
                genus: 0,
                symmetric: true,
                minimal,
            });
        }
        let gens = self.fit(tuple.generators(), true)?;
        let apery = apery_set(&gens);
        let d = gens[0];
        let f = apery.iter().copied().max().expect("nonempty") - d;
        debug_assert!(f >= 1);

        let mut gaps = Vec::new();
        for (r, &top) in apery.iter().enumerate() {
            let mut x = r as u64;
            while x < top {
                if x > 0 {
                    gaps.push(x);
                }
                x += d;
            }
        }
        gaps.sort_unstable();
        let genus = gaps.len() as u64;

        // Definitional symmetry: for each s in [0, F], exactly one of s and
        // F−s belongs to the semigroup.
        let fu = f as usize;
        let mut in_s = vec![true; fu + 1];
        for &g in &gaps {
            in_s[g as usize] = false;
        }
        let symmetric = (0..=fu).all(|s| in_s[s] != in_s[fu - s]);

        Ok(SemigroupProfile {
            tuple: tuple.clone(),
            frobenius: BigInt::from(f),
            conductor: BigInt::from(f + 1),
            gaps,
            genus,
            symmetric,
            minimal,
        })
    }

    /// True iff no generator is representable by the others.
    pub fn is_minimal(&self, tuple: &GeneratorTuple) -> Result<bool, OracleError> {
        let gens = self.fit(tuple.generators(), false)?;
        for i in 0..gens.len() {
            let others: Vec<u64> =
                gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g).collect();
            if self.representable(&others, gens[i])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Drop redundant generators until the tuple is minimal. The gap set is
    /// unchanged; the result is the unique minimal generating set.
    pub fn reduce_to_minimal(&self, tuple: &GeneratorTuple) -> Result<GeneratorTuple, OracleError> {
        let mut gens = self.fit(tuple.generators(), false)?;
        'outer: loop {
            for i in 0..gens.len() {
                let others: Vec<u64> =
                    gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &g)| g).collect();
                if self.representable(&others, gens[i])? {
                    gens.remove(i);
                    continue 'outer;
                }
            }
            break;
        }
        Ok(GeneratorTuple::new(gens).expect("subset generating the same semigroup stays valid"))
    }

    /// Membership of `target` in the monoid generated by `others`, which
    /// need not have gcd 1 (used for minimality: divide out the gcd first).
    pub(crate) fn representable(&self, others: &[u64], target: u64) -> Result<bool, OracleError> {
        if target == 0 {
            return Ok(true);
        }
        if others.is_empty() {
            return Ok(false);
        }
        let g = others.iter().fold(0u64, |a, &b| gcd_u64(a, b));
        if !target.is_multiple_of(g) {
            return Ok(false);
        }
        let mut reduced: Vec<u64> = others.iter().map(|&x| x / g).collect();
        reduced.sort_unstable();
        reduced.dedup();
        if reduced[0] == 1 {
            return Ok(true);
        }
        self.check_apery_budget(&reduced, false)?;
        let apery = apery_set(&reduced);
        let t = target / g;
        Ok(apery[(t % reduced[0]) as usize] <= t)
    }

    /// Convert to machine integers and enforce the budget. `full_gaps`
    /// additionally charges for enumerating every value below the conductor.
    fn fit(&self, gens: &[BigInt], full_gaps: bool) -> Result<Vec<u64>, OracleError> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            match g.to_u64() {
                Some(v) => out.push(v),
                None => {
                    return Err(OracleError::WorkBoundExceeded {
                        required: g.to_u128().unwrap_or(u128::MAX),
                        bound: self.work_bound,
                    })
                }
            }
        }
        self.check_apery_budget(&out, full_gaps)?;
        Ok(out)
    }

    fn check_apery_budget(&self, gens: &[u64], full_gaps: bool) -> Result<(), OracleError> {
        let d_min = gens[0] as u128;
        let d_max = *gens.last().expect("nonempty") as u128;
        let required = d_min * d_max.max(1);
        if required > ARITH_CAP || d_min > self.work_bound as u128 {
            return Err(OracleError::WorkBoundExceeded { required, bound: self.work_bound });
        }
        if full_gaps && required > self.work_bound as u128 {
            return Err(OracleError::WorkBoundExceeded { required, bound: self.work_bound });
        }
        Ok(())
    }
}

/// Apéry set of the semigroup with respect to its smallest generator:
/// `result[r]` is the least member congruent to r mod `gens[0]`.
///
/// `gens` must be sorted ascending with gcd 1 and `gens[0] >= 2`.
fn apery_set(gens: &[u64]) -> Vec<u64> {
    let d = gens[0] as usize;
    let mut dist = vec![u64::MAX; d];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((v, r))) = heap.pop() {
        if v > dist[r] {
            continue;
        }
        for &g in &gens[1..] {
            let nv = v + g;
            let nr = (nv % d as u64) as usize;
            if nv < dist[nr] {
                dist[nr] = nv;
                heap.push(Reverse((nv, nr)));
            }
        }
    }
    debug_assert!(dist.iter().all(|&v| v != u64::MAX), "gcd 1 makes every class reachable");
    dist
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
