//! The finite regime k1 ≤ k ≤ k2 ≤ k3.
//!
//! When the special values order themselves k1 ≤ k2 ≤ k3, consistency of
//! the window bounds on e = r1r2 + r3 pins r1 to {2, 3, 4} and e to a
//! handful of values (7–11 for r1 = 2, 10 for r1 = 3, 11 for r1 = 4).
//! Enumerating the (r2, r3) splits of each e and the integer k in
//! [k1, k2] — plus the boundary case r1k + r2 = 1, where the triple
//! collapses onto {r1, r3 + r1r2 − r1} — yields exactly fifteen semigroups,
//! every one symmetric. Records are generated constructively from the
//! window equations, never copied from a list; candidates whose k is not
//! integral are dropped and counted.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exact::{ceil_to_int, floor_to_int, ratio};
use crate::family::FamilyParams;
use crate::oracle::{Oracle, OracleError};
use crate::tuple::GeneratorTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    /// The family is not in the k1 ≤ k2 ≤ k3 regime.
    RegimeMismatch,
    Oracle(OracleError),
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::RegimeMismatch => {
                write!(f, "family is not in the k1 <= k2 <= k3 regime")
            }
            EnumerationError::Oracle(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for EnumerationError {}

impl From<OracleError> for EnumerationError {
    fn from(e: OracleError) -> Self {
        EnumerationError::Oracle(e)
    }
}

/// Whether the record sits inside the k-interval or on the collapsing
/// boundary r1k + r2 = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryCase {
    Generic,
    Degenerate,
}

impl BoundaryCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundaryCase::Generic => "generic",
            BoundaryCase::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRecord {
    pub r1: i64,
    pub r2: i64,
    pub r3: i64,
    pub k: i64,
    /// e = r1r2 + r3, the window sum.
    pub e: i64,
    pub boundary: BoundaryCase,
    pub triple: GeneratorTuple,
    pub frobenius: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    /// Sorted by (r1, boundary, e, r2, k).
    pub records: Vec<EnumerationRecord>,
    /// Candidates whose k-interval held no integer, or whose boundary k
    /// was not integral.
    pub dropped_non_integer_k: usize,
}

/// The r1 for which the two window bounds on r1r2 + r3 are consistent:
/// exactly {2, 3, 4}.
pub fn feasible_r1() -> Vec<i64> {
    (2..).take_while(|&r1| feasibility_criterion(r1) <= ratio(0, 1)).collect()
}

/// r1(r1 − 4)/(r1 − 1): nonpositive exactly on the feasible r1.
pub fn feasibility_criterion(r1: i64) -> BigRational {
    ratio(r1 * (r1 - 4), r1 - 1)
}

/// Exact count of integers in [k1, k2] for a family in the
/// k1 ≤ k2 ≤ k3 regime: always 0 or 1 there.
pub fn count_bound(params: &FamilyParams) -> Result<BigInt, EnumerationError> {
    let sp = params.special_k_profile();
    if !(sp.k1 <= sp.k2 && sp.k2 <= sp.k3) {
        return Err(EnumerationError::RegimeMismatch);
    }
    let lo = ceil_to_int(&sp.k1);
    let hi = floor_to_int(&sp.k2);
    let count = hi - lo + BigInt::from(1);
    Ok(count.max(BigInt::from(0)))
}

/// The inclusive window [2r1 + 3, ⌊(r1² + 5r1 − 3)/(r1 − 1)⌋] of sums
/// e = r1r2 + r3 compatible with the regime.
fn e_window(r1: i64) -> std::ops::RangeInclusive<i64> {
    let lo = 2 * r1 + 3;
    let hi = (r1 * r1 + 5 * r1 - 3).div_euclid(r1 - 1);
    lo..=hi
}

/// Construct every record of the finite regime.
pub fn enumerate_all(oracle: &Oracle) -> Result<EnumerationReport, OracleError> {
    let mut records = Vec::new();
    let mut dropped = 0usize;

    for r1 in feasible_r1() {
        for e in e_window(r1) {
            let mut r2 = 1i64;
            while r1 * r2 < e {
                let r3 = e - r1 * r2;
                if gcd_i64(r1, r2) == 1 && gcd_i64(r1, r3) == 1 {
                    let params = FamilyParams::new(r1, r2, r3)
                        .expect("window members satisfy the family constraints");
                    let sp = params.special_k_profile();

                    let lo = ceil_to_int(&sp.k1);
                    let hi = floor_to_int(&sp.k2);
                    if lo > hi {
                        dropped += 1;
                    } else {
                        let mut k = lo.clone();
                        while k <= hi {
                            records.push(make_record(
                                oracle,
                                &params,
                                &k,
                                e,
                                BoundaryCase::Generic,
                            )?);
                            k += 1;
                        }
                    }

                    if sp.k4_integral {
                        let k4 = sp.k4.to_integer();
                        records.push(make_record(
                            oracle,
                            &params,
                            &k4,
                            e,
                            BoundaryCase::Degenerate,
                        )?);
                    } else {
                        dropped += 1;
                    }
                }
                r2 += 1;
            }
        }
    }

    records.sort_by(|a, b| {
        (a.r1, a.boundary, a.e, a.r2, a.k).cmp(&(b.r1, b.boundary, b.e, b.r2, b.k))
    });
    Ok(EnumerationReport { records, dropped_non_integer_k: dropped })
}

fn make_record(
    oracle: &Oracle,
    params: &FamilyParams,
    k: &BigInt,
    e: i64,
    boundary: BoundaryCase,
) -> Result<EnumerationRecord, OracleError> {
    let raw = params.triple_at(k);
    let triple = GeneratorTuple::new(raw).expect("regime triples are positive and coprime");
    let profile = oracle.profile(&triple)?;
    debug_assert!(profile.symmetric, "regime members are symmetric: {}", triple);
    Ok(EnumerationRecord {
        r1: i64::try_from(params.r1()).expect("feasible r1 is tiny"),
        r2: i64::try_from(params.r2()).expect("window r2 is tiny"),
        r3: i64::try_from(params.r3()).expect("window r3 is tiny"),
        k: i64::try_from(k).expect("window k is tiny"),
        e,
        boundary,
        triple,
        frobenius: profile.frobenius,
    })
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
