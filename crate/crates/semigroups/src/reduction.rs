//! Sporadic two-generator reductions via divisor enumeration.
//!
//! The middle generator depends linearly on the third, r1r2 + r1²k =
//! g·(r3 − r1²k) with g ∈ Z⁺, exactly at finitely many sporadic k. Writing
//! X = g + 1 turns the quadratic Diophantine equation into
//! r1²k − r3 + (r1r2 + r3)/X = 0, so X must divide n = r1r2 + r3 and every
//! solution comes from a divisor of n; the divisors 1 and n are excluded
//! (g would be 0, or the reduced generator would be 1, leaving a gapless
//! semigroup). Consequences: every g is a multiple of r1, the solution
//! count Q is at most σ0(n) − 2, prime n gives Q = 0, and n = p² with
//! r1 ∤ p − 1 gives Q = 0.
//!
//! The other two conceivable linear dependences inside the triple
//! contradict gcd(r1, r3) = 1 and never occur; property tests confirm this
//! by exhaustive scan.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::family::FamilyParams;
use crate::oracle::{Oracle, OracleError};
use crate::tuple::GeneratorTuple;

/// One sporadic reduction: at k = `k_star` the triple collapses onto
/// `reduced_pair` = {r1², r3 − r1²k*}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSolution {
    pub k_star: BigInt,
    pub g_star: BigInt,
    /// The divisor X = g* + 1 of r1r2 + r3 this solution came from.
    pub divisor_x: BigInt,
    pub reduced_pair: GeneratorTuple,
    /// Oracle Frobenius number of the reduced pair.
    pub frobenius: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corollary2Verdict {
    /// n is not the square of a prime.
    NotApplicable,
    /// n = p² and r1 ∤ p − 1: no solutions exist.
    QZeroCertified,
    /// n = p² and r1 | p − 1: the single candidate X = p must be tried.
    CandidateRemains,
}

impl Corollary2Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Corollary2Verdict::NotApplicable => "not_applicable",
            Corollary2Verdict::QZeroCertified => "q_zero_certified",
            Corollary2Verdict::CandidateRemains => "candidate_remains",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionAnalysis {
    pub params: FamilyParams,
    /// n = r1r2 + r3.
    pub n: BigInt,
    pub divisors: Vec<BigInt>,
    pub sigma0: u64,
    /// Sorted by k*.
    pub solutions: Vec<ReductionSolution>,
    /// Q = number of solutions; 0 ≤ Q ≤ σ0(n) − 2.
    pub q: u64,
    /// n prime: certifies Q = 0 outright.
    pub corollary1_prime: bool,
    pub corollary2: Corollary2Verdict,
}

/// Enumerate every sporadic reduction of the family.
pub fn solve_reduction(
    oracle: &Oracle,
    params: &FamilyParams,
) -> Result<ReductionAnalysis, OracleError> {
    let n_big = params.generator_sum();
    let n = fit_u64(&n_big, oracle)?;
    let divisors = divisors_u64(n);
    let r1sq = params.r1() * params.r1();

    let mut solutions = Vec::new();
    for &x in &divisors {
        if x < 2 || x >= n {
            continue;
        }
        let cofactor = BigInt::from(n / x);
        let numer = params.r3() - &cofactor;
        if !(&numer % &r1sq).is_zero() {
            continue;
        }
        let k_star = numer / &r1sq;
        let g_star = BigInt::from(x - 1);
        // gcd(r1, r3) = 1 forces r1 | g; anything else would violate the
        // defining dependence.
        debug_assert!((&g_star % params.r1()).is_zero());
        if !(&g_star % params.r1()).is_zero() {
            continue;
        }

        let triple = GeneratorTuple::new(params.triple_at(&k_star))
            .expect("solution triples are positive and coprime");
        let reduced_pair = GeneratorTuple::new([r1sq.clone(), cofactor.clone()])
            .expect("cofactor of n is coprime to r1");
        let minimal = oracle.reduce_to_minimal(&triple)?;
        assert_eq!(
            minimal, reduced_pair,
            "divisor {} must collapse the triple onto the predicted pair",
            x
        );
        debug_assert_eq!(
            params.r1() * params.r2() + &r1sq * &k_star,
            &g_star * &cofactor,
            "solution must satisfy the dependence exactly",
        );
        let frobenius = oracle.profile(&reduced_pair)?.frobenius;
        solutions.push(ReductionSolution {
            k_star,
            g_star,
            divisor_x: BigInt::from(x),
            reduced_pair,
            frobenius,
        });
    }
    solutions.sort_by(|a, b| a.k_star.cmp(&b.k_star));

    let q = solutions.len() as u64;
    let sigma0 = divisors.len() as u64;
    debug_assert!(q <= sigma0.saturating_sub(2));

    Ok(ReductionAnalysis {
        params: params.clone(),
        n: n_big,
        divisors: divisors.into_iter().map(BigInt::from).collect(),
        sigma0,
        solutions,
        q,
        corollary1_prime: is_prime_u64(n),
        corollary2: corollary2_verdict(n, params),
    })
}

/// Is n = r1r2 + r3 prime? If so, the reduction equation has no solutions.
pub fn corollary1_applies(oracle: &Oracle, params: &FamilyParams) -> Result<bool, OracleError> {
    Ok(is_prime_u64(fit_u64(&params.generator_sum(), oracle)?))
}

/// The prime-square criterion: decisive only in the negative direction.
pub fn corollary2_applies(
    oracle: &Oracle,
    params: &FamilyParams,
) -> Result<Corollary2Verdict, OracleError> {
    let n = fit_u64(&params.generator_sum(), oracle)?;
    Ok(corollary2_verdict(n, params))
}

fn corollary2_verdict(n: u64, params: &FamilyParams) -> Corollary2Verdict {
    let p = n.isqrt();
    if p * p != n || !is_prime_u64(p) {
        return Corollary2Verdict::NotApplicable;
    }
    if (BigInt::from(p - 1) % params.r1()).is_zero() {
        Corollary2Verdict::CandidateRemains
    } else {
        Corollary2Verdict::QZeroCertified
    }
}

fn fit_u64(n: &BigInt, oracle: &Oracle) -> Result<u64, OracleError> {
    n.to_u64().ok_or(OracleError::WorkBoundExceeded {
        required: n.to_u128().unwrap_or(u128::MAX),
        bound: oracle.work_bound(),
    })
}

/// All positive divisors of n, sorted ascending. Trial division; n is
/// desk-scale here.
pub fn divisors_u64(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Deterministic trial-division primality.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut i = 5u64;
    while i * i <= n {
        if n.is_multiple_of(i) || n.is_multiple_of(i + 2) {
            return false;
        }
        i += 6;
    }
    true
}
