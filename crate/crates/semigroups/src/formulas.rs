//! Closed-form Frobenius numbers for two and three generators.
//!
//! Two coprime generators c1, c2 ≥ 2 always give a symmetric semigroup with
//! F = c1·c2 − c1 − c2. A triple {b·c1, b·c2, a} with gcd(c1,c2) = 1,
//! gcd(a,b) = 1 and a ∈ S(c1,c2) is symmetric with
//! F = b·c1·c2 + a·b − (b·c1 + b·c2 + a); the membership hypothesis is
//! verified through the oracle before the formula is trusted.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::oracle::{Oracle, OracleError};
use crate::tuple::GeneratorTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    NotCoprime,
    /// A generator below 2 where the formula needs all generators ≥ 2.
    Degenerate,
    /// The membership hypothesis a ∈ S(c1, c2) failed.
    HypothesisUnverified,
    NotATriple,
    Oracle(OracleError),
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::NotCoprime => write!(f, "arguments are not coprime"),
            FormulaError::Degenerate => write!(f, "arguments must all be at least 2"),
            FormulaError::HypothesisUnverified => {
                write!(f, "hypothesis failed: a is not a member of S(c1, c2)")
            }
            FormulaError::NotATriple => write!(f, "expected exactly three generators"),
            FormulaError::Oracle(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for FormulaError {}

impl From<OracleError> for FormulaError {
    fn from(e: OracleError) -> Self {
        FormulaError::Oracle(e)
    }
}

/// F(c1, c2) = c1·c2 − c1 − c2 for coprime c1, c2 ≥ 2.
pub fn sylvester_frobenius(c1: &BigInt, c2: &BigInt) -> Result<BigInt, FormulaError> {
    if c1 < &BigInt::from(2) || c2 < &BigInt::from(2) {
        return Err(FormulaError::Degenerate);
    }
    if !c1.gcd(c2).is_one() {
        return Err(FormulaError::NotCoprime);
    }
    Ok(c1 * c2 - c1 - c2)
}

/// Witness that a triple has the shape {b·c1, b·c2, a} with gcd(c1,c2) = 1
/// and gcd(a,b) = 1. Whether a ∈ S(c1,c2) — the hypothesis that makes the
/// triple symmetric — is checked by the oracle, not by this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOneDecomposition {
    pub b: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
    pub a: BigInt,
}

impl LemmaOneDecomposition {
    pub fn new<T: Into<BigInt>>(b: T, c1: T, c2: T, a: T) -> Result<Self, FormulaError> {
        let (b, c1, c2, a) = (b.into(), c1.into(), c2.into(), a.into());
        if b < BigInt::one() || c1 < BigInt::one() || c2 < BigInt::one() || a < BigInt::one() {
            return Err(FormulaError::Degenerate);
        }
        if !c1.gcd(&c2).is_one() || !a.gcd(&b).is_one() {
            return Err(FormulaError::NotCoprime);
        }
        Ok(Self { b, c1, c2, a })
    }

    /// The generated tuple {b·c1, b·c2, a} (canonicalized).
    pub fn tuple(&self) -> GeneratorTuple {
        GeneratorTuple::new([&self.b * &self.c1, &self.b * &self.c2, self.a.clone()])
            .expect("gcd(b·gcd(c1,c2), a) = gcd(b, a) = 1")
    }

    /// b·c1·c2 + a·b − (b·c1 + b·c2 + a), the claimed Frobenius number.
    pub fn formula_value(&self) -> BigInt {
        &self.b * &self.c1 * &self.c2 + &self.a * &self.b
            - (&self.b * &self.c1 + &self.b * &self.c2 + &self.a)
    }
}

impl Oracle {
    /// Evaluate the symmetric-triple formula after verifying a ∈ S(c1, c2).
    pub fn herzog_symmetric_frobenius(
        &self,
        dec: &LemmaOneDecomposition,
    ) -> Result<BigInt, FormulaError> {
        if !self.decomposition_hypothesis_holds(dec)? {
            return Err(FormulaError::HypothesisUnverified);
        }
        Ok(dec.formula_value())
    }

    fn decomposition_hypothesis_holds(
        &self,
        dec: &LemmaOneDecomposition,
    ) -> Result<bool, OracleError> {
        // Cheap route first: a at or past the conductor of S(c1, c2).
        let one = BigInt::one();
        let conductor = (&dec.c1 - &one) * (&dec.c2 - &one);
        if dec.a >= conductor {
            return Ok(true);
        }
        match (dec.c1.to_u64(), dec.c2.to_u64(), dec.a.to_u64()) {
            (Some(c1), Some(c2), Some(a)) => self.representable(&[c1, c2], a),
            _ => Err(OracleError::WorkBoundExceeded {
                required: u128::MAX,
                bound: self.work_bound(),
            }),
        }
    }

    /// Search a minimal triple for a decomposition certifying symmetry: for
    /// each pair with gcd b ≥ 2, take c1, c2 as the pair divided by b and a
    /// as the remaining generator, and accept when gcd(a,b) = 1 and
    /// a ∈ S(c1,c2). `None` means this route cannot certify symmetry; the
    /// triple may still be symmetric by the oracle.
    pub fn lemma1_decompose(
        &self,
        triple: &GeneratorTuple,
    ) -> Result<Option<LemmaOneDecomposition>, FormulaError> {
        if triple.len() != 3 {
            return Err(FormulaError::NotATriple);
        }
        let g = triple.generators();
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            let b = g[i].gcd(&g[j]);
            if b < BigInt::from(2) {
                continue;
            }
            let dec = LemmaOneDecomposition {
                b: b.clone(),
                c1: &g[i] / &b,
                c2: &g[j] / &b,
                a: g[k].clone(),
            };
            if !dec.a.gcd(&dec.b).is_one() {
                continue;
            }
            if self.decomposition_hypothesis_holds(&dec)? {
                return Ok(Some(dec));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester_frobenius(&big(2), &big(91)).unwrap(), big(89));
        assert_eq!(sylvester_frobenius(&big(9), &big(22)).unwrap(), big(167));
        assert_eq!(sylvester_frobenius(&big(2), &big(3)).unwrap(), big(1));
    }

    #[test]
    fn sylvester_rejects_bad_inputs() {
        assert_eq!(sylvester_frobenius(&big(4), &big(6)).unwrap_err(), FormulaError::NotCoprime);
        assert_eq!(sylvester_frobenius(&big(1), &big(5)).unwrap_err(), FormulaError::Degenerate);
    }

    #[test]
    fn herzog_along_first_arnold_sequence() {
        let o = Oracle::new();
        for k in 0..=14i64 {
            let dec = LemmaOneDecomposition::new(2, 2, 3 + 2 * k, 87 - 4 * k).unwrap();
            assert_eq!(o.herzog_symmetric_frobenius(&dec).unwrap(), big(89), "k = {}", k);
        }
    }

    #[test]
    fn herzog_along_second_arnold_sequence() {
        let o = Oracle::new();
        for k in 1..=6i64 {
            let dec = LemmaOneDecomposition::new(3, 3, 3 * k + 1, 85 - 9 * k).unwrap();
            assert_eq!(o.herzog_symmetric_frobenius(&dec).unwrap(), big(167), "k = {}", k);
        }
    }

    #[test]
    fn herzog_symmetric_in_c1_c2() {
        let o = Oracle::new();
        let d1 = LemmaOneDecomposition::new(2, 2, 31, 31).unwrap();
        let d2 = LemmaOneDecomposition::new(2, 31, 2, 31).unwrap();
        assert_eq!(
            o.herzog_symmetric_frobenius(&d1).unwrap(),
            o.herzog_symmetric_frobenius(&d2).unwrap()
        );
    }

    #[test]
    fn herzog_rejects_failed_hypothesis() {
        let o = Oracle::new();
        // 1 is not in S(2,3).
        let dec = LemmaOneDecomposition::new(2, 2, 3, 1).unwrap();
        assert_eq!(
            o.herzog_symmetric_frobenius(&dec).unwrap_err(),
            FormulaError::HypothesisUnverified
        );
    }

    #[test]
    fn decompose_examples() {
        let o = Oracle::new();

        let dec = o
            .lemma1_decompose(&GeneratorTuple::new([4, 62, 31]).unwrap())
            .unwrap()
            .expect("decomposable");
        assert_eq!((dec.b, dec.c1, dec.c2, dec.a), (big(2), big(2), big(31), big(31)));

        // Hypothesis holds through a nongap below the conductor: 31 ∈ S(3,19)
        // even though 31 < C(3,19) = 36.
        let dec = o
            .lemma1_decompose(&GeneratorTuple::new([9, 57, 31]).unwrap())
            .unwrap()
            .expect("decomposable");
        assert_eq!((dec.b, dec.c1, dec.c2, dec.a), (big(3), big(3), big(19), big(31)));

        // 35 ∉ S(3, 22): no certificate, and indeed the oracle finds this
        // triple nonsymmetric.
        assert!(o
            .lemma1_decompose(&GeneratorTuple::new([9, 66, 35]).unwrap())
            .unwrap()
            .is_none());

        assert_eq!(
            o.lemma1_decompose(&GeneratorTuple::new([2, 3]).unwrap()).unwrap_err(),
            FormulaError::NotATriple
        );
    }
}
