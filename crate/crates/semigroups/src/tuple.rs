//! Canonical generating tuples.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Rejected inputs to [`GeneratorTuple::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TupleError {
    Empty,
    NonPositive(BigInt),
    /// The generators share this common factor > 1, so the generated set
    /// misses whole residue classes and has no Frobenius number.
    NotCoprime(BigInt),
}

impl fmt::Display for TupleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TupleError::Empty => write!(f, "no generators supplied"),
            TupleError::NonPositive(g) => write!(f, "generator {} is not a positive integer", g),
            TupleError::NotCoprime(g) => write!(f, "generators share common factor {}", g),
        }
    }
}

impl std::error::Error for TupleError {}

/// Generators of a numerical semigroup, in canonical form: sorted
/// ascending, duplicates removed, every entry positive, gcd 1.
///
/// A tuple containing 1 generates all of Z≥0; such tuples are accepted but
/// flagged [degenerate](Self::is_degenerate) — the semigroup has no gaps
/// and no Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTuple {
    generators: Vec<BigInt>,
}

impl GeneratorTuple {
    pub fn new<I, T>(values: I) -> Result<Self, TupleError>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut gens: Vec<BigInt> = values.into_iter().map(Into::into).collect();
        if gens.is_empty() {
            return Err(TupleError::Empty);
        }
        if let Some(bad) = gens.iter().find(|g| **g <= BigInt::zero()) {
            return Err(TupleError::NonPositive(bad.clone()));
        }
        gens.sort();
        gens.dedup();
        let mut g = gens[0].clone();
        for x in &gens[1..] {
            g = g.gcd(x);
        }
        if !g.is_one() {
            return Err(TupleError::NotCoprime(g));
        }
        Ok(Self { generators: gens })
    }

    pub fn generators(&self) -> &[BigInt] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when 1 is a generator: the semigroup is all of Z≥0.
    pub fn is_degenerate(&self) -> bool {
        self.generators[0].is_one()
    }

    pub fn min(&self) -> &BigInt {
        &self.generators[0]
    }

    pub fn max(&self) -> &BigInt {
        self.generators.last().expect("tuple is never empty")
    }
}

impl fmt::Display for GeneratorTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, "}}")
    }
}
