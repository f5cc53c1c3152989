//! Exact scalar values: rationals and quadratic surds.
//!
//! The special k-values of the family analysis are rationals except for the
//! two roots of a quadratic, which are generally irrational. Classification
//! ranges compare integers against those roots, so comparisons must be
//! exact: a surd (a + b√d)/c is compared by sign tests on integers, never
//! through floating point. Two-decimal renderings exist for display only.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn floor_to_int(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil_to_int(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

/// Sign of a + b·√d for integers a, b and d ≥ 0.
fn sign_with_sqrt(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    debug_assert!(!d.is_negative());
    if b.is_zero() || d.is_zero() {
        return a.cmp(&BigInt::zero());
    }
    if b.is_positive() && !a.is_negative() {
        return Ordering::Greater;
    }
    if b.is_negative() && !a.is_positive() {
        return Ordering::Less;
    }
    if b.is_positive() {
        // a < 0: sign of b√d − |a|
        (b * b * d).cmp(&(a * a))
    } else {
        // a > 0, b < 0: sign of a − |b|√d
        (a * a).cmp(&(b * b * d))
    }
}

/// Pull square factors out of `rad`: returns (m, rest) with rad = m²·rest.
/// Small primes are extracted; a residual that is itself a perfect square
/// is folded in. The remainder may retain large square factors, which is
/// harmless: comparisons only require knowing when a radicand is a perfect
/// square, which is always tested exactly.
fn extract_square(mut rad: BigInt) -> (BigInt, BigInt) {
    debug_assert!(rad.is_positive());
    let mut m = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1000);
    while &p * &p <= rad && p <= limit {
        let sq = &p * &p;
        while (&rad % &sq).is_zero() {
            rad /= &sq;
            m *= &p;
        }
        p += 1;
    }
    let s = rad.sqrt();
    if &s * &s == rad {
        m *= s;
        rad = BigInt::one();
    }
    (m, rad)
}

/// An irrational value (base + coeff·√radicand)/denom with denom > 0,
/// coeff ≠ 0 and radicand ≥ 2 not a perfect square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    base: BigInt,
    coeff: BigInt,
    radicand: BigInt,
    denom: BigInt,
}

impl Surd {
    pub fn base(&self) -> &BigInt {
        &self.base
    }
    pub fn coeff(&self) -> &BigInt {
        &self.coeff
    }
    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }
    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    fn cmp_rational(&self, r: &BigRational) -> Ordering {
        // (base + coeff√d)/denom − num/den, both denominators positive.
        let a = &self.base * r.denom() - r.numer() * &self.denom;
        let b = &self.coeff * r.denom();
        sign_with_sqrt(&a, &b, &self.radicand)
    }

    fn cmp_surd(&self, other: &Surd) -> Ordering {
        let a = &self.base * &other.denom - &other.base * &self.denom;
        let b = &self.coeff * &other.denom;
        let e = &other.coeff * &self.denom;
        if self.radicand == other.radicand {
            return sign_with_sqrt(&a, &(b - e), &self.radicand);
        }
        // sign of a + b√d1 − e√d2 with d1 ≠ d2
        let lhs = sign_with_sqrt(&a, &b, &self.radicand);
        let rhs = e.cmp(&BigInt::zero());
        if lhs == Ordering::Equal {
            return rhs.reverse();
        }
        if lhs != rhs {
            return lhs;
        }
        // Same strict sign on both sides: compare (a + b√d1)² with e²·d2.
        let u = &a * &a + &b * &b * &self.radicand - &e * &e * &other.radicand;
        let v = BigInt::from(2) * &a * &b;
        let sq = sign_with_sqrt(&u, &v, &self.radicand);
        if lhs == Ordering::Greater {
            sq
        } else {
            sq.reverse()
        }
    }

    fn floor(&self) -> BigInt {
        let root = self.radicand.sqrt();
        // root < √d < root+1 strictly (radicand is not a perfect square),
        // so this numerator is a strict lower bound.
        let low_num = if self.coeff.is_positive() {
            &self.base + &self.coeff * &root
        } else {
            &self.base + &self.coeff * (&root + 1)
        };
        let mut m = low_num.div_floor(&self.denom);
        loop {
            let next = &m + 1;
            // self >= next ?
            let s = sign_with_sqrt(&(&self.base - &next * &self.denom), &self.coeff, &self.radicand);
            if s == Ordering::Less {
                return m;
            }
            m = next;
        }
    }

    fn neg(&self) -> Surd {
        Surd {
            base: -&self.base,
            coeff: -&self.coeff,
            radicand: self.radicand.clone(),
            denom: self.denom.clone(),
        }
    }

    fn scale_by_100(&self) -> Surd {
        Surd {
            base: &self.base * 100,
            coeff: &self.coeff * 100,
            radicand: self.radicand.clone(),
            denom: self.denom.clone(),
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.coeff.is_negative() { '-' } else { '+' };
        let mag = self.coeff.abs();
        let inner = if mag.is_one() {
            format!("{} {} sqrt({})", self.base, op, self.radicand)
        } else {
            format!("{} {} {}*sqrt({})", self.base, op, mag, self.radicand)
        };
        if self.denom.is_one() {
            write!(f, "{}", inner)
        } else {
            write!(f, "({})/{}", inner, self.denom)
        }
    }
}

/// A value that is exactly a rational or exactly a quadratic surd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactValue {
    Rational(BigRational),
    Irrational(Surd),
}

impl ExactValue {
    pub fn rational(r: BigRational) -> Self {
        ExactValue::Rational(r)
    }

    pub fn integer<T: Into<BigInt>>(n: T) -> Self {
        ExactValue::Rational(BigRational::from(n.into()))
    }

    /// (base + coeff·√radicand)/denom, normalized. `None` when the radicand
    /// is negative (no real value). Collapses to a rational when the
    /// radicand is a perfect square.
    pub fn from_quadratic(base: BigInt, coeff: BigInt, radicand: BigInt, denom: BigInt) -> Option<Self> {
        if radicand.is_negative() {
            return None;
        }
        debug_assert!(!denom.is_zero());
        let (base, coeff, denom) = if denom.is_negative() {
            (-base, -coeff, -denom)
        } else {
            (base, coeff, denom)
        };
        if coeff.is_zero() || radicand.is_zero() {
            return Some(ExactValue::Rational(BigRational::new(base, denom)));
        }
        let (m, rest) = extract_square(radicand);
        if rest.is_one() {
            return Some(ExactValue::Rational(BigRational::new(base + coeff * m, denom)));
        }
        let coeff = coeff * m;
        let g = base.gcd(&coeff).gcd(&denom);
        Some(ExactValue::Irrational(Surd {
            base: base / &g,
            coeff: coeff / &g,
            radicand: rest,
            denom: denom / &g,
        }))
    }

    pub fn cmp_value(&self, other: &ExactValue) -> Ordering {
        match (self, other) {
            (ExactValue::Rational(a), ExactValue::Rational(b)) => a.cmp(b),
            (ExactValue::Rational(a), ExactValue::Irrational(s)) => s.cmp_rational(a).reverse(),
            (ExactValue::Irrational(s), ExactValue::Rational(b)) => s.cmp_rational(b),
            (ExactValue::Irrational(a), ExactValue::Irrational(b)) => a.cmp_surd(b),
        }
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        match self {
            ExactValue::Rational(a) => a.cmp(r),
            ExactValue::Irrational(s) => s.cmp_rational(r),
        }
    }

    pub fn cmp_int(&self, n: &BigInt) -> Ordering {
        self.cmp_rational(&BigRational::from(n.clone()))
    }

    pub fn is_negative(&self) -> bool {
        self.cmp_int(&BigInt::zero()) == Ordering::Less
    }

    pub fn floor(&self) -> BigInt {
        match self {
            ExactValue::Rational(r) => floor_to_int(r),
            ExactValue::Irrational(s) => s.floor(),
        }
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    pub fn neg(&self) -> ExactValue {
        match self {
            ExactValue::Rational(r) => ExactValue::Rational(-r.clone()),
            ExactValue::Irrational(s) => ExactValue::Irrational(s.neg()),
        }
    }

    pub fn sub_rational(&self, r: &BigRational) -> ExactValue {
        match self {
            ExactValue::Rational(a) => ExactValue::Rational(a - r),
            ExactValue::Irrational(s) => ExactValue::Irrational(Surd {
                base: &s.base * r.denom() - r.numer() * &s.denom,
                coeff: &s.coeff * r.denom(),
                radicand: s.radicand.clone(),
                denom: &s.denom * r.denom(),
            }),
        }
    }

    pub fn abs(&self) -> ExactValue {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// The value truncated toward zero at two decimals, times 100.
    pub fn trunc_hundredths(&self) -> BigInt {
        match self {
            ExactValue::Rational(r) => {
                let scaled = r * &BigRational::from(BigInt::from(100));
                let f = floor_to_int(&scaled);
                if r.is_negative() && !scaled.is_integer() {
                    f + 1
                } else {
                    f
                }
            }
            ExactValue::Irrational(s) => {
                let f = s.scale_by_100().floor();
                if self.is_negative() {
                    // Never an integer, so truncation rounds up.
                    f + 1
                } else {
                    f
                }
            }
        }
    }

    /// Two-decimal rendering truncated toward zero, trailing zeros trimmed:
    /// "21", "-0.5", "14.16".
    pub fn approx2(&self) -> String {
        let t = self.trunc_hundredths();
        let neg = t.is_negative();
        let u = t.abs();
        let hundred = BigInt::from(100);
        let int = &u / &hundred;
        let frac = u64::try_from(&(&u % &hundred)).expect("< 100");
        let sign = if neg { "-" } else { "" };
        if frac == 0 {
            format!("{}{}", sign, int)
        } else if frac % 10 == 0 {
            format!("{}{}.{}", sign, int, frac / 10)
        } else {
            format!("{}{}.{:02}", sign, int, frac)
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(r) => write!(f, "{}", r),
            ExactValue::Irrational(s) => write!(f, "{}", s),
        }
    }
}

/// The two roots (offset ∓ √discriminant)/denom of a quadratic, kept in
/// exact form. A negative discriminant means the roots do not exist (the
/// underlying inequality then holds for every k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticRoots {
    pub offset: BigInt,
    pub discriminant: BigInt,
    pub denom: BigInt,
}

impl QuadraticRoots {
    pub fn exists(&self) -> bool {
        !self.discriminant.is_negative()
    }

    /// (offset − √discriminant)/denom.
    pub fn lower(&self) -> Option<ExactValue> {
        ExactValue::from_quadratic(
            self.offset.clone(),
            BigInt::from(-1),
            self.discriminant.clone(),
            self.denom.clone(),
        )
    }

    /// (offset + √discriminant)/denom.
    pub fn upper(&self) -> Option<ExactValue> {
        ExactValue::from_quadratic(
            self.offset.clone(),
            BigInt::one(),
            self.discriminant.clone(),
            self.denom.clone(),
        )
    }
}
