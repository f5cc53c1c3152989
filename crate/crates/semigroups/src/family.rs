//! The one-parameter family S(r1², r1r2 + r1²k, r3 − r1²k).
//!
//! For fixed (r1, r2, r3) with r1 ≥ 2 and gcd(r1, r2) = gcd(r1, r3) = 1,
//! the triple {r1², r1r2 + r1²k, r3 − r1²k} sweeps a family of semigroups
//! as k runs over the integers. Across a wide k-range the symmetric members
//! share one Frobenius number Φ = (r1−1)(r1r2 + r3) − r1², independent of
//! k. The boundaries of that range, the onset of the three distinct
//! two-generator reductions and the window where nonsymmetric members can
//! appear are all governed by ten special k-values, kept here as exact
//! rationals and quadratic surds.
//!
//! Closed-form range tests are necessary conditions only, so every
//! classification is decided by the [`Oracle`]; the range-based prediction
//! is carried alongside and any mismatch is a reportable diagnostic, not an
//! error.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{ExactValue, QuadraticRoots};
use crate::oracle::{Oracle, OracleError};
use crate::par;
use crate::tuple::GeneratorTuple;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    ParameterTooSmall { name: &'static str, minimum: i64, got: BigInt },
    NonPositive { name: &'static str, got: BigInt },
    NotCoprime { names: &'static str, gcd: BigInt },
    InvalidRange { from: BigInt, to: BigInt },
    Oracle(OracleError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::ParameterTooSmall { name, minimum, got } => {
                write!(f, "{} must be at least {}, got {}", name, minimum, got)
            }
            FamilyError::NonPositive { name, got } => {
                write!(f, "{} must be a positive integer, got {}", name, got)
            }
            FamilyError::NotCoprime { names, gcd } => {
                write!(f, "{} must be coprime (gcd is {})", names, gcd)
            }
            FamilyError::InvalidRange { from, to } => {
                write!(f, "empty scan range: {} > {}", from, to)
            }
            FamilyError::Oracle(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for FamilyError {}

impl From<OracleError> for FamilyError {
    fn from(e: OracleError) -> Self {
        FamilyError::Oracle(e)
    }
}

/// The family parameters (r1, r2, r3): r1 ≥ 2, r2, r3 ≥ 1,
/// gcd(r1, r2) = gcd(r1, r3) = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    r1: BigInt,
    r2: BigInt,
    r3: BigInt,
}

/// Exact special k-values of one family.
///
/// `k7`/`k8` are the roots (r3 − r1r2 ∓ √D)/(2r1²) with
/// D = (r3 + r1r2 − 2)² − 4r1²; a negative D means they do not exist and
/// the pair-reduction containment holds for every k. `k10` always equals
/// `k4`. `xi` lists the integers strictly between `mu1 = max{k1, k3, k7}`
/// and `mu2 = min{k2, k5, k8}` — the only k where nonsymmetric members can
/// occur, undecidable by formulas alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialKProfile {
    pub k1: BigRational,
    pub k2: BigRational,
    pub k3: BigRational,
    pub k4: BigRational,
    pub k5: BigRational,
    pub k6: BigRational,
    pub k9: BigRational,
    pub k10: BigRational,
    pub k4_integral: bool,
    pub roots: QuadraticRoots,
    pub phi: BigInt,
    pub mu1: ExactValue,
    pub mu2: ExactValue,
    pub xi: Vec<BigInt>,
}

impl SpecialKProfile {
    pub fn k7(&self) -> Option<ExactValue> {
        self.roots.lower()
    }

    pub fn k8(&self) -> Option<ExactValue> {
        self.roots.upper()
    }
}

/// What a family triple at one k turned out to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleKind {
    /// A non-positive generator.
    Invalid,
    /// A generator equal to 1: the semigroup is all of Z≥0.
    Degenerate,
    /// r1k + r2 = 1: reduces to {r1, r3 − r1²k}.
    TwoDimR1,
    /// Middle generator representable: reduces to {r1², r3 − r1²k}.
    TwoDimR1Sq,
    /// r1² representable: reduces to {r1r2 + r1²k, r3 − r1²k}.
    TwoDimPair,
    ThreeDimSymmetric,
    ThreeDimNonsymmetric,
}

impl TripleKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TripleKind::Invalid => "invalid",
            TripleKind::Degenerate => "degenerate",
            TripleKind::TwoDimR1 => "two_dim_r1",
            TripleKind::TwoDimR1Sq => "two_dim_r1sq",
            TripleKind::TwoDimPair => "two_dim_pair",
            TripleKind::ThreeDimSymmetric => "three_dim_symmetric",
            TripleKind::ThreeDimNonsymmetric => "three_dim_nonsymmetric",
        }
    }
}

/// Kind predicted from the special-value ranges alone (necessary
/// conditions; the oracle verdict in [`KClassification::kind`] wins).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PredictedKind {
    TwoDimR1,
    TwoDimR1Sq,
    TwoDimPair,
    ThreeDimSymmetric,
    /// Strictly between mu1 and mu2: symmetric and nonsymmetric members
    /// both possible.
    AmbiguousWindow,
    /// Outside every analyzed range: no claim.
    OutOfRange,
}

impl PredictedKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PredictedKind::TwoDimR1 => "two_dim_r1",
            PredictedKind::TwoDimR1Sq => "two_dim_r1sq",
            PredictedKind::TwoDimPair => "two_dim_pair",
            PredictedKind::ThreeDimSymmetric => "three_dim_symmetric",
            PredictedKind::AmbiguousWindow => "ambiguous_window",
            PredictedKind::OutOfRange => "out_of_range",
        }
    }
}

/// Oracle-verified classification of the family triple at one k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClassification {
    pub k: BigInt,
    pub raw_triple: [BigInt; 3],
    pub kind: TripleKind,
    pub minimal_tuple: Option<GeneratorTuple>,
    /// −1 for degenerate triples, absent for invalid ones.
    pub frobenius: Option<BigInt>,
    pub genus: Option<u64>,
    pub symmetric: Option<bool>,
    pub phi_match: bool,
    pub predicted: PredictedKind,
}

impl KClassification {
    /// Does the range-based prediction agree with the oracle verdict?
    pub fn prediction_consistent(&self) -> bool {
        match self.predicted {
            PredictedKind::OutOfRange => true,
            PredictedKind::AmbiguousWindow => {
                !matches!(self.kind, TripleKind::Invalid | TripleKind::Degenerate)
            }
            PredictedKind::TwoDimR1 => self.kind == TripleKind::TwoDimR1,
            PredictedKind::TwoDimR1Sq => self.kind == TripleKind::TwoDimR1Sq,
            PredictedKind::TwoDimPair => self.kind == TripleKind::TwoDimPair,
            PredictedKind::ThreeDimSymmetric => self.kind == TripleKind::ThreeDimSymmetric,
        }
    }
}

/// One cell of the reference-table summary: a special value, its floor and
/// the oracle classification there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub label: &'static str,
    pub value: Option<ExactValue>,
    pub floor: Option<BigInt>,
    pub at_floor: Option<KClassification>,
}

impl TableEntry {
    /// The F(⌊k_i⌋) cell; `None` renders as a dash (invalid triple there,
    /// or the special value itself does not exist).
    pub fn frobenius_cell(&self) -> Option<&BigInt> {
        self.at_floor.as_ref().and_then(|c| c.frobenius.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub phi: BigInt,
    pub entries: Vec<TableEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub from: BigInt,
    pub to: BigInt,
    pub classifications: Vec<KClassification>,
    pub table: TableRow,
}

/// The ambiguous window with oracle verdicts for every integer inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub mu1: ExactValue,
    pub mu2: ExactValue,
    pub xi: Vec<BigInt>,
    pub verdicts: Vec<KClassification>,
}

/// One two-route consistency check: a criterion stated on r1, r2, r3
/// against the direct exact comparison of the k-values. The two must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckPair {
    pub by_criterion: bool,
    pub by_values: bool,
}

impl CheckPair {
    pub fn agree(&self) -> bool {
        self.by_criterion == self.by_values
    }
}

/// A one-directional check: when `premise` holds, `conclusion` must.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImplicationCheck {
    pub premise: bool,
    pub conclusion: bool,
}

impl ImplicationCheck {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

/// How the special values order themselves, each determined both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingReport {
    pub k1_le_k2_le_k3: CheckPair,
    pub k1_le_k3_le_k2: CheckPair,
    pub k3_le_k1_le_k2: CheckPair,
    pub k2_ge_k5: CheckPair,
    /// r1r2 + r3 ≥ 4 + r1²/2 forces k8 ≥ k2 (sufficient only).
    pub k8_ge_k2_when_sum_large: ImplicationCheck,
    /// r1r2 + r3 ≥ (5r1² − 1)/(2r1 − 1) forces k1 ≥ k7 (sufficient only).
    pub k1_ge_k7_when_sum_large: ImplicationCheck,
    /// k2 ≥ k5 forces k7 ≤ k1 and k2 ≤ k8: the pair reduction cannot occur.
    pub no_pair_range_when_k2_ge_k5: ImplicationCheck,
    /// k9 vs k2 is decided by r1 alone: > for r1 = 2, = for r1 = 3, < else.
    pub k9_vs_k2_by_r1: Ordering,
    pub k9_vs_k2_by_values: Ordering,
}

impl OrderingReport {
    pub fn consistent(&self) -> bool {
        self.k1_le_k2_le_k3.agree()
            && self.k1_le_k3_le_k2.agree()
            && self.k3_le_k1_le_k2.agree()
            && self.k2_ge_k5.agree()
            && self.k8_ge_k2_when_sum_large.holds()
            && self.k1_ge_k7_when_sum_large.holds()
            && self.no_pair_range_when_k2_ge_k5.holds()
            && self.k9_vs_k2_by_r1 == self.k9_vs_k2_by_values
    }
}

impl FamilyParams {
    pub fn new<A, B, C>(r1: A, r2: B, r3: C) -> Result<Self, FamilyError>
    where
        A: Into<BigInt>,
        B: Into<BigInt>,
        C: Into<BigInt>,
    {
        let (r1, r2, r3) = (r1.into(), r2.into(), r3.into());
        if r1 < BigInt::from(2) {
            return Err(FamilyError::ParameterTooSmall { name: "r1", minimum: 2, got: r1 });
        }
        if !r2.is_positive() {
            return Err(FamilyError::NonPositive { name: "r2", got: r2 });
        }
        if !r3.is_positive() {
            return Err(FamilyError::NonPositive { name: "r3", got: r3 });
        }
        let g12 = r1.gcd(&r2);
        if !g12.is_one() {
            return Err(FamilyError::NotCoprime { names: "r1 and r2", gcd: g12 });
        }
        let g13 = r1.gcd(&r3);
        if !g13.is_one() {
            return Err(FamilyError::NotCoprime { names: "r1 and r3", gcd: g13 });
        }
        Ok(Self { r1, r2, r3 })
    }

    pub fn r1(&self) -> &BigInt {
        &self.r1
    }
    pub fn r2(&self) -> &BigInt {
        &self.r2
    }
    pub fn r3(&self) -> &BigInt {
        &self.r3
    }

    /// r1r2 + r3, the invariant sum driving the reduction analysis.
    pub fn generator_sum(&self) -> BigInt {
        &self.r1 * &self.r2 + &self.r3
    }

    /// The raw triple [r1², r1r2 + r1²k, r3 − r1²k]. No positivity
    /// filtering: classification decides what a non-positive entry means.
    pub fn triple_at(&self, k: &BigInt) -> [BigInt; 3] {
        let r1sq = &self.r1 * &self.r1;
        [r1sq.clone(), &self.r1 * &self.r2 + &r1sq * k, &self.r3 - &r1sq * k]
    }

    /// Φ = (r1 − 1)(r1r2 + r3) − r1², the k-independent Frobenius number of
    /// the symmetric members.
    pub fn universal_phi(&self) -> BigInt {
        (&self.r1 - BigInt::one()) * self.generator_sum() - &self.r1 * &self.r1
    }

    pub fn special_k_profile(&self) -> SpecialKProfile {
        let one = BigInt::one();
        let two = BigInt::from(2);
        let r1 = &self.r1;
        let r2 = &self.r2;
        let r3 = &self.r3;
        let r1sq = r1 * r1;
        let rat = |n: BigInt, d: BigInt| BigRational::new(n, d);

        let k1 = rat(&two - r2, r1.clone());
        let k2 = rat(r3 - BigInt::from(3), r1sq.clone());
        let k3 = rat(r3 - (r1 - &one) * (r2 - &one), r1 * (&two * r1 - &one));
        let k4 = rat(&one - r2, r1.clone());
        let k5 = rat((r3 - &one) * &r1sq - (r3 + r1 * r2), &r1sq * &r1sq);
        let k6 = rat(r3 - r2, r1 * (r1 + &one));
        let k9 = rat(r3 - r1, r1sq.clone());
        let k10 = k4.clone();
        let k4_integral = k4.is_integer();

        let sum = self.generator_sum();
        let disc_base = &sum - &two;
        let roots = QuadraticRoots {
            offset: r3 - r1 * r2,
            discriminant: &disc_base * &disc_base - BigInt::from(4) * &r1sq,
            denom: &two * &r1sq,
        };

        let mut lows = vec![ExactValue::rational(k1.clone()), ExactValue::rational(k3.clone())];
        if let Some(k7) = roots.lower() {
            lows.push(k7);
        }
        let mu1 = lows
            .into_iter()
            .reduce(|a, b| if a.cmp_value(&b) == Ordering::Greater { a } else { b })
            .expect("nonempty");

        let mut highs = vec![ExactValue::rational(k2.clone()), ExactValue::rational(k5.clone())];
        if let Some(k8) = roots.upper() {
            highs.push(k8);
        }
        let mu2 = highs
            .into_iter()
            .reduce(|a, b| if a.cmp_value(&b) == Ordering::Less { a } else { b })
            .expect("nonempty");

        let mut xi = Vec::new();
        let mut cursor = mu1.floor() + &one;
        let top = mu2.ceil() - &one;
        while cursor <= top {
            xi.push(cursor.clone());
            cursor += &one;
        }

        SpecialKProfile {
            k1,
            k2,
            k3,
            k4,
            k5,
            k6,
            k9,
            k10,
            k4_integral,
            roots,
            phi: self.universal_phi(),
            mu1,
            mu2,
            xi,
        }
    }

    pub fn ordering_relations(&self) -> OrderingReport {
        let sp = self.special_k_profile();
        let one = BigInt::one();
        let r1 = &self.r1;
        let sum = BigRational::from(self.generator_sum());

        let low_threshold = BigRational::from(BigInt::from(2) * r1 + BigInt::from(3));
        let high_threshold =
            BigRational::new(r1 * r1 + BigInt::from(5) * r1 - BigInt::from(3), r1 - &one);
        let mid_threshold = BigRational::from(BigInt::from(3) * r1 - &one);

        let k1_le_k2_le_k3 = CheckPair {
            by_criterion: low_threshold <= sum && sum <= high_threshold,
            by_values: sp.k1 <= sp.k2 && sp.k2 <= sp.k3,
        };
        let k1_le_k3_le_k2 = CheckPair {
            by_criterion: mid_threshold <= sum && high_threshold <= sum,
            by_values: sp.k1 <= sp.k3 && sp.k3 <= sp.k2,
        };
        let k3_le_k1_le_k2 = CheckPair {
            by_criterion: low_threshold <= sum && sum <= mid_threshold,
            by_values: sp.k3 <= sp.k1 && sp.k1 <= sp.k2,
        };

        let k2_ge_k5 = CheckPair {
            by_criterion: sum >= BigRational::from(BigInt::from(2) * r1 * r1),
            by_values: sp.k2 >= sp.k5,
        };

        let k8_ge_k2_crit =
            sum >= BigRational::new(BigInt::from(8) + r1 * r1, BigInt::from(2));
        let k1_ge_k7_crit = sum
            >= BigRational::new(
                BigInt::from(5) * r1 * r1 - &one,
                BigInt::from(2) * r1 - &one,
            );
        let (k7_le_k1, k8_ge_k2) = match (sp.k7(), sp.k8()) {
            (Some(k7), Some(k8)) => (
                k7.cmp_rational(&sp.k1) != Ordering::Greater,
                k8.cmp_rational(&sp.k2) != Ordering::Less,
            ),
            _ => (false, false),
        };

        OrderingReport {
            k1_le_k2_le_k3,
            k1_le_k3_le_k2,
            k3_le_k1_le_k2,
            k2_ge_k5,
            k8_ge_k2_when_sum_large: ImplicationCheck {
                premise: k8_ge_k2_crit,
                conclusion: k8_ge_k2,
            },
            k1_ge_k7_when_sum_large: ImplicationCheck {
                premise: k1_ge_k7_crit,
                conclusion: k7_le_k1,
            },
            no_pair_range_when_k2_ge_k5: ImplicationCheck {
                premise: k2_ge_k5.by_values,
                conclusion: k7_le_k1 && k8_ge_k2,
            },
            k9_vs_k2_by_r1: match r1.to_i64() {
                Some(2) => Ordering::Greater,
                Some(3) => Ordering::Equal,
                _ => Ordering::Less,
            },
            k9_vs_k2_by_values: sp.k9.cmp(&sp.k2),
        }
    }

    /// Oracle-verified classification of the triple at `k`.
    ///
    /// The only possible error is oracle budget exhaustion; invalid and
    /// degenerate triples are classifications, not errors.
    pub fn classify_k(&self, oracle: &Oracle, k: &BigInt) -> Result<KClassification, OracleError> {
        let sp = self.special_k_profile();
        self.classify_with(&sp, oracle, k)
    }

    fn classify_with(
        &self,
        sp: &SpecialKProfile,
        oracle: &Oracle,
        k: &BigInt,
    ) -> Result<KClassification, OracleError> {
        let raw = self.triple_at(k);
        let predicted = self.predict(sp, k, &raw);
        let one = BigInt::one();

        let invalid = |raw: [BigInt; 3]| KClassification {
            k: k.clone(),
            raw_triple: raw,
            kind: TripleKind::Invalid,
            minimal_tuple: None,
            frobenius: None,
            genus: None,
            symmetric: None,
            phi_match: false,
            predicted,
        };

        if !raw[1].is_positive() || !raw[2].is_positive() {
            return Ok(invalid(raw));
        }
        let tuple = match GeneratorTuple::new(raw.clone()) {
            Ok(t) => t,
            Err(_) => return Ok(invalid(raw)),
        };

        if raw[1] == one || raw[2] == one {
            let minimal = oracle.reduce_to_minimal(&tuple)?;
            return Ok(KClassification {
                k: k.clone(),
                raw_triple: raw,
                kind: TripleKind::Degenerate,
                minimal_tuple: Some(minimal),
                frobenius: Some(BigInt::from(-1)),
                genus: Some(0),
                symmetric: Some(true),
                phi_match: false,
                predicted,
            });
        }

        let profile = oracle.profile(&tuple)?;
        let minimal = oracle.reduce_to_minimal(&tuple)?;
        let kind = match minimal.len() {
            3 => {
                if profile.symmetric {
                    TripleKind::ThreeDimSymmetric
                } else {
                    TripleKind::ThreeDimNonsymmetric
                }
            }
            2 => {
                if &self.r1 * k + &self.r2 == one {
                    TripleKind::TwoDimR1
                } else {
                    let r1sq_pair = GeneratorTuple::new([raw[0].clone(), raw[2].clone()])
                        .expect("r1^2 and r3 - r1^2 k are coprime");
                    if minimal == r1sq_pair {
                        TripleKind::TwoDimR1Sq
                    } else {
                        TripleKind::TwoDimPair
                    }
                }
            }
            _ => unreachable!("valid nondegenerate triples keep at least two generators"),
        };
        let phi_match = profile.frobenius == sp.phi;
        Ok(KClassification {
            k: k.clone(),
            raw_triple: raw,
            kind,
            minimal_tuple: Some(minimal),
            frobenius: Some(profile.frobenius),
            genus: Some(profile.genus),
            symmetric: Some(profile.symmetric),
            phi_match,
            predicted,
        })
    }

    fn predict(&self, sp: &SpecialKProfile, k: &BigInt, raw: &[BigInt; 3]) -> PredictedKind {
        let one = BigInt::one();
        if raw[1] <= one || raw[2] <= one {
            return PredictedKind::OutOfRange;
        }
        let kr = BigRational::from(k.clone());
        if sp.k4_integral && kr == sp.k4 {
            return PredictedKind::TwoDimR1;
        }
        if sp.k6.is_integer() && kr == sp.k6 {
            return PredictedKind::TwoDimR1Sq;
        }
        // k9 = (r3 − r1)/r1² is never integral: r1² | r3 − r1 would force
        // r1 | r3 against gcd(r1, r3) = 1. No special case needed.
        if sp.k4 < kr && kr <= sp.k3 {
            return PredictedKind::ThreeDimSymmetric;
        }
        if sp.k5 < kr && kr <= sp.k2 {
            return PredictedKind::TwoDimR1Sq;
        }
        let in_pair_range = match (sp.k7(), sp.k8()) {
            (Some(k7), Some(k8)) => {
                (sp.k1 <= kr && k7.cmp_int(k) != Ordering::Less)
                    || (k8.cmp_int(k) != Ordering::Greater && kr <= sp.k2)
            }
            // No roots: the containment holds for every k in the valid band.
            _ => sp.k1 <= kr && kr <= sp.k2,
        };
        if in_pair_range {
            return PredictedKind::TwoDimPair;
        }
        if sp.mu1.cmp_int(k) == Ordering::Less && sp.mu2.cmp_int(k) == Ordering::Greater {
            return PredictedKind::AmbiguousWindow;
        }
        PredictedKind::OutOfRange
    }

    /// Classify every integer k in [from, to], plus the reference-table
    /// summary at the floors of the special values.
    pub fn scan_range(
        &self,
        oracle: &Oracle,
        from: &BigInt,
        to: &BigInt,
    ) -> Result<ScanReport, FamilyError> {
        if from > to {
            return Err(FamilyError::InvalidRange { from: from.clone(), to: to.clone() });
        }
        let span = (to - from) + BigInt::one();
        let count = span.to_usize().filter(|&c| c as u128 <= oracle.work_bound() as u128).ok_or(
            OracleError::WorkBoundExceeded {
                required: span.to_u128().unwrap_or(u128::MAX),
                bound: oracle.work_bound(),
            },
        )?;
        let sp = self.special_k_profile();
        let results = par::map_indexed(count, |i| {
            let k = from + BigInt::from(i);
            self.classify_with(&sp, oracle, &k)
        });
        let classifications = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        let table = self.table_row_with(&sp, oracle)?;
        Ok(ScanReport { from: from.clone(), to: to.clone(), classifications, table })
    }

    /// The row of special values with F at each of their floors.
    pub fn table_row(&self, oracle: &Oracle) -> Result<TableRow, OracleError> {
        let sp = self.special_k_profile();
        self.table_row_with(&sp, oracle)
    }

    fn table_row_with(
        &self,
        sp: &SpecialKProfile,
        oracle: &Oracle,
    ) -> Result<TableRow, OracleError> {
        let mut entries = Vec::with_capacity(9);
        let rationals: [(&'static str, &BigRational); 7] = [
            ("k1", &sp.k1),
            ("k2", &sp.k2),
            ("k3", &sp.k3),
            ("k4", &sp.k4),
            ("k5", &sp.k5),
            ("k6", &sp.k6),
            ("k9", &sp.k9),
        ];
        for (label, value) in rationals {
            entries.push(self.table_entry(sp, oracle, label, ExactValue::rational(value.clone()))?);
        }
        let surds: [(&'static str, Option<ExactValue>); 2] =
            [("k7", sp.k7()), ("k8", sp.k8())];
        for (label, value) in surds {
            match value {
                Some(v) => entries.push(self.table_entry(sp, oracle, label, v)?),
                None => entries.push(TableEntry { label, value: None, floor: None, at_floor: None }),
            }
        }
        entries.sort_by_key(|e| e.label);
        Ok(TableRow { phi: sp.phi.clone(), entries })
    }

    fn table_entry(
        &self,
        sp: &SpecialKProfile,
        oracle: &Oracle,
        label: &'static str,
        value: ExactValue,
    ) -> Result<TableEntry, OracleError> {
        let floor = value.floor();
        let at_floor = self.classify_with(sp, oracle, &floor)?;
        Ok(TableEntry { label, value: Some(value), floor: Some(floor), at_floor: Some(at_floor) })
    }

    /// Every integer strictly between mu1 and mu2, classified by the
    /// oracle. Formulas cannot settle these: both symmetric and
    /// nonsymmetric members occur here across families.
    pub fn ambiguous_window(&self, oracle: &Oracle) -> Result<WindowReport, OracleError> {
        let sp = self.special_k_profile();
        let results = par::map_indexed(sp.xi.len(), |i| self.classify_with(&sp, oracle, &sp.xi[i]));
        let verdicts = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(WindowReport { mu1: sp.mu1, mu2: sp.mu2, xi: sp.xi, verdicts })
    }

    /// The designed-in nonsymmetric k: k* = (r3 − r2 − 1)/(r1(r1 + 1)) when
    /// integral, gcd(r1, r2 + 1) = 1 and r2 + r1k* ≥ 2. At that k the third
    /// generator equals r2 + r1k* + 1, which the oracle confirms to be a
    /// gap of S(r1, r2 + r1k*).
    pub fn nonsymmetric_k_star(&self, oracle: &Oracle) -> Result<Option<BigInt>, OracleError> {
        let one = BigInt::one();
        if !self.r1.gcd(&(&self.r2 + &one)).is_one() {
            return Ok(None);
        }
        let den = &self.r1 * (&self.r1 + &one);
        let num = &self.r3 - &self.r2 - &one;
        if !(&num % &den).is_zero() {
            return Ok(None);
        }
        let k = num / den;
        let q = &self.r2 + &self.r1 * &k;
        if q < BigInt::from(2) {
            return Ok(None);
        }
        let gap_candidate = &self.r3 - &self.r1 * &self.r1 * &k;
        debug_assert_eq!(gap_candidate, &q + &one);
        let pair = GeneratorTuple::new([self.r1.clone(), q])
            .expect("gcd(r1, r2 + r1 k) = gcd(r1, r2) = 1");
        if oracle.membership(&pair, &gap_candidate)? {
            return Ok(None);
        }
        Ok(Some(k))
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.r1, self.r2, self.r3)
    }
}

/// The two-parameter construction of families with a nonsymmetric member:
/// r1 = 2p − 1, r2 = 4p − 1, r3 = 2p·k*·(2p − 1) + 4p. The returned family
/// has `nonsymmetric_k_star` equal to `k_star`.
pub fn nonsymmetric_family(p: &BigInt, k_star: &BigInt) -> Result<FamilyParams, FamilyError> {
    if p < &BigInt::from(2) {
        return Err(FamilyError::ParameterTooSmall { name: "p", minimum: 2, got: p.clone() });
    }
    let one = BigInt::one();
    let two_p = BigInt::from(2) * p;
    let r1 = &two_p - &one;
    let r2 = BigInt::from(4) * p - &one;
    let r3 = &two_p * k_star * &r1 + BigInt::from(4) * p;
    FamilyParams::new(r1, r2, r3)
}

/// The wider four-parameter shape {u²v², u²vw + u²v²k, t − u²v²k}. For a
/// symmetric member its Frobenius number is
/// (t + u²vw)(v − 1) − u²v² + k·u²v³(1 − u²), which depends on k unless
/// u = 1 — the reason the three-parameter family fixes u = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralFamilyParams {
    u: BigInt,
    v: BigInt,
    w: BigInt,
    t: BigInt,
}

impl GeneralFamilyParams {
    pub fn new<A, B, C, D>(u: A, v: B, w: C, t: D) -> Result<Self, FamilyError>
    where
        A: Into<BigInt>,
        B: Into<BigInt>,
        C: Into<BigInt>,
        D: Into<BigInt>,
    {
        let (u, v, w, t) = (u.into(), v.into(), w.into(), t.into());
        for (name, val) in [("u", &u), ("v", &v), ("w", &w), ("t", &t)] {
            if !val.is_positive() {
                return Err(FamilyError::NonPositive { name, got: val.clone() });
            }
        }
        if &u * &v < BigInt::from(2) {
            return Err(FamilyError::ParameterTooSmall {
                name: "u*v",
                minimum: 2,
                got: &u * &v,
            });
        }
        for (names, a, b) in [
            ("u and v", &u, &v),
            ("u and w", &u, &w),
            ("v and w", &v, &w),
            ("u and t", &u, &t),
            ("v and t", &v, &t),
        ] {
            let g = a.gcd(b);
            if !g.is_one() {
                return Err(FamilyError::NotCoprime { names, gcd: g });
            }
        }
        Ok(Self { u, v, w, t })
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }
    pub fn v(&self) -> &BigInt {
        &self.v
    }
    pub fn w(&self) -> &BigInt {
        &self.w
    }
    pub fn t(&self) -> &BigInt {
        &self.t
    }

    /// (t + u²vw)(v − 1) − u²v² + k·u²v³(1 − u²).
    pub fn frobenius(&self, k: &BigInt) -> BigInt {
        let one = BigInt::one();
        let u2 = &self.u * &self.u;
        (&self.t + &u2 * &self.v * &self.w) * (&self.v - &one) - &u2 * &self.v * &self.v
            + k * self.k_coefficient()
    }

    /// u²v³(1 − u²): zero exactly when u = 1.
    pub fn k_coefficient(&self) -> BigInt {
        let one = BigInt::one();
        let u2 = &self.u * &self.u;
        &u2 * &self.v * &self.v * &self.v * (&one - &u2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn fam(r1: i64, r2: i64, r3: i64) -> FamilyParams {
        FamilyParams::new(r1, r2, r3).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn constructor_enforces_constraints() {
        assert!(matches!(
            FamilyParams::new(1, 3, 87),
            Err(FamilyError::ParameterTooSmall { .. })
        ));
        assert!(matches!(FamilyParams::new(4, 6, 87), Err(FamilyError::NotCoprime { .. })));
        assert!(matches!(FamilyParams::new(3, 2, 9), Err(FamilyError::NotCoprime { .. })));
        assert!(matches!(FamilyParams::new(2, 3, -5), Err(FamilyError::NonPositive { .. })));
    }

    #[test]
    fn triple_examples() {
        let raw = fam(2, 3, 87).triple_at(&big(0));
        assert_eq!(raw, [big(4), big(6), big(87)]);
        let raw = fam(3, 1, 85).triple_at(&big(7));
        assert_eq!(raw, [big(9), big(66), big(22)]);
        let raw = fam(2, 3, 87).triple_at(&big(-1));
        assert_eq!(raw, [big(4), big(2), big(91)]);
    }

    #[test]
    fn universal_phi_examples() {
        assert_eq!(fam(2, 3, 87).universal_phi(), big(89));
        assert_eq!(fam(3, 1, 85).universal_phi(), big(167));
        assert_eq!(fam(3, 7, 80).universal_phi(), big(193));
    }

    #[test]
    fn special_values_first_family() {
        let sp = fam(2, 3, 87).special_k_profile();
        assert_eq!(sp.k1, ratio(-1, 2));
        assert_eq!(sp.k2, ratio(21, 1));
        assert_eq!(sp.k3, ratio(85, 6));
        assert_eq!(sp.k4, ratio(-1, 1));
        assert!(sp.k4_integral);
        assert_eq!(sp.k5, ratio(251, 16));
        assert_eq!(sp.k6, ratio(14, 1));
        assert_eq!(sp.k9, ratio(85, 4));
        assert_eq!(sp.k10, sp.k4);
        assert_eq!(sp.roots.offset, big(81));
        assert_eq!(sp.roots.discriminant, big(8265));
        assert_eq!(sp.roots.denom, big(8));
        assert_eq!(sp.k7().unwrap().approx2(), "-1.23");
        assert_eq!(sp.k8().unwrap().approx2(), "21.48");
        assert_eq!(sp.phi, big(89));
        assert_eq!(sp.mu1, ExactValue::rational(ratio(85, 6)));
        assert_eq!(sp.mu2, ExactValue::rational(ratio(251, 16)));
        assert_eq!(sp.xi, vec![big(15)]);
    }

    #[test]
    fn special_values_third_family() {
        let sp = fam(3, 7, 80).special_k_profile();
        assert_eq!(sp.k1, ratio(-5, 3));
        assert_eq!(sp.k2, ratio(77, 9));
        assert_eq!(sp.k3, ratio(68, 15));
        assert_eq!(sp.k4, ratio(-2, 1));
        assert_eq!(sp.k5, ratio(610, 81));
        assert_eq!(sp.k6, ratio(73, 12));
        assert_eq!(sp.k9, ratio(77, 9));
        assert_eq!(sp.roots.discriminant, big(9765));
        assert_eq!(sp.xi, vec![big(5), big(6), big(7)]);
    }

    #[test]
    fn k4_is_k1_shifted() {
        for f in [fam(2, 3, 87), fam(3, 1, 85), fam(3, 7, 80), fam(5, 11, 42)] {
            let sp = f.special_k_profile();
            assert_eq!(sp.k4, &sp.k1 - ratio(1, 1) / BigRational::from(f.r1().clone()));
        }
    }

    #[test]
    fn classify_examples() {
        let o = Oracle::new();

        let c = fam(2, 3, 87).classify_k(&o, &big(8)).unwrap();
        assert_eq!(c.kind, TripleKind::ThreeDimSymmetric);
        assert_eq!(c.frobenius, Some(big(89)));
        assert!(c.phi_match);

        let c = fam(3, 7, 80).classify_k(&o, &big(6)).unwrap();
        assert_eq!(c.kind, TripleKind::ThreeDimNonsymmetric);
        assert_eq!(c.frobenius, Some(big(121)));
        assert!(!c.phi_match);

        let c = fam(2, 3, 87).classify_k(&o, &big(-1)).unwrap();
        assert_eq!(c.kind, TripleKind::TwoDimR1);
        assert_eq!(c.minimal_tuple, Some(GeneratorTuple::new([2, 91]).unwrap()));
        assert_eq!(c.frobenius, Some(big(89)));
        assert!(c.phi_match);

        // Middle generator representable: reduces onto {r1², r3 − r1²k}.
        let c = fam(3, 1, 85).classify_k(&o, &big(9)).unwrap();
        assert_eq!(c.kind, TripleKind::TwoDimR1Sq);
        assert_eq!(c.minimal_tuple, Some(GeneratorTuple::new([9, 4]).unwrap()));
        assert_eq!(c.frobenius, Some(big(23)));

        // Past the validity band: third generator non-positive.
        let c = fam(2, 3, 87).classify_k(&o, &big(22)).unwrap();
        assert_eq!(c.kind, TripleKind::Invalid);
        assert_eq!(c.frobenius, None);

        // Third generator exactly 1.
        let c = fam(2, 1, 9).classify_k(&o, &big(2)).unwrap();
        assert_eq!(c.kind, TripleKind::Degenerate);
        assert_eq!(c.frobenius, Some(big(-1)));
        assert_eq!(c.genus, Some(0));
    }

    #[test]
    fn pair_reduction_kind() {
        // (5, 2, 3) at k = 0: 25 = 10 + 5·3, so r1² is representable and
        // the triple reduces onto the pair {3, 10}.
        let o = Oracle::new();
        let c = fam(5, 2, 3).classify_k(&o, &big(0)).unwrap();
        assert_eq!(c.kind, TripleKind::TwoDimPair);
        assert_eq!(c.predicted, PredictedKind::TwoDimPair);
        assert_eq!(c.minimal_tuple, Some(GeneratorTuple::new([3, 10]).unwrap()));
        assert_eq!(c.frobenius, Some(big(17)));
        assert!(!c.phi_match);
    }

    #[test]
    fn k9_is_never_integral() {
        // r1² | r3 − r1 would force r1 | r3, against gcd(r1, r3) = 1.
        for (r1, r2, r3) in [(2i64, 3i64, 87i64), (3, 1, 85), (3, 7, 80), (5, 2, 3), (4, 3, 49)] {
            assert!(!fam(r1, r2, r3).special_k_profile().k9.is_integer());
        }
    }

    #[test]
    fn scan_first_arnold_family() {
        let o = Oracle::new();
        let report = fam(2, 3, 87).scan_range(&o, &big(-1), &big(21)).unwrap();
        assert_eq!(report.classifications.len(), 23);
        for c in &report.classifications[..16] {
            assert_eq!(c.frobenius, Some(big(89)), "k = {}", c.k);
            assert_eq!(c.symmetric, Some(true));
        }
        let tail: Vec<i64> = report.classifications[16..]
            .iter()
            .map(|c| i64::try_from(c.frobenius.as_ref().unwrap()).unwrap())
            .collect();
        assert_eq!(tail, vec![77, 65, 53, 41, 29, 17, 5]);
    }

    #[test]
    fn scan_rejects_bad_range() {
        let o = Oracle::new();
        assert!(matches!(
            fam(2, 3, 87).scan_range(&o, &big(5), &big(4)),
            Err(FamilyError::InvalidRange { .. })
        ));
    }

    #[test]
    fn window_examples() {
        let o = Oracle::new();

        let w = fam(2, 3, 87).ambiguous_window(&o).unwrap();
        assert_eq!(w.xi, vec![big(15)]);
        assert_eq!(w.verdicts[0].frobenius, Some(big(77)));
        assert_eq!(w.verdicts[0].symmetric, Some(true));

        let w = fam(3, 1, 85).ambiguous_window(&o).unwrap();
        assert_eq!(w.xi, vec![big(6), big(7), big(8)]);
        let fs: Vec<i64> = w
            .verdicts
            .iter()
            .map(|c| i64::try_from(c.frobenius.as_ref().unwrap()).unwrap())
            .collect();
        assert_eq!(fs, vec![167, 167, 95]);
        assert!(w.verdicts.iter().all(|c| c.symmetric == Some(true)));

        let w = fam(3, 7, 80).ambiguous_window(&o).unwrap();
        assert_eq!(w.xi, vec![big(5), big(6), big(7)]);
        let fs: Vec<i64> = w
            .verdicts
            .iter()
            .map(|c| i64::try_from(c.frobenius.as_ref().unwrap()).unwrap())
            .collect();
        assert_eq!(fs, vec![166, 121, 109]);
        assert!(w.verdicts.iter().all(|c| c.symmetric == Some(false)));
    }

    #[test]
    fn k_star_examples() {
        let o = Oracle::new();
        assert_eq!(fam(3, 7, 80).nonsymmetric_k_star(&o).unwrap(), Some(big(6)));
        // 83/12 is not integral.
        assert_eq!(fam(3, 1, 85).nonsymmetric_k_star(&o).unwrap(), None);
        // gcd(r1, r2 + 1) = gcd(2, 4) = 2.
        assert_eq!(fam(2, 3, 87).nonsymmetric_k_star(&o).unwrap(), None);
    }

    #[test]
    fn nonsymmetric_construction() {
        let o = Oracle::new();

        let f = nonsymmetric_family(&big(2), &big(6)).unwrap();
        assert_eq!((f.r1(), f.r2(), f.r3()), (&big(3), &big(7), &big(80)));

        let f = nonsymmetric_family(&big(2), &big(1)).unwrap();
        assert_eq!((f.r1(), f.r2(), f.r3()), (&big(3), &big(7), &big(20)));
        assert_eq!(f.nonsymmetric_k_star(&o).unwrap(), Some(big(1)));
        assert_eq!(f.triple_at(&big(1)), [big(9), big(30), big(11)]);
        let c = f.classify_k(&o, &big(1)).unwrap();
        assert_eq!(c.kind, TripleKind::ThreeDimNonsymmetric);

        let f = nonsymmetric_family(&big(3), &big(1)).unwrap();
        assert_eq!((f.r1(), f.r2(), f.r3()), (&big(5), &big(11), &big(42)));
        assert_eq!(f.nonsymmetric_k_star(&o).unwrap(), Some(big(1)));
        let c = f.classify_k(&o, &big(1)).unwrap();
        assert_eq!(c.kind, TripleKind::ThreeDimNonsymmetric);

        assert!(matches!(
            nonsymmetric_family(&big(1), &big(1)),
            Err(FamilyError::ParameterTooSmall { .. })
        ));
    }

    #[test]
    fn general_family_reduces_to_phi_when_u_is_one() {
        let g = GeneralFamilyParams::new(1, 2, 3, 87).unwrap();
        for k in [-3i64, 0, 11] {
            assert_eq!(g.frobenius(&big(k)), big(89));
        }
        let g = GeneralFamilyParams::new(1, 3, 1, 85).unwrap();
        assert_eq!(g.frobenius(&big(4)), big(167));
        assert_eq!(g.k_coefficient(), BigInt::zero());
    }

    #[test]
    fn general_family_depends_on_k_when_u_exceeds_one() {
        let g = GeneralFamilyParams::new(2, 3, 1, 5).unwrap();
        assert_eq!(g.k_coefficient(), big(-324));
        let delta = g.frobenius(&big(1)) - g.frobenius(&big(0));
        assert_eq!(delta, big(-324));
    }

    #[test]
    fn ordering_reports_agree_on_reference_families() {
        for (r1, r2, r3) in [(2i64, 3i64, 87i64), (3, 1, 85), (3, 7, 80), (2, 1, 5)] {
            let rep = fam(r1, r2, r3).ordering_relations();
            assert!(rep.consistent(), "({}, {}, {}): {:?}", r1, r2, r3, rep);
        }
        let rep = fam(2, 3, 87).ordering_relations();
        assert!(rep.k1_le_k3_le_k2.by_values);
        assert_eq!(rep.k9_vs_k2_by_values, Ordering::Greater);
        let rep = fam(3, 1, 85).ordering_relations();
        assert_eq!(rep.k9_vs_k2_by_values, Ordering::Equal);
        let rep = fam(2, 1, 5).ordering_relations();
        assert!(rep.k1_le_k2_le_k3.by_values);
        assert!(rep.k1_le_k2_le_k3.by_criterion);
    }

    #[test]
    fn prediction_flags_the_sporadic_reduction() {
        // (2,3,87) at k = 14: inside the certified-symmetric range, but the
        // triple happens to reduce; k6 = 14 predicts the reduction exactly.
        let o = Oracle::new();
        let c = fam(2, 3, 87).classify_k(&o, &big(14)).unwrap();
        assert_eq!(c.kind, TripleKind::TwoDimR1Sq);
        assert_eq!(c.predicted, PredictedKind::TwoDimR1Sq);
        assert!(c.prediction_consistent());
        assert_eq!(c.frobenius, Some(big(89)));
    }
}
