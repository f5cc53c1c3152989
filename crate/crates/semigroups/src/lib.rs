//! Exact analysis of numerical semigroups generated by small tuples.
//!
//! The crate has four layers:
//!
//! * [`tuple`] and [`oracle`] — the brute-force ground truth: canonical
//!   generating tuples, Apéry-set computation over residue classes, gap
//!   sets, Frobenius numbers, symmetry and minimality tests. Everything
//!   else in the crate validates against this oracle.
//! * [`formulas`] — the closed forms for two-generator semigroups
//!   (Sylvester) and for the symmetric three-generator semigroups
//!   S(bc1, bc2, a) with a ∈ S(c1, c2) (Herzog), plus the search for such
//!   a decomposition of a given triple.
//! * [`family`] — the one-parameter family S(r1², r1r2 + r1²k, r3 − r1²k):
//!   its k-independent Frobenius number Φ, the exact special k-values
//!   (rationals and quadratic surds), per-k classification, range scans,
//!   and the construction of nonsymmetric members.
//! * [`reduction`] and [`enumeration`] — the divisor-based solution of the
//!   quadratic Diophantine equation r1r2 + r1²k = g(r3 − r1²k), and the
//!   finite enumeration of the bounded symmetric regime.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals,
//! plus an explicit quadratic-surd representation in [`exact`] so that
//! comparisons against irrational bounds are decided by sign tests, never
//! by floating point.
//!
//! With the default `parallel` feature, range scans fan out over rayon;
//! disabling it yields an identical sequential implementation.

pub mod enumeration;
pub mod exact;
pub mod family;
pub mod formulas;
pub mod oracle;
mod par;
pub mod reduction;
pub mod tuple;

pub use enumeration::{
    count_bound, enumerate_all, feasible_r1, BoundaryCase, EnumerationError, EnumerationRecord,
    EnumerationReport,
};
pub use exact::{ExactValue, QuadraticRoots, Surd};
pub use family::{
    nonsymmetric_family, CheckPair, FamilyError, FamilyParams, GeneralFamilyParams,
    ImplicationCheck, KClassification, OrderingReport, PredictedKind, ScanReport, SpecialKProfile,
    TableEntry, TableRow, TripleKind, WindowReport,
};
pub use formulas::{sylvester_frobenius, FormulaError, LemmaOneDecomposition};
pub use oracle::{Oracle, OracleError, SemigroupProfile, DEFAULT_WORK_BOUND};
pub use reduction::{
    corollary1_applies, corollary2_applies, solve_reduction, Corollary2Verdict, ReductionAnalysis,
    ReductionSolution,
};
pub use tuple::{GeneratorTuple, TupleError};
