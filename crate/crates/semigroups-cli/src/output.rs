//! JSON document assembly.
//!
//! Schema version "1". All integers are exact JSON numbers (arbitrary
//! precision), rationals are {"num", "den"}, the quadratic roots k7/k8 are
//! {"p", "d", "q", "approx"} for (p ∓ √d)/q, and general exact values are
//! tagged objects. Approximations are always strings, never floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use semigroups::{
    EnumerationReport, ExactValue, KClassification, OrderingReport, QuadraticRoots,
    ReductionAnalysis, ScanReport, SemigroupProfile, SpecialKProfile, TableRow, WindowReport,
};
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Map, Number, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct OutputDocument {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub diagnostics: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: &str, inputs: Value, results: Value, diagnostics: Vec<String>) -> Self {
        Self { schema_version: SCHEMA_VERSION, command: command.to_string(), inputs, results, diagnostics }
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("document serializes")
        } else {
            serde_json::to_string(self).expect("document serializes")
        }
    }
}

/// Exact integer as a JSON number, regardless of magnitude.
pub fn jint(n: &BigInt) -> Value {
    let number: Number = n.to_string().parse().expect("integer literal");
    Value::Number(number)
}

pub fn jint_opt(n: Option<&BigInt>) -> Value {
    n.map(jint).unwrap_or(Value::Null)
}

pub fn jrat(r: &BigRational) -> Value {
    json!({ "num": jint(r.numer()), "den": jint(r.denom()) })
}

pub fn jroots(roots: &QuadraticRoots, value: Option<&ExactValue>) -> Value {
    match value {
        None => Value::Null,
        Some(v) => json!({
            "p": jint(&roots.offset),
            "d": jint(&roots.discriminant),
            "q": jint(&roots.denom),
            "approx": v.approx2(),
        }),
    }
}

pub fn jexact(v: &ExactValue) -> Value {
    match v {
        ExactValue::Rational(r) => json!({
            "kind": "rational",
            "num": jint(r.numer()),
            "den": jint(r.denom()),
            "approx": v.approx2(),
        }),
        ExactValue::Irrational(s) => {
            // (base + coeff·√rad)/denom rewritten as (p ± √d)/q.
            let folded = s.coeff() * s.coeff() * s.radicand();
            json!({
                "kind": "surd",
                "p": jint(s.base()),
                "d": jint(&folded),
                "q": jint(s.denom()),
                "sign": if s.coeff().is_negative() { -1 } else { 1 },
                "approx": v.approx2(),
            })
        }
    }
}

pub fn jgenerators(gens: &[BigInt]) -> Value {
    Value::Array(gens.iter().map(jint).collect())
}

pub fn jprofile(p: &SemigroupProfile, scaled_by: Option<&BigInt>, minimal_gens: &[BigInt]) -> Value {
    let mut m = Map::new();
    m.insert("generators".into(), jgenerators(p.tuple.generators()));
    m.insert("scaled_by".into(), jint_opt(scaled_by));
    m.insert("degenerate".into(), Value::Bool(p.tuple.is_degenerate()));
    m.insert("frobenius".into(), jint(&p.frobenius));
    m.insert("conductor".into(), jint(&p.conductor));
    m.insert("genus".into(), Value::from(p.genus));
    m.insert("gaps".into(), Value::Array(p.gaps.iter().map(|&g| Value::from(g)).collect()));
    m.insert("symmetric".into(), Value::Bool(p.symmetric));
    m.insert("minimal".into(), Value::Bool(p.minimal));
    m.insert("minimal_generators".into(), jgenerators(minimal_gens));
    Value::Object(m)
}

pub fn jclassification(c: &KClassification) -> Value {
    json!({
        "k": jint(&c.k),
        "triple": Value::Array(c.raw_triple.iter().map(jint).collect()),
        "kind": c.kind.as_str(),
        "minimal_generators": c.minimal_tuple.as_ref()
            .map(|t| jgenerators(t.generators()))
            .unwrap_or(Value::Null),
        "frobenius": jint_opt(c.frobenius.as_ref()),
        "genus": c.genus.map(Value::from).unwrap_or(Value::Null),
        "symmetric": c.symmetric.map(Value::Bool).unwrap_or(Value::Null),
        "phi_match": c.phi_match,
        "predicted": c.predicted.as_str(),
        "prediction_consistent": c.prediction_consistent(),
    })
}

pub fn jspecial(sp: &SpecialKProfile) -> Value {
    json!({
        "phi": jint(&sp.phi),
        "k1": jrat(&sp.k1),
        "k2": jrat(&sp.k2),
        "k3": jrat(&sp.k3),
        "k4": jrat(&sp.k4),
        "k4_integral": sp.k4_integral,
        "k5": jrat(&sp.k5),
        "k6": jrat(&sp.k6),
        "k7": jroots(&sp.roots, sp.k7().as_ref()),
        "k8": jroots(&sp.roots, sp.k8().as_ref()),
        "k9": jrat(&sp.k9),
        "k10": jrat(&sp.k10),
        "mu1": jexact(&sp.mu1),
        "mu2": jexact(&sp.mu2),
        "xi": Value::Array(sp.xi.iter().map(jint).collect()),
    })
}

fn jordering_direction(o: std::cmp::Ordering) -> Value {
    Value::String(
        match o {
            std::cmp::Ordering::Less => "less",
            std::cmp::Ordering::Equal => "equal",
            std::cmp::Ordering::Greater => "greater",
        }
        .to_string(),
    )
}

pub fn jordering(rep: &OrderingReport) -> Value {
    let pair = |p: &semigroups::CheckPair| {
        json!({ "by_criterion": p.by_criterion, "by_values": p.by_values, "agree": p.agree() })
    };
    let implication = |p: &semigroups::ImplicationCheck| {
        json!({ "premise": p.premise, "conclusion": p.conclusion, "holds": p.holds() })
    };
    json!({
        "k1_le_k2_le_k3": pair(&rep.k1_le_k2_le_k3),
        "k1_le_k3_le_k2": pair(&rep.k1_le_k3_le_k2),
        "k3_le_k1_le_k2": pair(&rep.k3_le_k1_le_k2),
        "k2_ge_k5": pair(&rep.k2_ge_k5),
        "k8_ge_k2_when_sum_large": implication(&rep.k8_ge_k2_when_sum_large),
        "k1_ge_k7_when_sum_large": implication(&rep.k1_ge_k7_when_sum_large),
        "no_pair_range_when_k2_ge_k5": implication(&rep.no_pair_range_when_k2_ge_k5),
        "k9_vs_k2": {
            "by_r1": jordering_direction(rep.k9_vs_k2_by_r1),
            "by_values": jordering_direction(rep.k9_vs_k2_by_values),
            "agree": rep.k9_vs_k2_by_r1 == rep.k9_vs_k2_by_values,
        },
        "consistent": rep.consistent(),
    })
}

pub fn jtable(row: &TableRow) -> Value {
    let cells: Vec<Value> = row
        .entries
        .iter()
        .map(|e| {
            json!({
                "label": e.label,
                "value": e.value.as_ref().map(jexact).unwrap_or(Value::Null),
                "approx": e.value.as_ref().map(|v| Value::String(v.approx2())).unwrap_or(Value::Null),
                "floor": jint_opt(e.floor.as_ref()),
                "frobenius": jint_opt(e.frobenius_cell()),
                "kind": e.at_floor.as_ref().map(|c| Value::String(c.kind.as_str().into())).unwrap_or(Value::Null),
            })
        })
        .collect();
    json!({ "phi": jint(&row.phi), "cells": Value::Array(cells) })
}

pub fn jscan(report: &ScanReport) -> Value {
    json!({
        "from": jint(&report.from),
        "to": jint(&report.to),
        "classifications": Value::Array(report.classifications.iter().map(jclassification).collect()),
        "table_row": jtable(&report.table),
    })
}

pub fn jwindow(w: &WindowReport) -> Value {
    json!({
        "mu1": jexact(&w.mu1),
        "mu2": jexact(&w.mu2),
        "xi": Value::Array(w.xi.iter().map(jint).collect()),
        "classifications": Value::Array(w.verdicts.iter().map(jclassification).collect()),
    })
}

pub fn jreduction(a: &ReductionAnalysis) -> Value {
    let solutions: Vec<Value> = a
        .solutions
        .iter()
        .map(|s| {
            json!({
                "k_star": jint(&s.k_star),
                "g_star": jint(&s.g_star),
                "x": jint(&s.divisor_x),
                "reduced_pair": jgenerators(s.reduced_pair.generators()),
                "frobenius": jint(&s.frobenius),
            })
        })
        .collect();
    json!({
        "n": jint(&a.n),
        "sigma0": a.sigma0,
        "divisors": Value::Array(a.divisors.iter().map(jint).collect()),
        "q": a.q,
        "solutions": Value::Array(solutions),
        "corollary1_prime": a.corollary1_prime,
        "corollary2": a.corollary2.as_str(),
    })
}

pub fn jenumeration(report: &EnumerationReport) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            json!({
                "r1": r.r1,
                "r2": r.r2,
                "r3": r.r3,
                "k": r.k,
                "e": r.e,
                "boundary": r.boundary.as_str(),
                "triple": jgenerators(r.triple.generators()),
                "frobenius": jint(&r.frobenius),
            })
        })
        .collect();
    json!({
        "count": report.records.len(),
        "records": Value::Array(records),
        "dropped_non_integer_k": report.dropped_non_integer_k,
    })
}
