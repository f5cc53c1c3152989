//! Human-readable output. Gap lists longer than 64 entries are elided
//! here; JSON always carries them in full.

use std::fmt::Write;

use num_bigint::BigInt;
use semigroups::{
    EnumerationReport, ExactValue, KClassification, OrderingReport, ReductionAnalysis, ScanReport,
    SemigroupProfile, SpecialKProfile, TableRow, WindowReport,
};

const GAP_DISPLAY_LIMIT: usize = 64;

fn gens(list: &[BigInt]) -> String {
    let inner: Vec<String> = list.iter().map(|g| g.to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn opt_big(v: Option<&BigInt>) -> String {
    v.map(|b| b.to_string()).unwrap_or_else(|| "-".to_string())
}

fn exact(v: &ExactValue) -> String {
    format!("{} ({})", v, v.approx2())
}

pub fn profile(p: &SemigroupProfile, scaled_by: Option<&BigInt>, minimal_gens: &[BigInt]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "generators: {}", gens(p.tuple.generators()));
    if let Some(s) = scaled_by {
        let _ = writeln!(out, "scaled by:  {}", s);
    }
    if p.tuple.is_degenerate() {
        let _ = writeln!(out, "degenerate: semigroup is all nonnegative integers");
    }
    let _ = writeln!(out, "frobenius:  {}", p.frobenius);
    let _ = writeln!(out, "conductor:  {}", p.conductor);
    let _ = writeln!(out, "genus:      {}", p.genus);
    let _ = writeln!(out, "symmetric:  {}", p.symmetric);
    let _ = writeln!(out, "minimal:    {}", p.minimal);
    let _ = writeln!(out, "minimal generating set: {}", gens(minimal_gens));
    if p.gaps.len() <= GAP_DISPLAY_LIMIT {
        let _ = writeln!(out, "gaps: {:?}", p.gaps);
    } else {
        let head: Vec<u64> = p.gaps[..GAP_DISPLAY_LIMIT].to_vec();
        let _ = writeln!(out, "gaps: {:?} ... ({} more)", head, p.gaps.len() - GAP_DISPLAY_LIMIT);
    }
    out
}

pub fn classification_line(c: &KClassification) -> String {
    let f = opt_big(c.frobenius.as_ref());
    let sym = c.symmetric.map(|s| s.to_string()).unwrap_or_else(|| "-".to_string());
    let minimal = c
        .minimal_tuple
        .as_ref()
        .map(|t| gens(t.generators()))
        .unwrap_or_else(|| "-".to_string());
    let mut line = format!(
        "k={:<5} F={:<6} sym={:<5} kind={:<22} phi_match={:<5} minimal={}",
        c.k, f, sym, c.kind.as_str(), c.phi_match, minimal
    );
    if !c.prediction_consistent() {
        let _ = write!(line, "  [predicted {}]", c.predicted.as_str());
    }
    line
}

pub fn classification(c: &KClassification) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "triple at k={}: {}",
        c.k,
        gens(c.raw_triple.as_ref())
    );
    let _ = writeln!(out, "{}", classification_line(c));
    out
}

pub fn special_k(params_line: &str, sp: &SpecialKProfile, ordering: &OrderingReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family {}   phi = {}", params_line, sp.phi);
    let rat = |label: &str, v: &num_rational::BigRational| {
        let e = ExactValue::rational(v.clone());
        format!("{} = {}", label, exact(&e))
    };
    let _ = writeln!(out, "{}", rat("k1", &sp.k1));
    let _ = writeln!(out, "{}", rat("k2", &sp.k2));
    let _ = writeln!(out, "{}", rat("k3", &sp.k3));
    let _ = writeln!(out, "{} (integral: {})", rat("k4", &sp.k4), sp.k4_integral);
    let _ = writeln!(out, "{}", rat("k5", &sp.k5));
    let _ = writeln!(out, "{}", rat("k6", &sp.k6));
    match (sp.k7(), sp.k8()) {
        (Some(k7), Some(k8)) => {
            let _ = writeln!(out, "k7 = {}", exact(&k7));
            let _ = writeln!(out, "k8 = {}", exact(&k8));
        }
        _ => {
            let _ = writeln!(out, "k7, k8: no real roots (pair containment holds for every k)");
        }
    }
    let _ = writeln!(out, "{}", rat("k9", &sp.k9));
    let _ = writeln!(out, "{} (= k4)", rat("k10", &sp.k10));
    let _ = writeln!(out, "mu1 = {}   mu2 = {}", exact(&sp.mu1), exact(&sp.mu2));
    let xi: Vec<String> = sp.xi.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "xi = [{}]", xi.join(", "));
    let _ = writeln!(out, "{}", ordering_report(ordering));
    out
}

pub fn ordering_report(rep: &OrderingReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ordering relations (criterion vs exact values):");
    let pair = |label: &str, p: &semigroups::CheckPair| {
        format!(
            "  {:<16} criterion={:<5} values={:<5} agree={}",
            label, p.by_criterion, p.by_values, p.agree()
        )
    };
    let _ = writeln!(out, "{}", pair("k1<=k2<=k3", &rep.k1_le_k2_le_k3));
    let _ = writeln!(out, "{}", pair("k1<=k3<=k2", &rep.k1_le_k3_le_k2));
    let _ = writeln!(out, "{}", pair("k3<=k1<=k2", &rep.k3_le_k1_le_k2));
    let _ = writeln!(out, "{}", pair("k2>=k5", &rep.k2_ge_k5));
    let implication = |label: &str, p: &semigroups::ImplicationCheck| {
        format!(
            "  {:<30} premise={:<5} conclusion={:<5} holds={}",
            label, p.premise, p.conclusion, p.holds()
        )
    };
    let _ = writeln!(out, "{}", implication("sum large => k8>=k2", &rep.k8_ge_k2_when_sum_large));
    let _ = writeln!(out, "{}", implication("sum large => k1>=k7", &rep.k1_ge_k7_when_sum_large));
    let _ = writeln!(
        out,
        "{}",
        implication("k2>=k5 => no pair range", &rep.no_pair_range_when_k2_ge_k5)
    );
    let dir = |o: std::cmp::Ordering| match o {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    let _ = writeln!(
        out,
        "  k9 vs k2: by r1 '{}', by values '{}'",
        dir(rep.k9_vs_k2_by_r1),
        dir(rep.k9_vs_k2_by_values)
    );
    let _ = write!(out, "consistent: {}", rep.consistent());
    out
}

pub fn scan(report: &ScanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scan k = {} ..= {}:", report.from, report.to);
    for c in &report.classifications {
        let _ = writeln!(out, "{}", classification_line(c));
    }
    let _ = writeln!(out);
    let _ = write!(out, "{}", table_row(&report.table));
    out
}

pub fn table_row(row: &TableRow) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "special-value summary   phi = {}", row.phi);
    let _ = writeln!(
        out,
        "{:<5} {:<28} {:>8} {:>7} {:>8}  kind",
        "label", "value", "approx", "floor", "F"
    );
    for e in &row.entries {
        let (value, approx) = match &e.value {
            Some(v) => (v.to_string(), v.approx2()),
            None => ("(does not exist)".to_string(), "-".to_string()),
        };
        let floor = e.floor.as_ref().map(|f| f.to_string()).unwrap_or_else(|| "-".to_string());
        let f_cell = opt_big(e.frobenius_cell());
        let kind = e
            .at_floor
            .as_ref()
            .map(|c| c.kind.as_str())
            .unwrap_or("-");
        let _ = writeln!(
            out,
            "{:<5} {:<28} {:>8} {:>7} {:>8}  {}",
            e.label, value, approx, floor, f_cell, kind
        );
    }
    out
}

pub fn window(w: &WindowReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "mu1 = {}   mu2 = {}", exact(&w.mu1), exact(&w.mu2));
    let xi: Vec<String> = w.xi.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "xi = [{}]", xi.join(", "));
    for c in &w.verdicts {
        let _ = writeln!(out, "{}", classification_line(c));
    }
    out
}

pub fn reduction(a: &ReductionAnalysis) -> String {
    let mut out = String::new();
    let divisors: Vec<String> = a.divisors.iter().map(|d| d.to_string()).collect();
    let _ = writeln!(out, "n = r1*r2 + r3 = {}", a.n);
    let _ = writeln!(out, "sigma0 = {}   divisors: [{}]", a.sigma0, divisors.join(", "));
    let _ = writeln!(out, "Q = {}", a.q);
    for s in &a.solutions {
        let _ = writeln!(
            out,
            "k* = {:<5} g* = {:<5} X = {:<5} pair {}   F = {}",
            s.k_star,
            s.g_star,
            s.divisor_x,
            gens(s.reduced_pair.generators()),
            s.frobenius
        );
    }
    let _ = writeln!(out, "prime sum certificate: {}", a.corollary1_prime);
    let _ = writeln!(out, "prime square verdict:  {}", a.corollary2.as_str());
    out
}

pub fn enumeration(report: &EnumerationReport) -> String {
    let mut out = String::new();
    let mut last_group = None;
    for r in &report.records {
        let group = (r.r1, r.boundary);
        if last_group != Some(group) {
            let _ = writeln!(out, "r1 = {}, {} (r1*k + r2 {} 1):", r.r1, r.boundary.as_str(),
                if r.boundary == semigroups::BoundaryCase::Generic { "!=" } else { "=" });
            last_group = Some(group);
        }
        let _ = writeln!(
            out,
            "  r2={:<3} r3={:<3} k={:<3} e={:<3} {}  F = {}",
            r.r2,
            r.r3,
            r.k,
            r.e,
            gens(r.triple.generators()),
            r.frobenius
        );
    }
    let _ = writeln!(
        out,
        "{} records; {} candidates dropped for non-integral k across the whole regime",
        report.records.len(),
        report.dropped_non_integer_k
    );
    out
}
