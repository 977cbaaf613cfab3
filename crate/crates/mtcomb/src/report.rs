//! JSON reports. Field order is fixed by construction.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};

use mtcomb_core::dispatch_embed::{
    CoverageReport, D4Report, D4Status, EmbeddingPlan, FactorInput, FactorObstruction, FactorReport, MBound,
};
use mtcomb_core::mt_pairs::{DecompositionCandidate, Frac, COCHARACTER_MODEL};
use mtcomb_core::nonspecial::{
    ratio_set, Coverage, NonSpecialVerdict, ObstructionDatum, RuleId, SignatureProfile, VerdictOutcome,
    NONSPECIAL_CAVEAT,
};
use mtcomb_core::shimura_types::{ClassificationReport, PelReport, ReflexData, SimpleAdjointDescriptor};

pub const FLAGS_NOTE: &str =
    "D_4 hypothesis flags are taken as asserted by the caller; they are not verified.";

pub fn frac_str(r: &Frac) -> String {
    format!("{r}")
}

fn fracs(set: &BTreeSet<Frac>) -> Value {
    Value::Array(set.iter().map(|r| Value::String(frac_str(r))).collect())
}

pub fn rule_id(r: RuleId) -> String {
    format!("nonspecial:{}", r.name())
}

/// Wraps a result with the command name and the notes every report carries.
pub fn envelope(command: &str, result: Value, extra_notes: &[&str]) -> Value {
    let mut notes = vec![Value::String(NONSPECIAL_CAVEAT.to_string())];
    notes.push(Value::String(format!("cocharacter model: {COCHARACTER_MODEL}")));
    notes.extend(extra_notes.iter().map(|n| Value::String(n.to_string())));
    json!({ "command": command, "result": result, "notes": notes })
}

pub fn profile_json(p: &SignatureProfile) -> Value {
    json!({
        "n": p.n(),
        "signatures": p.signatures().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "compact": p.compact_count(),
    })
}

pub fn datum_json(d: &ObstructionDatum) -> Value {
    let factors: Vec<Value> = d
        .factors
        .iter()
        .map(|f| {
            let mut m = Map::new();
            m.insert("rep".into(), json!(f.rep.to_string()));
            m.insert("r".into(), json!(f.r));
            m.insert("f".into(), json!(f.f));
            m.insert("s".into(), json!(f.s));
            m.insert("ab".into(), json!(f.ab.map(|(a, b)| [a, b])));
            m.insert("ratio".into(), json!(frac_str(&f.ratio)));
            Value::Object(m)
        })
        .collect();
    json!({
        "shape": d.shape(),
        "t": d.t(),
        "rank_sum": d.rank_sum,
        "coverage": match d.coverage { Coverage::Strict => "strict", Coverage::LiteralOnly => "literal-only" },
        "relaxed": d.relaxed,
        "factors": factors,
    })
}

pub fn verdict_json(profile: &SignatureProfile, v: &NonSpecialVerdict) -> Value {
    let rd = ratio_set(profile);
    let (verdict, rule, obstructions) = match &v.outcome {
        VerdictOutcome::NonSpecial(r) => ("non-special", Value::String(rule_id(*r)), vec![]),
        VerdictOutcome::Inconclusive(ds) => {
            ("inconclusive", Value::String("nonspecial:obstruction-found".into()), ds.iter().map(datum_json).collect())
        }
    };
    json!({
        "profile": profile_json(profile),
        "ratio_set": fracs(&rd.ratios),
        "c": frac_str(&rd.c),
        "d": frac_str(&rd.d),
        "triggered_rules": v.triggered.iter().map(|r| rule_id(*r)).collect::<Vec<_>>(),
        "relaxed_search": v.relaxed,
        "verdict": verdict,
        "rule": rule,
        "obstructions": obstructions,
    })
}

/// Longest ratio list printed per candidate; longer lists are cut to this
/// many smallest entries.
pub const RATIO_LIST_LIMIT: usize = 32;

pub fn candidate_json(c: &DecompositionCandidate) -> Value {
    let shown: Vec<String> = c.realizable_ratios.iter().take(RATIO_LIST_LIMIT).map(frac_str).collect();
    json!({
        "shape": c.shape(),
        "factors": c.reps().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "total_dim": c.total_dim.to_string(),
        "duality": c.total_duality.name(),
        "realizable_ratio_count": c.realizable_ratios.len(),
        "realizable_ratios": shown,
        "realizable_ratios_truncated": c.realizable_ratios.len() > RATIO_LIST_LIMIT,
    })
}

pub fn classification_json(index: usize, desc: &SimpleAdjointDescriptor, c: &ClassificationReport) -> Value {
    json!({
        "index": index,
        "lie_type": desc.lie().to_string(),
        "type_label": c.type_label.to_string(),
        "rule": "types:marked-vertex-orbit",
        "with_involution": c.with_involution,
        "inner": c.inner,
        "reflex_degree": c.reflex_degree,
        "compact_copies": c.compact_copies,
        "marked_orbit": desc.nu_orbit().iter().map(|v| json!([v.copy, v.node])).collect::<Vec<_>>(),
    })
}

pub fn reflex_json(index: usize, r: &ReflexData, orbit_size: u64) -> Value {
    json!({
        "index": index,
        "rule": "types:reflex-stabilizer-index",
        "group_order": r.group_order,
        "stabilizer_order": r.stabilizer_order,
        "reflex_degree": r.degree,
        "marked_set_orbit_size": orbit_size,
    })
}

pub fn pel_json(p: &PelReport) -> Value {
    json!({
        "pel_adjoint": p.pel_adjoint,
        "rule": "types:pel-factor-rule",
        "factors": p.factors.iter().enumerate().map(|(i, f)| json!({
            "index": i,
            "type_label": f.label.to_string(),
            "compact_copies": f.compact_copies,
            "ok": f.ok,
            "reason": f.reason,
        })).collect::<Vec<_>>(),
    })
}

fn factor_report_json(index: usize, r: &FactorReport) -> Value {
    let obstruction = match &r.obstruction {
        FactorObstruction::NonSpecial(ds) => json!({ "kind": "signature-obstructions", "data": ds.iter().map(datum_json).collect::<Vec<_>>() }),
        FactorObstruction::Decompositions(cs) => json!({ "kind": "decompositions", "data": cs.iter().map(candidate_json).collect::<Vec<_>>() }),
        FactorObstruction::None => Value::Null,
    };
    let verdict = r.verdict.as_ref().map(|v| match &v.outcome {
        VerdictOutcome::NonSpecial(rule) => json!({ "verdict": "non-special", "rule": rule_id(*rule) }),
        VerdictOutcome::Inconclusive(_) => json!({ "verdict": "inconclusive", "rule": "nonspecial:obstruction-found" }),
    });
    json!({
        "index": index,
        "type_label": r.label.to_string(),
        "case": r.case.case.name(),
        "rule": format!("dispatch:case-{}", r.case.case.name()),
        "reason": r.case.reason,
        "nonspecial": verdict,
        "obstruction": obstruction,
    })
}

pub fn coverage_json(c: &CoverageReport) -> Value {
    json!({
        "covered": c.covered,
        "rule": "dispatch:all-factors-covered",
        "factors": c.factors.iter().enumerate().map(|(i, f)| factor_report_json(i, f)).collect::<Vec<_>>(),
    })
}

pub fn d4_json(r: &D4Report) -> Value {
    let (status, reason) = match &r.status {
        D4Status::Reduced { covered } => ("reduced", format!("no D_4 factors; coverage verdict is {covered}")),
        D4Status::Applicable => ("applicable", "conditional on the asserted hypothesis flags".to_string()),
        D4Status::NotApplicable(s) => ("not-applicable", s.clone()),
        D4Status::CannotEvaluate(s) => ("cannot-evaluate", s.clone()),
    };
    json!({
        "status": status,
        "rule": "dispatch:d4-extension",
        "reason": reason,
        "d4_factors": r.d4_indices,
    })
}

pub fn factor_flags_asserted(factors: &[FactorInput]) -> bool {
    factors.iter().any(|f| f.flags().is_some())
}

pub fn plan_json(plan: &EmbeddingPlan) -> Value {
    let m = match &plan.m_bound {
        MBound::Concrete(v) => json!({ "kind": "concrete", "value": v.to_string() }),
        MBound::Symbolic(s) => json!({ "kind": "symbolic", "value": s }),
    };
    json!({
        "rule": "embed:siegel-chain",
        "group_a": plan.group_a_label(),
        "p": plan.group_a_p.as_ref().map(ToString::to_string),
        "degree_bound_worst": plan.degree_bound_worst,
        "degree_bound_refined": plan.degree_bound_refined,
        "kernel_trivial": plan.kernel_trivial,
        "n4": plan.n4.to_string(),
        "dim_spin_carrier": plan.dim_spin_carrier.as_ref().map(ToString::to_string),
        "dim_standard_carrier": plan.dim_standard_carrier.as_ref().map(ToString::to_string),
        "m_bound": m,
        "chain": plan.chain,
    })
}

/// Plain-text rendering: one `path: value` line per scalar.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

fn walk(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(x, &p, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", parts.join(", ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                walk(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => out.push_str(&format!("{path}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}
