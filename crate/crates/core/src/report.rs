//! Line-oriented result records: one self-describing `key=value` line per
//! result, with a fixed field order per kind, plus a CSV projection.

use crate::bound::BoundCheck;
use crate::theorems::{Mu5Verdict, Mu6Verdict};

/// Fixed-point value formatting: 12 decimal places with trailing zeros
/// trimmed, so integers print bare ("4") and irrationals keep their full
/// tail ("2.732050807569").
pub fn fmt_value(v: f64) -> String {
    let mut s = format!("{v:.12}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Graph identification carried on every record.
#[derive(Debug, Clone)]
pub struct GraphContext {
    pub graph6: String,
    pub n: usize,
    pub name: String,
}

pub fn bound_record(ctx: &GraphContext, check: &BoundCheck) -> String {
    let mut line = format!(
        "kind=bound name={} graph6={} n={} lhs={} rhs={} relation={} slack={} equality={}",
        check.name,
        ctx.graph6,
        ctx.n,
        fmt_value(check.lhs),
        fmt_value(check.rhs),
        check.relation.symbol(),
        fmt_value(check.slack),
        check.equality,
    );
    if let Some(p) = check.equality_predicted {
        line.push_str(&format!(" predicted={p}"));
    }
    line.push_str(&format!(" holds={}", check.holds()));
    if check.boundary() {
        line.push_str(" boundary=true");
    }
    for (key, value) in &check.params {
        line.push_str(&format!(" {key}={}", fmt_value(*value)));
    }
    line
}

fn evidence_fields(e: &crate::theorems::Evidence) -> String {
    let mut s = format!(" omega={} diam={}", e.omega, e.diameter);
    if !e.found.is_empty() {
        let found: Vec<String> = e
            .found
            .iter()
            .map(|(p, w)| {
                let verts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                format!("{}:{{{}}}", p.name(), verts.join(","))
            })
            .collect();
        s.push_str(&format!(" found={}", found.join("|")));
    }
    if !e.absent.is_empty() {
        let absent: Vec<&str> = e.absent.iter().map(|p| p.name()).collect();
        s.push_str(&format!(" absent={}", absent.join("|")));
    }
    if !e.distance_patterns.is_empty() {
        let found: Vec<String> = e
            .distance_patterns
            .iter()
            .map(|(name, w)| {
                let verts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
                format!("{name}:{{{}}}", verts.join(","))
            })
            .collect();
        s.push_str(&format!(" distances={}", found.join("|")));
    }
    s
}

pub fn mu5_record(ctx: &GraphContext, v: &Mu5Verdict) -> String {
    format!(
        "kind=mu5 graph6={} n={} name={} value={} symbolic={} rule={}{}",
        ctx.graph6,
        ctx.n,
        ctx.name,
        fmt_value(v.value),
        v.symbolic,
        v.rule.id(),
        evidence_fields(&v.evidence),
    )
}

pub fn mu6_record(ctx: &GraphContext, v: &Mu6Verdict) -> String {
    format!(
        "kind=mu6 graph6={} n={} name={} value={} symbolic={} rule={}{}",
        ctx.graph6,
        ctx.n,
        ctx.name,
        fmt_value(v.value),
        v.symbolic,
        v.rule.id(),
        evidence_fields(&v.evidence),
    )
}

pub fn spectrum_record(ctx: &GraphContext, values: &[f64]) -> String {
    let rendered: Vec<String> = values.iter().map(|v| fmt_value(*v)).collect();
    format!(
        "kind=spectrum graph6={} n={} name={} count={} values={}",
        ctx.graph6,
        ctx.n,
        ctx.name,
        values.len(),
        rendered.join(" "),
    )
}

/// CSV projection shared by all record kinds:
/// kind,name,n,graph6,value,slack,equality (empty fields where a column
/// does not apply).
pub fn csv_header() -> &'static str {
    "kind,name,n,graph6,value,slack,equality"
}

pub fn csv_row(
    kind: &str,
    name: &str,
    n: usize,
    graph6: &str,
    value: Option<f64>,
    slack: Option<f64>,
    equality: Option<bool>,
) -> String {
    format!(
        "{kind},{name},{n},{graph6},{},{},{}",
        value.map(fmt_value).unwrap_or_default(),
        slack.map(fmt_value).unwrap_or_default(),
        equality.map(|b| b.to_string()).unwrap_or_default(),
    )
}
