use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::corpus::Corpus;
use crate::ring::FiniteRing;

use super::{Mutation, TheoremReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusMeta {
    pub name: String,
    pub source: String,
    pub order: usize,
    pub commutative: bool,
    pub identity: bool,
}

/// Everything one `verify` run produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub corpus: Vec<CorpusMeta>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
    pub theorems: Vec<TheoremReport>,
    pub total_violations: usize,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    pub fn new(corpus: &Corpus, mutation: Option<Mutation>, theorems: Vec<TheoremReport>, elapsed_ms: f64) -> Self {
        let meta = corpus
            .entries
            .iter()
            .map(|e| CorpusMeta {
                name: e.name().to_string(),
                source: e.source.clone(),
                order: e.ring.order(),
                commutative: e.ring.is_commutative(),
                identity: e.ring.identity().is_some(),
            })
            .collect();
        let total_violations = theorems.iter().map(|t| t.violations.len()).sum();
        SuiteReport {
            corpus: meta,
            mutation,
            theorems,
            total_violations,
            elapsed_ms,
        }
    }

    /// Pretty JSON; timing values sit on lines of their own.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| theorem | rings checked | rings filtered | instances | violations | status | ms |\n");
        out.push_str("|---|---:|---:|---:|---:|---|---:|\n");
        for t in &self.theorems {
            let status = if !t.violations.is_empty() {
                "FAIL"
            } else if t.vacuous {
                "vacuous"
            } else {
                "ok"
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {:.1} |",
                t.theorem_id,
                t.rings_checked,
                t.rings_filtered,
                t.instances_checked,
                t.violations.len(),
                status,
                t.elapsed_ms
            );
        }
        let notes: Vec<&String> = self.theorems.iter().flat_map(|t| &t.notes).collect();
        if !notes.is_empty() {
            out.push('\n');
            for n in notes {
                let _ = writeln!(out, "- {n}");
            }
        }
        out
    }
}

/// Human-readable trace of one violation. With the ring at hand its tables
/// are printed too.
pub fn explain_violation(v: &Violation, ring: Option<&FiniteRing>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "violation of {} in {}", v.theorem_id, v.ring);
    let _ = writeln!(out, "  statement: {}", v.theorem_id.statement());
    let _ = writeln!(out, "  failed: {}", v.condition);
    if let Some(r) = ring {
        for line in r.render_tables().lines() {
            let _ = writeln!(out, "  {line}");
        }
    }
    for s in &v.sets {
        let _ = writeln!(out, "  {} = {{{}}} in {}", s.name, s.elements.join(","), s.ring);
    }
    for f in &v.facts {
        let _ = writeln!(out, "  {}: {}", f.statement, f.value);
    }
    out
}

/// Traces of every violation in `reports`; empty when there are none.
pub fn explain_report(reports: &[TheoremReport], corpus: &Corpus) -> String {
    reports
        .iter()
        .flat_map(|t| &t.violations)
        .map(|v| explain_violation(v, corpus.find(&v.ring).map(|e| &*e.ring)))
        .collect::<Vec<_>>()
        .join("\n")
}
