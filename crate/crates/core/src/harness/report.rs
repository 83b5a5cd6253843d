use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{registry, Status, SuiteReport, TheoremVerdict};

/// Verdict counts for one theorem (or the whole suite).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub holds: usize,
    /// Counterexamples under the default readings.
    pub counterexample: usize,
    pub reading_sensitive: usize,
    pub not_applicable: usize,
}

impl Summary {
    fn add(&mut self, v: &TheoremVerdict) {
        match v.status {
            Status::Holds => self.holds += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::Counterexample if v.reading_sensitive => self.reading_sensitive += 1,
            Status::Counterexample => self.counterexample += 1,
        }
    }
}

/// Per-theorem and total counts.
pub fn summarize(report: &SuiteReport) -> (BTreeMap<String, Summary>, Summary) {
    let mut per = BTreeMap::new();
    let mut total = Summary::default();
    for v in &report.verdicts {
        per.entry(v.theorem.clone()).or_insert_with(Summary::default).add(v);
        total.add(v);
    }
    (per, total)
}

fn reading_text(v: &TheoremVerdict) -> String {
    v.reading
        .iter()
        .map(|(k, val)| format!("{k}={val}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// Human-readable report: header with the default readings, one row per
/// theorem, then every counterexample.
pub fn render_table(report: &SuiteReport) -> String {
    let (per, total) = summarize(report);
    let mut out = String::new();
    let defaults: Vec<String> = report
        .default_reading
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let _ = writeln!(out, "default readings: {}", defaults.join(", "));
    let _ = writeln!(
        out,
        "{:<6} {:<48} {:>6} {:>6} {:>6} {:>6}",
        "id", "name", "holds", "fail", "rsens", "n/a"
    );
    for entry in registry() {
        let Some(s) = per.get(entry.id) else { continue };
        let _ = writeln!(
            out,
            "{:<6} {:<48} {:>6} {:>6} {:>6} {:>6}",
            entry.id, entry.name, s.holds, s.counterexample, s.reading_sensitive, s.not_applicable
        );
    }
    let _ = writeln!(
        out,
        "total: {} holds, {} counterexamples, {} reading-sensitive, {} not applicable",
        total.holds, total.counterexample, total.reading_sensitive, total.not_applicable
    );
    let failures: Vec<&TheoremVerdict> = report
        .verdicts
        .iter()
        .filter(|v| v.status == Status::Counterexample)
        .collect();
    if !failures.is_empty() {
        let _ = writeln!(out, "\ncounterexamples:");
        for v in failures {
            let tag = if v.reading_sensitive { "reading-sensitive" } else { "FAIL" };
            let witness = v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "  [{tag}] {} on {} ({}) reverified={}: {witness}",
                v.theorem,
                v.ring,
                reading_text(v),
                v.reverified.unwrap_or(false)
            );
        }
    }
    out
}
