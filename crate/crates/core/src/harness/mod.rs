//! Registry of propositions about r- and n-hyperideals, checked exhaustively
//! over finite hyperrings.
//!
//! Each entry is run once per combination of the reading flags it is
//! sensitive to. A counterexample under the default readings is a failure;
//! one that only appears under another reading is reported as
//! reading-sensitive.

mod checks;
mod registry;
mod report;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::analysis::RingAnalysis;
use crate::classify::{PrimeMode, RegularNotion};
use crate::construct::{GammaReading, DEFAULT_GAMMA_CAP};
use crate::error::{Error, Result};
use crate::ideal::DEFAULT_ENUMERATION_CAP;
use crate::ring::HyperRing;

pub use registry::{registry, TheoremEntry};
pub use report::{render_table, summarize, Summary};

/// How `I o J` (and sums) are read when they appear in a statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ProductReading {
    /// The elementwise hyperproduct.
    #[default]
    Raw,
    /// The hyperideal generated by the elementwise hyperproduct.
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum IdempotentReading {
    /// `s ∈ s o s`.
    #[default]
    Weak,
    /// `s o s = {s}`.
    Strict,
}

/// Whether the standing hypotheses (an identity exists and every hyperideal
/// is a C-hyperideal) gate applicability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Standing {
    #[default]
    Enforced,
    Ignored,
}

/// Where quantified subsets come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SubsetFamily {
    /// Complements of hyperideals plus unit-generated sets.
    #[default]
    Structured,
    /// Every subset (small rings only).
    Exhaustive,
}

/// One value per reading flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Reading {
    pub regular: RegularNotion,
    pub product: ProductReading,
    pub prime: PrimeMode,
    pub idempotent: IdempotentReading,
    pub standing: Standing,
    pub subsets: SubsetFamily,
    pub gamma: GammaReading,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Regular,
    Product,
    Prime,
    Idempotent,
    Standing,
    Subsets,
    Gamma,
}

impl Flag {
    pub const ALL: [Flag; 7] = [
        Flag::Regular,
        Flag::Product,
        Flag::Prime,
        Flag::Idempotent,
        Flag::Standing,
        Flag::Subsets,
        Flag::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flag::Regular => "regular",
            Flag::Product => "product",
            Flag::Prime => "prime",
            Flag::Idempotent => "idempotent",
            Flag::Standing => "standing",
            Flag::Subsets => "subsets",
            Flag::Gamma => "gamma",
        }
    }

    fn values(self) -> &'static [&'static str] {
        match self {
            Flag::Regular => &["nzd", "vnr"],
            Flag::Product => &["raw", "closed"],
            Flag::Prime => &["relaxed", "strict"],
            Flag::Idempotent => &["weak", "strict"],
            Flag::Standing => &["enforced", "ignored"],
            Flag::Subsets => &["structured", "exhaustive"],
            Flag::Gamma => &["repetition", "distinct-factors"],
        }
    }
}

fn text<T: Serialize>(v: T) -> String {
    match serde_json::to_value(v) {
        Ok(Value::String(s)) => s,
        _ => unreachable!("reading values serialize as strings"),
    }
}

impl Reading {
    pub fn get(&self, flag: Flag) -> String {
        match flag {
            Flag::Regular => text(self.regular),
            Flag::Product => text(self.product),
            Flag::Prime => text(self.prime),
            Flag::Idempotent => text(self.idempotent),
            Flag::Standing => text(self.standing),
            Flag::Subsets => text(self.subsets),
            Flag::Gamma => text(self.gamma),
        }
    }

    pub fn set(&mut self, flag: Flag, value: &str) -> Result<()> {
        let v = Value::String(value.to_string());
        let bad = |_| Error::Format(format!("unknown value {value:?} for reading flag {}", flag.name()));
        match flag {
            Flag::Regular => self.regular = serde_json::from_value(v).map_err(bad)?,
            Flag::Product => self.product = serde_json::from_value(v).map_err(bad)?,
            Flag::Prime => self.prime = serde_json::from_value(v).map_err(bad)?,
            Flag::Idempotent => self.idempotent = serde_json::from_value(v).map_err(bad)?,
            Flag::Standing => self.standing = serde_json::from_value(v).map_err(bad)?,
            Flag::Subsets => self.subsets = serde_json::from_value(v).map_err(bad)?,
            Flag::Gamma => self.gamma = serde_json::from_value(v).map_err(bad)?,
        }
        Ok(())
    }

    /// Parses `flag=value,flag=value` on top of the defaults.
    pub fn parse(spec: &str) -> Result<Reading> {
        let mut r = Reading::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("reading override {part:?} is not flag=value")))?;
            let flag = Flag::ALL
                .into_iter()
                .find(|f| f.name() == k.trim())
                .ok_or_else(|| Error::Format(format!("unknown reading flag {k:?}")))?;
            r.set(flag, v.trim())?;
        }
        Ok(r)
    }

    /// Values of `flags`, keyed by flag name.
    pub fn describe(&self, flags: &[Flag]) -> BTreeMap<String, String> {
        flags.iter().map(|f| (f.name().to_string(), self.get(*f))).collect()
    }

    /// Every combination of values of `flags`, starting from `base`; the
    /// first element is `base` itself.
    pub fn combinations(base: Reading, flags: &[Flag]) -> Vec<Reading> {
        let mut out = vec![base];
        for &flag in flags {
            let mut next = Vec::new();
            for r in &out {
                for v in flag.values() {
                    let mut r2 = *r;
                    r2.set(flag, v).expect("listed values parse");
                    if !next.contains(&r2) {
                        next.push(r2);
                    }
                }
            }
            out = next;
        }
        out.sort_by_key(|r| flags.iter().filter(|f| r.get(**f) != base.get(**f)).count());
        out
    }
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    pub enumeration: usize,
    /// Largest `|R1|·|R2|` searched for good homomorphisms.
    pub homomorphism: usize,
    pub gamma: usize,
    pub matrix: usize,
    /// Largest carrier for which exhaustive subset families are used.
    pub exhaustive_subsets: usize,
    /// Largest number of hyperideals in a cover.
    pub cover: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            homomorphism: 64,
            gamma: DEFAULT_GAMMA_CAP,
            matrix: 16,
            exhaustive_subsets: 8,
            cover: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Counterexample,
    NotApplicable,
}

/// Result of one (theorem, ring, reading) cell.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremVerdict {
    pub theorem: String,
    pub ring: String,
    pub status: Status,
    /// Values of the flags this theorem is sensitive to.
    pub reading: BTreeMap<String, String>,
    pub default_reading: bool,
    /// A counterexample found only under a non-default reading.
    pub reading_sensitive: bool,
    /// Number of quantifier instances checked.
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// The counterexample was reproduced on freshly recomputed data.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reverified: Option<bool>,
    #[serde(skip)]
    pub wall_time: Duration,
}

/// Outcome of a check function.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Holds(usize),
    Counterexample(Value),
    NotApplicable(String),
}

/// Everything a check can look at.
pub struct Ctx<'a, 'r> {
    pub a: &'a RingAnalysis<'r>,
    /// Analyses of every corpus member (targets for homomorphisms).
    pub corpus: &'a [RingAnalysis<'r>],
    pub caps: &'a Caps,
}

impl Ctx<'_, '_> {
    pub fn ring(&self) -> &HyperRing {
        self.a.ring
    }
}

/// Ring-level preconditions common to the whole registry.
fn standing_reason(a: &RingAnalysis, reading: &Reading) -> Option<String> {
    if !a.ring.is_commutative() {
        return Some("noncommutative hyperoperation".into());
    }
    if reading.standing == Standing::Enforced {
        if a.ring.identity().is_none() {
            return Some("no identity".into());
        }
        if !a.all_c() {
            return Some("some hyperideal is not a C-hyperideal".into());
        }
    }
    None
}

fn evaluate(entry: &TheoremEntry, ctx: &Ctx, reading: &Reading) -> Outcome {
    if let Some(reason) = standing_reason(ctx.a, reading) {
        return Outcome::NotApplicable(reason);
    }
    if entry.needs_identity && ctx.ring().identity().is_none() {
        return Outcome::NotApplicable("no identity".into());
    }
    (entry.check)(ctx, reading)
}

/// `Instant::now` panics on wasm32-unknown-unknown, so cells are untimed there.
fn clock() -> Option<Instant> {
    if cfg!(target_arch = "wasm32") {
        None
    } else {
        Some(Instant::now())
    }
}

/// Runs one entry on one ring under one reading.
pub fn run_cell(
    entry: &TheoremEntry,
    analysis: Option<&RingAnalysis>,
    ring: &HyperRing,
    corpus: &[RingAnalysis],
    caps: &Caps,
    reading: &Reading,
    default: &Reading,
) -> TheoremVerdict {
    let start = clock();
    let is_default = reading.describe(entry.flags) == default.describe(entry.flags);
    let outcome = match analysis {
        None => Outcome::NotApplicable(format!("enumeration cap ({} > {})", ring.size(), caps.enumeration)),
        Some(a) => evaluate(entry, &Ctx { a, corpus, caps }, reading),
    };
    let mut v = TheoremVerdict {
        theorem: entry.id.to_string(),
        ring: ring.name().to_string(),
        status: Status::Holds,
        reading: reading.describe(entry.flags),
        default_reading: is_default,
        reading_sensitive: false,
        instances: 0,
        witness: None,
        reason: None,
        reverified: None,
        wall_time: Duration::ZERO,
    };
    match outcome {
        Outcome::Holds(n) => v.instances = n,
        Outcome::NotApplicable(r) => {
            v.status = Status::NotApplicable;
            v.reason = Some(r);
        }
        Outcome::Counterexample(w) => {
            v.status = Status::Counterexample;
            v.reading_sensitive = !is_default;
            v.reverified = Some(reverify(entry, ring, corpus, caps, reading, &w));
            v.witness = Some(w);
        }
    }
    v.wall_time = start.map(|t| t.elapsed()).unwrap_or_default();
    v
}

/// Recomputes the ring analysis from the tables and reruns the check.
fn reverify(entry: &TheoremEntry, ring: &HyperRing, corpus: &[RingAnalysis], caps: &Caps, reading: &Reading, w: &Value) -> bool {
    let Ok(fresh) = RingAnalysis::new(ring, caps.enumeration) else {
        return false;
    };
    let ctx = Ctx {
        a: &fresh,
        corpus,
        caps,
    };
    evaluate(entry, &ctx, reading) == Outcome::Counterexample(w.clone())
}

/// Runs one entry on one ring under every applicable reading.
pub fn run_theorem(entry: &TheoremEntry, ring: &HyperRing, caps: &Caps) -> Vec<TheoremVerdict> {
    let opts = SuiteOptions {
        caps: *caps,
        ..SuiteOptions::default()
    };
    run_suite(std::slice::from_ref(ring), &[entry.id], &opts).verdicts
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub caps: Caps,
    /// Run only this reading (treated as the default); otherwise every
    /// combination of each entry's flags.
    pub fixed_reading: Option<Reading>,
    /// Stop scheduling further theorems after the first default-reading
    /// counterexample.
    pub fail_fast: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub default_reading: BTreeMap<String, String>,
    pub verdicts: Vec<TheoremVerdict>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &TheoremVerdict> {
        self.verdicts
            .iter()
            .filter(|v| v.status == Status::Counterexample && v.default_reading)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }
}

/// Runs the registry (restricted to `only` when nonempty) over `rings`.
pub fn run_suite(rings: &[HyperRing], only: &[&str], opts: &SuiteOptions) -> SuiteReport {
    let default = opts.fixed_reading.unwrap_or_default();
    let entries: Vec<&TheoremEntry> = registry()
        .iter()
        .filter(|e| only.is_empty() || only.contains(&e.id))
        .collect();
    let analyses: Vec<Option<RingAnalysis>> = rings
        .par_iter()
        .map(|r| RingAnalysis::new(r, opts.caps.enumeration).ok())
        .collect();
    let corpus: Vec<RingAnalysis> = analyses.iter().flatten().cloned().collect();
    let mut verdicts = Vec::new();
    for entry in entries {
        let readings = match opts.fixed_reading {
            Some(r) => vec![r],
            None => Reading::combinations(default, entry.flags),
        };
        let cells: Vec<(usize, Reading)> = (0..rings.len())
            .flat_map(|i| readings.iter().map(move |r| (i, *r)))
            .collect();
        let batch: Vec<TheoremVerdict> = cells
            .par_iter()
            .map(|(i, r)| run_cell(entry, analyses[*i].as_ref(), &rings[*i], &corpus, &opts.caps, r, &default))
            .collect();
        let failed = batch
            .iter()
            .any(|v| v.status == Status::Counterexample && v.default_reading);
        verdicts.extend(batch);
        if failed && opts.fail_fast {
            break;
        }
    }
    SuiteReport {
        default_reading: default.describe(&Flag::ALL),
        verdicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reading_overrides_parse() {
        let r = Reading::parse("regular=vnr, prime=strict").unwrap();
        assert_eq!(r.regular, RegularNotion::Vnr);
        assert_eq!(r.prime, PrimeMode::Strict);
        assert!(Reading::parse("regular=maybe").is_err());
        assert!(Reading::parse("colour=red").is_err());
    }

    #[test]
    fn combinations_start_with_the_base() {
        let c = Reading::combinations(Reading::default(), &[Flag::Regular, Flag::Prime]);
        assert_eq!(c.len(), 4);
        assert_eq!(c[0], Reading::default());
        let none = Reading::combinations(Reading::default(), &[]);
        assert_eq!(none, vec![Reading::default()]);
    }
}
