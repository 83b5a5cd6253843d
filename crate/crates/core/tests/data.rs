//! Checked-in data files: the default corpus spec, its pinned manifest and
//! the coverage list of the theorem registry.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;

use hyperring::corpus::{generate_corpus, CorpusSpec, ManifestEntry};
use hyperring::harness::registry;

fn data(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn checked_in_spec_is_the_default() {
    let spec: CorpusSpec = serde_json::from_str(&data("default-corpus.json")).unwrap();
    assert_eq!(spec, CorpusSpec::default());
}

#[test]
fn default_corpus_matches_the_pinned_manifest() {
    let pinned: Vec<ManifestEntry> = serde_json::from_str(&data("default-manifest.json")).unwrap();
    let corpus = generate_corpus(&CorpusSpec::default());
    assert_eq!(corpus.manifest(), pinned);
    assert!(corpus.log.rejected.is_empty());
}

#[derive(Deserialize)]
struct Statement {
    section: u32,
    ordinal: u32,
    kind: String,
    registry: Vec<String>,
}

#[derive(Deserialize)]
#[allow(dead_code)]
struct OutOfScope {
    section: u32,
    ordinal: u32,
    part: u32,
    reason: String,
}

#[derive(Deserialize)]
struct Coverage {
    statements: Vec<Statement>,
    out_of_scope: Vec<OutOfScope>,
}

#[test]
fn registry_covers_every_statement() {
    let cov: Coverage = serde_json::from_str(&data("registry.json")).unwrap();
    let mut per_section: BTreeMap<u32, u32> = BTreeMap::new();
    let mut positions = BTreeSet::new();
    for s in &cov.statements {
        assert!(positions.insert((s.section, s.ordinal)), "duplicate {}:{}", s.section, s.ordinal);
        assert!(["theorem", "lemma", "corollary", "remark"].contains(&s.kind.as_str()));
        *per_section.entry(s.section).or_default() += 1;
    }
    assert_eq!(per_section, BTreeMap::from([(3, 8), (4, 9), (5, 17), (6, 8)]));
    for (section, count) in &per_section {
        let ordinals: Vec<u32> = cov.statements.iter().filter(|s| s.section == *section).map(|s| s.ordinal).collect();
        assert_eq!(ordinals, (1..=*count).collect::<Vec<_>>());
    }

    // Every statement is checked by the registry, or excluded as a whole.
    let ids: BTreeSet<&str> = registry().iter().map(|e| e.id).collect();
    assert_eq!(ids.len(), registry().len());
    let mut covered = BTreeSet::new();
    for s in &cov.statements {
        assert!(!s.registry.is_empty(), "{}:{} has no entry", s.section, s.ordinal);
        for id in &s.registry {
            assert!(ids.contains(id.as_str()), "unknown id {id}");
            covered.insert(id.as_str());
        }
    }
    assert_eq!(covered, ids, "registry entries without a statement");
    for o in &cov.out_of_scope {
        assert!(positions.contains(&(o.section, o.ordinal)));
    }
}

#[test]
fn registry_entries_are_well_formed() {
    for e in registry() {
        assert!(!e.statement.is_empty() && !e.name.is_empty(), "{}", e.id);
        assert!(e.flags.contains(&hyperring::harness::Flag::Standing), "{}", e.id);
    }
}
