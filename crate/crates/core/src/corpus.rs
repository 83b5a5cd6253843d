//! Deterministic generation of the instance corpus.
//!
//! Base families are generated in parallel, invalid tables are dropped and
//! logged, identical tables are deduplicated (first name wins), and a single
//! closure pass adds quotients, products and 2×2 hypermatrices of the base
//! hyperrings.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::construct::{direct_product, matrix_hyperring, quotient};
use crate::error::Result;
use crate::ideal::{self, DEFAULT_ENUMERATION_CAP};
use crate::io;
use crate::ring::{ordinary_zn, zn_total, zn_with_a, HyperRing, Provenance, RawTables};

/// Which hyperrings make up a corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    /// `n` values of ordinary `Z_n`.
    pub ordinary: Vec<usize>,
    /// Inclusive range of `n` for the `Z_n`-with-`A` family.
    pub with_a_range: (usize, usize),
    /// `A` sets; a negative entry `-k` stands for `n - k`.
    pub a_sets: Vec<Vec<i64>>,
    /// `n` values of `Z_n` with the total hyperoperation.
    pub total: Vec<usize>,
    /// Add `R/J` for every proper nonzero hyperideal `J` of a base ring.
    pub quotients: bool,
    /// Largest carrier of a product `R1 × R2` of base rings with identity;
    /// 0 disables products.
    pub product_cap: usize,
    /// Largest carrier of `M_2(R)`; 0 disables hypermatrices.
    pub matrix_cap: usize,
    pub enumeration_cap: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            ordinary: (2..=12).collect(),
            with_a_range: (2, 13),
            a_sets: vec![vec![1], vec![5, 7], vec![2, 3], vec![-1, 1]],
            total: (2..=6).collect(),
            quotients: true,
            product_cap: 16,
            matrix_cap: 16,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl CorpusSpec {
    /// `"default"` or a path to a JSON spec.
    pub fn from_arg(arg: &str) -> Result<Self> {
        if arg == "default" {
            return Ok(Self::default());
        }
        let text = std::fs::read_to_string(arg)?;
        Ok(serde_json::from_str(&text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    #[serde(rename = "sha-256")]
    pub sha256: String,
    pub generator: String,
    pub params: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GenerationLog {
    /// `(name, reason)` of tables that failed validation.
    pub rejected: Vec<(String, String)>,
    /// `(name, kept name)` of tables identical to an earlier member.
    pub duplicates: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub rings: Vec<HyperRing>,
    pub log: GenerationLog,
}

impl Corpus {
    pub fn manifest(&self) -> Vec<ManifestEntry> {
        self.rings.iter().map(manifest_entry).collect()
    }

    pub fn get(&self, name: &str) -> Option<&HyperRing> {
        self.rings.iter().find(|r| r.name() == name)
    }
}

pub fn content_hash(ring: &HyperRing) -> String {
    hex::encode(Sha256::digest(io::to_json(ring, None).as_bytes()))
}

pub fn manifest_entry(ring: &HyperRing) -> ManifestEntry {
    let (generator, params) = match ring.provenance() {
        Provenance::Input => ("input".to_string(), String::new()),
        Provenance::Generated { generator, params } => (generator.clone(), params.clone()),
        Provenance::Quotient { source, ideal } => ("quotient".into(), format!("source={source};ideal={ideal}")),
        Provenance::Product { left, right, .. } => ("product".into(), format!("left={left};right={right}")),
        Provenance::Matrix { source, dim } => ("matrix".into(), format!("source={source};dim={dim}")),
        Provenance::Subring { source, subset } => ("subring".into(), format!("source={source};subset={subset}")),
        Provenance::GammaStar { source } => ("gamma-star".into(), format!("source={source}")),
    };
    ManifestEntry {
        name: ring.name().to_string(),
        sha256: content_hash(ring),
        generator,
        params,
    }
}

fn reduce_a(n: usize, a: &[i64]) -> Vec<usize> {
    let n_i = n as i64;
    let mut out: Vec<usize> = a.iter().map(|&x| x.rem_euclid(n_i) as usize).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn base_tables(spec: &CorpusSpec) -> Vec<(RawTables, Provenance)> {
    let mut out = Vec::new();
    for &n in &spec.ordinary {
        out.push((
            ordinary_zn(n),
            Provenance::Generated {
                generator: "ordinary-Zn".into(),
                params: format!("n={n}"),
            },
        ));
    }
    let (lo, hi) = spec.with_a_range;
    for n in lo.max(1)..=hi {
        for a in &spec.a_sets {
            let a = reduce_a(n, a);
            let raw = zn_with_a(n, &a);
            let params = format!("n={n};A={}", raw.name.split_once("_A").map_or("", |p| p.1));
            out.push((
                raw,
                Provenance::Generated {
                    generator: "Zn-with-A".into(),
                    params,
                },
            ));
        }
    }
    for &n in &spec.total {
        out.push((
            zn_total(n),
            Provenance::Generated {
                generator: "total-hyperop".into(),
                params: format!("n={n}"),
            },
        ));
    }
    out
}

struct Collector {
    rings: Vec<HyperRing>,
    log: GenerationLog,
}

impl Collector {
    fn offer(&mut self, ring: HyperRing) {
        if let Some(kept) = self.rings.iter().find(|r| r.same_tables(&ring)) {
            self.log.duplicates.push((ring.name().to_string(), kept.name().to_string()));
        } else if self.rings.iter().any(|r| r.name() == ring.name()) {
            self.log
                .rejected
                .push((ring.name().to_string(), "name already taken".to_string()));
        } else {
            self.rings.push(ring);
        }
    }

    fn offer_result(&mut self, name: String, ring: Result<HyperRing>) {
        match ring {
            Ok(r) => self.offer(r),
            Err(e) => self.log.rejected.push((name, e.to_string())),
        }
    }
}

/// Generates the corpus described by `spec`. The output order depends only
/// on `spec`.
pub fn generate_corpus(spec: &CorpusSpec) -> Corpus {
    let tables = base_tables(spec);
    let validated: Vec<(String, Result<HyperRing>)> = tables
        .par_iter()
        .map(|(raw, prov)| {
            let ring = HyperRing::validate(raw).map(|r| r.with_provenance(prov.clone()));
            (raw.name.clone(), ring)
        })
        .collect();
    let mut c = Collector {
        rings: Vec::new(),
        log: GenerationLog::default(),
    };
    for (name, ring) in validated {
        c.offer_result(name, ring);
    }
    let base: Vec<HyperRing> = c.rings.clone();

    if spec.quotients {
        let quotients: Vec<Vec<(String, Result<HyperRing>)>> = base
            .par_iter()
            .map(|r| {
                let Ok(ideals) = ideal::enumerate_hyperideal_sets(r, spec.enumeration_cap) else {
                    return Vec::new();
                };
                ideals
                    .iter()
                    .filter(|j| **j != r.zero_set() && **j != r.full())
                    .map(|j| (format!("{}/{}", r.name(), j), quotient(r, j).map(|q| q.ring)))
                    .collect()
            })
            .collect();
        for (name, q) in quotients.into_iter().flatten() {
            c.offer_result(name, q);
        }
    }

    if spec.product_cap > 0 {
        let with_identity: Vec<&HyperRing> = base.iter().filter(|r| r.identity().is_some()).collect();
        let mut pairs = Vec::new();
        for (i, a) in with_identity.iter().enumerate() {
            for b in &with_identity[i..] {
                if a.size() * b.size() <= spec.product_cap {
                    pairs.push((*a, *b));
                }
            }
        }
        let products: Vec<(String, Result<HyperRing>)> = pairs
            .par_iter()
            .map(|(a, b)| (format!("{}x{}", a.name(), b.name()), direct_product(a, b)))
            .collect();
        for (name, p) in products {
            c.offer_result(name, p);
        }
    }

    if spec.matrix_cap > 0 {
        for r in &base {
            if r.has_scalar_identity() && r.size().pow(4) <= spec.matrix_cap {
                let name = format!("M2({})", r.name());
                c.offer_result(name, matrix_hyperring(r, 2, spec.matrix_cap).map(|m| m.ring));
            }
        }
    }

    Corpus {
        rings: c.rings,
        log: c.log,
    }
}

/// File name used for a corpus member on disk.
pub fn file_name(name: &str) -> String {
    let safe: String = name
        .chars()
        .map(|ch| match ch {
            'a'..='z' | 'A'..='Z' | '0'..='9' | '-' | '_' => ch,
            _ => '_',
        })
        .collect();
    format!("{safe}.json")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CorpusSpec {
        CorpusSpec {
            ordinary: vec![2, 3, 4],
            with_a_range: (2, 6),
            a_sets: vec![vec![1], vec![5, 7], vec![-1, 1]],
            total: vec![2],
            ..CorpusSpec::default()
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_corpus(&small());
        let b = generate_corpus(&small());
        assert_eq!(a.manifest(), b.manifest());
    }

    #[test]
    fn duplicates_are_logged_not_kept() {
        let c = generate_corpus(&small());
        for (i, r) in c.rings.iter().enumerate() {
            assert!(c.rings[i + 1..].iter().all(|s| !s.same_tables(r)));
        }
        assert!(c.log.duplicates.iter().any(|(d, k)| d == "Z4_A{1}" && k == "Z4"));
    }

    #[test]
    fn closure_adds_products_and_matrices() {
        let c = generate_corpus(&small());
        assert!(c.get("Z2xZ2").is_some());
        assert_eq!(c.get("M2(Z2)").map(|m| m.size()), Some(16));
        // Z4/{0,2} has the tables of Z2.
        assert!(c.get("Z4/{0,2}").is_none());
    }

    #[test]
    fn negative_a_entries_count_from_n() {
        assert_eq!(reduce_a(6, &[-1, 1]), vec![1, 5]);
        assert_eq!(reduce_a(2, &[5, 7]), vec![1]);
    }

    #[test]
    fn spec_round_trips_through_json() {
        let s = CorpusSpec::default();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<CorpusSpec>(&text).unwrap(), s);
        let partial: CorpusSpec = serde_json::from_str(r#"{"ordinary":[2,3]}"#).unwrap();
        assert_eq!(partial.total, s.total);
    }
}
