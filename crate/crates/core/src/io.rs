//! JSON definition files.
//!
//! ```json
//! {
//!   "name": "Z4",
//!   "size": 4,
//!   "add": [[0,1,2,3], ...],
//!   "hmul": [[[0],[0],[0],[0]], ...]
//! }
//! ```
//!
//! Optional fields: `labels` (one display label per element), and for
//! derived hyperrings `construction`, `source` and `details`.
//! [`to_json`] writes a fixed layout, so saving a loaded canonical file
//! reproduces it byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::ring::{HyperRing, Provenance, RawTables, ValidateOptions};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct DefinitionFile {
    name: String,
    size: usize,
    add: Vec<Vec<usize>>,
    hmul: Vec<Vec<Vec<usize>>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(default)]
    construction: Option<String>,
    #[serde(default)]
    source: Option<String>,
    #[serde(default)]
    details: Option<Map<String, Value>>,
}

/// A parsed definition: tables, optional labels and provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Definition {
    pub raw: RawTables,
    pub labels: Option<Vec<String>>,
    pub provenance: Provenance,
}

impl Definition {
    /// Validates the tables. Hypermatrix rings are exempt from the
    /// commutativity law; everything else must satisfy it.
    pub fn validate(&self) -> Result<HyperRing> {
        let opts = ValidateOptions {
            require_commutative: !matches!(self.provenance, Provenance::Matrix { .. }),
        };
        Ok(HyperRing::validate_with(&self.raw, opts)?.with_provenance(self.provenance.clone()))
    }
}

/// Parses a definition. If the additive identity is not element 0, elements
/// 0 and the identity are swapped (labels follow).
pub fn parse_definition(text: &str) -> Result<Definition> {
    let file: DefinitionFile =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let n = file.size;
    if file.add.len() != n {
        return Err(Error::Format(format!(
            "field \"add\" has {} rows but \"size\" is {n}",
            file.add.len()
        )));
    }
    if file.hmul.len() != n {
        return Err(Error::Format(format!(
            "field \"hmul\" has {} rows but \"size\" is {n}",
            file.hmul.len()
        )));
    }
    if let Some(labels) = &file.labels {
        if labels.len() != n {
            return Err(Error::Format(format!(
                "field \"labels\" has {} entries but \"size\" is {n}",
                labels.len()
            )));
        }
    }
    let provenance = provenance_from_fields(file.construction, file.source, file.details)?;
    let mut raw = RawTables {
        name: file.name,
        add: file.add,
        hmul: file.hmul,
    };
    let mut labels = file.labels;
    if let Some(e) = additive_identity(&raw) {
        if e != 0 {
            raw = swap_elements(&raw, 0, e);
            if let Some(l) = labels.as_mut() {
                l.swap(0, e);
            }
        }
    }
    Ok(Definition {
        raw,
        labels,
        provenance,
    })
}

fn additive_identity(raw: &RawTables) -> Option<usize> {
    let n = raw.add.len();
    (0..n).find(|&e| {
        raw.add[e].len() == n && (0..n).all(|a| raw.add[e][a] == a && raw.add[a].get(e) == Some(&a))
    })
}

fn swap_elements(raw: &RawTables, i: usize, j: usize) -> RawTables {
    let n = raw.add.len();
    let p = |x: usize| {
        if x == i {
            j
        } else if x == j {
            i
        } else {
            x
        }
    };
    let add = (0..n)
        .map(|a| (0..n).map(|b| p(raw.add[p(a)][p(b)])).collect())
        .collect();
    let hmul = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let mut cell: Vec<usize> = raw.hmul[p(a)][p(b)].iter().map(|&x| p(x)).collect();
                    cell.sort_unstable();
                    cell
                })
                .collect()
        })
        .collect();
    RawTables {
        name: raw.name.clone(),
        add,
        hmul,
    }
}

fn provenance_from_fields(
    construction: Option<String>,
    source: Option<String>,
    details: Option<Map<String, Value>>,
) -> Result<Provenance> {
    let Some(construction) = construction else {
        if source.is_some() || details.is_some() {
            return Err(Error::Format("\"source\"/\"details\" given without \"construction\"".into()));
        }
        return Ok(Provenance::Input);
    };
    let mut obj = details.unwrap_or_default();
    obj.insert("construction".into(), Value::String(construction));
    if let Some(s) = source {
        obj.insert("source".into(), Value::String(s));
    }
    serde_json::from_value(Value::Object(obj)).map_err(|e| Error::Format(format!("provenance: {e}")))
}

pub fn load(path: &Path) -> Result<Definition> {
    let text = std::fs::read_to_string(path)?;
    parse_definition(&text).map_err(|e| match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Loads and validates a hyperring.
pub fn load_ring(path: &Path) -> Result<HyperRing> {
    load(path)?.validate()
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn int_list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

/// Canonical serialization of a hyperring.
pub fn to_json(ring: &HyperRing, labels: Option<&[String]>) -> String {
    let raw = ring.to_raw();
    let n = ring.size();
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"name\": {},", json_str(&raw.name));
    let _ = writeln!(out, "  \"size\": {n},");
    if let Some(labels) = labels {
        let items: Vec<String> = labels.iter().map(|l| json_str(l)).collect();
        let _ = writeln!(out, "  \"labels\": [{}],", items.join(","));
    }
    if let Ok(Value::Object(mut obj)) = serde_json::to_value(ring.provenance()) {
        if let Some(Value::String(c)) = obj.remove("construction") {
            if c != "input" {
                let _ = writeln!(out, "  \"construction\": {},", json_str(&c));
                if let Some(Value::String(s)) = obj.remove("source") {
                    let _ = writeln!(out, "  \"source\": {},", json_str(&s));
                }
                if !obj.is_empty() {
                    let details = serde_json::to_string(&Value::Object(obj)).expect("details serialize");
                    let _ = writeln!(out, "  \"details\": {details},");
                }
            }
        }
    }
    out.push_str("  \"add\": [\n");
    for (a, row) in raw.add.iter().enumerate() {
        let sep = if a + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    {}{sep}", int_list(row));
    }
    out.push_str("  ],\n  \"hmul\": [\n");
    for (a, row) in raw.hmul.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| int_list(c)).collect();
        let sep = if a + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", cells.join(","));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn save(ring: &HyperRing, labels: Option<&[String]>, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(ring, labels))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::quotient;
    use crate::ring::{ordinary_zn, zn_with_a};
    use crate::ElementSubset;

    #[test]
    fn round_trip_is_byte_identical() {
        let r = HyperRing::validate(&zn_with_a(6, &[5, 7])).unwrap();
        let text = to_json(&r, None);
        let back = parse_definition(&text).unwrap().validate().unwrap();
        assert!(back.same_tables(&r));
        assert_eq!(to_json(&back, None), text);
    }

    #[test]
    fn provenance_survives_the_round_trip() {
        let r = HyperRing::validate(&ordinary_zn(4)).unwrap();
        let j: ElementSubset = [0, 2].into_iter().collect();
        let q = quotient(&r, &j).unwrap().ring;
        let text = to_json(&q, None);
        assert!(text.contains("\"construction\": \"quotient\""));
        assert!(text.contains("\"source\": \"Z4\""));
        let def = parse_definition(&text).unwrap();
        assert_eq!(&def.provenance, q.provenance());
        assert_eq!(to_json(&def.validate().unwrap(), None), text);
    }

    #[test]
    fn labels_round_trip() {
        let r = HyperRing::validate(&ordinary_zn(2)).unwrap();
        let labels = vec!["zero".to_string(), "one".to_string()];
        let text = to_json(&r, Some(&labels));
        let def = parse_definition(&text).unwrap();
        assert_eq!(def.labels.as_deref(), Some(&labels[..]));
    }

    #[test]
    fn additive_identity_is_moved_to_zero() {
        // Z2 written with the identity as element 1.
        let text = r#"{"name":"swapped","size":2,"labels":["a","b"],
            "add":[[1,0],[0,1]],"hmul":[[[0],[1]],[[1],[1]]]}"#;
        let def = parse_definition(text).unwrap();
        assert_eq!(def.raw.add, vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(def.raw.hmul[1][1], vec![1]);
        assert_eq!(def.labels.clone().unwrap(), vec!["b", "a"]);
        assert!(def.validate().is_ok());
    }

    #[test]
    fn diagnostics_name_the_problem() {
        let err = parse_definition(r#"{"name":"x","size":2,"add":[[0,1]],"hmul":[]}"#).unwrap_err();
        assert!(err.to_string().contains("\"add\" has 1 rows"), "{err}");
        let err = parse_definition("{\"name\":\"x\",\n\"size\":\"two\"}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let text = r#"{"name":"x","size":2,"add":[[0,1],[1,0]],"hmul":[[[0],[0]],[[0],[5]]]}"#;
        let err = parse_definition(text).unwrap().validate().unwrap_err();
        assert!(err.to_string().contains("hmul[1][1]"), "{err}");
    }
}
