//! Finite multiplicative hyperrings: raw tables, validation and element-level
//! predicates.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Axiom, AxiomViolation, Error, Result};
use crate::subset::{ElementSubset, MAX_CARRIER};

/// Unvalidated tables, as read from a definition file or produced by a
/// generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTables {
    pub name: String,
    pub add: Vec<Vec<usize>>,
    pub hmul: Vec<Vec<Vec<usize>>>,
}

/// Where a hyperring came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "construction", rename_all = "kebab-case")]
pub enum Provenance {
    #[default]
    Input,
    Generated {
        generator: String,
        params: String,
    },
    Quotient {
        source: String,
        ideal: ElementSubset,
    },
    /// Element `(a, b)` of the product is encoded as `a * right_size + b`.
    Product {
        source: String,
        left: String,
        right: String,
        left_size: usize,
        right_size: usize,
    },
    Matrix {
        source: String,
        dim: usize,
    },
    Subring {
        source: String,
        subset: ElementSubset,
    },
    GammaStar {
        source: String,
    },
}

/// Options controlling which laws [`HyperRing::validate`] insists on.
#[derive(Debug, Clone, Copy)]
pub struct ValidateOptions {
    /// Reject tables whose hyperoperation is not commutative.
    pub require_commutative: bool,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        Self {
            require_commutative: true,
        }
    }
}

/// A validated, immutable finite multiplicative hyperring.
///
/// Elements are the indices `0..size`; `0` is the additive identity.
#[derive(Debug, Clone)]
pub struct HyperRing {
    name: String,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    hmul: Vec<ElementSubset>,
    identity: Option<usize>,
    scalar_identity: bool,
    commutative: bool,
    provenance: Provenance,
}

/// Element-level flags computed by [`HyperRing::element_predicates`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementFlags {
    pub zero_divisor: bool,
    pub nilpotent: bool,
    pub regular_vnr: bool,
    pub nzd: bool,
    /// `None` when the hyperring has no identity.
    pub invertible: Option<bool>,
    pub idempotent: bool,
    pub idempotent_strict: bool,
}

/// Ring-level flags computed by [`HyperRing::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RingFlags {
    pub integral_hyperdomain: bool,
    pub reduced: bool,
    pub regular_ring: bool,
    pub invertible_ring: bool,
}

impl HyperRing {
    /// Validates raw tables with the default options (commutative
    /// hyperoperation required).
    pub fn validate(raw: &RawTables) -> Result<Self> {
        Self::validate_with(raw, ValidateOptions::default())
    }

    pub fn validate_with(raw: &RawTables, opts: ValidateOptions) -> Result<Self> {
        let n = raw.add.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("carrier must be nonempty".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CapExceeded {
                cap: MAX_CARRIER,
                size: n,
            });
        }
        if raw.hmul.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "add has {n} rows but hmul has {}",
                raw.hmul.len()
            )));
        }
        for (a, row) in raw.add.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "add row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::IndexOutOfRange {
                    field: format!("add[{a}]"),
                    index: bad,
                    size: n,
                });
            }
        }
        let mut hmul = Vec::with_capacity(n * n);
        for (a, row) in raw.hmul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "hmul row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, cell) in row.iter().enumerate() {
                if let Some(&bad) = cell.iter().find(|&&x| x >= n) {
                    return Err(Error::IndexOutOfRange {
                        field: format!("hmul[{a}][{b}]"),
                        index: bad,
                        size: n,
                    });
                }
                if cell.is_empty() {
                    return Err(Error::EmptyHyperproduct(a, b));
                }
                hmul.push(cell.iter().copied().collect::<ElementSubset>());
            }
        }
        let add: Vec<usize> = raw.add.iter().flatten().copied().collect();

        let violations = check_axioms(n, &add, &hmul, opts);
        if !violations.is_empty() {
            return Err(Error::AxiomViolations(violations));
        }

        let neg = (0..n)
            .map(|a| (0..n).find(|&b| add[a * n + b] == 0).expect("inverse checked"))
            .collect();
        let commutative = (0..n).all(|a| (0..n).all(|b| hmul[a * n + b] == hmul[b * n + a]));
        let mut ring = HyperRing {
            name: raw.name.clone(),
            size: n,
            add,
            neg,
            hmul,
            identity: None,
            scalar_identity: false,
            commutative,
            provenance: Provenance::Input,
        };
        ring.detect_identity();
        Ok(ring)
    }

    fn detect_identity(&mut self) {
        let n = self.size;
        let scalar = (0..n).find(|&e| {
            (0..n).all(|a| {
                self.mul(a, e) == ElementSubset::singleton(a)
                    && self.mul(e, a) == ElementSubset::singleton(a)
            })
        });
        if let Some(e) = scalar {
            self.identity = Some(e);
            self.scalar_identity = true;
            return;
        }
        self.identity =
            (0..n).find(|&e| (0..n).all(|a| self.mul(a, e).contains(a) && self.mul(e, a).contains(a)));
        self.scalar_identity = false;
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The least identity element (`a ∈ a o e` for all `a`), if any.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    /// All identity elements in increasing order.
    pub fn identities(&self) -> Vec<usize> {
        let n = self.size;
        (0..n)
            .filter(|&e| (0..n).all(|a| self.mul(a, e).contains(a) && self.mul(e, a).contains(a)))
            .collect()
    }

    /// Whether the identity satisfies `a o e = {a}` for every `a`.
    pub fn has_scalar_identity(&self) -> bool {
        self.scalar_identity
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn full(&self) -> ElementSubset {
        ElementSubset::full(self.size)
    }

    pub fn zero_set(&self) -> ElementSubset {
        ElementSubset::singleton(0)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    /// The hyperproduct `a o b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> ElementSubset {
        self.hmul[a * self.size + b]
    }

    /// `A o B`, the union of all `a o b` with `a ∈ A`, `b ∈ B`.
    pub fn hprod(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let mut out = ElementSubset::EMPTY;
        for x in a {
            for y in b {
                out.union_with(&self.mul(x, y));
            }
        }
        out
    }

    /// `A + B = {a + b}`.
    pub fn set_sum(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let mut out = ElementSubset::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    pub fn set_neg(&self, a: &ElementSubset) -> ElementSubset {
        a.iter().map(|x| self.neg(x)).collect()
    }

    /// `x^n` for `n ≥ 1`, with `x^1 = {x}` and `x^{k+1} = x^k o x`.
    pub fn power(&self, x: usize, n: usize) -> ElementSubset {
        assert!(n >= 1, "exponent must be at least 1");
        let xs = ElementSubset::singleton(x);
        let mut p = xs;
        for _ in 1..n {
            p = self.hprod(&p, &xs);
        }
        p
    }

    /// The distinct powers `x^1, x^2, …` up to the first repetition.
    ///
    /// The power sequence is deterministic, so once a subset repeats the
    /// sequence cycles; the returned list therefore contains every subset
    /// that ever occurs as a power of `x`.
    pub fn distinct_powers(&self, x: usize) -> Vec<ElementSubset> {
        let xs = ElementSubset::singleton(x);
        let mut seen: HashMap<ElementSubset, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut p = xs;
        while seen.insert(p, ()).is_none() {
            out.push(p);
            p = self.hprod(&p, &xs);
        }
        out
    }

    /// `ann(x) = {y : x o y = {0}}`.
    pub fn ann(&self, x: usize) -> ElementSubset {
        let zero = self.zero_set();
        (0..self.size).filter(|&y| self.mul(x, y) == zero).collect()
    }

    pub fn is_zero_divisor(&self, x: usize) -> bool {
        let zero = self.zero_set();
        (1..self.size).any(|y| self.mul(x, y) == zero)
    }

    /// `x^n = {0}` for some `n`.
    pub fn is_nilpotent(&self, x: usize) -> bool {
        let zero = self.zero_set();
        self.distinct_powers(x).contains(&zero)
    }

    /// Von Neumann regularity: `x ∈ x² o y` for some `y`.
    pub fn is_regular_vnr(&self, x: usize) -> bool {
        let sq = self.mul(x, x);
        (0..self.size).any(|y| self.hprod(&sq, &ElementSubset::singleton(y)).contains(x))
    }

    /// Non-zero-divisor: `ann(x) = {0}`.
    pub fn is_nzd(&self, x: usize) -> bool {
        self.ann(x) == self.zero_set()
    }

    /// `e ∈ x o y` for some `y`, where `e` is the least identity.
    pub fn is_invertible(&self, x: usize) -> Result<bool> {
        let e = self.identity.ok_or(Error::NoIdentity)?;
        Ok((0..self.size).any(|y| self.mul(x, y).contains(e)))
    }

    /// Weak idempotence: `x ∈ x o x`.
    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x).contains(x)
    }

    /// Strict idempotence: `x o x = {x}`.
    pub fn is_idempotent_strict(&self, x: usize) -> bool {
        self.mul(x, x) == ElementSubset::singleton(x)
    }

    pub fn element_predicates(&self, x: usize) -> ElementFlags {
        ElementFlags {
            zero_divisor: self.is_zero_divisor(x),
            nilpotent: self.is_nilpotent(x),
            regular_vnr: self.is_regular_vnr(x),
            nzd: self.is_nzd(x),
            invertible: self.is_invertible(x).ok(),
            idempotent: self.is_idempotent(x),
            idempotent_strict: self.is_idempotent_strict(x),
        }
    }

    pub fn is_integral_hyperdomain(&self) -> bool {
        let n = self.size;
        (1..n).all(|x| (1..n).all(|y| !self.mul(x, y).contains(0)))
    }

    /// No nonzero element has a power equal to `{0}`.
    pub fn is_reduced(&self) -> bool {
        (1..self.size).all(|x| !self.is_nilpotent(x))
    }

    /// Every nonzero element is invertible. `0` is excluded because
    /// `0 o y = {0}` never contains a nonzero identity.
    pub fn is_invertible_ring(&self) -> bool {
        self.identity.is_some() && (1..self.size).all(|x| self.is_invertible(x).unwrap_or(false))
    }

    pub fn classify(&self) -> RingFlags {
        RingFlags {
            integral_hyperdomain: self.is_integral_hyperdomain(),
            reduced: self.is_reduced(),
            regular_ring: (0..self.size).all(|x| self.is_regular_vnr(x)),
            invertible_ring: self.is_invertible_ring(),
        }
    }

    /// Zero divisors `Z(R)`; includes `0` whenever some `y ≠ 0` has `0 o y = {0}`.
    pub fn zero_divisors(&self) -> ElementSubset {
        (0..self.size).filter(|&x| self.is_zero_divisor(x)).collect()
    }

    pub fn nzd_set(&self) -> ElementSubset {
        (0..self.size).filter(|&x| self.is_nzd(x)).collect()
    }

    /// `V(R)`, the von Neumann regular elements.
    pub fn vnr_set(&self) -> ElementSubset {
        (0..self.size).filter(|&x| self.is_regular_vnr(x)).collect()
    }

    pub fn nilpotents(&self) -> ElementSubset {
        (0..self.size).filter(|&x| self.is_nilpotent(x)).collect()
    }

    /// The tables in raw form, for serialization and reconstruction.
    pub fn to_raw(&self) -> RawTables {
        let n = self.size;
        RawTables {
            name: self.name.clone(),
            add: (0..n).map(|a| (0..n).map(|b| self.add(a, b)).collect()).collect(),
            hmul: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b).to_vec()).collect())
                .collect(),
        }
    }

    /// Same tables, ignoring names and provenance.
    pub fn same_tables(&self, other: &HyperRing) -> bool {
        self.size == other.size && self.add == other.add && self.hmul == other.hmul
    }
}

fn sum_of(n: usize, add: &[usize], a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
    let mut out = ElementSubset::EMPTY;
    for x in a {
        for y in b {
            out.insert(add[x * n + y]);
        }
    }
    out
}

fn prod_of(n: usize, hmul: &[ElementSubset], a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
    let mut out = ElementSubset::EMPTY;
    for x in a {
        for y in b {
            out.union_with(&hmul[x * n + y]);
        }
    }
    out
}

/// Exhaustively checks every law, returning one violation per failed law with
/// the lexicographically least witness.
fn check_axioms(
    n: usize,
    add: &[usize],
    hmul: &[ElementSubset],
    opts: ValidateOptions,
) -> Vec<AxiomViolation> {
    let mut found: Vec<AxiomViolation> = Vec::new();
    let mut record = |axiom: Axiom, witness: [usize; 3]| {
        if !found.iter().any(|v| v.axiom == axiom) {
            found.push(AxiomViolation { axiom, witness });
        }
    };

    if let Some(a) = (0..n).find(|&a| add[a] != a || add[a * n] != a) {
        record(Axiom::AddIdentity, [a, 0, 0]);
    }
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| add[a * n + b] == 0 && add[b * n + a] == 0)) {
        record(Axiom::AddInverse, [a, 0, 0]);
    }
    'comm: for a in 0..n {
        for b in 0..n {
            if add[a * n + b] != add[b * n + a] {
                record(Axiom::AddCommutative, [a, b, 0]);
                break 'comm;
            }
        }
    }
    'assoc: for a in 0..n {
        for b in 0..n {
            let ab = add[a * n + b];
            for c in 0..n {
                if add[ab * n + c] != add[a * n + add[b * n + c]] {
                    record(Axiom::AddAssociative, [a, b, c]);
                    break 'assoc;
                }
            }
        }
    }
    if opts.require_commutative {
        'hcomm: for a in 0..n {
            for b in 0..n {
                if hmul[a * n + b] != hmul[b * n + a] {
                    record(Axiom::HmulCommutative, [a, b, 0]);
                    break 'hcomm;
                }
            }
        }
    }

    // Sign compatibility needs additive inverses; skip it if they are missing.
    let neg: Option<Vec<usize>> = (0..n)
        .map(|a| (0..n).find(|&b| add[a * n + b] == 0))
        .collect();

    // The triple-quantified laws dominate the cost; scan the outer variable
    // in parallel and keep the least witness.
    let triple = |axiom: Axiom| -> Option<[usize; 3]> {
        (0..n).into_par_iter().find_map_first(|a| {
            let sa = ElementSubset::singleton(a);
            for b in 0..n {
                for c in 0..n {
                    let sc = ElementSubset::singleton(c);
                    let ok = match axiom {
                        Axiom::HmulAssociative => {
                            let left = prod_of(n, hmul, &hmul[a * n + b], &sc);
                            let right = prod_of(n, hmul, &sa, &hmul[b * n + c]);
                            left == right
                        }
                        Axiom::DistributiveLeft => {
                            let lhs = hmul[a * n + add[b * n + c]];
                            let rhs = sum_of(n, add, &hmul[a * n + b], &hmul[a * n + c]);
                            lhs.is_subset(&rhs)
                        }
                        Axiom::DistributiveRight => {
                            let lhs = hmul[add[b * n + c] * n + a];
                            let rhs = sum_of(n, add, &hmul[b * n + a], &hmul[c * n + a]);
                            lhs.is_subset(&rhs)
                        }
                        _ => unreachable!(),
                    };
                    if !ok {
                        return Some([a, b, c]);
                    }
                }
            }
            None
        })
    };
    for axiom in [
        Axiom::HmulAssociative,
        Axiom::DistributiveLeft,
        Axiom::DistributiveRight,
    ] {
        if let Some(w) = triple(axiom) {
            record(axiom, w);
        }
    }

    if let Some(neg) = neg {
        'sign: for a in 0..n {
            for b in 0..n {
                let ab = hmul[a * n + b];
                let neg_ab: ElementSubset = ab.iter().map(|x| neg[x]).collect();
                if hmul[a * n + neg[b]] != neg_ab || hmul[neg[a] * n + b] != neg_ab {
                    record(Axiom::SignCompatibility, [a, b, 0]);
                    break 'sign;
                }
            }
        }
    }

    found.sort_by_key(|v| v.axiom);
    found
}

/// Tables of an ordinary ring `Z_n` with singleton products.
pub fn ordinary_zn(n: usize) -> RawTables {
    RawTables {
        name: format!("Z{n}"),
        add: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        hmul: (0..n)
            .map(|a| (0..n).map(|b| vec![(a * b) % n]).collect())
            .collect(),
    }
}

/// Tables of `Z_n` with `x o y = {x·a·y mod n : a ∈ A}`.
pub fn zn_with_a(n: usize, a_set: &[usize]) -> RawTables {
    let label = a_set
        .iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",");
    RawTables {
        name: format!("Z{n}_A{{{label}}}"),
        add: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        hmul: (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let mut cell: Vec<usize> = a_set.iter().map(|a| (x * (a % n) * y) % n).collect();
                        cell.sort_unstable();
                        cell.dedup();
                        cell
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Tables of `Z_n` with `x o y = R` for nonzero `x, y` and `{0}` otherwise.
pub fn zn_total(n: usize) -> RawTables {
    RawTables {
        name: format!("Z{n}_total"),
        add: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        hmul: (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| if x == 0 || y == 0 { vec![0] } else { (0..n).collect() })
                    .collect()
            })
            .collect(),
    }
}
