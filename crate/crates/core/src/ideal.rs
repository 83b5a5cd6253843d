//! Hyperideals and the ideal-arithmetic toolbox.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::classify::{self, PrimeMode};
use crate::error::{Error, Result};
use crate::ring::HyperRing;
use crate::subset::ElementSubset;

/// Default carrier bound for operations that enumerate hyperideals.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// A subset together with its basic hyperideal flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealProfile {
    pub members: ElementSubset,
    pub is_hyperideal: bool,
    pub is_c: bool,
    pub is_proper: bool,
    /// Set when an elementwise construction was not closed and had to be
    /// replaced by the generated hyperideal.
    pub repaired: bool,
}

impl IdealProfile {
    pub fn new(ring: &HyperRing, members: ElementSubset, c_class: &ProductClassC) -> Self {
        let is_hyperideal = !members.is_empty() && is_hyperideal_unchecked(ring, &members);
        IdealProfile {
            members,
            is_hyperideal,
            is_c: is_hyperideal && c_class.is_c_closed(&members),
            is_proper: members != ring.full(),
            repaired: false,
        }
    }
}

fn is_hyperideal_unchecked(ring: &HyperRing, s: &ElementSubset) -> bool {
    for a in s {
        for b in s {
            if !s.contains(ring.sub(a, b)) {
                return false;
            }
        }
    }
    for x in s {
        for r in 0..ring.size() {
            if !ring.mul(r, x).is_subset(s) || !ring.mul(x, r).is_subset(s) {
                return false;
            }
        }
    }
    true
}

/// Closed under subtraction and absorbing: `x ∈ I`, `r ∈ R` ⇒ `r o x ⊆ I`
/// (and `x o r ⊆ I`, which is the same condition for commutative rings).
pub fn is_hyperideal(ring: &HyperRing, s: &ElementSubset) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(is_hyperideal_unchecked(ring, s))
}

/// The smallest hyperideal containing `gens`, by fixpoint iteration.
pub fn generated_ideal(ring: &HyperRing, gens: &ElementSubset) -> ElementSubset {
    let n = ring.size();
    let mut cur = *gens;
    if cur.is_empty() {
        cur.insert(0);
    }
    loop {
        let mut next = cur;
        for a in &cur {
            for b in &cur {
                next.insert(ring.sub(a, b));
                next.insert(ring.add(a, b));
            }
            for r in 0..n {
                next.union_with(&ring.mul(r, a));
                next.union_with(&ring.mul(a, r));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn check_cap(ring: &HyperRing, cap: usize) -> Result<()> {
    if ring.size() > cap {
        Err(Error::CapExceeded {
            cap,
            size: ring.size(),
        })
    } else {
        Ok(())
    }
}

/// All hyperideals of `ring`, in canonical order (cardinality, then mask).
///
/// Every hyperideal is the join of the principal hyperideals of its members,
/// so the lattice is obtained by closing the principal hyperideals under
/// pairwise joins.
pub fn enumerate_hyperideal_sets(ring: &HyperRing, cap: usize) -> Result<Vec<ElementSubset>> {
    check_cap(ring, cap)?;
    let principal: BTreeSet<_> = (0..ring.size())
        .map(|x| generated_ideal(ring, &ElementSubset::singleton(x)))
        .map(Canon)
        .collect();
    let principal: Vec<ElementSubset> = principal.into_iter().map(|c| c.0).collect();
    let mut all: HashSet<ElementSubset> = principal.iter().copied().collect();
    let mut frontier: Vec<ElementSubset> = principal.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in &frontier {
            for p in &principal {
                if p.is_subset(i) {
                    continue;
                }
                let j = generated_ideal(ring, &i.union(p));
                if all.insert(j) {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<ElementSubset> = all.into_iter().collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// Exhaustive subset scan; slower than [`enumerate_hyperideal_sets`] and kept
/// as an independent cross-check.
pub fn enumerate_hyperideals_by_scan(ring: &HyperRing, cap: usize) -> Result<Vec<ElementSubset>> {
    check_cap(ring, cap.min(20))?;
    let n = ring.size();
    let mut out: Vec<ElementSubset> = (1u64..(1u64 << n))
        .filter(|m| m & 1 == 1)
        .map(ElementSubset::from_mask)
        .filter(|s| is_hyperideal_unchecked(ring, s))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}

/// All hyperideals with their C-property and properness flags.
pub fn enumerate_hyperideals(ring: &HyperRing, cap: usize) -> Result<Vec<IdealProfile>> {
    let sets = enumerate_hyperideal_sets(ring, cap)?;
    let c_class = ProductClassC::compute(ring);
    Ok(sets
        .into_iter()
        .map(|s| IdealProfile::new(ring, s, &c_class))
        .collect())
}

#[derive(PartialEq, Eq)]
struct Canon(ElementSubset);

impl PartialOrd for Canon {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Canon {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.canonical_cmp(&other.0)
    }
}

/// The family of all finite hyperproducts `r1 o r2 o … o rk` (k ≥ 2; single
/// elements are trivially C-compatible).
#[derive(Debug, Clone)]
pub struct ProductClassC {
    members: Vec<ElementSubset>,
}

impl ProductClassC {
    /// Least family containing every `{a} o {b}` and closed under hyperproduct
    /// with singletons on either side.
    pub fn compute(ring: &HyperRing) -> Self {
        let n = ring.size();
        let mut seen: HashSet<ElementSubset> = HashSet::new();
        let mut frontier = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let p = ring.mul(a, b);
                if seen.insert(p) {
                    frontier.push(p);
                }
            }
        }
        while let Some(u) = frontier.pop() {
            for r in 0..n {
                let rs = ElementSubset::singleton(r);
                for p in [ring.hprod(&u, &rs), ring.hprod(&rs, &u)] {
                    if seen.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        let mut members: Vec<ElementSubset> = seen.into_iter().collect();
        members.sort_by(|a, b| a.canonical_cmp(b));
        ProductClassC { members }
    }

    pub fn members(&self) -> &[ElementSubset] {
        &self.members
    }

    /// Every member meeting `s` lies inside `s`.
    pub fn is_c_closed(&self, s: &ElementSubset) -> bool {
        self.violation(s).is_none()
    }

    /// The first member that meets `s` without being contained in it.
    pub fn violation(&self, s: &ElementSubset) -> Option<ElementSubset> {
        self.members
            .iter()
            .find(|a| a.intersects(s) && !a.is_subset(s))
            .copied()
    }
}

pub fn is_c_hyperideal(ring: &HyperRing, ideal: &ElementSubset) -> bool {
    ProductClassC::compute(ring).is_c_closed(ideal)
}

fn close_or_repair(ring: &HyperRing, raw: ElementSubset) -> (ElementSubset, bool) {
    if !raw.is_empty() && is_hyperideal_unchecked(ring, &raw) {
        (raw, false)
    } else {
        (generated_ideal(ring, &raw), true)
    }
}

fn additive_closure(ring: &HyperRing, s: &ElementSubset) -> ElementSubset {
    let mut cur = *s;
    cur.insert(0);
    loop {
        let next = ring.set_sum(&cur, &cur).union(&ring.set_neg(&cur)).union(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `I + J = {i + j}`, closed to a hyperideal if necessary.
pub fn ideal_sum(ring: &HyperRing, i: &ElementSubset, j: &ElementSubset) -> IdealProfile {
    let (members, repaired) = close_or_repair(ring, ring.set_sum(i, j));
    profile(ring, members, repaired)
}

/// The raw elementwise hyperproduct `I o J = ⋃ i o j` (not necessarily a
/// hyperideal).
pub fn raw_product(ring: &HyperRing, i: &ElementSubset, j: &ElementSubset) -> ElementSubset {
    ring.hprod(i, j)
}

/// Additive closure of `I o J`, escalated to the generated hyperideal when the
/// additive closure is not absorbing.
pub fn ideal_product(ring: &HyperRing, i: &ElementSubset, j: &ElementSubset) -> IdealProfile {
    let additive = additive_closure(ring, &ring.hprod(i, j));
    let (members, repaired) = close_or_repair(ring, additive);
    profile(ring, members, repaired)
}

pub fn ideal_intersection(ring: &HyperRing, i: &ElementSubset, j: &ElementSubset) -> IdealProfile {
    let members = i.intersection(j);
    profile(ring, members, false)
}

fn profile(ring: &HyperRing, members: ElementSubset, repaired: bool) -> IdealProfile {
    let is_hyperideal = !members.is_empty() && is_hyperideal_unchecked(ring, &members);
    IdealProfile {
        members,
        is_hyperideal,
        is_c: is_hyperideal && is_c_hyperideal(ring, &members),
        is_proper: members != ring.full(),
        repaired,
    }
}

/// `(I : J) = {r : r o J ⊆ I}`.
pub fn colon(ring: &HyperRing, i: &ElementSubset, j: &ElementSubset) -> ElementSubset {
    (0..ring.size())
        .filter(|&r| ring.hprod(&ElementSubset::singleton(r), j).is_subset(i))
        .collect()
}

/// `ann(x) = ({0} : {x})`.
pub fn ann(ring: &HyperRing, x: usize) -> ElementSubset {
    colon(ring, &ring.zero_set(), &ElementSubset::singleton(x))
}

/// Prime radical: the intersection of all prime hyperideals containing `I`,
/// or the whole carrier when there is none.
pub fn radical(ring: &HyperRing, i: &ElementSubset, mode: PrimeMode, cap: usize) -> Result<ElementSubset> {
    let ideals = enumerate_hyperideal_sets(ring, cap)?;
    Ok(radical_from(ring, &ideals, i, mode))
}

/// [`radical`] over an already enumerated hyperideal list.
pub fn radical_from(
    ring: &HyperRing,
    ideals: &[ElementSubset],
    i: &ElementSubset,
    mode: PrimeMode,
) -> ElementSubset {
    ideals
        .iter()
        .filter(|p| i.is_subset(p) && classify::is_prime(ring, p, mode))
        .fold(ring.full(), |acc, p| acc.intersection(p))
}

/// `{r : r^n ⊆ I for some n ≥ 1}`.
pub fn radical_via_powers(ring: &HyperRing, i: &ElementSubset) -> ElementSubset {
    (0..ring.size())
        .filter(|&r| ring.distinct_powers(r).iter().any(|p| p.is_subset(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ordinary_zn, zn_with_a, zn_total};

    fn ring(raw: crate::ring::RawTables) -> HyperRing {
        HyperRing::validate(&raw).unwrap()
    }

    fn set(xs: &[usize]) -> ElementSubset {
        xs.iter().copied().collect()
    }

    #[test]
    fn hyperideal_recognition() {
        let z4 = ring(ordinary_zn(4));
        assert!(is_hyperideal(&z4, &set(&[0])).unwrap());
        assert!(is_hyperideal(&z4, &z4.full()).unwrap());
        assert!(is_hyperideal(&z4, &set(&[0, 2])).unwrap());
        assert!(!is_hyperideal(&z4, &set(&[0, 1])).unwrap());
        assert!(matches!(is_hyperideal(&z4, &ElementSubset::EMPTY), Err(Error::EmptySet)));
    }

    #[test]
    fn generation() {
        let z4 = ring(ordinary_zn(4));
        assert_eq!(generated_ideal(&z4, &set(&[0])), set(&[0]));
        assert_eq!(generated_ideal(&z4, &set(&[2])), set(&[0, 2]));
        assert_eq!(generated_ideal(&z4, &z4.full()), z4.full());
        let g = generated_ideal(&z4, &set(&[2]));
        assert_eq!(generated_ideal(&z4, &g), g);
    }

    #[test]
    fn enumeration_examples() {
        let lists = |n: usize| -> Vec<Vec<usize>> {
            enumerate_hyperideal_sets(&ring(ordinary_zn(n)), 16)
                .unwrap()
                .iter()
                .map(|s| s.to_vec())
                .collect()
        };
        assert_eq!(lists(2), vec![vec![0], vec![0, 1]]);
        assert_eq!(lists(4), vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
        assert_eq!(
            lists(6),
            vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]
        );
    }

    #[test]
    fn enumeration_respects_cap() {
        let z17 = ring(ordinary_zn(17));
        assert!(matches!(
            enumerate_hyperideal_sets(&z17, 16),
            Err(Error::CapExceeded { cap: 16, size: 17 })
        ));
    }

    #[test]
    fn lattice_join_agrees_with_subset_scan() {
        let rings = [
            ring(ordinary_zn(12)),
            ring(zn_with_a(10, &[5, 7])),
            ring(zn_with_a(12, &[2, 3])),
            ring(zn_total(6)),
        ];
        for r in &rings {
            assert_eq!(
                enumerate_hyperideal_sets(r, 16).unwrap(),
                enumerate_hyperideals_by_scan(r, 16).unwrap(),
                "{}",
                r.name()
            );
        }
    }

    #[test]
    fn c_property() {
        let z6 = ring(ordinary_zn(6));
        for p in enumerate_hyperideals(&z6, 16).unwrap() {
            assert!(p.is_c);
        }
        let z13 = ring(zn_with_a(13, &[5, 7]));
        assert!(is_c_hyperideal(&z13, &set(&[0])));
        assert!(is_c_hyperideal(&z13, &z13.full()));
        // 5 is not a unit mod 10, so 1 o 1 = {5, 7} straddles the ideal (5).
        let z10 = ring(zn_with_a(10, &[5, 7]));
        assert!(!is_c_hyperideal(&z10, &set(&[0, 5])));
        assert!(!is_c_hyperideal(&ring(zn_total(4)), &set(&[0])));
    }

    #[test]
    fn sums_products_intersections() {
        let z6 = ring(ordinary_zn(6));
        let i = set(&[0, 2, 4]);
        let j = set(&[0, 3]);
        assert_eq!(ideal_sum(&z6, &i, &set(&[0])).members, i);
        let p = ideal_product(&z6, &i, &j);
        assert_eq!(p.members, set(&[0]));
        assert!(!p.repaired);
        assert_eq!(ideal_intersection(&z6, &i, &z6.full()).members, i);
        assert_eq!(ideal_sum(&z6, &i, &j).members, z6.full());
    }

    #[test]
    fn colon_and_annihilator() {
        let z6 = ring(ordinary_zn(6));
        assert_eq!(ann(&z6, 2), set(&[0, 3]));
        assert_eq!(ann(&z6, 1), set(&[0]));
        let i = set(&[0, 3]);
        assert_eq!(colon(&z6, &i, &z6.full()), i);
        assert_eq!(z6.ann(2), ann(&z6, 2));
    }

    #[test]
    fn radicals() {
        let z4 = ring(ordinary_zn(4));
        let z6 = ring(ordinary_zn(6));
        let full = z4.full();
        assert_eq!(radical(&z4, &full, PrimeMode::Relaxed, 16).unwrap(), full);
        assert_eq!(radical(&z4, &set(&[0]), PrimeMode::Relaxed, 16).unwrap(), set(&[0, 2]));
        assert_eq!(radical(&z6, &set(&[0]), PrimeMode::Relaxed, 16).unwrap(), set(&[0]));
        assert_eq!(radical_via_powers(&z4, &set(&[0])), set(&[0, 2]));
        assert_eq!(radical_via_powers(&z4, &full), full);
        let p = set(&[0, 3]);
        assert!(p.is_subset(&radical_via_powers(&z6, &p)));
    }

    #[test]
    fn colon_over_union_is_intersection_of_colons() {
        let z12 = ring(ordinary_zn(12));
        let i = set(&[0, 4, 8]);
        let j1 = set(&[2, 3]);
        let j2 = set(&[6]);
        assert_eq!(
            colon(&z12, &i, &j1.union(&j2)),
            colon(&z12, &i, &j1).intersection(&colon(&z12, &i, &j2))
        );
    }
}
